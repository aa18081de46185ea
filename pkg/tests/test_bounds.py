import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pscrank.bounds import bg_baseline, bound_Pos, bound_R, bound_report, surjectivity_report
from pscrank.errors import DomainError
from pscrank.expr import Atom, parse_group_expr, product
from pscrank.groups import normalize
from pscrank.homology import class_data_for, homology_dim, torsion_free_betti

from .corpus import CORPUS, FINITE_CORPUS, computable_exprs


def nf(text):
    return normalize(parse_group_expr(text))


def test_bound_R_example_group():
    value, terms = bound_R(nf("surface(1)*cyclic(3)"), 8)
    assert value == 3
    assert [(t.p, t.q, t.zero_at_identity, t.dim) for t in terms] == [(0, 0, False, 2), (2, 1, False, 1)]


def test_bound_R_trivial():
    assert bound_R(nf("trivial"), 8)[0] == 1


def test_bound_R_cyclic5():
    assert bound_R(nf("cyclic(5)"), 10)[0] == 2


def test_bound_Pos_examples():
    value, terms = bound_Pos(nf("surface(1)*cyclic(4)"), 9)
    assert value == 4
    assert terms[0].zero_at_identity
    assert bound_Pos(nf("trivial"), 8)[0] == 0
    assert bound_Pos(nf("cyclic(6)"), 8)[0] == 3
    assert bound_Pos(nf("surface(1)*cyclic(3)"), 8)[0] == 2


@pytest.mark.parametrize("n", [0, 3, 6, -1])
def test_small_n_rejected(n):
    with pytest.raises(DomainError):
        bound_R(nf("trivial"), n)
    with pytest.raises(DomainError):
        bound_Pos(nf("trivial"), n)


def test_bg_baseline_examples():
    h = nf("cyclic(4)").finite
    assert bg_baseline(h, 8) == 2
    assert bg_baseline(h, 6) == 1
    assert bg_baseline(h, 10) == 1
    for n in (6, 8, 10, 12):
        assert bg_baseline(nf("trivial").finite, n) == 0
    with pytest.raises(DomainError):
        bg_baseline(h, 9)
    with pytest.raises(DomainError):
        bg_baseline(h, 4)


@pytest.mark.parametrize("text", FINITE_CORPUS)
def test_baseline_equals_pos_for_finite_groups(text):
    n_ = nf(text)
    for n in (8, 10, 12, 14, 16):
        assert bound_Pos(n_, n)[0] == bg_baseline(n_.finite, n)


@pytest.mark.parametrize("text", CORPUS)
def test_report_invariants(text):
    n_ = nf(text)
    b = torsion_free_betti(n_)
    slot = {0: 0, 1: 1, 2: 2, 3: None}
    for n in range(7, 32):
        r = bound_report(n_, n)
        assert r.bound_R == sum(t.dim for t in r.r_terms)
        assert r.bound_Pos == sum(t.dim for t in r.pos_terms)
        assert r.bound_Pos <= r.bound_R
        p = slot[n % 4]
        assert r.bound_R - r.bound_Pos == (0 if p is None else b[p])
        assert r.pos_dimension == n - 1
        assert r.assumptions


@given(computable_exprs, st.integers(7, 27))
@settings(max_examples=100, deadline=None)
def test_four_periodic(e, n):
    n_ = normalize(e)
    assert bound_R(n_, n) == bound_R(n_, n + 4)
    assert bound_Pos(n_, n) == bound_Pos(n_, n + 4)


@pytest.mark.parametrize("text", CORPUS)
def test_circle_factor_shifts_degree_zero_term(text):
    # crossing with a circle moves the H_0 slot of residue 0 (resp. 2) into the H_1 slot of 1 (resp. 3)
    n_ = nf(text)
    with_circle = normalize(product(n_.expr, Atom("Z")))
    for n in (8, 10, 12, 14):
        h0_term = next(t.dim for t in bound_R(n_, n)[1] if t.p == 0)
        assert bound_R(with_circle, n + 1)[0] >= h0_term
        if torsion_free_betti(n_)[2] == 0:
            assert bound_R(with_circle, n + 1)[0] >= bound_R(n_, n)[0]


def test_circle_factor_not_monotone_when_h2_term_present():
    n_ = nf("surface(3)")
    with_circle = normalize(product(n_.expr, Atom("Z")))
    assert bound_R(n_, 10)[0] == 1
    assert bound_R(with_circle, 11)[0] == 0


@pytest.mark.parametrize("text", CORPUS)
def test_bounds_from_class_data_match(text):
    n_ = nf(text)
    cdf = class_data_for(n_)
    for n in range(7, 11):
        assert bound_R(cdf, n) == bound_R(n_, n)
        assert bound_Pos(cdf, n) == bound_Pos(n_, n)


def test_surjectivity_isomorphism():
    text = surjectivity_report(nf("surface(1)*cyclic(3)"), 8, "isomorphism")
    assert "alpha (x) Q: R_8" in text and "is surjective" in text
    assert "rho (x) Q: Pos_7" in text


def test_surjectivity_surjective_only():
    text = surjectivity_report(nf("surface(1)*cyclic(3)"), 8, "surjective")
    assert "alpha (x) Q: R_8" in text
    assert "rho (x) Q surjective if" in text


def test_surjectivity_high_dimension():
    for status in ("injective", "surjective", "isomorphism", "unknown"):
        text = surjectivity_report(nf("surface(1)*surface(1)"), 8, status)
        assert "dimension 4 > 2" in text and "not applicable" in text


def test_surjectivity_unknown_is_hypothesis_only():
    text = surjectivity_report(nf("cyclic(3)"), 9, "unknown")
    assert "alpha (x) Q: R_" not in text and "rho (x) Q: Pos_" not in text
    assert "not asserted" in text


def test_surjectivity_bad_status():
    with pytest.raises(DomainError):
        surjectivity_report(nf("cyclic(3)"), 9, "maybe")


def test_example_group_h1_terms():
    n_ = nf("surface(3)*cyclic(7)")
    r = bound_report(n_, 9)
    assert r.bound_R == homology_dim(n_, 1, 0) == 2 * 3 * 4
    assert r.bound_Pos == 2 * 3 * 3
