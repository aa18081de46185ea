import pytest
from hypothesis import given, settings

from pscrank.classdata import class_summary, conjugacy_classes, dq_bruteforce_oracle, summarize
from pscrank.expr import parse_group_expr
from pscrank.groups import CyclicGroup, direct_product, normalize, trivial_group

from .corpus import D4, FINITE_CORPUS, Q8, S3, S4, abelian_groups_upto, small_finite_atoms


def build(text):
    return normalize(parse_group_expr(text)).finite


def test_z3_classes():
    cd = conjugacy_classes(CyclicGroup(3))
    assert cd.num_classes == 3
    assert cd.inv_class == (0, 2, 1)
    assert cd.identity_class == 0


def test_s3_classes_all_real():
    h = build(S3)
    cd = conjugacy_classes(h)
    assert sorted(c.size for c in cd.classes) == [1, 2, 3]
    assert all(cd.is_real(c) for c in range(3))
    assert dq_bruteforce_oracle(h, 1) == 0


def test_trivial_group_classes():
    cd = conjugacy_classes(trivial_group())
    assert cd.num_classes == 1 and cd.inv_class == (0,)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 7, 10])
def test_cyclic_summary(m):
    s = summarize(CyclicGroup(m))
    assert (s.d0, s.d1, s.d0_zero) == (m // 2 + 1, (m + 1) // 2 - 1, m // 2)


def test_s3_summary():
    s = summarize(build(S3))
    assert (s.d0, s.d1, s.d0_zero) == (3, 0, 2)


def test_q8_summary():
    h = build(Q8)
    s = summarize(h)
    assert (s.d0, s.d1) == (5, 0)
    assert dq_bruteforce_oracle(h, 0) == 5


@pytest.mark.parametrize("text, classes", [(S4, 5), (D4, 5), (Q8, 5)])
def test_class_counts(text, classes):
    assert conjugacy_classes(build(text)).num_classes == classes


def test_oracle_z4():
    assert dq_bruteforce_oracle(CyclicGroup(4), 0) == 3
    assert dq_bruteforce_oracle(CyclicGroup(4), 1) == 1


def test_oracle_trivial():
    assert dq_bruteforce_oracle(trivial_group(), 1) == 0
    assert dq_bruteforce_oracle(trivial_group(), 0) == 1


@pytest.mark.parametrize("text", FINITE_CORPUS)
def test_invariants(text):
    h = build(text)
    cd = conjugacy_classes(h)
    s = class_summary(cd)
    assert sum(c.size for c in cd.classes) == h.order
    members = sorted(x for c in cd.classes for x in c.members)
    assert members == list(range(h.order))
    assert all(cd.class_of[x] == i for i, c in enumerate(cd.classes) for x in c.members)
    assert all(cd.inv_class[cd.inv_class[c]] == c for c in range(cd.num_classes))
    assert cd.inv_class[cd.identity_class] == cd.identity_class
    assert all(cd.classes[cd.inv_class[c]].size == cd.classes[c].size for c in range(cd.num_classes))
    assert s.r_real + 2 * s.r_pairs == s.num_classes
    assert s.d0 + s.d1 == s.num_classes
    assert s.d0_zero >= 0
    assert (s.d0, s.d1) == (dq_bruteforce_oracle(h, 0), dq_bruteforce_oracle(h, 1))


def test_cyclic_formula_up_to_200():
    for m in range(1, 201):
        s = summarize(CyclicGroup(m))
        assert s.d0 == m // 2 + 1
        assert s.d1 == -(-m // 2) - 1


@pytest.mark.parametrize("a, b", [("cyclic(2)", "cyclic(3)"), ("cyclic(4)", "cyclic(4)"),
                                  (S3, "cyclic(2)"), ("cyclic(3)", "cyclic(3)")])
def test_real_classes_of_products(a, b):
    ga, gb = build(a), build(b)
    sa, sb = summarize(ga), summarize(gb)
    prod = direct_product(ga, gb)
    # (Ca, Cb) is self-inverse iff both components are; pairs never recombine into real classes
    real = dq_bruteforce_oracle(prod, 0) - dq_bruteforce_oracle(prod, 1)
    assert real == sa.r_real * sb.r_real
    assert summarize(prod).num_classes == sa.num_classes * sb.num_classes


def test_abelian_self_inverse_classes_are_involutions():
    for orders in abelian_groups_upto(64):
        h = normalize(parse_group_expr("abelian(" + ",".join(map(str, orders)) + ")")).finite
        involutions = sum(1 for x in range(h.order) if h.inv[x] == x)
        assert summarize(h).r_real == involutions, orders


@given(small_finite_atoms)
@settings(max_examples=100, deadline=None)
def test_summary_matches_oracle(atom):
    h = normalize(atom).finite
    s = summarize(h)
    assert s.d0 == dq_bruteforce_oracle(h, 0)
    assert s.d1 == dq_bruteforce_oracle(h, 1)
