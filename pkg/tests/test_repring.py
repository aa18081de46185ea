from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pscrank.errors import DomainError
from pscrank.expr import parse_group_expr
from pscrank.groups import normalize, trivial_group
from pscrank.repring import (
    CycRingElt,
    ROElt,
    RQuotElt,
    basis,
    complexify,
    complexify_quot,
    im_part,
    ko_coeff_rank,
    ku_coeff_rank,
    prop21_forward,
    prop21_inverse,
    re_part,
    realify,
    span_dimension,
    tau,
)

from .corpus import FINITE_CORPUS

w = CycRingElt.omega
half = Fraction(1, 2)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def elements(draw, m=None):
    m = m if m is not None else draw(st.integers(1, 64))
    terms = draw(st.dictionaries(st.integers(0, m - 1), fractions, max_size=min(m, 8)))
    return CycRingElt.from_sparse(m, terms)


@st.composite
def triples(draw):
    m = draw(st.integers(1, 12))
    return draw(elements(m)), draw(elements(m)), draw(elements(m))


def test_tau_examples():
    assert tau(w(3, 1)) == w(3, 2)
    assert tau(w(2, 1)) == w(2, 1)


@given(elements())
@settings(max_examples=100)
def test_tau_is_involution(x):
    assert tau(tau(x)) == x


def test_realify_example():
    assert realify(w(3, 1)).elt == w(3, 1) + w(3, 2)


@given(elements())
@settings(max_examples=100)
def test_r_of_c_is_two(x):
    y = re_part(x)
    assert realify(complexify(y)).elt == y.elt * 2


@given(elements())
@settings(max_examples=100)
def test_c_of_r_is_one_plus_tau(x):
    assert complexify(realify(x)) == x + tau(x)


def test_complexify_quot_of_real_character_vanishes():
    assert complexify_quot(im_part(w(2, 1))).is_zero()


def test_re_im_examples():
    assert re_part(w(4, 1)).elt == (w(4, 1) + w(4, 3)) * half
    assert im_part(w(4, 2)).elt.is_zero()
    assert im_part(w(4, 1)).elt == (w(4, 1) - w(4, 3)) * Fraction(1, 4)


@given(elements())
@settings(max_examples=100)
def test_x_is_c_of_re_plus_im(x):
    assert complexify(re_part(x)) + complexify_quot(im_part(x)) == x
    assert complexify_quot(im_part(x)) == (x - tau(x)) * half


def test_prop21_inverse_of_omega3():
    x, y = prop21_inverse(w(3, 1))
    assert x.elt == (w(3, 1) + w(3, 2)) * half
    # the class of z/2 in R/(1+tau), stored by its antisymmetric representative
    assert y.elt == (w(3, 1) - w(3, 2)) * Fraction(1, 4)
    assert y == RQuotElt.of(w(3, 1) * half)
    assert prop21_forward(x, y) == w(3, 1)


def test_prop21_inverse_of_unit():
    x, y = prop21_inverse(w(2, 0))
    assert x.elt == w(2, 0)
    assert y.elt.is_zero()


@given(elements())
@settings(max_examples=100)
def test_prop21_roundtrip(z):
    x, y = prop21_inverse(z)
    assert prop21_forward(x, y) == z
    assert prop21_inverse(prop21_forward(x, y)) == (x, y)


def test_quotient_class_is_well_defined():
    # [w] and [w + (1+tau)u] agree
    u = w(5, 2) * 3 + w(5, 1)
    assert RQuotElt.of(w(5, 1)) == RQuotElt.of(w(5, 1) + u + tau(u))


def test_type_invariants_enforced():
    with pytest.raises(DomainError):
        ROElt(w(3, 1))
    with pytest.raises(DomainError):
        RQuotElt(w(3, 1))
    with pytest.raises(DomainError):
        RQuotElt(w(4, 2))
    with pytest.raises(DomainError):
        CycRingElt(3, (1, 2))
    with pytest.raises(DomainError):
        w(3, 1) + w(4, 1)


@pytest.mark.parametrize("m", range(1, 65))
def test_subspace_ranks(m):
    assert span_dimension(re_part(b).elt for b in basis(m)) == m // 2 + 1
    assert span_dimension(im_part(b).elt for b in basis(m)) == (m + 1) // 2 - 1


def test_ko_ku_ranks_cyclic4():
    assert [ko_coeff_rank(4, i) for i in (0, 1, 2, 3, 4, 6)] == [3, 0, 1, 0, 3, 1]
    assert ku_coeff_rank(4, 0) == 4 and ku_coeff_rank(4, 1) == 0


def test_ko_trivial():
    assert ko_coeff_rank(trivial_group(), 0) == 1
    assert ko_coeff_rank(trivial_group(), 2) == 0


@pytest.mark.parametrize("text", FINITE_CORPUS)
def test_ko_ranks_add_up(text):
    h = normalize(parse_group_expr(text)).finite
    assert ko_coeff_rank(h, 0) + ko_coeff_rank(h, 2) == ku_coeff_rank(h, 0)
    assert ko_coeff_rank(h, 5) == 0
    assert ko_coeff_rank(h, -3) == 0


@given(triples())
@settings(max_examples=100)
def test_ring_laws(t):
    a, b, c = t
    one = w(a.m, 0)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * one == a
    assert a * (b + c) == a * b + a * c


def test_multiplication_is_cyclic_convolution():
    assert w(5, 3) * w(5, 4) == w(5, 2)
    assert (w(4, 1) + w(4, 3)) * (w(4, 1) + w(4, 3)) == w(4, 0) * 2 + w(4, 2) * 2
