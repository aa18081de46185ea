"""Real fundamental-class expansions over Z/m and their cosine/sine regrouping.

The raw expansion in degree p and eigenspace q is

    sum_{l=0}^{m-1} [G^(p)]_KO x C_q[omega^l]  (x)  omega^{-l}

with C_0 = Re and C_1 = Im. Scalars omega^{-l} are kept in Q[x]/(x^m - 1), so
every identity checked here is exact. The geometric factor is an opaque tag.

Regrouping pairs l with m - l. Since Re is tau-invariant and Im is
tau-anti-invariant, each pair collapses to a single term with scalar
omega^l + omega^-l (q = 0) or omega^-l - omega^l (q = 1). The self-paired
indices l = 0 and l = m/2 keep scalar omega^-l with coefficient 1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from .errors import DomainError
from .repring import CycRingElt, ROElt, RQuotElt, format_elt, im_part, re_part

GEOMETRIC_FACTORS = {0: "point", 1: "circle", 2: "surface"}

Coefficient = Union[ROElt, RQuotElt]


@dataclass(frozen=True)
class Term:
    l: int
    coefficient: Coefficient
    scalar: CycRingElt


@dataclass(frozen=True)
class FundClassExpansion:
    p: int
    m: int
    q: int
    terms: tuple[Term, ...]
    collapsed: bool = False

    @property
    def geometric_factor(self) -> str:
        return GEOMETRIC_FACTORS[self.p]

    @property
    def ko_degree(self) -> int:
        """Degree of the KO-homology group the class lives in."""
        return self.p + 2 * self.q

    def nonzero_terms(self) -> list[Term]:
        return [t for t in self.terms if not t.coefficient.elt.is_zero() and not t.scalar.is_zero()]


def _coefficient(q: int, m: int, l: int) -> Coefficient:
    w = CycRingElt.omega(m, l)
    return re_part(w) if q == 0 else im_part(w)


def _check(p: int, m: int, q: int) -> None:
    if p not in GEOMETRIC_FACTORS:
        raise DomainError(f"p must be 0, 1 or 2, got {p}")
    if q not in (0, 1):
        raise DomainError(f"q must be 0 or 1, got {q}")
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")


def fundamental_class_expansion(p: int, m: int, q: int) -> FundClassExpansion:
    _check(p, m, q)
    terms = tuple(Term(l, _coefficient(q, m, l), CycRingElt.omega(m, -l)) for l in range(m))
    return FundClassExpansion(p, m, q, terms)


def collapse_expansion(e: FundClassExpansion) -> FundClassExpansion:
    if e.collapsed:
        raise DomainError("expansion is already collapsed")
    m, q = e.m, e.q
    terms = []
    for l in range(m // 2 + 1):
        coeff = _coefficient(q, m, l)
        if l == 0 or 2 * l == m:
            if not coeff.elt.is_zero():
                terms.append(Term(l, coeff, CycRingElt.omega(m, -l)))
            continue
        up, down = CycRingElt.omega(m, l), CycRingElt.omega(m, -l)
        scalar = up + down if q == 0 else down - up
        terms.append(Term(l, coeff, scalar))
    return FundClassExpansion(e.p, m, q, tuple(terms), collapsed=True)


def expansion_tensor(e: FundClassExpansion) -> dict[tuple[int, int], Fraction]:
    """The expansion as an element of Q[Z/m] (x) Q[Z/m]: (coefficient index, scalar index) -> value."""
    out: dict[tuple[int, int], Fraction] = {}
    for t in e.terms:
        for i, a in t.coefficient.elt.support().items():
            for j, b in t.scalar.support().items():
                v = out.get((i, j), 0) + a * b
                if v:
                    out[(i, j)] = v
                else:
                    out.pop((i, j), None)
    return out


def verify_expansion_equality(raw: FundClassExpansion, collapsed: FundClassExpansion) -> bool:
    if (raw.p, raw.m, raw.q) != (collapsed.p, collapsed.m, collapsed.q):
        raise DomainError("expansions have different (p, m, q)")
    return expansion_tensor(raw) == expansion_tensor(collapsed)


def tamper_boundary(collapsed: FundClassExpansion) -> FundClassExpansion:
    """Double the l = 0 scalar, as a literal reading of the cosine formula would."""
    terms = tuple(replace(t, scalar=t.scalar * 2) if t.l == 0 else t for t in collapsed.terms)
    return replace(collapsed, terms=terms)


def format_expansion(e: FundClassExpansion) -> str:
    part = "Re" if e.q == 0 else "Im"
    head = (f"[G^({e.p})_{e.m}]^{e.q}_KO in KO_{e.ko_degree}"
            f"  ({'collapsed' if e.collapsed else 'raw'}, factor: {e.geometric_factor})")
    lines = [head]
    for t in e.terms:
        coeff = format_elt(t.coefficient.elt)
        scalar = format_elt(t.scalar, brackets=False)
        lines.append(f"  l={t.l}: [G^({e.p})]_KO x {part}[w^{t.l}] (x) ({scalar})"
                     f"    {part}[w^{t.l}] = {coeff}")
    return "\n".join(lines)


def _rationals(x: CycRingElt) -> list[list[int]]:
    return [[c.numerator, c.denominator] for c in x.coeffs]


def expansion_to_dict(e: FundClassExpansion) -> dict:
    return {
        "p": e.p,
        "m": e.m,
        "q": e.q,
        "ko_degree": e.ko_degree,
        "geometric_factor": e.geometric_factor,
        "collapsed": e.collapsed,
        "terms": [
            {"l": t.l, "coefficient": _rationals(t.coefficient.elt), "scalar": _rationals(t.scalar)}
            for t in e.terms
        ],
    }
