"""Exact model of R(Z/m) (x) Q and its real and quotient parts.

R(Z/m) (x) Q is the group ring Q[x]/(x^m - 1) with x = [omega_m]; index l holds
the coefficient of [omega_m^l]. Complex conjugation ``tau`` sends l to -l.

RO(Z/m) (x) Q is the tau-fixed subspace (complexification is the inclusion).
R/(1+tau) (x) Q is stored by the antisymmetric representative (w - tau w)/2
of a class [w], so equality of classes is equality of vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .classdata import summarize
from .errors import DomainError
from .groups import CyclicGroup, FiniteGroup
from .linalg import rank

_ZERO = Fraction(0)


@dataclass(frozen=True)
class CycRingElt:
    m: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.m < 1:
            raise DomainError(f"modulus must be >= 1, got {self.m}")
        if len(self.coeffs) != self.m:
            raise DomainError(f"expected {self.m} coefficients, got {len(self.coeffs)}")
        if not all(type(c) is Fraction for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls, m: int) -> CycRingElt:
        return cls(m, (_ZERO,) * m)

    @classmethod
    def omega(cls, m: int, l: int = 1, coeff=1) -> CycRingElt:
        """coeff * [omega_m^l]"""
        c = [_ZERO] * m
        c[l % m] = Fraction(coeff)
        return cls(m, tuple(c))

    @classmethod
    def from_sparse(cls, m: int, terms: dict[int, Fraction]) -> CycRingElt:
        c = [_ZERO] * m
        for l, v in terms.items():
            c[l % m] += v
        return cls(m, tuple(c))

    def _same(self, other: CycRingElt) -> None:
        if not isinstance(other, CycRingElt) or other.m != self.m:
            raise DomainError("operands must share the same modulus")

    def __add__(self, other: CycRingElt) -> CycRingElt:
        self._same(other)
        return CycRingElt(self.m, tuple(a + b if b else a for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycRingElt) -> CycRingElt:
        self._same(other)
        return CycRingElt(self.m, tuple(a - b if b else a for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycRingElt:
        return CycRingElt(self.m, tuple(-a if a else a for a in self.coeffs))

    def __mul__(self, other) -> CycRingElt:
        if isinstance(other, (int, Fraction)):
            return CycRingElt(self.m, tuple(a * other if a else _ZERO for a in self.coeffs))
        self._same(other)
        m = self.m
        out = [_ZERO] * m
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % m] += a * b
        return CycRingElt(m, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, k) -> CycRingElt:
        return self * (Fraction(1) / Fraction(k))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> dict[int, Fraction]:
        return {l: c for l, c in enumerate(self.coeffs) if c}

    def __str__(self) -> str:
        return format_elt(self)


@dataclass(frozen=True)
class ROElt:
    """Element of RO(Z/m) (x) Q, embedded as a tau-symmetric CycRingElt."""

    elt: CycRingElt

    def __post_init__(self):
        c, m = self.elt.coeffs, self.elt.m
        if any(c[l] != c[(-l) % m] for l in range(m)):
            raise DomainError("RO element must be tau-symmetric")

    @property
    def m(self) -> int:
        return self.elt.m


@dataclass(frozen=True)
class RQuotElt:
    """Class in R(Z/m)/(1+tau) (x) Q, stored by its antisymmetric representative."""

    elt: CycRingElt

    def __post_init__(self):
        c, m = self.elt.coeffs, self.elt.m
        if any(c[l] != -c[(-l) % m] for l in range(m)):
            raise DomainError("quotient element must be in antisymmetric normal form")

    @property
    def m(self) -> int:
        return self.elt.m

    @classmethod
    def of(cls, w: CycRingElt) -> RQuotElt:
        """The class [w]."""
        return cls((w - tau(w)) / 2)


def tau(x: CycRingElt) -> CycRingElt:
    m = x.m
    return CycRingElt(m, tuple(x.coeffs[(-l) % m] for l in range(m)))


def realify(x: CycRingElt) -> ROElt:
    return ROElt(x + tau(x))


def complexify(x: ROElt) -> CycRingElt:
    return x.elt


def complexify_quot(y: RQuotElt) -> CycRingElt:
    """(1 - tau) applied to a representative; for the stored representative this is 2y."""
    return y.elt - tau(y.elt)


def re_part(x: CycRingElt) -> ROElt:
    """Re x = r(x)/2."""
    return ROElt((x + tau(x)) / 2)


def im_part(x: CycRingElt) -> RQuotElt:
    """Im x = the class of x/2."""
    return RQuotElt.of(x / 2)


def prop21_forward(x: ROElt, y: RQuotElt) -> CycRingElt:
    """x (+) [y]  ->  c(x) + y - tau(y)."""
    if x.m != y.m:
        raise DomainError("moduli differ")
    return complexify(x) + complexify_quot(y)


def prop21_inverse(z: CycRingElt) -> tuple[ROElt, RQuotElt]:
    """z  ->  (r(z) (+) [z]) / 2."""
    return ROElt(realify(z).elt / 2), RQuotElt.of(z / 2)


def basis(m: int) -> list[CycRingElt]:
    return [CycRingElt.omega(m, l) for l in range(m)]


def _as_group(h: FiniteGroup | int) -> FiniteGroup:
    return CyclicGroup(h) if isinstance(h, int) else h


def ko_coeff_rank(h: FiniteGroup | int, i: int) -> int:
    """Rank of KO_i^H(pt) (x) Q: RO(H) for i = 0 mod 4, R(H)/(1+tau) for i = 2 mod 4."""
    if i % 2:
        return 0
    s = summarize(_as_group(h))
    return s.d0 if i % 4 == 0 else s.d1


def ku_coeff_rank(h: FiniteGroup | int, i: int) -> int:
    """Rank of K_i^H(pt) (x) Q: R(H) for even i."""
    if i % 2:
        return 0
    return summarize(_as_group(h)).num_classes


def format_elt(x: CycRingElt, symbol: str = "w", brackets: bool = True) -> str:
    """Human-readable sum, e.g. ``1/2[w^1] + 1/2[w^3]``; scalars print without brackets."""
    terms = []
    for l, c in enumerate(x.coeffs):
        if not c:
            continue
        mono = f"[{symbol}^{l}]" if brackets else f"{symbol}^{l}"
        if c == 1:
            terms.append(("+", mono))
        elif c == -1:
            terms.append(("-", mono))
        else:
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{abs(c)}{mono}" if brackets else f"{abs(c)}*{mono}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


def span_dimension(elts: Iterable[CycRingElt]) -> int:
    return rank(e.coeffs for e in elts)
