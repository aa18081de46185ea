"""Lower bounds on the ranks of Stolz' relative group R_n and of Pos_{n-1}.

Both bounds sum homology dimensions selected by n mod 4. The Pos table uses
the functions vanishing at the identity in every F^0 slot.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classdata import summarize
from .errors import DomainError
from .groups import FiniteGroup
from .homology import ClassDataFile, HomologySource, hdim, rational_homological_dimension

MIN_DIMENSION = 7
BC_STATUSES = ("injective", "surjective", "isomorphism", "unknown")
INJECTIVITY_TAG = "rational Baum-Connes injectivity assumed"

# residue -> (p, q) slots
TABLE: dict[int, tuple[tuple[int, int], ...]] = {
    0: ((0, 0), (2, 1)),
    1: ((1, 0),),
    2: ((0, 1), (2, 0)),
    3: ((1, 1),),
}


@dataclass(frozen=True)
class BoundTerm:
    p: int
    q: int
    zero_at_identity: bool
    dim: int

    @property
    def module(self) -> str:
        return "F^0_0" if self.zero_at_identity else f"F^{self.q}"

    def __str__(self) -> str:
        return f"H_{self.p}({self.module})={self.dim}"


@dataclass(frozen=True)
class BoundReport:
    n: int
    residue: int
    bound_R: int
    bound_Pos: int
    r_terms: tuple[BoundTerm, ...]
    pos_terms: tuple[BoundTerm, ...]
    assumptions: tuple[str, ...] = field(default=(INJECTIVITY_TAG,))

    @property
    def pos_dimension(self) -> int:
        """The Pos bound concerns Pos_{n-1}."""
        return self.n - 1


def _check_n(n: int) -> None:
    if n < MIN_DIMENSION:
        raise DomainError(f"dimension n must be >= {MIN_DIMENSION}, got {n}")


def _terms(source: HomologySource, n: int, pos: bool) -> tuple[BoundTerm, ...]:
    _check_n(n)
    out = []
    for p, q in TABLE[n % 4]:
        zero = pos and q == 0
        out.append(BoundTerm(p, q, zero, hdim(source, p, q, zero)))
    return tuple(out)


def bound_R(source: HomologySource, n: int) -> tuple[int, tuple[BoundTerm, ...]]:
    """Lower bound on rank R_n(B Gamma) and the homology terms summed."""
    terms = _terms(source, n, pos=False)
    return sum(t.dim for t in terms), terms


def bound_Pos(source: HomologySource, n: int) -> tuple[int, tuple[BoundTerm, ...]]:
    """Lower bound on rank Pos_{n-1}(B Gamma) and the homology terms summed."""
    terms = _terms(source, n, pos=True)
    return sum(t.dim for t in terms), terms


def bound_report(source: HomologySource, n: int) -> BoundReport:
    r, r_terms = bound_R(source, n)
    pos, pos_terms = bound_Pos(source, n)
    return BoundReport(n, n % 4, r, pos, r_terms, pos_terms)


def bg_baseline(h: FiniteGroup, n: int) -> int:
    """Rank of the virtual-dimension-0 representations with chi(g^-1) = (-1)^q chi(g), q = (n/2) mod 2."""
    if n % 2 or n < 6:
        raise DomainError(f"the finite-group baseline needs even n >= 6, got {n}")
    s = summarize(h)
    return s.d0 - 1 if (n // 2) % 2 == 0 else s.d1


def surjectivity_report(source: HomologySource, n: int, bc_status: str = "unknown") -> str:
    _check_n(n)
    if bc_status not in BC_STATUSES:
        raise DomainError(f"bc_status must be one of {', '.join(BC_STATUSES)}, got {bc_status!r}")
    if isinstance(source, ClassDataFile):
        return ("rational homological dimension cannot be determined from class data; "
                "surjectivity criterion not evaluated")
    hd = rational_homological_dimension(source.torsion_free)
    if hd > 2:
        return f"rational homological dimension {hd} > 2; surjectivity criterion not applicable"
    lines = [f"rational homological dimension {hd} <= 2 (satisfied)"]
    alpha = f"alpha (x) Q: R_{n}(B Gamma) (x) Q -> KO_{n}(C*_r Gamma) (x) Q is surjective"
    rho = f"rho (x) Q: Pos_{n - 1}(B Gamma) (x) Q -> S^R_{n - 1}(Gamma) (x) Q is surjective"
    if bc_status in ("surjective", "isomorphism"):
        lines.append(alpha)
    else:
        lines.append("alpha (x) Q surjective if rational Baum-Connes assembly is surjective (not asserted)")
    if bc_status == "isomorphism":
        lines.append(rho)
    else:
        lines.append("rho (x) Q surjective if rational Baum-Connes assembly is an isomorphism (not asserted)")
    lines.append(f"Baum-Connes status: {bc_status} (user asserted, not verified)")
    return "; ".join(lines)
