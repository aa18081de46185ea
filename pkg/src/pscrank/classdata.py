"""Conjugacy classes, the inversion involution on them, and coinvariant dimensions.

The coinvariants of the functions-on-torsion modules of a finite group have
the class indicators as a basis. Inversion permutes that basis; the
symmetric and antisymmetric parts have dimensions

    d0 = r_real + r_pairs,   d1 = r_pairs,   d0_zero = d0 - 1

where ``r_real`` counts self-inverse classes and ``r_pairs`` counts unordered
pairs {C, C^-1} with C != C^-1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .groups import FiniteGroup
from .linalg import rank


@dataclass(frozen=True)
class ConjClass:
    rep: int
    size: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class ConjClassData:
    classes: tuple[ConjClass, ...]
    class_of: tuple[int, ...]
    inv_class: tuple[int, ...]
    identity_class: int

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def is_real(self, c: int) -> bool:
        return self.inv_class[c] == c


@dataclass(frozen=True)
class ClassSummary:
    num_classes: int
    r_real: int
    r_pairs: int

    @property
    def d0(self) -> int:
        return self.r_real + self.r_pairs

    @property
    def d1(self) -> int:
        return self.r_pairs

    @property
    def d0_zero(self) -> int:
        return self.d0 - 1

    def d(self, q: int, zero_at_identity: bool = False) -> int:
        if q not in (0, 1):
            raise DomainError(f"q must be 0 or 1, got {q}")
        if zero_at_identity:
            if q != 0:
                raise DomainError("zero_at_identity only applies to q = 0")
            return self.d0_zero
        return self.d0 if q == 0 else self.d1


def conjugacy_classes(h: FiniteGroup) -> ConjClassData:
    """Conjugation orbits, ordered by their smallest element index."""
    n = h.order
    class_of = [-1] * n
    classes: list[ConjClass] = []
    abelian = h.is_abelian()
    gens = h.generators
    for x in range(n):
        if class_of[x] >= 0:
            continue
        c = len(classes)
        class_of[x] = c
        members = [x]
        if not abelian:
            queue = deque([x])
            while queue:
                y = queue.popleft()
                for s in gens:
                    z = h.conjugate(y, s)
                    if class_of[z] < 0:
                        class_of[z] = c
                        members.append(z)
                        queue.append(z)
        members.sort()
        classes.append(ConjClass(x, len(members), tuple(members)))
    inv_class = tuple(class_of[h.inv[cl.rep]] for cl in classes)
    return ConjClassData(tuple(classes), tuple(class_of), inv_class, class_of[h.identity])


def class_summary(cd: ConjClassData) -> ClassSummary:
    r_real = sum(1 for c in range(cd.num_classes) if cd.inv_class[c] == c)
    non_real = cd.num_classes - r_real
    return ClassSummary(cd.num_classes, r_real, non_real // 2)


def summarize(h: FiniteGroup) -> ClassSummary:
    return class_summary(conjugacy_classes(h))


def dq_bruteforce_oracle(h: FiniteGroup, q: int) -> int:
    """Rank of (1 + (-1)^q sigma)/2 on the class basis, classes found by full conjugation.

    Independent of ``conjugacy_classes``: orbits come from conjugating by every
    element rather than by generators, and the dimension from exact elimination
    rather than from counting.
    """
    if q not in (0, 1):
        raise DomainError(f"q must be 0 or 1, got {q}")
    n = h.order
    label = [-1] * n
    reps = []
    for x in range(n):
        if label[x] >= 0:
            continue
        for g in range(n):
            label[h.mul(h.mul(g, x), h.inv[g])] = len(reps)
        reps.append(x)
    sign = 1 if q == 0 else -1
    half = Fraction(1, 2)
    rows = []
    for c, x in enumerate(reps):
        sigma_c = label[h.inv[x]]
        row = {c: half}
        row[sigma_c] = row.get(sigma_c, 0) + sign * half
        rows.append(row)
    return rank(rows)
