"""Enumerated finite groups and the torsion-free x finite normal form.

Elements of a FiniteGroup are the integers ``0..order-1`` with 0 the identity.
Multiplication is computed on demand; ``mult_table()`` tabulates it for
groups small enough to hold an ``order x order`` array.
"""

from __future__ import annotations

import math
import os
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import DomainError, ResourceLimitError
from .expr import Atom, GroupExpr, atoms, format_expr, product

DEFAULT_ELEMENT_CAP = 100_000
ELEMENT_CAP_ENV = "PSCRANK_ELEMENT_CAP"
TABLE_LIMIT = 4096


def default_element_cap() -> int:
    value = os.environ.get(ELEMENT_CAP_ENV)
    if value is None:
        return DEFAULT_ELEMENT_CAP
    try:
        cap = int(value)
    except ValueError:
        raise DomainError(f"{ELEMENT_CAP_ENV} must be a positive integer, got {value!r}") from None
    if cap < 1:
        raise DomainError(f"{ELEMENT_CAP_ENV} must be a positive integer, got {value!r}")
    return cap


def _check_cap(order: int, cap: int | None, what: str) -> None:
    if cap is None:
        cap = default_element_cap()
    if order > cap:
        raise ResourceLimitError(f"{what} has {order} elements, above the element cap of {cap}")


class FiniteGroup:
    """Abstract enumerated group. Subclasses supply ``mul`` and the inverse table."""

    order: int
    inv: tuple[int, ...]
    generators: tuple[int, ...]
    label: str
    identity = 0

    def mul(self, i: int, j: int) -> int:
        raise NotImplementedError

    def element_label(self, i: int) -> str:
        return str(i)

    def mult_table(self) -> np.ndarray:
        if self.order > TABLE_LIMIT:
            raise ResourceLimitError(
                f"refusing to tabulate a group of order {self.order} (limit {TABLE_LIMIT})")
        cached = getattr(self, "_table", None)
        if cached is None:
            n = self.order
            cached = np.empty((n, n), dtype=np.int64)
            for i in range(n):
                for j in range(n):
                    cached[i, j] = self.mul(i, j)
            cached.setflags(write=False)
            self._table = cached
        return cached

    def conjugate(self, x: int, s: int) -> int:
        """s^-1 x s"""
        return self.mul(self.mul(self.inv[s], x), s)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k

    def order_census(self) -> Counter:
        """Multiset of element orders, a cheap isomorphism invariant."""
        return Counter(self.element_order(i) for i in range(self.order))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label} of order {self.order}>"


class CyclicGroup(FiniteGroup):
    def __init__(self, m: int):
        if m < 1:
            raise DomainError(f"cyclic order must be >= 1, got {m}")
        self.m = m
        self.order = m
        self.inv = tuple((-i) % m for i in range(m))
        self.generators = (1,) if m > 1 else ()
        self.label = f"cyclic({m})" if m > 1 else "trivial"

    def mul(self, i: int, j: int) -> int:
        return (i + j) % self.m

    def element_label(self, i: int) -> str:
        return f"t^{i}"


class PermutationGroup(FiniteGroup):
    """Closure of permutation generators; elements in breadth-first discovery order.

    Products act left to right: ``(x*y)(k) = y(x(k))``.
    """

    def __init__(self, generators: list[tuple[int, ...]], degree: int, cap: int | None = None,
                 label: str = "perm"):
        identity = tuple(range(degree))
        elements = [identity]
        index = {identity: 0}
        gens = []
        for g in generators:
            if len(g) != degree or sorted(g) != list(identity):
                raise DomainError(f"not a permutation of {degree} points: {g}")
            gens.append(g)
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = tuple(g[x[k]] for k in range(degree))
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    _check_cap(len(elements), cap, label)
                    queue.append(y)
        self.degree = degree
        self.elements = elements
        self._index = index
        self.order = len(elements)
        self.inv = tuple(index[_invert(p)] for p in elements)
        self.generators = tuple(sorted({index[g] for g in gens} - {0}))
        self.label = label

    def mul(self, i: int, j: int) -> int:
        x, y = self.elements[i], self.elements[j]
        return self._index[tuple(y[x[k]] for k in range(self.degree))]

    def element_label(self, i: int) -> str:
        return _cycle_string(self.elements[i])


class DirectProductGroup(FiniteGroup):
    """Pairs (i, j) stored at index ``i * |b| + j``."""

    def __init__(self, a: FiniteGroup, b: FiniteGroup):
        self.a, self.b = a, b
        nb = b.order
        self.order = a.order * nb
        self.inv = tuple(a.inv[i] * nb + b.inv[j] for i in range(a.order) for j in range(nb))
        self.generators = tuple([g * nb for g in a.generators] + list(b.generators))
        self.label = f"{a.label}*{b.label}"

    def split(self, i: int) -> tuple[int, int]:
        return divmod(i, self.b.order)

    def mul(self, i: int, j: int) -> int:
        nb = self.b.order
        ia, ib = divmod(i, nb)
        ja, jb = divmod(j, nb)
        return self.a.mul(ia, ja) * nb + self.b.mul(ib, jb)

    def element_label(self, i: int) -> str:
        ia, ib = self.split(i)
        return f"({self.a.element_label(ia)}, {self.b.element_label(ib)})"


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for k, v in enumerate(p):
        out[v] = k
    return tuple(out)


def _cycle_string(p: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, k = [], start
        while k not in seen:
            seen.add(k)
            cyc.append(str(k + 1))
            k = p[k]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def trivial_group() -> FiniteGroup:
    return CyclicGroup(1)


def direct_product(a: FiniteGroup, b: FiniteGroup, cap: int | None = None) -> FiniteGroup:
    _check_cap(a.order * b.order, cap, f"{a.label}*{b.label}")
    return DirectProductGroup(a, b)


def _perm_from_cycles(gen, degree: int) -> tuple[int, ...]:
    images = list(range(degree))
    for cyc in gen:
        if len(set(cyc)) != len(cyc):
            raise DomainError(f"repeated point in cycle {cyc}: not a permutation")
        step = list(range(degree))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            step[a - 1] = b - 1
        # apply earlier cycles first
        images = [step[images[k]] for k in range(degree)]
    return tuple(images)


def build_finite_group(atom: Atom, cap: int | None = None) -> FiniteGroup:
    """Realize a cyclic, abelian or perm atom as an enumerated group."""
    if atom.kind == "cyclic":
        _check_cap(atom.args[0], cap, format_expr(atom))
        return CyclicGroup(atom.args[0])
    if atom.kind == "abelian":
        _check_cap(math.prod(atom.args), cap, format_expr(atom))
        groups = [CyclicGroup(m) for m in atom.args]
        g = reduce(lambda x, y: direct_product(x, y, cap), groups)
        g.label = format_expr(atom)
        return g
    if atom.kind == "perm":
        degree = max((p for gen in atom.args for cyc in gen for p in cyc), default=0)
        gens = [_perm_from_cycles(gen, degree) for gen in atom.args]
        return PermutationGroup(gens, degree, cap, label=format_expr(atom))
    raise DomainError(f"{atom.kind} is not a finite atom")


def check_group_axioms(h: FiniteGroup, exhaustive_limit: int = 512) -> None:
    """Raise AssertionError unless identity, inverse (and, for small groups, associativity) hold."""
    n = h.order
    for i in range(n):
        assert h.mul(0, i) == i == h.mul(i, 0), f"identity fails at {i}"
        assert h.mul(i, h.inv[i]) == 0 == h.mul(h.inv[i], i), f"inverse fails at {i}"
        assert h.inv[h.inv[i]] == i, f"inv not an involution at {i}"
    if n <= exhaustive_limit:
        t = h.mult_table()
        for a in range(n):
            # (a*b)*c vs a*(b*c) for all b, c
            lhs = t[t[a, :], :]
            rhs = t[a, t]
            assert np.array_equal(lhs, rhs), f"associativity fails for a={a}"


@dataclass(frozen=True)
class NormalForm:
    torsion_free: tuple[Atom, ...]
    finite: FiniteGroup = field(compare=False)
    finite_atoms: tuple[Atom, ...] = ()

    @property
    def expr(self) -> GroupExpr:
        parts = list(self.torsion_free) + list(self.finite_atoms)
        return product(*parts) if parts else Atom("trivial")

    def __str__(self) -> str:
        return format_expr(self.expr)


def normalize(expr: GroupExpr, cap: int | None = None) -> NormalForm:
    """Split an expression into torsion-free atoms and one finite direct product."""
    torsion_free = []
    finite_atoms = []
    for atom in atoms(expr):
        if atom.kind == "trivial":
            continue
        if atom.is_torsion_free:
            torsion_free.append(atom)
        else:
            finite_atoms.append(atom)
    finite: FiniteGroup = trivial_group()
    if finite_atoms:
        built = [build_finite_group(a, cap) for a in finite_atoms]
        _check_cap(math.prod(g.order for g in built), cap, "finite part")
        finite = reduce(lambda x, y: direct_product(x, y, cap), built)
    return NormalForm(tuple(torsion_free), finite, tuple(finite_atoms))
