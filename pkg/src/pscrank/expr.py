"""Group expressions: AST, parser and canonical printer.

Grammar (whitespace-insensitive)::

    expr  := atom ('*' atom)*
    atom  := 'trivial' | 'Z' | 'free' '(' int ')' | 'surface' '(' int ')'
           | 'cyclic' '(' int ')' | 'abelian' '(' int (',' int)* ')'
           | 'perm' '(' string (',' string)* ')'

Permutation generators are double-quoted cycle notation, e.g. ``"(1 2 3)(4 5)"``.
Only direct products are expressible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import DomainError, ExprSyntaxError

TORSION_FREE_KINDS = ("trivial", "Z", "free", "surface")
FINITE_KINDS = ("cyclic", "abelian", "perm")
ATOM_KINDS = TORSION_FREE_KINDS + FINITE_KINDS

Cycle = tuple[int, ...]
Generator = tuple[Cycle, ...]


@dataclass(frozen=True)
class Atom:
    kind: str
    args: tuple = ()

    @property
    def is_finite(self) -> bool:
        return self.kind in FINITE_KINDS

    @property
    def is_torsion_free(self) -> bool:
        return self.kind in TORSION_FREE_KINDS

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True)
class Product:
    """Direct product of two or more atoms, in input order."""

    factors: tuple[Atom, ...]

    def __str__(self) -> str:
        return format_expr(self)


GroupExpr = Union[Atom, Product]


def atoms(expr: GroupExpr) -> tuple[Atom, ...]:
    return expr.factors if isinstance(expr, Product) else (expr,)


def trivial() -> Atom:
    return Atom("trivial")


def Z() -> Atom:
    return Atom("Z")


def free(k: int) -> Atom:
    return _checked(Atom("free", (k,)))


def surface(g: int) -> Atom:
    return _checked(Atom("surface", (g,)))


def cyclic(m: int) -> Atom:
    return _checked(Atom("cyclic", (m,)))


def abelian(*orders: int) -> Atom:
    return _checked(Atom("abelian", tuple(orders)))


def perm(*generators: str) -> Atom:
    gens = tuple(parse_cycles(g) for g in generators)
    return _checked(Atom("perm", gens))


def product(*factors: GroupExpr) -> GroupExpr:
    flat: list[Atom] = []
    for f in factors:
        flat.extend(atoms(f))
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def _checked(atom: Atom) -> Atom:
    kind, args = atom.kind, atom.args
    if kind in ("free", "surface", "cyclic") and len(args) != 1:
        raise DomainError(f"{kind} takes exactly one integer argument")
    if any(isinstance(a, int) and a < 0 for a in args):
        raise DomainError(f"{kind}: arguments must be nonnegative, got {args}")
    if kind == "surface" and args[0] == 0:
        raise DomainError("surface(0) is not allowed: genus must be >= 1 (write 'trivial' for the trivial group)")
    if kind == "cyclic" and args[0] == 0:
        raise DomainError("cyclic(0) is not allowed: order must be >= 1")
    if kind == "abelian":
        if not args:
            raise DomainError("abelian needs at least one order")
        if any(a == 0 for a in args):
            raise DomainError("abelian: every cyclic order must be >= 1")
    if kind == "perm":
        if not args:
            raise DomainError("perm needs at least one generator")
        for gen in args:
            for cyc in gen:
                if any(p < 1 for p in cyc):
                    raise DomainError("permutation points must be positive integers")
    return atom


# -- printing -----------------------------------------------------------------

def _format_cycles(gen: Generator) -> str:
    if not gen:
        return "()"
    return "".join("(" + " ".join(str(p) for p in cyc) + ")" for cyc in gen)


def _format_atom(atom: Atom) -> str:
    if atom.kind in ("trivial", "Z"):
        return atom.kind
    if atom.kind == "perm":
        return "perm(" + ",".join(f'"{_format_cycles(g)}"' for g in atom.args) + ")"
    return f"{atom.kind}(" + ",".join(str(a) for a in atom.args) + ")"


def format_expr(expr: GroupExpr) -> str:
    """Canonical text form; ``parse_group_expr(format_expr(e)) == e``."""
    return "*".join(_format_atom(a) for a in atoms(expr))


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>-?\d+)
  | (?P<string>"[^"]*")
  | (?P<punct>[(),*])
    """,
    re.VERBOSE,
)

_NON_DIRECT_OPS = {"+": "free product", "⋆": "free product", "∗": "free product",
                   "⋊": "semidirect product", "⋉": "semidirect product", ":": "extension"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            ch = text[pos]
            if ch in _NON_DIRECT_OPS:
                raise ExprSyntaxError(
                    f"'{ch}' ({_NON_DIRECT_OPS[ch]}) is not supported; only direct products '*' are allowed",
                    pos, text)
            if ch == '"':
                raise ExprSyntaxError("unterminated string", pos, text)
            raise ExprSyntaxError(f"unexpected character {ch!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


_CYCLE = re.compile(r"\s*\(([^()]*)\)")


def parse_cycles(s: str, offset: int = 0) -> Generator:
    """Parse cycle notation such as ``"(1 2 3)(4 5)"``; ``"()"`` is the identity."""
    cycles: list[Cycle] = []
    pos = 0
    while pos < len(s):
        if s[pos:].strip() == "":
            break
        m = _CYCLE.match(s, pos)
        if m is None:
            raise ExprSyntaxError("malformed cycle notation", offset + pos, s)
        body = m.group(1).replace(",", " ").split()
        try:
            points = tuple(int(p) for p in body)
        except ValueError:
            raise ExprSyntaxError("cycle entries must be integers", offset + m.start(1), s) from None
        if points:
            cycles.append(points)
        pos = m.end()
    return tuple(cycles)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.next()
        if val != value:
            found = "end of input" if kind == "eof" else repr(val)
            raise ExprSyntaxError(f"expected {value!r}, found {found}", pos, self.text)

    def parse(self) -> GroupExpr:
        factors = [self.atom()]
        while self.peek()[1] == "*":
            self.next()
            factors.append(self.atom())
        kind, val, pos = self.peek()
        if kind != "eof":
            raise ExprSyntaxError(f"unexpected {val!r}; atoms must be joined with '*'", pos, self.text)
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def atom(self) -> Atom:
        kind, name, pos = self.next()
        if kind != "ident":
            found = "end of input" if kind == "eof" else repr(name)
            raise ExprSyntaxError(f"expected a group atom, found {found}", pos, self.text)
        if name not in ATOM_KINDS:
            raise ExprSyntaxError(
                f"unknown atom {name!r}; expected one of {', '.join(ATOM_KINDS)}", pos, self.text)
        if name in ("trivial", "Z"):
            return Atom(name)
        self.expect("(")
        args: list = []
        if name == "perm":
            while True:
                k, val, p = self.next()
                if k != "string":
                    raise ExprSyntaxError("perm generators must be quoted cycle strings", p, self.text)
                args.append(parse_cycles(val[1:-1], p + 1))
                if self.peek()[1] != ",":
                    break
                self.next()
        else:
            while True:
                k, val, p = self.next()
                if k != "int":
                    raise ExprSyntaxError(f"{name} expects integer arguments", p, self.text)
                args.append(int(val))
                if self.peek()[1] != ",":
                    break
                self.next()
        self.expect(")")
        return _checked(Atom(name, tuple(args)))


def parse_group_expr(text: str) -> GroupExpr:
    """Parse a group expression, raising ExprSyntaxError or DomainError."""
    if not text or not text.strip():
        raise ExprSyntaxError("empty group expression", 0, text)
    return _Parser(text).parse()
