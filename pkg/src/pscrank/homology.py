"""Betti numbers, the truncated Kuenneth product and dim H_p(G; F^q G) for p <= 2.

For G = T x H with T torsion-free and H finite, T centralizes every torsion
element and acts trivially on the class basis, so the coinvariants split as
``b_p(T) * d_q(H)``. Groups outside the grammar are handled through a
class-data file listing, per conjugacy class of torsion elements, the Betti
numbers of its centralizer together with the inversion eigen-split.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from pathlib import Path
from typing import Union

import jsonschema

from .classdata import conjugacy_classes, class_summary
from .errors import DomainError, SchemaError
from .expr import Atom
from .groups import NormalForm

DEGREES = (0, 1, 2)


@dataclass(frozen=True)
class BettiVector:
    b: tuple[int, int, int]

    def __post_init__(self):
        if len(self.b) != 3 or any((not isinstance(x, int)) or x < 0 for x in self.b):
            raise DomainError(f"Betti vector must be three nonnegative integers, got {self.b}")

    def __getitem__(self, p: int) -> int:
        return self.b[p]

    def __iter__(self):
        return iter(self.b)


UNIT = BettiVector((1, 0, 0))


def poincare_polynomial(atom: Atom) -> tuple[int, ...]:
    """All rational Betti numbers of a torsion-free atom (untruncated)."""
    if atom.kind == "trivial":
        return (1,)
    if atom.kind == "Z":
        return (1, 1)
    if atom.kind == "free":
        k = atom.args[0]
        return (1, k) if k else (1,)
    if atom.kind == "surface":
        g = atom.args[0]
        if g < 1:
            raise DomainError("surface genus must be >= 1")
        return (1, 2 * g, 1)
    raise DomainError(f"{atom.kind} is not a torsion-free atom")


def betti_vector(atom: Atom) -> BettiVector:
    poly = poincare_polynomial(atom)
    return BettiVector(tuple((poly + (0, 0, 0))[:3]))


def kunneth(a: BettiVector, b: BettiVector) -> BettiVector:
    return BettiVector(tuple(sum(a[i] * b[p - i] for i in range(p + 1)) for p in DEGREES))


def torsion_free_betti(nf: NormalForm) -> BettiVector:
    return reduce(kunneth, (betti_vector(a) for a in nf.torsion_free), UNIT)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def rational_homological_dimension(torsion_free: tuple[Atom, ...]) -> int:
    """Top degree with nonzero rational homology of the product of the atoms."""
    poly = reduce(_poly_mul, (poincare_polynomial(a) for a in torsion_free), (1,))
    return max(i for i, x in enumerate(poly) if x)


def _check_pq(p: int, q: int, zero_at_identity: bool) -> None:
    if p not in DEGREES:
        raise DomainError(f"p must be 0, 1 or 2, got {p}")
    if q not in (0, 1):
        raise DomainError(f"q must be 0 or 1, got {q}")
    if zero_at_identity and q != 0:
        raise DomainError("zero_at_identity is only defined for q = 0 (F^1 already vanishes at 1)")


def homology_dim(nf: NormalForm, p: int, q: int, zero_at_identity: bool = False) -> int:
    _check_pq(p, q, zero_at_identity)
    summary = class_summary(_classes(nf))
    return torsion_free_betti(nf)[p] * summary.d(q, zero_at_identity)


def _classes(nf: NormalForm):
    cached = getattr(nf.finite, "_conj_classes", None)
    if cached is None:
        cached = conjugacy_classes(nf.finite)
        nf.finite._conj_classes = cached
    return cached


# -- class-data files ---------------------------------------------------------

@dataclass(frozen=True)
class SelfPaired:
    betti_plus: BettiVector
    betti_minus: BettiVector
    is_identity: bool = False
    label: str | None = None


@dataclass(frozen=True)
class Pair:
    betti: BettiVector
    label: str | None = None


Entry = Union[SelfPaired, Pair]


@dataclass(frozen=True)
class ClassDataFile:
    entries: tuple[Entry, ...]
    group: str | None = None

    def __post_init__(self):
        ids = [e for e in self.entries if isinstance(e, SelfPaired) and e.is_identity]
        if len(ids) != 1:
            raise SchemaError(f"exactly one identity entry required, found {len(ids)}")
        if any(ids[0].betti_minus):
            raise SchemaError("the identity class is fixed by inversion; its betti_minus must be zero")

    @property
    def identity(self) -> SelfPaired:
        return next(e for e in self.entries if isinstance(e, SelfPaired) and e.is_identity)


def homology_from_class_data(cdf: ClassDataFile, p: int, q: int,
                             zero_at_identity: bool = False) -> int:
    """Sum of the centralizer contributions in the (-1)^q eigenspace of inversion.

    With ``zero_at_identity`` the identity summand (a trivial direct summand of
    the coefficient module) is removed in every degree.
    """
    _check_pq(p, q, zero_at_identity)
    total = 0
    for e in cdf.entries:
        if isinstance(e, Pair):
            total += e.betti[p]
        elif q == 0:
            if not (zero_at_identity and e.is_identity):
                total += e.betti_plus[p]
        else:
            total += e.betti_minus[p]
    return total


HomologySource = Union[NormalForm, ClassDataFile]


def hdim(source: HomologySource, p: int, q: int, zero_at_identity: bool = False) -> int:
    if isinstance(source, ClassDataFile):
        return homology_from_class_data(source, p, q, zero_at_identity)
    return homology_dim(source, p, q, zero_at_identity)


def class_data_for(nf: NormalForm, group: str | None = None) -> ClassDataFile:
    """Class data of T x H: centralizers are T x Z_H(c), inversion acts trivially on their homology."""
    b = torsion_free_betti(nf)
    zero = BettiVector((0, 0, 0))
    cd = _classes(nf)
    h = nf.finite
    entries: list[Entry] = []
    for c, cl in enumerate(cd.classes):
        j = cd.inv_class[c]
        label = h.element_label(cl.rep)
        if j == c:
            entries.append(SelfPaired(b, zero, c == cd.identity_class, label))
        elif c < j:
            entries.append(Pair(b, f"{label} ~ {h.element_label(cd.classes[j].rep)}"))
    return ClassDataFile(tuple(entries), group if group is not None else str(nf))


CLASSDATA_FORMAT = "pscrank-classdata"
CLASSDATA_VERSION = 1

_BETTI_SCHEMA = {"type": "array", "items": {"type": "integer", "minimum": 0},
                 "minItems": 3, "maxItems": 3}

CLASSDATA_SCHEMA = {
    "type": "object",
    "required": ["format", "version", "entries"],
    "additionalProperties": False,
    "properties": {
        "format": {"const": CLASSDATA_FORMAT},
        "version": {"const": CLASSDATA_VERSION},
        "group": {"type": ["string", "null"]},
        "entries": {
            "type": "array",
            "minItems": 1,
            "items": {
                "oneOf": [
                    {
                        "type": "object",
                        "required": ["kind", "identity", "betti_plus", "betti_minus"],
                        "additionalProperties": False,
                        "properties": {
                            "kind": {"const": "self_paired"},
                            "identity": {"type": "boolean"},
                            "betti_plus": _BETTI_SCHEMA,
                            "betti_minus": _BETTI_SCHEMA,
                            "label": {"type": "string"},
                        },
                    },
                    {
                        "type": "object",
                        "required": ["kind", "betti"],
                        "additionalProperties": False,
                        "properties": {
                            "kind": {"const": "pair"},
                            "betti": _BETTI_SCHEMA,
                            "label": {"type": "string"},
                        },
                    },
                ]
            },
        },
    },
}


def _entry_to_json(e: Entry) -> dict:
    if isinstance(e, Pair):
        d = {"kind": "pair", "betti": list(e.betti)}
    else:
        d = {"kind": "self_paired", "identity": e.is_identity,
             "betti_plus": list(e.betti_plus), "betti_minus": list(e.betti_minus)}
    if e.label is not None:
        d["label"] = e.label
    return d


def dumps_class_data(cdf: ClassDataFile) -> str:
    """Deterministic text: one entry per line, stable key order."""
    lines = [
        "{",
        f'  "format": {json.dumps(CLASSDATA_FORMAT)},',
        f'  "version": {CLASSDATA_VERSION},',
        f'  "group": {json.dumps(cdf.group, ensure_ascii=False)},',
        '  "entries": [',
    ]
    body = [f"    {json.dumps(_entry_to_json(e), ensure_ascii=False)}" for e in cdf.entries]
    lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def loads_class_data(text: str) -> ClassDataFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"class-data file is not valid JSON: {exc}") from None
    try:
        jsonschema.validate(data, CLASSDATA_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(x) for x in exc.absolute_path) or "<root>"
        raise SchemaError(f"class-data schema violation at {where}: {exc.message}") from None
    entries: list[Entry] = []
    try:
        for e in data["entries"]:
            if e["kind"] == "pair":
                entries.append(Pair(BettiVector(tuple(e["betti"])), e.get("label")))
            else:
                entries.append(SelfPaired(BettiVector(tuple(e["betti_plus"])),
                                          BettiVector(tuple(e["betti_minus"])),
                                          e["identity"], e.get("label")))
    except DomainError as exc:
        raise SchemaError(str(exc)) from None
    return ClassDataFile(tuple(entries), data.get("group"))


def read_class_data(path: str | Path) -> ClassDataFile:
    return loads_class_data(Path(path).read_text(encoding="utf-8"))


def write_class_data(cdf: ClassDataFile, path: str | Path) -> None:
    Path(path).write_text(dumps_class_data(cdf), encoding="utf-8")
