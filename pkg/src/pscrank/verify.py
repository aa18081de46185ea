"""Exact identity suites run by ``pscrank verify``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .classdata import dq_bruteforce_oracle, summarize
from .groups import CyclicGroup
from .matthey import collapse_expansion, fundamental_class_expansion, verify_expansion_equality
from .repring import (
    CycRingElt,
    ROElt,
    RQuotElt,
    basis,
    complexify,
    prop21_forward,
    prop21_inverse,
    realify,
    tau,
)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(what)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def ro_basis(m: int) -> list[ROElt]:
    return [ROElt(CycRingElt.omega(m, l) + CycRingElt.omega(m, -l)) for l in range(m // 2 + 1)]


def rquot_basis(m: int) -> list[RQuotElt]:
    return [RQuotElt.of(CycRingElt.omega(m, l)) for l in range(1, (m + 1) // 2)]


def repring_suite(max_modulus: int) -> SuiteResult:
    res = SuiteResult("repring")
    for m in range(1, max_modulus + 1):
        for x in basis(m):
            res.check(complexify(realify(x)) == x + tau(x), f"c.r != 1+tau at m={m}, {x}")
            a, b = prop21_inverse(x)
            res.check(prop21_forward(a, b) == x, f"forward.inverse != id at m={m}, {x}")
        for y in ro_basis(m):
            res.check(realify(complexify(y)).elt == y.elt * 2, f"r.c != 2 at m={m}, {y.elt}")
        zero_ro = ROElt(CycRingElt.zero(m))
        zero_q = RQuotElt(CycRingElt.zero(m))
        for y in ro_basis(m):
            res.check(prop21_inverse(prop21_forward(y, zero_q)) == (y, zero_q),
                      f"inverse.forward != id at m={m}")
        for y in rquot_basis(m):
            res.check(prop21_inverse(prop21_forward(zero_ro, y)) == (zero_ro, y),
                      f"inverse.forward != id at m={m}")
    return res


def matthey_suite(max_modulus: int) -> SuiteResult:
    res = SuiteResult("matthey")
    for m in range(1, max_modulus + 1):
        s = summarize(CyclicGroup(m))
        for q in (0, 1):
            for p in (0, 1, 2):
                raw = fundamental_class_expansion(p, m, q)
                col = collapse_expansion(raw)
                res.check(verify_expansion_equality(raw, col), f"collapse mismatch p={p} m={m} q={q}")
                res.check(len(col.nonzero_terms()) == s.d(q),
                          f"term count {len(col.nonzero_terms())} != d{q}={s.d(q)} at m={m}")
    return res


def classdata_suite(max_modulus: int) -> SuiteResult:
    res = SuiteResult("classdata")
    for m in range(1, max_modulus + 1):
        h = CyclicGroup(m)
        s = summarize(h)
        res.check(s.d0 == m // 2 + 1 and s.d1 == (m + 1) // 2 - 1, f"cyclic formula fails at m={m}")
        for q in (0, 1):
            res.check(s.d(q) == dq_bruteforce_oracle(h, q), f"oracle mismatch m={m} q={q}")
    return res


def run_all(max_modulus: int) -> list[SuiteResult]:
    return [repring_suite(max_modulus), matthey_suite(max_modulus), classdata_suite(max_modulus)]
