"""Brute-force Drazin inverses for small finite rings.

Shares nothing with the engine beyond ring arithmetic: every candidate ``b``
is tried against the defining equations directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import drazin_finite, drazin_matrix_field
from .report import DrazinResult
from .rings import Element, Matrix, Ring, enumerate_elements, ResourceError, UnsupportedRingError

ORACLE_CAP = 4096


class OracleDefect(AssertionError):
    """No inverse, or more than one, was found: the ring arithmetic is broken."""


def brute_force_drazin(a: Element, cap: int = ORACLE_CAP) -> DrazinResult:
    r = a.ring
    if not r.is_finite:
        raise UnsupportedRingError(f"no oracle for infinite ring {r.describe()}")
    n = r.cardinality
    if n > cap:
        raise ResourceError(f"{r.describe()} has {n} elements, oracle cap is {cap}")
    # a^0 .. a^(n+1)
    powers = [r.one_value()]
    for _ in range(n + 1):
        powers.append(r.mul_values(powers[-1], a.value))
    mul = r.mul_values
    found = []
    for b in r.iter_values():
        if mul(a.value, b) != mul(b, a.value) or mul(mul(b, a.value), b) != b:
            continue
        for k in range(n + 1):
            if powers[k] == mul(powers[k + 1], b):
                found.append((b, k))
                break
    if len(found) != 1:
        raise OracleDefect(f"expected exactly one Drazin inverse of {a!r}, found {len(found)}")
    b, k = found[0]
    return DrazinResult(Element(r, b), k)


@dataclass
class CrossValidation:
    ring: Ring
    elements_checked: int = 0
    mismatches: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "elements_checked": self.elements_checked,
            "mismatches": self.mismatches,
        }


def cross_validate(r: Ring, cap: int = ORACLE_CAP) -> CrossValidation:
    """Compare the engine against the oracle on every element of ``r``."""
    strategies = [("finite-power-cycle", drazin_finite)]
    if isinstance(r, Matrix) and r.base.is_field:
        strategies.append(("matrix-rank", drazin_matrix_field))
    out = CrossValidation(r)
    for a in enumerate_elements(r, cap):
        truth = brute_force_drazin(a, cap)
        out.elements_checked += 1
        for name, fn in strategies:
            got = fn(a)
            if got != truth:
                out.mismatches.append({
                    "element": r.encode(a.value),
                    "strategy": name,
                    "expected": {"inverse": r.encode(truth.inverse.value), "index": truth.index},
                    "got": {"inverse": r.encode(got.inverse.value), "index": got.index},
                })
    return out
