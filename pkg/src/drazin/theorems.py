"""Executable equivalence checks for products, differences, commutators and
anti-commutators of two idempotents, plus sweeps over idempotent families.

Each check materialises the condition elements from ``(p, q)``, decides
Drazin membership for each of them and records whether the theorem's
contract holds.  A sweep only samples pairs; it demonstrates the theorems on
concrete rings, it does not prove them.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

from .engine import corner_equivalence, drazin_membership
from .report import Condition, EquivalenceReport, MembershipDecision, Verdict
from .rings import (
    Element,
    IdempotentFamily,
    Integers,
    Ring,
    RingError,
    enumerate_idempotents,
    is_idempotent,
)

# -- condition lists --------------------------------------------------------


def _check_pair(p: Element, q: Element) -> None:
    if p.ring != q.ring:
        raise RingError("p and q live in different rings")
    for x in (p, q):
        if not is_idempotent(x):
            raise RingError(f"{x!r} is not idempotent")


def _prop31_elements(p, q):
    return [
        ("1-pq", 1 - p * q),
        ("p-pq", p - p * q),
        ("p-qp", p - q * p),
        ("1-pqp", 1 - p * q * p),
        ("p-pqp", p - p * q * p),
        ("1-qp", 1 - q * p),
        ("q-qp", q - q * p),
        ("q-pq", q - p * q),
        ("1-qpq", 1 - q * p * q),
        ("q-qpq", q - q * p * q),
    ]


def _cor32_elements(p, q):
    return [
        ("p+q-pq", p + q - p * q),
        ("q-pq", q - p * q),
        ("q-qp", q - q * p),
        ("p+(1-p)(q-qp)", p + (1 - p) * (q - q * p)),
        ("(1-p)q(1-p)", (1 - p) * q * (1 - p)),
        ("p+q-qp", p + q - q * p),
        ("p-qp", p - q * p),
        ("p-pq", p - p * q),
        ("q+(1-q)(p-pq)", q + (1 - q) * (p - p * q)),
        ("(1-q)p(1-q)", (1 - q) * p * (1 - q)),
    ]


class _Decider:
    """Membership with a per-report memo; conditions often repeat elements."""

    def __init__(self):
        self._memo: dict = {}

    def __call__(self, x: Element) -> MembershipDecision:
        d = self._memo.get(x.value)
        if d is None:
            d = self._memo[x.value] = drazin_membership(x)
        return d


def _decide(named, decider=None) -> list[Condition]:
    decider = decider or _Decider()
    return [Condition(name, x, decider(x)) for name, x in named]


def _equivalent(conditions: list[Condition]) -> bool:
    return len({c.decision.verdict for c in conditions if c.decision.decisive}) <= 1


def _and3(u: Verdict, v: Verdict) -> Verdict:
    if Verdict.NON_MEMBER in (u, v):
        return Verdict.NON_MEMBER
    if Verdict.UNDECIDABLE in (u, v):
        return Verdict.UNDECIDABLE
    return Verdict.MEMBER


def _conjunction_holds(conditions: list[Condition]) -> bool:
    lhs = conditions[0].decision.verdict
    rhs = _and3(conditions[1].decision.verdict, conditions[2].decision.verdict)
    return Verdict.UNDECIDABLE in (lhs, rhs) or lhs is rhs


def prop31(p: Element, q: Element) -> EquivalenceReport:
    _check_pair(p, q)
    conds = _decide(_prop31_elements(p, q))
    return EquivalenceReport("prop31", (p, q), conds, _equivalent(conds))


def cor32(p: Element, q: Element) -> EquivalenceReport:
    _check_pair(p, q)
    conds = _decide(_cor32_elements(p, q))
    return EquivalenceReport("cor32", (p, q), conds, _equivalent(conds))


def thm33(p: Element, q: Element) -> EquivalenceReport:
    _check_pair(p, q)
    d = p - q
    conds = _decide([("p-q", d), ("1-pq", 1 - p * q), ("p+q-pq", p + q - p * q)])
    identities = {
        "1-pqp = (p-q)^2 p + 1-p": 1 - p * q * p == d * d * p + 1 - p,
        "p(p-q)^2 = (p-q)^2 p = p-pqp": p * d * d == d * d * p == p - p * q * p,
    }
    return EquivalenceReport("thm33", (p, q), conds, _equivalent(conds), identities)


def thm34(p: Element, q: Element) -> EquivalenceReport:
    _check_pair(p, q)
    conds = _decide([("pq", p * q), ("1-p-q", 1 - p - q), ("(1-p)(1-q)", (1 - p) * (1 - q))])
    return EquivalenceReport("thm34", (p, q), conds, _equivalent(conds))


def thm35(p: Element, q: Element) -> EquivalenceReport:
    _check_pair(p, q)
    conds = _decide([("pq-qp", p * q - q * p), ("pq", p * q), ("p-q", p - q)])
    b, c = p * q * (1 - p), (1 - p) * q * p
    pqp, d2 = p * q * p, (p - q) * (p - q)
    identities = {
        "b-c = pq-qp": b - c == p * q - q * p,
        "bc = pqp-(pqp)^2 = pqp(p-q)^2 = (p-q)^2 pqp": b * c == pqp - pqp * pqp == pqp * d2 == d2 * pqp,
    }
    return EquivalenceReport("thm35", (p, q), conds, _conjunction_holds(conds), identities)


def thm36(p: Element, q: Element) -> EquivalenceReport:
    _check_pair(p, q)
    s = p + q
    anti = p * q + q * p
    conds = _decide([("pq+qp", anti), ("pq", p * q), ("p+q", s)])
    identities = {
        "pq+qp = (p+q)(p+q-1) = (p+q-1)(p+q)": anti == s * (s - 1) == (s - 1) * s,
        "pq+qp = (p+q-1) + (p+q-1)^2 = -(p+q) + (p+q)^2": anti == (s - 1) + (s - 1) * (s - 1) == -s + s * s,
    }
    return EquivalenceReport("thm36", (p, q), conds, _conjunction_holds(conds), identities)


def lemma26(a: Element, p: Element) -> EquivalenceReport:
    return corner_equivalence(a, p)


def remark37_regression(p=1, q=1, ring: Ring = Integers()) -> EquivalenceReport:
    """Membership of p - q and p + q for idempotents p, q (default p = q = 1 in Z).

    In Z this splits: p - q = 0 is Drazin invertible but p + q = 2 is not.
    """
    p = p if isinstance(p, Element) else ring(p)
    q = q if isinstance(q, Element) else ring(q)
    _check_pair(p, q)
    conds = _decide([("p-q", p - q), ("p+q", p + q)])
    return EquivalenceReport("remark37", (p, q), conds, _equivalent(conds))


THEOREMS: dict[str, Callable[[Element, Element], EquivalenceReport]] = {
    "prop31": prop31,
    "cor32": cor32,
    "thm33": thm33,
    "thm34": thm34,
    "thm35": thm35,
    "thm36": thm36,
    "lemma26": lemma26,
}

PAIR_THEOREMS = ("prop31", "cor32", "thm33", "thm34", "thm35", "thm36")


# -- sweeps -----------------------------------------------------------------


@dataclass
class SweepSummary:
    theorem: str
    pairs_checked: int = 0
    agreements: int = 0
    undecidable: int = 0
    negatives: int = 0
    violations: list[EquivalenceReport] = field(default_factory=list)
    reports: list[EquivalenceReport] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "pairs_checked": self.pairs_checked,
            "agreements": self.agreements,
            "undecidable": self.undecidable,
            "negatives": self.negatives,
            "violations": len(self.violations),
        }


Source = Union[IdempotentFamily, Iterable[Element]]


def _materialize(source: Source) -> list[Element]:
    items = enumerate_idempotents(source) if isinstance(source, IdempotentFamily) else source
    return sorted(items, key=Element.sort_key)


def _run(args: tuple[str, Element, Element]) -> EquivalenceReport:
    label, x, y = args
    return THEOREMS[label](x, y)


def sweep(theorem: str, family_p: Source, family_q: Source, parallelism: int = 1) -> SweepSummary:
    """Run ``theorem`` over every pair of ``family_p x family_q``.

    For ``lemma26`` the first family supplies the element ``a`` (any iterable
    of elements is accepted) and the second the idempotent ``p``.  Pairs are
    ordered by serialised value, so the result does not depend on
    ``parallelism``.
    """
    if theorem not in THEOREMS:
        raise RingError(f"unknown theorem label {theorem!r}")
    if isinstance(parallelism, bool) or not isinstance(parallelism, int) or parallelism < 1:
        raise RingError(f"parallelism must be a positive integer, got {parallelism!r}")
    xs, ys = _materialize(family_p), _materialize(family_q)
    if xs and ys and xs[0].ring != ys[0].ring:
        raise RingError("families live in different rings")
    jobs = [(theorem, x, y) for x in xs for y in ys]
    if parallelism == 1 or len(jobs) < 2:
        reports = [_run(j) for j in jobs]
    else:
        chunk = max(1, len(jobs) // (4 * parallelism))
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            reports = list(pool.map(_run, jobs, chunksize=chunk))
    summary = SweepSummary(theorem)
    for rep in reports:
        summary.pairs_checked += 1
        summary.reports.append(rep)
        if rep.violation:
            summary.violations.append(rep)
        elif not rep.decisive:
            summary.undecidable += 1
        else:
            summary.agreements += 1
        if rep.negative:
            summary.negatives += 1
    return summary
