"""Verdicts, Drazin results and equivalence reports, with their JSON forms."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .rings import Element


class Verdict(str, enum.Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"
    UNDECIDABLE = "undecidable"


@dataclass(frozen=True)
class DrazinResult:
    """``inverse`` is the Drazin inverse; ``index`` the least k >= 0 with a^k = a^(k+1) inverse."""

    inverse: Element
    index: int

    def to_json(self) -> dict:
        return {"inverse": self.inverse.to_json(), "index": self.index}


@dataclass(frozen=True)
class MembershipDecision:
    verdict: Verdict
    witness: Optional[DrazinResult]
    method: str

    def __post_init__(self):
        if (self.verdict is Verdict.MEMBER) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the verdict is member")

    @property
    def is_member(self) -> bool:
        return self.verdict is Verdict.MEMBER

    @property
    def decisive(self) -> bool:
        return self.verdict is not Verdict.UNDECIDABLE


@dataclass(frozen=True)
class Condition:
    name: str
    element: Element
    decision: MembershipDecision

    def to_json(self) -> dict:
        r = self.element.ring
        w = self.decision.witness
        return {
            "name": self.name,
            "element": r.encode(self.element.value),
            "verdict": self.decision.verdict.value,
            "method": self.decision.method,
            "inverse": None if w is None else r.encode(w.inverse.value),
            "index": None if w is None else w.index,
        }


@dataclass
class EquivalenceReport:
    """Membership verdicts for the named conditions of one theorem on one pair.

    ``agree`` records whether the theorem's contract holds among the decisive
    verdicts.  ``identities`` holds the unconditional ring identities checked
    alongside, and ``constructions`` any inverses built by a closed form.
    """

    theorem: str
    pair: tuple[Element, Element]
    conditions: list[Condition]
    agree: bool
    identities: dict[str, bool] = field(default_factory=dict)
    constructions: dict[str, Element] = field(default_factory=dict)

    @property
    def decisive(self) -> bool:
        return all(c.decision.decisive for c in self.conditions)

    @property
    def violation(self) -> bool:
        return not self.agree or not all(self.identities.values())

    @property
    def negative(self) -> bool:
        """The theorem's leading condition fails, so the equivalence is exercised non-vacuously."""
        return self.conditions[0].decision.verdict is Verdict.NON_MEMBER

    def verdicts(self) -> dict[str, Verdict]:
        return {c.name: c.decision.verdict for c in self.conditions}

    def __getitem__(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        r = self.pair[0].ring
        return {
            "theorem": self.theorem,
            "ring": r.to_json(),
            "pair": [r.encode(x.value) for x in self.pair],
            "conditions": [c.to_json() for c in self.conditions],
            "agree": self.agree,
            "decisive": self.decisive,
            "identities": dict(self.identities),
            "constructions": {k: r.encode(v.value) for k, v in self.constructions.items()},
        }
