"""Drazin inverses: computation, membership decisions and the closed-form constructions.

Every routine that produces a :class:`DrazinResult` runs it through
:func:`certify` first, so a returned result always satisfies

    a x = x a,    x a x = x,    a^k = a^(k+1) x

for the reported (least) ``k``.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .report import Condition, DrazinResult, EquivalenceReport, MembershipDecision, Verdict
from .rings import (
    Element,
    Integers,
    Matrix,
    Product,
    Rationals,
    Ring,
    RingError,
    UnsupportedRingError,
    is_idempotent,
    power,
)


class PreconditionError(RingError):
    """An operation was called outside its hypotheses (e.g. non-commuting inputs)."""


class AxiomViolation(AssertionError):
    """A computed inverse failed the Drazin axioms; always a defect."""


class ContractViolation(AssertionError):
    """Two verdicts that must agree did not; always a defect."""


_FALLBACK_CAP = 64


def index_cap(r: Ring) -> int:
    """Upper bound on the Drazin index of any element of ``r``."""
    if isinstance(r, Matrix) and (r.base.is_field or isinstance(r.base, Integers)):
        return r.dim
    if isinstance(r, (Integers, Rationals)):
        return 1
    if isinstance(r, Product):
        return max(index_cap(r.left), index_cap(r.right))
    if r.is_finite:
        return r.cardinality
    return _FALLBACK_CAP


def least_index(a: Element, x: Element, cap: int | None = None) -> int | None:
    """Least k in ``0..cap`` with a^k = a^(k+1) x, or None."""
    r = a.ring
    cap = index_cap(r) if cap is None else cap
    ak = r.one_value()
    for k in range(cap + 1):
        if ak == r.mul_values(r.mul_values(ak, a.value), x.value):
            return k
        ak = r.mul_values(ak, a.value)
    return None


def certify(a: Element, x: Element, cap: int | None = None) -> DrazinResult:
    """Check the three Drazin axioms for ``x`` against ``a`` and return the result."""
    if a.ring != x.ring:
        raise RingError("inverse candidate lives in a different ring")
    if a * x != x * a:
        raise AxiomViolation(f"{x!r} does not commute with {a!r}")
    if x * a * x != x:
        raise AxiomViolation(f"x a x != x for a={a!r}, x={x!r}")
    k = least_index(a, x, cap)
    if k is None:
        raise AxiomViolation(f"no k <= cap with a^k = a^(k+1) x for a={a!r}, x={x!r}")
    return DrazinResult(x, k)


def is_drazin_inverse(a: Element, x: Element) -> bool:
    try:
        certify(a, x)
    except AxiomViolation:
        return False
    return True


def drazin_finite(a: Element) -> DrazinResult:
    """Drazin inverse in a finite ring as a power of ``a``.

    The powers a, a^2, ... are eventually periodic with tail ``i`` and period
    ``p``; the periodic part is a cyclic group and a^s with s >= i and
    s + 1 = 0 (mod p) is the inverse of ``a`` inside it.
    """
    r = a.ring
    if not r.is_finite:
        raise UnsupportedRingError(f"{r.describe()} is infinite")
    first_seen: dict = {}
    v, e = a.value, 1
    while v not in first_seen:
        first_seen[v] = e
        v = r.mul_values(v, a.value)
        e += 1
    tail = first_seen[v]
    period = e - tail
    s = max(tail, 1)
    s += -(s + 1) % period
    return certify(a, power(a, s))


def drazin_matrix_field(a: Element) -> DrazinResult:
    """Drazin inverse of a square matrix over a prime field or the rationals.

    The index l is where the ranks of a^0, a^1, ... stabilise, and then
    a^D = a^l G a^l for any {1}-inverse G of a^(2l+1).
    """
    r = a.ring
    if not (isinstance(r, Matrix) and r.base.is_field):
        raise UnsupportedRingError(f"{r.describe()} is not a matrix ring over a field")
    field = r.base
    powers = [r.one_value(), a.value]
    ranks = [r.dim, linalg.rank(a.value, field)]
    while ranks[-2] != ranks[-1]:
        powers.append(r.mul_values(powers[-1], a.value))
        ranks.append(linalg.rank(powers[-1], field))
    ell = len(ranks) - 2
    big = power(a, 2 * ell + 1).value
    g = linalg.one_inverse(big, field)
    if r.mul_values(r.mul_values(big, g), big) != big:
        raise AxiomViolation("computed {1}-inverse is wrong")
    x = r.mul_values(r.mul_values(powers[ell], g), powers[ell])
    return certify(a, Element(r, x), cap=r.dim)


def _member(res: DrazinResult, method: str) -> MembershipDecision:
    return MembershipDecision(Verdict.MEMBER, res, method)


def _non_member(method: str) -> MembershipDecision:
    return MembershipDecision(Verdict.NON_MEMBER, None, method)


def drazin_membership(a: Element) -> MembershipDecision:
    """Decide whether ``a`` is Drazin invertible, with a witness when it is."""
    r = a.ring
    if r.is_finite:
        return _member(drazin_finite(a), "finite-power-cycle")
    if isinstance(r, Integers):
        if a.value in (-1, 0, 1):
            return _member(certify(a, a), "integer-units")
        return _non_member("integer-units")
    if isinstance(r, Rationals):
        x = Element(r, r.zero_value() if a.value == 0 else 1 / a.value)
        return _member(certify(a, x), "field")
    if isinstance(r, Matrix) and r.base.is_field:
        return _member(drazin_matrix_field(a), "matrix-rank")
    if isinstance(r, Matrix) and isinstance(r.base, Integers):
        xq = drazin_matrix_field(to_rational(a)).inverse.value
        if any(v.denominator != 1 for row in xq for v in row):
            return _non_member("rational-integrality")
        x = Element(r, tuple(tuple(v.numerator for v in row) for row in xq))
        return _member(certify(a, x), "rational-integrality")
    if isinstance(r, Product):
        left = drazin_membership(Element(r.left, a.value[0]))
        right = drazin_membership(Element(r.right, a.value[1]))
        method = f"product({left.method},{right.method})"
        if left.is_member and right.is_member:
            x = Element(r, (left.witness.inverse.value, right.witness.inverse.value))
            return _member(certify(a, x), method)
        if Verdict.NON_MEMBER in (left.verdict, right.verdict):
            return _non_member(method)
        return MembershipDecision(Verdict.UNDECIDABLE, None, method)
    return MembershipDecision(Verdict.UNDECIDABLE, None, "none")


def drazin(a: Element) -> DrazinResult:
    """The Drazin inverse of ``a``; raises PreconditionError if there is none (or it is undecidable)."""
    d = drazin_membership(a)
    if not d.is_member:
        raise PreconditionError(f"{a!r} is not known to be Drazin invertible ({d.verdict.value})")
    return d.witness


def _require_commute(a: Element, b: Element, what: str) -> None:
    if a * b != b * a:
        raise PreconditionError(f"{what} do not commute")


def _require_idempotent(p: Element) -> None:
    if not is_idempotent(p):
        raise PreconditionError(f"{p!r} is not idempotent")


def commute_with_drazin(a: Element, b: Element) -> tuple[Element, Element]:
    """(a^D b, b a^D) for b commuting with a; the two always coincide."""
    ad = drazin(a).inverse
    _require_commute(a, b, "a and b")
    left, right = ad * b, b * ad
    if left != right:
        raise ContractViolation("a^D does not commute with b although a does")
    return left, right


def drazin_sum_orthogonal(a: Element, b: Element) -> DrazinResult:
    """(a + b)^D = a^D + b^D when ab = ba = 0."""
    if a * b != a.ring.zero() or b * a != a.ring.zero():
        raise PreconditionError("a and b are not orthogonal (ab = ba = 0 fails)")
    return certify(a + b, drazin(a).inverse + drazin(b).inverse)


def drazin_product_commuting(a: Element, b: Element) -> DrazinResult:
    """(ab)^D = a^D b^D = b^D a^D for commuting a, b."""
    _require_commute(a, b, "a and b")
    ad, bd = drazin(a).inverse, drazin(b).inverse
    if ad * bd != bd * ad:
        raise ContractViolation("a^D and b^D do not commute")
    return certify(a * b, ad * bd)


def cline(a: Element, b: Element, ab_result: DrazinResult) -> DrazinResult:
    """(ba)^D = b ((ab)^D)^2 a, given a Drazin result for ab."""
    try:
        certify(a * b, ab_result.inverse)
    except AxiomViolation as exc:
        raise PreconditionError(f"ab_result is not the Drazin inverse of ab: {exc}") from exc
    x = ab_result.inverse
    return certify(b * a, b * x * x * a)


def jacobson_transfer(a: Element, b: Element) -> tuple[MembershipDecision, MembershipDecision]:
    """Membership of 1 - ab and of 1 - ba, which must agree when both are decisive."""
    left = drazin_membership(1 - a * b)
    right = drazin_membership(1 - b * a)
    if left.decisive and right.decisive and left.verdict is not right.verdict:
        raise ContractViolation(f"1-ab is {left.verdict.value} but 1-ba is {right.verdict.value}")
    return left, right


def pierce_combine(a: Element, b: Element, p: Element) -> DrazinResult:
    """(ap + b(1-p))^D = a^D p + b^D (1-p) for a, b commuting with the idempotent p."""
    _require_idempotent(p)
    _require_commute(a, p, "a and p")
    _require_commute(b, p, "b and p")
    ad, bd = drazin(a).inverse, drazin(b).inverse
    return certify(a * p + b * (1 - p), ad * p + bd * (1 - p))


def corner_split(a: Element, p: Element) -> tuple[Element, Element]:
    """Off-diagonal corners b = pa(1-p) and c = (1-p)ap of ``a`` relative to ``p``."""
    _require_idempotent(p)
    q = 1 - p
    b, c = p * a * q, q * a * p
    z = a.ring.zero()
    if not (p * b == b and b * p == z and c * p == c and p * c == z):
        raise ContractViolation("corner identities failed")
    return b, c


def corner_equivalence(a: Element, p: Element) -> EquivalenceReport:
    """Decide b + c, bc and b - c together; when possible rebuild (bc)^D as p x p
    with x = (bc + cb)^D and certify it."""
    b, c = corner_split(a, p)
    names = [("b+c", b + c), ("bc", b * c), ("b-c", b - c)]
    conditions = [Condition(n, x, drazin_membership(x)) for n, x in names]
    report = EquivalenceReport(
        theorem="lemma26",
        pair=(a, p),
        conditions=conditions,
        agree=_all_agree(conditions),
        identities={"(b+c)^2 = bc+cb": (b + c) * (b + c) == b * c + c * b},
    )
    if conditions[0].decision.is_member:
        anti = drazin_membership(b * c + c * b)
        if anti.is_member:
            x = anti.witness.inverse
            report.constructions["(bc)^D = pxp"] = certify(b * c, p * x * p).inverse
    return report


def quadratic_lift(a: Element) -> tuple[MembershipDecision, MembershipDecision]:
    """Membership of a - a^2 and of a; a - a^2 (or a + a^2) invertible forces a invertible."""
    target = drazin_membership(a)
    minus = drazin_membership(a - a * a)
    plus = drazin_membership(a + a * a)
    for premise in (minus, plus):
        if premise.is_member and target.verdict is Verdict.NON_MEMBER:
            raise ContractViolation(f"quadratic premise holds but {a!r} is not Drazin invertible")
    return minus, target


def _all_agree(conditions: list[Condition]) -> bool:
    seen = {c.decision.verdict for c in conditions if c.decision.decisive}
    return len(seen) <= 1


def to_rational(a: Element) -> Element:
    """View an integer matrix as a rational one (used by the integrality decision and tests)."""
    r = a.ring
    if not (isinstance(r, Matrix) and isinstance(r.base, Integers)):
        raise UnsupportedRingError(f"{r.describe()} is not an integer matrix ring")
    q = Matrix(r.dim, Rationals())
    return Element(q, tuple(tuple(Fraction(v) for v in row) for row in a.value))
