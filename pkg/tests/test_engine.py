import random

import pytest
from hypothesis import given, settings

from drazin.engine import (
    AxiomViolation,
    PreconditionError,
    certify,
    cline,
    commute_with_drazin,
    corner_equivalence,
    corner_split,
    drazin,
    drazin_finite,
    drazin_matrix_field,
    drazin_membership,
    drazin_product_commuting,
    drazin_sum_orthogonal,
    jacobson_transfer,
    pierce_combine,
    quadratic_lift,
    to_rational,
)
from drazin.oracle import brute_force_drazin
from drazin.report import DrazinResult, Verdict
from drazin.rings import (
    Integers,
    Matrix,
    Modular,
    PrimeField,
    Product,
    Rationals,
    UnsupportedRingError,
    enumerate_elements,
    power,
)

from conftest import elements_of, oracle_2x2_integer_member, oracle_2x2_rational

Z12 = Modular(12)
M2F2 = Matrix(2, PrimeField(2))
M2Q = Matrix(2, Rationals())
MZ = Matrix(2, Integers())
ZZ = Integers()
N = M2F2([[0, 1], [0, 0]])


def assert_axioms(a, res: DrazinResult):
    x, k = res.inverse, res.index
    assert a * x == x * a
    assert x * a * x == x
    assert power(a, k) == power(a, k + 1) * x
    if k >= 1:
        assert power(a, k - 1) != power(a, k) * x


# drazin_finite


def test_finite_examples():
    assert drazin_finite(Z12(2)) == DrazinResult(Z12(8), 2)
    assert drazin_finite(N) == DrazinResult(M2F2.zero(), 2)
    assert drazin_finite(Z12(5)) == DrazinResult(Z12(5), 0)
    assert drazin_finite(Z12(7)) == DrazinResult(Z12(7), 0)
    assert drazin_finite(Z12(0)) == DrazinResult(Z12(0), 1)


@pytest.mark.parametrize("ring", [Z12, Modular(8), Modular(30), M2F2, Product(Modular(2), Modular(9))],
                         ids=lambda r: r.describe())
def test_finite_unit_inverse(ring):
    one = ring.one()
    for u in enumerate_elements(ring):
        inv = [v for v in enumerate_elements(ring) if u * v == one]
        if inv:
            assert drazin_finite(u) == DrazinResult(inv[0], 0)


@pytest.mark.parametrize("ring", [Z12, Modular(64), M2F2, Matrix(2, PrimeField(3)), Product(Modular(4), Modular(6)),
                                  Matrix(2, Modular(4))], ids=lambda r: r.describe())
def test_finite_matches_oracle_everywhere(ring):
    for a in enumerate_elements(ring):
        res = drazin_finite(a)
        assert res == brute_force_drazin(a)
        assert_axioms(a, res)


def test_finite_rejects_infinite():
    with pytest.raises(UnsupportedRingError):
        drazin_finite(ZZ(2))


# drazin_matrix_field


def test_matrix_field_examples():
    a = M2Q([[2, 1], [0, 0]])
    # a^2 = 2a, so a^D = a / 4
    assert drazin_matrix_field(a) == DrazinResult(M2Q([["1/2", "1/4"], [0, 0]]), 1)
    assert drazin_matrix_field(M2Q.one()) == DrazinResult(M2Q.one(), 0)
    assert drazin_matrix_field(M2Q([[0, 1], [0, 0]])) == DrazinResult(M2Q.zero(), 2)


def test_matrix_field_rejects_other_rings():
    with pytest.raises(UnsupportedRingError):
        drazin_matrix_field(Matrix(2, Modular(4)).one())
    with pytest.raises(UnsupportedRingError):
        drazin_matrix_field(Z12(1))


@settings(max_examples=300, deadline=None)
@given(elements_of(M2Q, small=4))
def test_matrix_field_matches_closed_form_2x2(a):
    res = drazin_matrix_field(a)
    expected = oracle_2x2_rational([[a.value[i][j] for j in range(2)] for i in range(2)])
    assert res.inverse == M2Q(expected)
    assert_axioms(a, res)


@settings(max_examples=100, deadline=None)
@given(elements_of(Matrix(3, Rationals()), small=3))
def test_matrix_field_axioms_3x3(a):
    assert_axioms(a, drazin_matrix_field(a))


@pytest.mark.parametrize("ring", [M2F2, Matrix(2, PrimeField(3)), Matrix(2, PrimeField(5))], ids=lambda r: r.describe())
def test_strategies_agree_over_fp(ring):
    for a in enumerate_elements(ring):
        assert drazin_finite(a) == drazin_matrix_field(a)


def test_strategies_agree_on_random_3x3_f5():
    ring = Matrix(3, PrimeField(5))
    rnd = random.Random(7)
    for _ in range(200):
        a = ring([[rnd.randrange(5) for _ in range(3)] for _ in range(3)])
        assert drazin_finite(a) == drazin_matrix_field(a)


# drazin_membership


def test_membership_integers():
    two = drazin_membership(ZZ(2))
    assert two.verdict is Verdict.NON_MEMBER and two.witness is None
    zero = drazin_membership(ZZ(0))
    assert zero.is_member and zero.witness == DrazinResult(ZZ(0), 1)
    assert drazin_membership(ZZ(-1)).witness == DrazinResult(ZZ(-1), 0)
    assert not drazin_membership(ZZ(-2)).is_member


def test_membership_integer_matrix_examples():
    assert drazin_membership(MZ([[2, 1], [0, 0]])).verdict is Verdict.NON_MEMBER
    d = drazin_membership(MZ([[1, 1], [0, 0]]))
    assert d.is_member and d.witness.inverse == MZ([[1, 1], [0, 0]])
    d = drazin_membership(MZ([[-1, -1], [2, 1]]))
    assert d.witness == DrazinResult(MZ([[1, 1], [-2, -1]]), 0)


@settings(max_examples=300, deadline=None)
@given(elements_of(MZ, small=4))
def test_integer_matrix_membership_matches_closed_form(a):
    d = drazin_membership(a)
    entries = [list(r) for r in a.value]
    assert d.is_member == oracle_2x2_integer_member(entries)
    if d.is_member:
        assert to_rational(d.witness.inverse) == M2Q(oracle_2x2_rational(entries))
        assert_axioms(a, d.witness)


def test_membership_other_rings():
    q = drazin_membership(Rationals()("2/3"))
    assert q.witness.inverse == Rationals()("3/2")
    prod = Product(ZZ, Modular(6))
    assert drazin_membership(prod((1, 2))).witness.inverse == prod((1, 2))
    assert drazin_membership(prod((2, 2))).verdict is Verdict.NON_MEMBER
    deep = Matrix(2, Matrix(2, Integers()))
    assert drazin_membership(deep.one()).verdict is Verdict.UNDECIDABLE
    assert drazin_membership(Product(deep, ZZ)((deep.one().value, 1))).verdict is Verdict.UNDECIDABLE
    assert drazin_membership(Product(deep, ZZ)((deep.one().value, 3))).verdict is Verdict.NON_MEMBER


def test_membership_is_stable():
    for a in [ZZ(2), MZ([[2, 1], [0, 0]]), Z12(2), M2Q([[2, 1], [0, 0]])]:
        assert drazin_membership(a) == drazin_membership(a)


def test_certify_rejects_wrong_inverse():
    with pytest.raises(AxiomViolation):
        certify(Z12(2), Z12(2))
    with pytest.raises(AxiomViolation):
        certify(ZZ(2), ZZ(0))  # commutes, x a x = x, but no k works


def test_drazin_raises_for_non_member():
    with pytest.raises(PreconditionError):
        drazin(ZZ(2))


# power compatibility


@pytest.mark.parametrize("ring", [Z12, Modular(32), M2F2, Matrix(2, PrimeField(3))], ids=lambda r: r.describe())
def test_power_compatibility(ring):
    for a in enumerate_elements(ring):
        ad = drazin(a).inverse
        for m in range(1, 5):
            assert drazin(power(a, m)).inverse == power(ad, m)
            certify(power(a, m), power(ad, m))


# lemma operations


def test_commute_with_drazin():
    assert commute_with_drazin(Z12(2), Z12(4)) == (Z12(8), Z12(8))
    assert commute_with_drazin(Z12(2), Z12(1)) == (Z12(8), Z12(8))
    a = M2Q([[2, 1], [0, 0]])
    ad = drazin(a).inverse
    assert commute_with_drazin(a, a) == (ad * a, a * ad)
    with pytest.raises(PreconditionError):
        commute_with_drazin(a, M2Q([[0, 0], [1, 0]]))
    with pytest.raises(PreconditionError):
        commute_with_drazin(ZZ(2), ZZ(1))


def test_sum_orthogonal():
    assert drazin_sum_orthogonal(Z12(4), Z12(9)) == DrazinResult(Z12(1), 0)
    assert drazin_sum_orthogonal(Z12(2), Z12(0)).inverse == Z12(8)
    p = M2F2([[1, 1], [0, 0]])
    assert drazin_sum_orthogonal(p, 1 - p) == DrazinResult(M2F2.one(), 0)
    with pytest.raises(PreconditionError, match="orthogonal"):
        drazin_sum_orthogonal(Z12(2), Z12(3))


def test_product_commuting():
    assert drazin_product_commuting(Z12(2), Z12(2)).inverse == Z12(4)
    assert drazin_product_commuting(Z12(2), Z12(1)).inverse == Z12(8)
    u, v = Z12(5), Z12(7)
    assert drazin_product_commuting(u, v) == DrazinResult(Z12(11), 0)
    with pytest.raises(PreconditionError):
        drazin_product_commuting(N, M2F2([[0, 0], [1, 0]]))
    with pytest.raises(PreconditionError):
        drazin_product_commuting(ZZ(2), ZZ(1))


def test_cline():
    ab = drazin(Z12(4))
    assert cline(Z12(2), Z12(2), ab).inverse == Z12(4)
    p = M2F2([[1, 0], [1, 0]])
    assert cline(p, p, drazin(p)).inverse == p
    a, b = N, M2F2([[0, 0], [1, 0]])
    ab = drazin(a * b)
    assert ab.inverse == a * b
    assert cline(a, b, ab).inverse == M2F2([[0, 0], [0, 1]])
    with pytest.raises(PreconditionError):
        cline(a, b, DrazinResult(M2F2.zero(), 1))


def test_cline_without_commutativity_in_integer_matrices():
    a, b = MZ([[1, 1], [0, 0]]), MZ([[1, 0], [0, 0]])
    assert a * b != b * a
    res = cline(a, b, drazin(a * b))
    assert res.inverse == drazin(b * a).inverse == MZ([[1, 1], [0, 0]])


def test_jacobson_transfer(test_pair):
    one = ZZ(1)
    l, r = jacobson_transfer(one, one)
    assert l.is_member and r.is_member
    p, q = test_pair
    l, r = jacobson_transfer(p, q)
    assert (l.verdict, r.verdict) == (Verdict.MEMBER, Verdict.MEMBER)
    # the inverses are the ordinary inverses here (det = -1)
    assert l.witness.index == r.witness.index == 0
    l, r = jacobson_transfer(Z12(3), Z12(5))
    assert l.is_member and r.is_member


def test_jacobson_verdicts_agree_on_integer_matrices():
    rnd = random.Random(3)
    seen = set()
    for _ in range(400):
        a = MZ([[rnd.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        b = MZ([[rnd.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        l, r = jacobson_transfer(a, b)
        assert l.verdict is r.verdict
        seen.add(l.verdict)
    assert seen == {Verdict.MEMBER, Verdict.NON_MEMBER}


def test_pierce_combine():
    p = Z12(4)
    assert pierce_combine(Z12(1), Z12(1), p) == DrazinResult(Z12(1), 0)
    # a p + (1 - p) = 8 + 9 = 5 (mod 12); formula: 8*4 + (1-4) = 29 = 5
    res = pierce_combine(Z12(2), Z12(1), p)
    assert res.inverse == Z12(5)
    assert res.inverse == drazin(Z12(2) * p + (1 - p)).inverse
    pp = M2F2([[1, 0], [0, 0]])
    a, b = 1 - pp * pp * pp, 1 - (1 - pp) * (1 - pp) * (1 - pp)
    res = pierce_combine(a, b, pp)
    assert a * pp + b * (1 - pp) == (pp - pp) * (pp - pp)
    assert res.inverse == M2F2.zero()
    with pytest.raises(PreconditionError, match="idempotent"):
        pierce_combine(Z12(1), Z12(1), Z12(2))
    with pytest.raises(PreconditionError, match="a and p"):
        pierce_combine(N, M2F2.one(), pp)


def test_corner_split():
    a, p = M2F2([[0, 1], [1, 0]]), M2F2([[1, 0], [0, 0]])
    assert corner_split(a, p) == (M2F2([[0, 1], [0, 0]]), M2F2([[0, 0], [1, 0]]))
    assert corner_split(p, p) == (M2F2.zero(), M2F2.zero())
    assert corner_split(a, M2F2.one()) == (M2F2.zero(), M2F2.zero())
    with pytest.raises(PreconditionError):
        corner_split(a, N)


def test_corner_equivalence():
    a, p = M2F2([[0, 1], [1, 0]]), M2F2([[1, 0], [0, 0]])
    rep = corner_equivalence(a, p)
    assert rep.agree and all(c.decision.is_member for c in rep.conditions)
    assert rep["bc"].element == p
    assert rep.constructions["(bc)^D = pxp"] == p
    rep = corner_equivalence(p, p)
    assert [c.element for c in rep.conditions] == [M2F2.zero()] * 3
    assert rep.agree


def test_corner_equivalence_integer_pair(test_pair):
    p, q = test_pair
    rep = corner_equivalence(q, p)
    assert rep["b+c"].element == MZ([[0, 1], [-2, 0]])
    assert rep["bc"].element == MZ([[-2, 0], [0, 0]])
    assert rep["b-c"].element == MZ([[0, 1], [2, 0]])
    for c in rep.conditions:
        assert c.decision.verdict is Verdict.NON_MEMBER
        assert not oracle_2x2_integer_member([list(r) for r in c.element.value])
    assert rep.agree and not rep.constructions


def test_quadratic_lift():
    e = Z12(4)
    minus, target = quadratic_lift(e)
    assert minus.is_member and minus.witness.inverse == Z12(0)
    assert target.is_member
    a = MZ([[0, 3], [0, 0]])
    minus, target = quadratic_lift(a)
    assert minus.is_member and target.witness == DrazinResult(MZ.zero(), 2)
    minus, target = quadratic_lift(ZZ(2))
    assert (minus.verdict, target.verdict) == (Verdict.NON_MEMBER, Verdict.NON_MEMBER)


@settings(max_examples=300, deadline=None)
@given(elements_of(MZ, small=3))
def test_quadratic_lift_implication_integer_matrices(a):
    minus, target = quadratic_lift(a)
    if minus.is_member:
        assert target.is_member
