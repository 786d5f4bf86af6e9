from fractions import Fraction

import pytest

from affinoid.catalog import (entries, make_abelian, make_heisenberg,
                              make_pair, make_product_pair_group)
from affinoid.fields import MultiVectorField, schouten_bracket
from affinoid.groupoid import (AlgebroidSection, CotangentOps,
                               algebroid_schouten, coisotropy_oracle,
                               cot_source, cot_target, is_left_invariant,
                               is_right_invariant, lie_algebroid,
                               restrict_project, restriction_residue_is_zero,
                               translate_left_mv, translate_right_mv,
                               translate_section, unit_covector,
                               validate_axioms)
from affinoid.poly import Poly


@pytest.fixture(scope="module")
def P1():
    return make_pair(1)


@pytest.fixture(scope="module")
def P2():
    return make_pair(2)


def test_catalog_axioms():
    for entry in entries():
        rep = validate_axioms(entry.groupoid)
        assert rep.ok, (entry.id, rep.violations)


def test_pair_translations(P1):
    x = Poly.variable(1, 0)
    u = AlgebroidSection(P1, 1, 0, {((0,), ()): x})
    right = translate_right_mv(P1, u)
    left = translate_left_mv(P1, u)
    x1, x2 = Poly.variable(2, 0), Poly.variable(2, 1)
    assert right == MultiVectorField.from_vector([x1, Poly.zero(2)])
    assert left == MultiVectorField.from_vector([Poly.zero(2), -x2])
    assert is_right_invariant(P1, right) and not is_left_invariant(P1, right)
    assert is_left_invariant(P1, left) and not is_right_invariant(P1, left)


def test_left_right_translates_commute(P2):
    # a right-invariant and a left-invariant extension always bracket to zero
    a = AlgebroidSection(P2, 1, 0, {((0,), ()): Poly.variable(2, 1)})
    b = AlgebroidSection(P2, 1, 0, {((1,), ()): Poly.variable(2, 0) ** 2})
    r = translate_right_mv(P2, a)
    l = translate_left_mv(P2, b)
    assert schouten_bracket(r, l).is_zero


def test_restrict_round_trip(P1, P2):
    x = Poly.variable(1, 0)
    u = AlgebroidSection(P1, 1, 0, {((0,), ()): x})
    assert restrict_project(P1, translate_right_mv(P1, u), 1, 0) == u
    assert restrict_project(P1, translate_left_mv(P1, u), 1, 0) == u
    s = AlgebroidSection(P2, 1, 1, {((0,), (1,)): Poly.variable(2, 0)})
    for side in ("right", "left"):
        assert restrict_project(P2, translate_section(P2, s, side), 1, 1) == s


def test_restriction_residue(P1):
    x1, x2 = Poly.variable(2, 0), Poly.variable(2, 1)
    W = MultiVectorField.from_vector([x1 * x1, x2])
    x = Poly.variable(1, 0)
    assert restrict_project(P1, W, 1, 0).coeffs == {((0,), ()): x * x - x}
    assert not restriction_residue_is_zero(P1, W)
    u = AlgebroidSection(P1, 1, 0, {((0,), ()): x})
    assert restriction_residue_is_zero(P1, translate_right_mv(P1, u))


def test_pair_algebroid(P1, P2):
    A = lie_algebroid(P1)
    assert A.rank == 1
    assert A.anchor == ((Poly.one(1),),)
    A2 = lie_algebroid(P2)
    assert A2.anchor == ((Poly.one(2), Poly.zero(2)),
                         (Poly.zero(2), Poly.one(2)))
    # abelian bracket on the pair algebroid
    for comps in A2.structure.values():
        assert all(c.is_zero for c in comps)


def test_heisenberg_structure_constants():
    H = make_heisenberg()
    alg = lie_algebroid(H)
    assert alg.rank == 3 and H.dim_M == 0
    # the only nonzero bracket pairs the outer frames into the center
    assert [p.constant_value() for p in alg.structure[(0, 1)]] == [0, 0, -1]
    assert all(c.is_zero for c in alg.structure[(0, 2)])
    assert all(c.is_zero for c in alg.structure[(1, 2)])


def test_algebroid_schouten_leibniz(P2):
    f = Poly.variable(2, 0)
    X = AlgebroidSection(P2, 1, 0, {((0,), ()): Poly.variable(2, 1)})
    Y = AlgebroidSection.frame(P2, 1)
    fX = AlgebroidSection.from_function(P2, f).wedge_section(X)
    lhs = algebroid_schouten(P2, fX, Y)
    anchor_Y_f = -algebroid_schouten(P2, Y, AlgebroidSection.from_function(P2, f))
    rhs = AlgebroidSection.from_function(P2, f).wedge_section(
        algebroid_schouten(P2, X, Y)) \
        + anchor_Y_f.wedge_section(X)
    assert lhs == rhs


def test_cotangent_ops_pair(P1):
    g = [Fraction(2), Fraction(5)]
    h = [Fraction(5), Fraction(-1)]
    ops = CotangentOps(P1, g, h)
    a, b, c = Fraction(3), Fraction(7, 2), Fraction(-4)
    assert ops.multiply([a, b], [-b, c]) == (a, c)
    assert cot_source(P1, g, [a, b]) == (-b,)
    assert cot_target(P1, h, [-b, c]) == (-b,)


def test_unit_covector_kills_base_directions(P1):
    cov = unit_covector(P1, [Fraction(3)], [Fraction(5)])
    # base frame at a unit is (1, 1); algebroid frame is (1, 0)
    assert cov[0] + cov[1] == 0
    assert cov[0] == 5


def test_triangle_oracle(P1):
    c = Poly.const(2, Fraction(3, 2))
    good = MultiVectorField.from_vector([c, c])
    bad = MultiVectorField.from_vector([c, Poly.zero(2)])
    assert coisotropy_oracle(P1, good, "triangles", seed=5).passed
    r = coisotropy_oracle(P1, bad, "triangles", seed=5)
    assert not r.passed and r.witness is not None
    assert isinstance(r.witness["value"], str)


def test_parallelogram_oracle(P1):
    c = Poly.const(2, Fraction(3, 2))
    x2 = Poly.variable(2, 1)
    assert coisotropy_oracle(
        P1, MultiVectorField.from_vector([c, c]), "parallelograms", seed=5).passed
    # any pair of base fields is affine, even when not multiplicative
    assert coisotropy_oracle(
        P1, MultiVectorField.from_vector([c, Poly.zero(2)]),
        "parallelograms", seed=5).passed
    # mixing the factors breaks affineness
    r = coisotropy_oracle(P1, MultiVectorField.from_vector([x2, Poly.zero(2)]),
                          "parallelograms", seed=5)
    assert not r.passed and r.witness is not None


def test_oracle_deterministic(P1):
    x2 = Poly.variable(2, 1)
    bad = MultiVectorField.from_vector([x2, Poly.zero(2)])
    r1 = coisotropy_oracle(P1, bad, "parallelograms", seed=9)
    r2 = coisotropy_oracle(P1, bad, "parallelograms", seed=9)
    assert r1.witness == r2.witness


def test_groupoid_products():
    PG = make_product_pair_group(1)
    assert PG.dim_G == 5 and PG.dim_M == 1 and PG.rank == 4
    assert validate_axioms(PG).ok
    A1 = make_abelian(1)
    assert A1.dim_G == 1 and A1.dim_M == 0
    A2 = make_abelian(2)
    assert A2.dim_G == 2 and A2.dim_M == 0
