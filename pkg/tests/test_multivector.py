import pytest

from affinoid.catalog import make_abelian, make_pair
from affinoid.fields import MultiVectorField
from affinoid.groupoid import (AlgebroidSection, StructureError,
                               algebroid_schouten, translate_left_mv,
                               translate_right_mv)
from affinoid.multivector import (AffineMV, KDifferential, affine_mv_oracle,
                                  decomposition_iso_check, is_affine_mv,
                                  is_multiplicative_mv, k_differential_of,
                                  lie2_functoriality_check, mv_compose,
                                  mv_inverse, mv_source_target,
                                  multiplicative_mv_oracle, poisson_checks)
from affinoid.poly import Poly


@pytest.fixture(scope="module")
def P1():
    return make_pair(1)


@pytest.fixture(scope="module")
def P2():
    return make_pair(2)


@pytest.fixture(scope="module")
def P3():
    return make_pair(3)


def test_abelian_line_predicates():
    A1 = make_abelian(1)
    x = Poly.variable(1, 0)
    lin = MultiVectorField.from_vector([x])
    aff = MultiVectorField.from_vector([x + Poly.one(1)])
    quad = MultiVectorField.from_vector([x * x])
    const = MultiVectorField.from_vector([Poly.one(1)])
    assert is_multiplicative_mv(A1, lin)
    assert is_affine_mv(A1, aff) and not is_multiplicative_mv(A1, aff)
    assert not is_affine_mv(A1, quad)
    assert is_affine_mv(A1, const) and not is_multiplicative_mv(A1, const)
    for P, ea, em in [(lin, True, True), (aff, True, False),
                      (quad, False, False), (const, True, False)]:
        assert bool(affine_mv_oracle(A1, P)) == ea
        assert bool(multiplicative_mv_oracle(A1, P)) == em


def test_abelian_plane_bivector():
    A2 = make_abelian(2)
    y1, y2 = Poly.variable(2, 0), Poly.variable(2, 1)
    P22 = MultiVectorField(2, 2, {(0, 1): y1 + y2})
    assert is_multiplicative_mv(A2, P22)
    assert bool(multiplicative_mv_oracle(A2, P22))


def test_pair_componentwise_convention(P2):
    # a bivector with target-block f and source-block -f is multiplicative;
    # with +f it is only affine
    x1, x2, x3, x4 = (Poly.variable(4, i) for i in range(4))
    fb = Poly.variable(2, 0) + Poly.variable(2, 1) ** 2
    fx = fb.subs([x1, x2], out_vars=4)
    fy = fb.subs([x3, x4], out_vars=4)
    minus = MultiVectorField(4, 2, {(0, 1): fx, (2, 3): -fy})
    plus = MultiVectorField(4, 2, {(0, 1): fx, (2, 3): fy})
    assert is_multiplicative_mv(P2, minus)
    assert bool(multiplicative_mv_oracle(P2, minus))
    assert is_affine_mv(P2, plus) and not is_multiplicative_mv(P2, plus)
    assert bool(affine_mv_oracle(P2, plus))
    assert not bool(multiplicative_mv_oracle(P2, plus))
    bad = MultiVectorField.from_vector([x3, Poly.zero(4), Poly.zero(4),
                                        Poly.zero(4)])
    assert not is_affine_mv(P2, bad)
    assert not bool(affine_mv_oracle(P2, bad))


def test_affine_constructor_rejects(P1):
    # a coefficient mixing the two factors is not affine
    x2 = Poly.variable(2, 1)
    with pytest.raises(StructureError):
        AffineMV(P1, MultiVectorField.from_vector([x2, Poly.zero(2)]))


def test_decomposition_translate_fixture(P1):
    xb = Poly.variable(1, 0)
    pi = AlgebroidSection(P1, 1, 0, {((0,), ()): xb})
    rpi = translate_right_mv(P1, pi)
    P = AffineMV(P1, rpi)
    assert P.pi == pi
    assert P.Pi_r.is_zero
    assert P.Pi_l == rpi - translate_left_mv(P1, pi)
    assert is_multiplicative_mv(P1, P.Pi_l)
    assert mv_source_target(P) == (P.Pi_r, P.Pi_l)


def test_two_vector_space_pair(P1):
    xb = Poly.variable(1, 0)
    pi = AlgebroidSection(P1, 1, 0, {((0,), ()): xb})
    gam = AlgebroidSection(P1, 1, 0, {((0,), ()): xb * xb})
    rho = AlgebroidSection(P1, 1, 0, {((0,), ()): Poly.one(1)})
    P = AffineMV(P1, translate_right_mv(P1, pi))
    Q = AffineMV(P1, translate_left_mv(P1, gam))

    C = mv_compose(P, Q)
    assert C.Pi == P.Pi + Q.Pi
    assert C.Pi_r == Q.Pi_r and C.Pi_l == P.Pi_l

    inv = mv_inverse(P)
    assert inv.Pi == -translate_left_mv(P1, pi)
    assert mv_inverse(inv) == P
    assert mv_compose(P, inv).Pi == P.Pi_l
    assert mv_compose(inv, P).Pi == P.Pi_r
    assert mv_compose(P, inv).pi.is_zero

    R = AffineMV(P1, Q.Pi_r + translate_left_mv(P1, rho))
    assert mv_compose(mv_compose(P, Q), R).Pi == \
        mv_compose(P, mv_compose(Q, R)).Pi

    Pb = AffineMV(P1, translate_right_mv(P1, rho))
    Qb = AffineMV(P1, translate_left_mv(P1, pi))
    assert mv_compose(P + Pb, Q + Qb).Pi == \
        (mv_compose(P, Q) + mv_compose(Pb, Qb)).Pi


def test_kernel_identities(P1):
    xb = Poly.variable(1, 0)
    pi = AlgebroidSection(P1, 1, 0, {((0,), ()): xb})
    gam = AlgebroidSection(P1, 1, 0, {((0,), ()): xb * xb})
    rho = AlgebroidSection(P1, 1, 0, {((0,), ()): Poly.one(1)})
    dR = k_differential_of(AffineMV(P1, translate_right_mv(P1, pi)))
    dL = k_differential_of(AffineMV(P1, translate_left_mv(P1, pi)))
    f = xb * xb + xb
    for sec in [rho, gam, pi]:
        assert dR.delta1(sec) == algebroid_schouten(P1, pi, sec)
        assert dL.delta1(sec).is_zero
    assert dR.delta0(f) == \
        algebroid_schouten(P1, pi, AlgebroidSection.from_function(P1, f))
    assert dL.delta0(f).is_zero


def test_k_differential_axioms(P2):
    pi2 = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.variable(2, 0)})
    gam2 = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.variable(2, 1) ** 2})
    d2 = k_differential_of(AffineMV(
        P2, translate_right_mv(P2, pi2) + translate_left_mv(P2, gam2)))
    bf, bg = Poly.variable(2, 0), Poly.variable(2, 1) + Poly.one(2)
    X = AlgebroidSection(P2, 1, 0, {((0,), ()): bg})
    Y = AlgebroidSection.frame(P2, 1)
    F = AlgebroidSection.from_function
    assert d2.delta0(bf * bg) == \
        d2.delta0(bf).wedge_section(F(P2, bg)) \
        + F(P2, bf).wedge_section(d2.delta0(bg))
    assert d2.delta1(F(P2, bf).wedge_section(X)) == \
        d2.delta0(bf).wedge_section(X) \
        + F(P2, bf).wedge_section(d2.delta1(X))
    assert d2.delta1(algebroid_schouten(P2, X, Y)) == \
        algebroid_schouten(P2, d2.delta1(X), Y) \
        + algebroid_schouten(P2, X, d2.delta1(Y))


def test_k_differential_rejects_one_sided():
    # only right-invariant multiplicative parts have a frame table
    P1 = make_pair(1)
    xb = Poly.variable(1, 0)
    pi = AlgebroidSection(P1, 1, 0, {((0,), ()): xb})
    P = AffineMV(P1, translate_right_mv(P1, pi))
    kd = KDifferential(P1.algebroid, 1, P.Pi_r)
    assert kd.delta1(pi).is_zero


def test_decomposition_identity_mixed_degrees(P2):
    pi2 = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.variable(2, 0)})
    gam2 = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.variable(2, 1) ** 2})
    secs1 = [AlgebroidSection(P2, 1, 0, {((0,), ()): Poly.variable(2, 1)}),
             AlgebroidSection(P2, 1, 0, {((1,), ()): Poly.variable(2, 0) ** 2})]
    fields = [
        AffineMV(P2, translate_right_mv(P2, secs1[0])
                 + translate_left_mv(P2, secs1[1])),
        AffineMV(P2, translate_left_mv(P2, secs1[0])),
        AffineMV(P2, translate_right_mv(P2, pi2)
                 + translate_left_mv(P2, gam2)),
        AffineMV(P2, translate_right_mv(P2, pi2)),
    ]
    for a in fields:
        for b in fields:
            assert decomposition_iso_check(a, b)


def test_functoriality_quadruples(P1, P2):
    xb = Poly.variable(1, 0)
    pi = AlgebroidSection(P1, 1, 0, {((0,), ()): xb})
    gam = AlgebroidSection(P1, 1, 0, {((0,), ()): xb * xb})
    rho = AlgebroidSection(P1, 1, 0, {((0,), ()): Poly.one(1)})
    assert lie2_functoriality_check(
        AffineMV(P1, translate_right_mv(P1, pi)),
        AffineMV(P1, translate_left_mv(P1, gam)),
        AffineMV(P1, translate_right_mv(P1, rho)),
        AffineMV(P1, translate_left_mv(P1, pi)))
    # non-composable inputs are a precondition violation
    from affinoid.groupoid import ComposabilityError
    with pytest.raises(ComposabilityError):
        lie2_functoriality_check(
            AffineMV(P1, translate_right_mv(P1, pi)),
            AffineMV(P1, translate_right_mv(P1, gam)),
            AffineMV(P1, translate_right_mv(P1, rho)),
            AffineMV(P1, translate_left_mv(P1, pi)))


def test_poisson_battery(P3):
    z1, z2, z3 = (Poly.variable(3, i) for i in range(3))
    cyb = AlgebroidSection(P3, 2, 0, {((0, 1), ()): z3})
    noncyb = AlgebroidSection(P3, 2, 0, {((0, 1), ()): z3, ((1, 2), ()): z2})
    cybg = AlgebroidSection(P3, 2, 0, {((1, 2), ()): z1})
    assert algebroid_schouten(P3, cyb, cyb).is_zero
    assert not algebroid_schouten(P3, noncyb, noncyb).is_zero

    rep = poisson_checks(AffineMV(P3, translate_right_mv(P3, cyb)))
    assert rep["is_poisson"] and rep["Pr_is_poisson"]
    assert rep["obstruction_is_zero"]
    assert rep["clause1_right_ok"] and rep["clause1_left_ok"]
    assert rep["clause2_ok"] and rep["inverse_is_poisson"]

    rep = poisson_checks(AffineMV(P3, translate_right_mv(P3, noncyb)))
    assert not rep["is_poisson"] and rep["Pr_is_poisson"]
    assert not rep["obstruction_is_zero"]
    assert rep["clause1_right_ok"] and rep["clause1_left_ok"]
    assert rep["clause2_ok"]
    assert rep["inverse_is_poisson"] is None

    rep = poisson_checks(AffineMV(
        P3, translate_right_mv(P3, cyb) + translate_left_mv(P3, cybg)))
    assert rep["is_poisson"] and rep["clause2_ok"] and rep["inverse_is_poisson"]

    rep = poisson_checks(AffineMV(
        P3, translate_right_mv(P3, cyb) + translate_left_mv(P3, noncyb)))
    assert not rep["is_poisson"] and not rep["Pr_is_poisson"]
    assert rep["clause1_right_ok"] and rep["clause1_left_ok"]
    assert rep["clause2_ok"] is None
