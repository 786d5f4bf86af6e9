from fractions import Fraction

import pytest

from affinoid.catalog import (make_abelian, make_heisenberg, make_pair,
                              make_product_pair_group)
from affinoid.fields import DifferentialForm, pullback, wedge
from affinoid.forms import (AffineForm, IMForm, affine_form_family,
                            cochain_iso_check, form_compose, form_identity,
                            form_inverse, form_source_target, im_form_extract,
                            im_form_rebuild, is_affine_form,
                            is_multiplicative_form, parallelogram_isotropy,
                            phi, phi_inverse)
from affinoid.groupoid import ComposabilityError, StructureError
from affinoid.poly import Poly, PolyMap


def d1(dim, i, c=None):
    return DifferentialForm(dim, 1,
                            {(i,): c if c is not None else Poly.one(dim)})


def agree(G, Theta, expect):
    assert is_affine_form(G, Theta) == expect
    assert parallelogram_isotropy(G, Theta) == expect


@pytest.fixture(scope="module")
def P1():
    return make_pair(1)


@pytest.fixture(scope="module")
def P2():
    return make_pair(2)


def test_pair_predicates(P1):
    x = Poly.variable(1, 0)
    alpha = d1(1, 0, x * x)
    beta = d1(1, 0, x + Poly.one(1))
    pr1 = PolyMap(2, [Poly.variable(2, 0)])
    pr2 = PolyMap(2, [Poly.variable(2, 1)])
    t_mult = pullback(pr1, alpha) - pullback(pr2, alpha)
    assert is_multiplicative_form(P1, t_mult)
    agree(P1, t_mult, True)
    t_aff = pullback(pr1, alpha) + pullback(pr2, beta)
    assert not is_multiplicative_form(P1, t_aff)
    agree(P1, t_aff, True)
    agree(P1, pullback(P1.src, alpha), True)
    agree(P1, pullback(P1.tgt, alpha), True)
    assert is_multiplicative_form(
        P1, pullback(P1.tgt, alpha) - pullback(P1.src, alpha))
    # any nonzero 2-form on the pair of a line fails
    xy = Poly.variable(2, 0) - Poly.variable(2, 1)
    agree(P1, DifferentialForm(2, 2, {(0, 1): xy * xy}), False)
    agree(P1, DifferentialForm(2, 1, {(0,): Poly.variable(2, 1) ** 2}), False)


def test_degree_zero_affine_functions(P1):
    x1, x2 = Poly.variable(2, 0), Poly.variable(2, 1)
    F = DifferentialForm(2, 0, {(): x1 - x2})
    assert is_multiplicative_form(P1, F)
    agree(P1, F, True)
    Fa = DifferentialForm(2, 0, {(): x1 + x2})
    assert not is_multiplicative_form(P1, Fa)
    agree(P1, Fa, True)
    agree(P1, DifferentialForm(2, 0, {(): x1 * x2}), False)


def test_two_vector_space(P1):
    x = Poly.variable(1, 0)
    alpha = d1(1, 0, x * x)
    beta = d1(1, 0, x + Poly.one(1))
    t_theta = pullback(P1.tgt, alpha)
    s_theta = pullback(P1.src, alpha)

    T = AffineForm(P1, t_theta)
    assert T.theta == alpha
    Tr, Tl = form_source_target(T)
    assert Tr.is_zero
    assert Tl == t_theta - s_theta
    assert is_multiplicative_form(P1, Tl)

    U = AffineForm(P1, pullback(P1.src, beta))
    assert U.Theta_l.is_zero
    TU = form_compose(T, U)
    assert TU.Theta == t_theta + pullback(P1.src, beta)
    assert form_source_target(TU) == (U.Theta_r, T.Theta_l)
    with pytest.raises(ComposabilityError):
        form_compose(U, T)

    Tinv = form_inverse(T)
    assert Tinv.Theta == -s_theta
    assert form_compose(T, Tinv).Theta == T.Theta_l
    assert form_compose(Tinv, T).Theta == T.Theta_r

    pr1 = PolyMap(2, [Poly.variable(2, 0)])
    pr2 = PolyMap(2, [Poly.variable(2, 1)])
    M = AffineForm(P1, pullback(pr1, alpha) - pullback(pr2, alpha))
    assert form_compose(M, M).Theta == M.Theta

    assert form_identity(P1, alpha).Theta == t_theta - s_theta

    V = AffineForm(P1, U.Theta_r + pullback(P1.src, d1(1, 0, x)))
    assert form_compose(form_compose(T, U), V).Theta == \
        form_compose(T, form_compose(U, V)).Theta
    T2 = AffineForm(P1, t_theta.scale(Fraction(3)))
    U2 = AffineForm(P1, pullback(P1.src, d1(1, 0, x * x * x)))
    assert (form_compose(T, U) + form_compose(T2, U2)).Theta == \
        form_compose(T + T2, U + U2).Theta


def test_cochain_iso(P1, P2):
    assert cochain_iso_check(P1)
    assert cochain_iso_check(P2)
    T = AffineForm(P2, pullback(P2.tgt, d1(2, 0, Poly.variable(2, 1))))
    Lam, lam = phi(T)
    assert Lam.is_zero and lam == d1(2, 0, Poly.variable(2, 1))
    assert phi_inverse(P2, Lam, lam).Theta == T.Theta


def test_im_form_flat(P2):
    a12 = DifferentialForm(2, 2, {(0, 1): Poly.one(2)})
    pr1 = PolyMap(4, [Poly.variable(4, 0), Poly.variable(4, 1)])
    pr2 = PolyMap(4, [Poly.variable(4, 2), Poly.variable(4, 3)])
    Theta = pullback(pr1, a12) - pullback(pr2, a12)
    assert is_multiplicative_form(P2, Theta)
    T = AffineForm(P2, Theta)
    imf, theta = im_form_extract(T)
    assert theta.is_zero
    assert imf.mu[0] == d1(2, 1)
    assert imf.mu[1] == d1(2, 0).scale(Fraction(-1))
    assert all(w.is_zero for w in imf.nu)
    assert im_form_rebuild(T) == Theta


def test_im_form_curved(P2):
    ax = d1(2, 0, Poly.variable(2, 1))
    pr1 = PolyMap(4, [Poly.variable(4, 0), Poly.variable(4, 1)])
    pr2 = PolyMap(4, [Poly.variable(4, 2), Poly.variable(4, 3)])
    Theta = pullback(pr1, ax) - pullback(pr2, ax)
    T = AffineForm(P2, Theta)
    imf, theta = im_form_extract(T)
    x2 = Poly.variable(2, 1)
    assert imf.mu[0] == DifferentialForm(2, 0, {(): x2})
    assert imf.mu[1].is_zero
    assert imf.nu[0] == d1(2, 1).scale(Fraction(-1))
    assert imf.nu[1] == d1(2, 0)
    assert im_form_rebuild(T) == Theta

    # tampering with mu breaks an identity
    with pytest.raises(StructureError):
        IMForm(P2.algebroid, 1,
               (imf.mu[0].scale(Fraction(2)), imf.mu[1]), imf.nu)

    # nonzero base part: the multiplicative part drives (mu, nu)
    gam = d1(2, 0)
    T2 = AffineForm(P2, Theta + pullback(P2.src, gam))
    imf2, theta2 = im_form_extract(T2)
    assert theta2 == gam
    assert imf2.mu[0] == DifferentialForm(2, 0, {(): x2 - Poly.one(2)})
    assert imf2.nu == imf.nu
    assert im_form_rebuild(T2) == T2.Theta


def test_im_form_line(P1):
    x = Poly.variable(1, 0)
    th = d1(1, 0, x * x)
    T = AffineForm(P1, pullback(P1.src, th) - pullback(P1.tgt, th))
    imf, theta = im_form_extract(T)
    assert theta.is_zero
    assert imf.mu[0] == DifferentialForm(1, 0, {(): -(x * x)})
    assert imf.nu[0].is_zero


def test_group_forms():
    H = make_heisenberg()
    dxH, dyH, dzH = d1(3, 0), d1(3, 1), d1(3, 2)
    assert is_multiplicative_form(H, dxH)
    agree(H, dxH, True)
    agree(H, dyH, True)
    agree(H, dzH, False)
    agree(H, wedge(dxH, dyH), False)
    agree(H, wedge(dxH, dzH), False)

    A2 = make_abelian(2)
    const = d1(2, 0, Poly.const(2, 3)) - d1(2, 1, Poly.const(2, Fraction(1, 2)))
    agree(A2, const, True)
    assert is_multiplicative_form(A2, const)
    agree(A2, d1(2, 0, Poly.variable(2, 0)), False)


def test_affine_family_dimensions():
    H = make_heisenberg()
    assert affine_form_family(H, 2, 2) == []
    fam1 = affine_form_family(H, 1, 0)
    assert len(fam1) == 2
    assert len(affine_form_family(H, 1, 1)) == 2
    for w in fam1:
        assert is_affine_form(H, w)

    P1 = make_pair(1)
    fam = affine_form_family(P1, 1, 1)
    assert len(fam) == 4
    for w in fam:
        assert is_affine_form(P1, w)

    A1 = make_abelian(1)
    assert len(affine_form_family(A1, 1, 0)) == 1
    assert len(affine_form_family(A1, 1, 1)) == 1


def test_affine_family_on_product():
    PG = make_product_pair_group(1)
    fam = affine_form_family(PG, 1, 0)
    assert fam, "constant-coefficient affine 1-forms must exist"
    for w in fam:
        assert is_affine_form(PG, w)
