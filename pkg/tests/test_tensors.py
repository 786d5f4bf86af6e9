from fractions import Fraction

import pytest

from affinoid.catalog import (make_abelian, make_heisenberg, make_pair,
                              make_product_pair_group)
from affinoid.fields import (DifferentialForm, MultiVectorField, TensorField,
                             form2_matrix, form_to_tensor, mv2_matrix,
                             mv_to_tensor, pullback)
from affinoid.forms import AffineForm, is_affine_form, is_multiplicative_form
from affinoid.groupoid import (AlgebroidSection, ComposabilityError,
                               StructureError, restrict_project,
                               translate_left_mv, translate_right_mv,
                               translate_section)
from affinoid.linalg import mat_mul, transpose
from affinoid.multivector import AffineMV, is_affine_mv
from affinoid.poly import Poly
from affinoid.tensors import (Affine11, AffineTensor, adjoint_matrix,
                              eqe_check, fleft_check, group_cases_check,
                              hor1_check, is_affine_function,
                              is_affine_tensor, is_multiplicative_function,
                              is_multiplicative_tensor,
                              monoidal_interchange_check, pi_compose_theta,
                              right_invariant_endomorphism, t11_compose,
                              t11_field, t11_matrix_of, t11_multiply,
                              t11_translate, tensor_chain_image,
                              tensor_compose, tensor_eval_on_Gamma,
                              tensor_inverse, tensor_source_target)


@pytest.fixture(scope="module")
def P1():
    return make_pair(1)


@pytest.fixture(scope="module")
def P2():
    return make_pair(2)


def diag11(G, a, d):
    z = Poly.zero(2)
    return Affine11(G, [[Poly.const(2, a), z], [z, Poly.const(2, d)]])


def test_affine_functions(P1):
    x, y = Poly.variable(2, 0), Poly.variable(2, 1)
    assert is_multiplicative_function(P1, x - y)
    assert is_affine_function(P1, x + y)
    assert not is_multiplicative_function(P1, x + y)
    assert not is_affine_function(P1, x * y)
    assert is_affine_tensor(P1, TensorField(2, 0, 0, {((), ()): x + y}))
    assert is_multiplicative_tensor(P1, TensorField(2, 0, 0, {((), ()): x - y}))
    assert not is_affine_tensor(P1, TensorField(2, 0, 0, {((), ()): x * y}))


def test_layer_consistency(P2):
    wA = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.variable(2, 0)})
    wB = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.one(2)})
    Pi = translate_right_mv(P2, wA) + translate_left_mv(P2, wB)
    assert is_affine_mv(P2, Pi)
    assert is_affine_tensor(P2, mv_to_tensor(Pi))

    d0 = Poly.variable(4, 0) - Poly.variable(4, 2)
    bad_mv = MultiVectorField(4, 2, {(0, 1): d0 * d0})
    assert not is_affine_mv(P2, bad_mv)
    assert not is_affine_tensor(P2, mv_to_tensor(bad_mv))

    a_base = DifferentialForm(2, 1, {(0,): Poly.variable(2, 1)})
    Th = pullback(P2.tgt, a_base) - pullback(P2.src, a_base)
    assert is_multiplicative_form(P2, Th)
    assert is_multiplicative_tensor(P2, form_to_tensor(Th))
    Th2 = pullback(P2.tgt, a_base) + pullback(P2.src, a_base)
    assert is_affine_form(P2, Th2)
    assert is_affine_tensor(P2, form_to_tensor(Th2))
    assert not is_multiplicative_tensor(P2, form_to_tensor(Th2))
    bad_f = DifferentialForm(4, 1, {(0,): d0 * d0})
    assert not is_affine_form(P2, bad_f)
    assert not is_affine_tensor(P2, form_to_tensor(bad_f))


def test_tensor_two_vector_space(P2):
    sec = AlgebroidSection(P2, 1, 1, {((0,), (1,)): Poly.variable(2, 0)})
    sec2 = AlgebroidSection(P2, 1, 1, {((1,), (0,)): Poly.one(2)})
    T = AffineTensor(P2, translate_section(P2, sec, "right"))
    assert T.f == sec
    assert T.F_r.is_zero
    U = AffineTensor(P2, translate_section(P2, sec2, "left"))
    assert U.F_l.is_zero
    V = tensor_compose(T, U)
    assert V.F == translate_section(P2, sec, "right") \
        + translate_section(P2, sec2, "left")
    src_t, tgt_t = tensor_source_target(V)
    assert src_t == translate_section(P2, sec2, "left") \
        - translate_section(P2, sec2, "right")
    assert tgt_t == translate_section(P2, sec, "right") \
        - translate_section(P2, sec, "left")
    Vinv = tensor_inverse(V)
    assert tensor_compose(V, Vinv).F == V.F_l
    assert tensor_compose(Vinv, V).F == V.F_r
    with pytest.raises(ComposabilityError):
        tensor_compose(U, V)
    img = tensor_chain_image(P2, sec)
    assert is_multiplicative_tensor(P2, img.F)
    assert (V + V).F == V.F.scale(2)
    assert V.scale(Fraction(1, 2)).F == V.F.scale(Fraction(1, 2))


def test_t11_eval_and_translation(P1):
    F11 = t11_field(P1, ((Poly.const(2, 2), Poly.zero(2)),
                         (Poly.zero(2), Poly.const(2, -3))))
    val = tensor_eval_on_Gamma(P1, F11, [Fraction(1), Fraction(2)],
                               [[Fraction(1), Fraction(0)]],
                               [[Fraction(1), Fraction(0)]])
    assert val == Fraction(2)
    n_mat = [[Poly.variable(1, 0)]]
    sec_n = AlgebroidSection(P1, 1, 1, {((0,), (0,)): Poly.variable(1, 0)})
    for side in ("right", "left"):
        assert t11_translate(P1, n_mat, side) == \
            t11_matrix_of(P1, translate_section(P1, sec_n, side))


def test_t11_algebra(P1):
    A = diag11(P1, 2, -3)
    assert not A.is_multiplicative()
    assert diag11(P1, 2, 2).is_multiplicative()
    with pytest.raises(StructureError):
        Affine11(P1, [[Poly.zero(2), Poly.one(2)],
                      [Poly.one(2), Poly.zero(2)]])
    assert not is_affine_tensor(P1, t11_field(
        P1, ((Poly.zero(2), Poly.one(2)), (Poly.one(2), Poly.zero(2)))))

    assert t11_compose(diag11(P1, 2, -3), diag11(P1, 5, -7)) == \
        diag11(P1, 10, 21)

    B = diag11(P1, -3, 7)
    Vm = t11_multiply(A, B)
    assert Vm == diag11(P1, 2, 7)
    with pytest.raises(ComposabilityError):
        t11_multiply(A, diag11(P1, 5, 1))

    v_ten = tensor_compose(A.as_affine_tensor(), B.as_affine_tensor())
    assert Vm.field == v_ten.F
    assert A.section == restrict_project(P1, A.field)


def pair2_block(P2, Ab, Db):
    rows = [[Poly.zero(4)] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            rows[i][j] = Ab[i][j].embed(4, 0)
            rows[2 + i][2 + j] = Db[i][j].embed(4, 2)
    return Affine11(P2, rows)


def test_horizontal_functor(P1, P2):
    u0 = Poly.variable(2, 0)
    one2, zero2 = Poly.one(2), Poly.zero(2)
    A1b = [[one2, u0], [zero2, one2]]
    D1b = [[Poly.const(2, 2), zero2], [u0, one2]]
    A2b = [[one2, zero2], [Poly.variable(2, 1), one2]]
    D2b = [[one2, u0 * u0], [zero2, Poly.const(2, 3)]]
    N1 = pair2_block(P2, A1b, D1b)
    N2 = pair2_block(P2, A2b, D2b)
    assert hor1_check(N1, N2)
    assert hor1_check(diag11(P1, 2, -3), diag11(P1, 5, -7))

    D3b = [[u0, one2], [zero2, one2]]
    D4b = [[one2, zero2], [zero2, u0 + one2]]
    N3 = pair2_block(P2, D1b, D3b)
    N4 = pair2_block(P2, D2b, D4b)
    assert monoidal_interchange_check(N1, N2, N3, N4)
    assert monoidal_interchange_check(diag11(P1, 2, 3), diag11(P1, 7, 11),
                                      diag11(P1, 3, 5), diag11(P1, 11, 13))


def test_bivector_times_two_form(P2):
    wA = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.variable(2, 0)})
    wB = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.one(2)})
    Pi = translate_right_mv(P2, wA) + translate_left_mv(P2, wB)
    alpha2 = DifferentialForm(2, 2, {(0, 1): Poly.one(2)})
    beta2 = DifferentialForm(2, 2, {(0, 1): Poly.variable(2, 1)})
    Pmv = AffineMV(P2, Pi)
    Tf = AffineForm(P2, pullback(P2.tgt, alpha2) + pullback(P2.src, beta2))
    C = pi_compose_theta(Pmv, Tf)
    assert eqe_check(Pmv, Tf)
    Pr = transpose(mv2_matrix(Pmv.Pi_r))
    Tr = transpose(form2_matrix(Tf.Theta_r))
    assert C.N_r == tuple(map(tuple, mat_mul(Pr, Tr)))
    Pl = transpose(mv2_matrix(Pmv.Pi_l))
    Tl = transpose(form2_matrix(Tf.Theta_l))
    assert C.N_l == tuple(map(tuple, mat_mul(Pl, Tl)))


def test_decomposable_translation(P2):
    u_sec = AlgebroidSection.frame(P2, 0)
    beta1 = DifferentialForm(2, 1, {(1,): Poly.variable(2, 0)})
    assert fleft_check(P2, u_sec, beta1)


def test_adjoint_and_group_batteries():
    H = make_heisenberg()
    Ad = adjoint_matrix(H)
    v0, v1 = Poly.variable(3, 0), Poly.variable(3, 1)
    one3, zero3 = Poly.one(3), Poly.zero(3)
    assert Ad == ((one3, zero3, zero3), (zero3, one3, zero3),
                  (-v1, v0, one3))

    rep = group_cases_check(H)
    assert rep["pass"], rep
    assert rep["identity"]["multiplicative"]
    assert rep["central_shear"]["affine"] and rep["central_shear"]["equivariant"]
    assert not rep["swap_outer"]["affine"] and rep["swap_outer"]["agree"]

    Ab2 = make_abelian(2)
    L_ab = [[Poly.const(2, 1), Poly.const(2, 5)],
            [Poly.const(2, 0), Poly.const(2, 1)]]
    assert Affine11(Ab2, right_invariant_endomorphism(Ab2, L_ab)).is_multiplicative()

    rep2 = group_cases_check(make_product_pair_group(1))
    assert rep2["pass"], rep2
