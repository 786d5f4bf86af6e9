import random
from fractions import Fraction

import pytest

from affinoid.fields import (DegreeError, DifferentialForm, MultiVectorField,
                             TensorField, derham_d, eval_form, eval_mv,
                             eval_tensor, form2_matrix, form_to_tensor,
                             interior_product, interior_vector,
                             lie_derivative_form, mv2_matrix, mv_to_tensor,
                             pullback, schouten_bracket, tensor_to_form,
                             tensor_to_mv, wedge)
from affinoid.poly import Poly, PolyMap, polymap_compose

from conftest import rand_form, rand_mv, rand_poly


def sign(k):
    return -1 if k % 2 else 1


def test_wedge_graded_commutative():
    rng = random.Random(21)
    for _ in range(30):
        p, q = rng.randint(1, 2), rng.randint(1, 2)
        a, b = rand_mv(rng, 3, p), rand_mv(rng, 3, q)
        lhs = wedge(a, b)
        rhs = wedge(b, a)
        assert lhs == (rhs if sign(p * q) > 0 else -rhs)


def test_wedge_associative():
    rng = random.Random(22)
    for _ in range(20):
        a, b, c = (rand_form(rng, 3, 1) for _ in range(3))
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_schouten_vector_fields_is_lie_bracket():
    # on 1-fields the bracket acts on functions as the commutator
    rng = random.Random(23)
    for _ in range(20):
        X, Y = rand_mv(rng, 2, 1), rand_mv(rng, 2, 1)
        f = rand_poly(rng, 2)
        B = schouten_bracket(X, Y)

        def act(V, g):
            return sum((c * g.diff(i[0]) for i, c in V.coeffs.items()),
                       Poly.zero(2))

        assert act(B, f) == act(X, act(Y, f)) - act(Y, act(X, f))


def test_schouten_degree_error():
    f = MultiVectorField(2, 0, {(): Poly.one(2)})
    with pytest.raises(DegreeError):
        schouten_bracket(f, f)


def test_d_squared_zero():
    rng = random.Random(24)
    for _ in range(30):
        w = rand_form(rng, 3, rng.randint(0, 2))
        assert derham_d(derham_d(w)).is_zero


def test_d_leibniz():
    rng = random.Random(25)
    for _ in range(20):
        p = rng.randint(0, 2)
        a = rand_form(rng, 3, p)
        b = rand_form(rng, 3, rng.randint(0, 2))
        lhs = derham_d(wedge(a, b))
        rhs = wedge(derham_d(a), b) + wedge(a, derham_d(b)).scale(sign(p))
        assert lhs == rhs


def test_pullback_functorial_and_d_commute():
    rng = random.Random(26)
    for _ in range(15):
        g = PolyMap(2, [rand_poly(rng, 2), rand_poly(rng, 2)])
        f = PolyMap(2, [rand_poly(rng, 2), rand_poly(rng, 2)])
        w = rand_form(rng, 2, rng.randint(0, 2))
        assert pullback(polymap_compose(f, g), w) == \
            pullback(g, pullback(f, w))
        assert pullback(g, derham_d(w)) == derham_d(pullback(g, w))


def test_pullback_wedge():
    rng = random.Random(27)
    g = PolyMap(3, [rand_poly(rng, 3), rand_poly(rng, 3)])
    a, b = rand_form(rng, 2, 1), rand_form(rng, 2, 1)
    assert pullback(g, wedge(a, b)) == wedge(pullback(g, a), pullback(g, b))


def test_interior_vector_antiderivation():
    rng = random.Random(28)
    for _ in range(15):
        X = rand_mv(rng, 3, 1)
        p = rng.randint(1, 2)
        a = rand_form(rng, 3, p)
        b = rand_form(rng, 3, 1)
        lhs = interior_vector(X, wedge(a, b))
        rhs = wedge(interior_vector(X, a), b) \
            + wedge(a, interior_vector(X, b)).scale(sign(p))
        assert lhs == rhs


def test_interior_product_mirrors_interior_vector():
    rng = random.Random(29)
    xi = rand_form(rng, 2, 1)
    P = rand_mv(rng, 2, 2)
    Q = interior_product(xi, P)
    assert Q.degree == 1
    pt = [Fraction(1), Fraction(2)]
    cov = [Fraction(3), Fraction(-1, 2)]
    xival = [c.eval_at(pt) for c in
             (xi.coeffs.get((i,), Poly.zero(2)) for i in range(2))]
    assert eval_mv(Q, pt, [cov]) == eval_mv(P, pt, [xival, cov])


def test_lie_derivative_commutator():
    rng = random.Random(30)
    for _ in range(10):
        X, Y = rand_mv(rng, 2, 1), rand_mv(rng, 2, 1)
        w = rand_form(rng, 2, 1)
        lhs = lie_derivative_form(schouten_bracket(X, Y), w)
        rhs = lie_derivative_form(X, lie_derivative_form(Y, w)) \
            - lie_derivative_form(Y, lie_derivative_form(X, w))
        assert lhs == rhs


def test_tensor_round_trips():
    rng = random.Random(31)
    P = rand_mv(rng, 3, 2)
    w = rand_form(rng, 3, 2)
    assert tensor_to_mv(mv_to_tensor(P)) == P
    assert tensor_to_form(form_to_tensor(w)) == w
    with pytest.raises(DegreeError):
        tensor_to_mv(form_to_tensor(w))


def test_tensor_eval_matches_mv_eval():
    rng = random.Random(32)
    P = rand_mv(rng, 2, 2)
    pt = [Fraction(2), Fraction(-1)]
    covs = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]]
    assert eval_tensor(mv_to_tensor(P), pt, [], covs) == eval_mv(P, pt, covs)


def test_form_eval_alternating():
    rng = random.Random(33)
    w = rand_form(rng, 2, 2)
    pt = [Fraction(1), Fraction(1)]
    v = [Fraction(1), Fraction(3)]
    u = [Fraction(2), Fraction(-1)]
    assert eval_form(w, pt, [v, u]) == -eval_form(w, pt, [u, v])
    assert eval_form(w, pt, [v, v]) == 0


def test_matrix_views_antisymmetric():
    rng = random.Random(34)
    P = rand_mv(rng, 3, 2)
    w = rand_form(rng, 3, 2)
    A = mv2_matrix(P)
    B = form2_matrix(w)
    for i in range(3):
        assert A[i][i].is_zero and B[i][i].is_zero
        for j in range(3):
            assert A[i][j] == -A[j][i]
            assert B[i][j] == -B[j][i]
    with pytest.raises(DegreeError):
        mv2_matrix(rand_mv(rng, 3, 1))


def test_graded_structure_validated():
    with pytest.raises(DegreeError):
        MultiVectorField(2, 1, {(0, 1): Poly.one(2)})
    with pytest.raises(ValueError):
        DifferentialForm(2, 2, {(1, 0): Poly.one(2)})
    t = TensorField(2, 1, 1, {((0,), (1,)): Poly.one(2)})
    assert not t.is_zero
    assert t - t == TensorField(2, 1, 1, {})
