"""Affine (p, q)-tensor fields on a polynomial groupoid.

A tensor field is a function on the big groupoid whose arrows are an
arrow of the base groupoid together with q tangent vectors and p
covectors at it; the tensor is affine when that function is affine.
Tangent slots multiply through the jacobian of the extended
multiplication and covector slots through the pointwise cotangent
product, so the affineness identity is checked exactly on slot bases
over seeded rational arrows.  Affine tensors again form a groupoid over
multiplicative ones; (1, 1)-tensors compose as bundle maps on top of
that, and a degree-2 multivector paired with a degree-2 form composes
into an affine (1, 1)-tensor whose unit block splits into the expected
three terms.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .fields import (
    DegreeError,
    DifferentialForm,
    TensorField,
    eval_tensor,
    form2_matrix,
    mv2_matrix,
    pullback,
)
from .groupoid import (
    AlgebroidSection,
    ComposabilityError,
    PolyGroupoid,
    StructureError,
    cot_source,
    cotangent_ops_at,
    covector_composable_basis,
    restrict_project,
    tangent_composable_basis,
    translate_section,
    unit_covector,
    unit_restriction_in_frame,
)
from .linalg import det, mat_mul, mat_vec, transpose
from .multivector import AffineMV
from .forms import AffineForm
from .poly import ArityError, Poly, PolyMap, polymap_compose
from .sampling import RationalSampler

DEFAULT_SAMPLES = 10


# -- affine functions --------------------------------------------------------

def is_affine_function(G: PolyGroupoid, F: Poly) -> bool:
    """F(gh) = F(g) + F(h) - F(unit(src g)) as an exact identity on the
    parametrized composable space."""
    if not isinstance(F, Poly):
        raise ArityError(f"expected a polynomial, got {type(F).__name__}")
    if F.num_vars != G.dim_G:
        raise ArityError("function does not live on the arrow space")
    corner = polymap_compose(G.unit, polymap_compose(G.src, G.pair_first))
    lhs = F.subs(list(G.mult.components))
    rhs = (F.subs(list(G.pair_first.components))
           + F.subs(list(G.pair_second.components))
           - F.subs(list(corner.components)))
    return lhs == rhs


def is_multiplicative_function(G: PolyGroupoid, F: Poly) -> bool:
    """Affine with vanishing unit restriction."""
    if not is_affine_function(G, F):
        return False
    return F.subs(G._unit_comps, out_vars=G.dim_M).is_zero


# -- evaluation on the big groupoid -------------------------------------------

def tensor_eval_on_Gamma(G: PolyGroupoid, F: TensorField,
                         point: Sequence, vectors: Sequence[Sequence],
                         covectors: Sequence[Sequence]) -> Fraction:
    """Full contraction of F at an arrow with q tangent vectors and p
    covectors; antisymmetric and linear in each slot group."""
    if not isinstance(F, TensorField):
        raise ArityError(f"expected a tensor field, got {type(F).__name__}")
    if F.space_dim != G.dim_G:
        raise ArityError("field does not live on the arrow space")
    if len(point) != G.dim_G:
        raise ArityError("base point has the wrong dimension")
    if len(vectors) != F.q or len(covectors) != F.p:
        raise ArityError(f"need {F.q} vectors and {F.p} covectors")
    for v in list(vectors) + list(covectors):
        if len(v) != G.dim_G:
            raise ArityError("slot data has the wrong dimension")
    return eval_tensor(F, point, vectors, covectors)


def _affine_identity_at(G: PolyGroupoid, F: TensorField,
                        g: list[Fraction], h: list[Fraction]) -> bool:
    """The affineness identity at one composable arrow pair, exercised on
    every increasing tuple from the tangent and covector composable
    bases; multilinearity makes this exact in the slot data."""
    dG = G.dim_G
    ops = cotangent_ops_at(G, g, h)
    gh = ops.gh
    x = [c.eval_at(g) for c in G.src.components]
    u = [c.eval_at(x) for c in G.unit.components]
    Js = [[e.eval_at(g) for e in row] for row in G.J_src]
    Ju = [[e.eval_at(x) for e in row] for row in G.J_unit]

    tangent = tangent_composable_basis(G, g, h)
    cov = covector_composable_basis(G, g, h)

    def unit_vec(X):
        if G.dim_M == 0:
            return [Fraction(0)] * dG
        return mat_vec(Ju, mat_vec(Js, X))

    # products and unit images are per basis element, so hoist them out of
    # the slot-combination loops
    tan_data = [(v[:dG], v[dG:], ops.tangent_multiply(v[:dG], v[dG:]),
                 unit_vec(v[:dG])) for v in tangent]
    cov_data = [(c[:dG], c[dG:], ops.multiply(c[:dG], c[dG:]),
                 unit_covector(G, x, cot_source(G, g, c[:dG]))) for c in cov]

    for vecs in combinations(tan_data, F.q):
        Xs = [t[0] for t in vecs]
        Ys = [t[1] for t in vecs]
        prods = [t[2] for t in vecs]
        units_v = [t[3] for t in vecs]
        for covs in combinations(cov_data, F.p):
            xis = [c[0] for c in covs]
            etas = [c[1] for c in covs]
            zetas = [c[2] for c in covs]
            units_c = [c[3] for c in covs]
            lhs = eval_tensor(F, gh, prods, zetas)
            rhs = (eval_tensor(F, g, Xs, xis) + eval_tensor(F, h, Ys, etas)
                   - eval_tensor(F, u, units_v, units_c))
            if lhs != rhs:
                return False
    return True


def is_affine_tensor(G: PolyGroupoid, F: TensorField, seed: int = 0,
                     samples: int = DEFAULT_SAMPLES) -> bool:
    """Seeded decision procedure for tensor affineness: the identity is
    polynomial in the arrow pair and multilinear in the slots, so slot
    bases are exhausted and only the arrow pair is sampled."""
    if not isinstance(F, TensorField):
        raise ArityError(f"expected a tensor field, got {type(F).__name__}")
    if F.space_dim != G.dim_G:
        raise ArityError("field does not live on the arrow space")
    if F.p == 0 and F.q == 0:
        return is_affine_function(G, F.coeffs.get(((), ()), Poly.zero(G.dim_G)))
    rng = RationalSampler(seed)
    dG = G.dim_G
    dimP = G.comp_param.domain_dim
    for _ in range(samples):
        prm = rng.point(dimP)
        pair = [c.eval_at(prm) for c in G.comp_param.components]
        if not _affine_identity_at(G, F, pair[:dG], pair[dG:]):
            return False
    return True


def is_multiplicative_tensor(G: PolyGroupoid, F: TensorField, seed: int = 0,
                             samples: int = DEFAULT_SAMPLES) -> bool:
    """Affine with vanishing pure block at the units: the function on the
    big groupoid then kills all of its unit arrows."""
    if not is_affine_tensor(G, F, seed=seed, samples=samples):
        return False
    return restrict_project(G, F).is_zero


# -- the 2-vector space of affine tensors --------------------------------------

class AffineTensor:
    """An affine tensor bundled with its unit-restriction section f and
    the multiplicative tensors F_r = F - (right translate of f) and
    F_l = F - (left translate of f)."""

    __slots__ = ("parent", "F", "f", "F_r", "F_l")

    def __init__(self, parent: PolyGroupoid, F: TensorField,
                 seed: int = 0, samples: int = DEFAULT_SAMPLES):
        if not is_affine_tensor(parent, F, seed=seed, samples=samples):
            raise StructureError("tensor is not affine over this groupoid")
        f = restrict_project(parent, F)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "F_r", F - translate_section(parent, f, "right"))
        object.__setattr__(self, "F_l", F - translate_section(parent, f, "left"))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("AffineTensor is immutable")

    @property
    def degree(self) -> tuple[int, int]:
        return (self.F.p, self.F.q)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineTensor):
            return NotImplemented
        return self.parent is other.parent and self.F == other.F

    def __repr__(self) -> str:
        return f"AffineTensor(degree={self.degree}, {len(self.F.coeffs)} terms)"

    def __add__(self, other: AffineTensor) -> AffineTensor:
        if self.parent is not other.parent:
            raise ArityError("operands live on different groupoids")
        return AffineTensor(self.parent, self.F + other.F)

    def __sub__(self, other: AffineTensor) -> AffineTensor:
        if self.parent is not other.parent:
            raise ArityError("operands live on different groupoids")
        return AffineTensor(self.parent, self.F - other.F)

    def scale(self, c) -> AffineTensor:
        return AffineTensor(self.parent, self.F.scale(c))


def tensor_source_target(T: AffineTensor) -> tuple[TensorField, TensorField]:
    return T.F_r, T.F_l


def tensor_compose(T: AffineTensor, U: AffineTensor) -> AffineTensor:
    """Defined when T's source equals U's target; adds the left translate
    of U's section."""
    if T.parent is not U.parent:
        raise ArityError("operands live on different groupoids")
    if T.F_r != U.F_l:
        raise ComposabilityError("source of the left factor does not match "
                                 "target of the right factor")
    return AffineTensor(T.parent,
                        T.F + translate_section(T.parent, U.f, "left"))


def tensor_inverse(T: AffineTensor) -> AffineTensor:
    G = T.parent
    return AffineTensor(G, T.F - translate_section(G, T.f, "right")
                        - translate_section(G, T.f, "left"))


def tensor_chain_image(G: PolyGroupoid, sec: AlgebroidSection) -> AffineTensor:
    """The chain-complex image of a section: right minus left translate,
    always multiplicative."""
    w = translate_section(G, sec, "right") - translate_section(G, sec, "left")
    return AffineTensor(G, w)


def fleft_check(G: PolyGroupoid, u: AlgebroidSection,
                beta: DifferentialForm) -> bool:
    """Decomposable translation law: translating u tensor beta equals the
    translated frame part tensor the pulled-back form part, on both
    sides."""
    if u.p != 1 or u.q != 0:
        raise DegreeError("frame part must be a (1, 0) section")
    if beta.space_dim != G.dim_M or beta.degree != 1:
        raise ArityError("form part must be a one-form on the base")
    sec = u.wedge_section(AlgebroidSection(
        G, 0, 1, {((), (j,)): c for (j,), c in beta.coeffs.items()}))
    for side, base_map in (("left", G.src), ("right", G.tgt)):
        whole = translate_section(G, sec, side)
        upart = translate_section(G, u, side)
        fpart = pullback(base_map, beta)
        built: dict = {}
        for (iu, _), cu in upart.coeffs.items():
            for jd, cd in fpart.coeffs.items():
                built[(iu, jd)] = cu * cd
        if whole != TensorField(G.dim_G, 1, 1, built):
            return False
    return True


# -- (1, 1)-tensors as bundle maps ---------------------------------------------

def _as_poly_matrix(rows, n_vars: int, shape: tuple[int, int]):
    if len(rows) != shape[0]:
        raise ArityError(f"expected {shape[0]} rows")
    out = []
    for row in rows:
        if len(row) != shape[1]:
            raise ArityError(f"expected {shape[1]} columns")
        out.append(tuple(e if isinstance(e, Poly) else Poly.const(n_vars, e)
                         for e in row))
    return tuple(out)


def _mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def _mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def _mat_subs(A, comps, out_vars):
    return tuple(tuple(e.subs(comps, out_vars=out_vars) for e in row)
                 for row in A)


def t11_field(G: PolyGroupoid, matrix) -> TensorField:
    """The (1, 1)-tensor of a bundle map acting on tangent vectors:
    the function on the big groupoid is (X, xi) -> xi(N(X))."""
    coeffs = {((a,), (b,)): matrix[a][b]
              for a in range(G.dim_G) for b in range(G.dim_G)
              if not matrix[a][b].is_zero}
    return TensorField(G.dim_G, 1, 1, coeffs)


def t11_matrix_of(G: PolyGroupoid, F: TensorField):
    if (F.p, F.q) != (1, 1):
        raise DegreeError("matrix view needs a (1, 1)-tensor")
    zero = Poly.zero(G.dim_G)
    return tuple(tuple(F.coeffs.get(((a,), (b,)), zero)
                       for b in range(G.dim_G)) for a in range(G.dim_G))


def t11_translate(G: PolyGroupoid, n, side: str):
    """Matrix of the translated unit block: frame columns carry the
    output leg, the base jacobian carries the input leg."""
    dG, dM = G.dim_G, G.dim_M
    n = _as_poly_matrix(n, dM, (G.rank, dM))
    if dM == 0 or G.rank == 0:
        zero = Poly.zero(dG)
        return tuple(tuple(zero for _ in range(dG)) for _ in range(dG))
    if side == "right":
        frame, base_map, J = G.right_frame_matrix, G.tgt, G.J_tgt
    else:
        frame, base_map, J = G.left_frame_matrix, G.src, G.J_src
    mid = _mat_subs(n, list(base_map.components), dG)
    return tuple(tuple(r) for r in mat_mul(mat_mul(frame, mid), J))


class Affine11:
    """An affine (1, 1)-tensor held as a polynomial bundle map on the
    tangent space.  The unit restriction, written in the splitting frame,
    is lower triangular with blocks n_TM (base to base), n_A (frame to
    frame) and n (base to frame); n is the unit-restriction section."""

    __slots__ = ("parent", "matrix", "field", "n_TM", "n", "n_A",
                 "N_r", "N_l")

    def __init__(self, parent: PolyGroupoid, matrix,
                 seed: int = 0, samples: int = DEFAULT_SAMPLES):
        dG, dM = parent.dim_G, parent.dim_M
        matrix = _as_poly_matrix(matrix, dG, (dG, dG))
        field = t11_field(parent, matrix)
        if not is_affine_tensor(parent, field, seed=seed, samples=samples):
            raise StructureError("bundle map is not affine over this groupoid")
        NM = _mat_subs(matrix, parent._unit_comps, dM)
        B = mat_mul(mat_mul(parent.splitting_inv, NM), parent.splitting)
        for r in range(dM):
            for c in range(dM, dG):
                if not B[r][c].is_zero:
                    raise StructureError(
                        "affine bundle map leaks frame input into base output")
        n = tuple(tuple(B[r][c] for c in range(dM)) for r in range(dM, dG))
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n_TM",
                           tuple(tuple(B[r][c] for c in range(dM))
                                 for r in range(dM)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "n_A",
                           tuple(tuple(B[r][c] for c in range(dM, dG))
                                 for r in range(dM, dG)))
        object.__setattr__(self, "N_r",
                           _mat_sub(matrix, t11_translate(parent, n, "right")))
        object.__setattr__(self, "N_l",
                           _mat_sub(matrix, t11_translate(parent, n, "left")))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Affine11 is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Affine11):
            return NotImplemented
        return self.parent is other.parent and self.matrix == other.matrix

    def __repr__(self) -> str:
        return f"Affine11(dim={self.parent.dim_G})"

    @property
    def section(self) -> AlgebroidSection:
        G = self.parent
        coeffs = {((i,), (a,)): self.n[i][a]
                  for i in range(G.rank) for a in range(G.dim_M)
                  if not self.n[i][a].is_zero}
        return AlgebroidSection(G, 1, 1, coeffs)

    def is_multiplicative(self) -> bool:
        return all(e.is_zero for row in self.n for e in row)

    @property
    def n_A_mult(self):
        """A-to-A block of the multiplicative part N_r at the units; this
        differs from n_A by n composed with the anchor, because the
        right translate of n acts on the frame through the anchor."""
        G = self.parent
        dG, dM = G.dim_G, G.dim_M
        NM = _mat_subs(self.N_r, G._unit_comps, dM)
        B = mat_mul(mat_mul(G.splitting_inv, NM), G.splitting)
        return tuple(tuple(B[r][c] for c in range(dM, dG))
                     for r in range(dM, dG))

    def as_affine_tensor(self) -> AffineTensor:
        return AffineTensor(self.parent, self.field)


def t11_compose(N: Affine11, Np: Affine11, seed: int = 0,
                samples: int = DEFAULT_SAMPLES) -> Affine11:
    """Bundle-map composition; affine again."""
    if N.parent is not Np.parent:
        raise ArityError("operands live on different groupoids")
    return Affine11(N.parent, mat_mul(N.matrix, Np.matrix),
                    seed=seed, samples=samples)


def t11_multiply(N: Affine11, Np: Affine11, seed: int = 0,
                 samples: int = DEFAULT_SAMPLES) -> Affine11:
    """The 2-vector space composition on bundle maps: defined when N's
    source matrix equals Np's target matrix."""
    if N.parent is not Np.parent:
        raise ArityError("operands live on different groupoids")
    if N.N_r != Np.N_l:
        raise ComposabilityError("source of the left factor does not match "
                                 "target of the right factor")
    return Affine11(N.parent,
                    _mat_add(N.matrix, t11_translate(N.parent, Np.n, "left")),
                    seed=seed, samples=samples)


def hor1_check(N: Affine11, Np: Affine11) -> bool:
    """Bundle-map composition respects sources, targets, and the unit
    block: n(N o N') = n_A o n' + n o n'_TM + n o rho o n', where n_A is
    the frame block of the multiplicative part."""
    C = t11_compose(N, Np)
    if C.N_r != tuple(map(tuple, mat_mul(N.N_r, Np.N_r))):
        return False
    if C.N_l != tuple(map(tuple, mat_mul(N.N_l, Np.N_l))):
        return False
    if N.parent.dim_M == 0 or N.parent.rank == 0:
        return True
    anchor = [list(row) for row in N.parent.algebroid.anchor]
    expect = _mat_add(mat_mul(N.n_A_mult, Np.n),
                      _mat_add(mat_mul(N.n, Np.n_TM),
                               mat_mul(mat_mul(N.n, anchor), Np.n)))
    return C.n == tuple(map(tuple, expect))


def monoidal_interchange_check(N1: Affine11, N2: Affine11,
                               N3: Affine11, N4: Affine11) -> bool:
    """(N1 * N3) o (N2 * N4) = (N1 o N2) * (N3 o N4), plus the unit law:
    horizontal composition of multiplicative maps stays multiplicative."""
    lhs = t11_compose(t11_multiply(N1, N3), t11_multiply(N2, N4))
    h1 = t11_compose(N1, N2)
    h2 = t11_compose(N3, N4)
    try:
        rhs = t11_multiply(h1, h2)
    except ComposabilityError:
        return False
    if lhs.matrix != rhs.matrix:
        return False
    units = t11_compose(Affine11(N1.parent, N1.N_r),
                        Affine11(N2.parent, N2.N_r))
    return units.is_multiplicative()


# -- a 2-vector and a 2-form compose to a (1, 1) --------------------------------

def _full_antisym_frame(G: PolyGroupoid, W, contravariant: bool):
    dG = G.dim_G
    zero = Poly.zero(G.dim_M)
    A = [[zero] * dG for _ in range(dG)]
    frame = unit_restriction_in_frame(G, W)
    for key, c in frame.items():
        pair = key[0] if contravariant else key[1]
        a, b = pair
        A[a][b] = c
        A[b][a] = -c
    return A


def pi_compose_theta(P: AffineMV, T: AffineForm, seed: int = 0,
                     samples: int = DEFAULT_SAMPLES) -> Affine11:
    """Lower with the form, then raise with the multivector: the bundle
    map X -> Pi#(Theta_flat(X)) is affine when both factors are."""
    if P.parent is not T.parent:
        raise ArityError("operands live on different groupoids")
    if P.degree != 2 or T.degree != 2:
        raise DegreeError("both factors must have degree 2")
    A = mv2_matrix(P.Pi)
    B = form2_matrix(T.Theta)
    N = mat_mul(transpose(A), transpose(B))
    return Affine11(P.parent, N, seed=seed, samples=samples)


def eqe_check(P: AffineMV, T: AffineForm) -> bool:
    """Unit block of the composite bundle map against its three-term
    expansion through the unit blocks of the factors."""
    G = P.parent
    dM, rank = G.dim_M, G.rank
    C = pi_compose_theta(P, T)
    Wf = _full_antisym_frame(G, P.Pi, contravariant=True)
    # theta_TM is the base map of the multiplicative part, so the mixed
    # block must come from Theta_r, not from Theta
    Bf = _full_antisym_frame(G, T.Theta_r, contravariant=False)
    pi_sharp = [[Wf[dM + j][dM + i] for j in range(rank)] for i in range(rank)]
    pi_Astar = [[Wf[a][dM + i] for a in range(dM)] for i in range(rank)]
    theta_TM = [[Bf[a][dM + i] for a in range(dM)] for i in range(rank)]
    theta_flat = transpose(form2_matrix(T.theta))
    rho_star = [[G.algebroid.anchor[a][i] for a in range(dM)]
                for i in range(rank)]
    expect = _mat_add(mat_mul(pi_Astar, theta_flat),
                      _mat_add(mat_mul(pi_sharp, theta_TM),
                               mat_mul(mat_mul(pi_sharp, rho_star),
                                       theta_flat)))
    return C.n == tuple(map(tuple, expect))


# -- group and product batteries -------------------------------------------------

def adjoint_matrix(G: PolyGroupoid):
    """Differential of conjugation at the identity of a group instance, as
    a polynomial matrix in the group point."""
    if G.dim_M != 0:
        raise ArityError("adjoint battery needs a group instance")
    dG = G.dim_G
    n2 = 2 * dG
    pr_g = PolyMap(n2, [Poly.variable(n2, i) for i in range(dG)])
    pr_x = PolyMap(n2, [Poly.variable(n2, i) for i in range(dG, n2)])
    gx = polymap_compose(G.mult_pair, PolyMap.stack([pr_g, pr_x]))
    conj = polymap_compose(G.mult_pair, PolyMap.stack(
        [gx, polymap_compose(G.inv, pr_g)]))
    e = [c.constant_value() for c in G.unit.components]
    out = []
    for a in range(dG):
        row = []
        for b in range(dG):
            d = conj.components[a].diff(dG + b)
            at_e = d.subs([Poly.variable(dG, i) for i in range(dG)]
                          + [Poly.const(dG, v) for v in e])
            row.append(at_e)
        out.append(tuple(row))
    return tuple(out)


def right_invariant_endomorphism(G: PolyGroupoid, L):
    """Extend a linear map on the tangent space at the identity to the
    whole group by right translation."""
    if G.dim_M != 0:
        raise ArityError("needs a group instance")
    dG = G.dim_G
    R = G.right_frame_matrix
    d = det(R, Poly.zero(dG), Poly.one(dG)).constant_value()
    if d is None or d == 0:
        raise StructureError("right frame is not constantly invertible")
    from .linalg import adjugate
    Rinv = [[e * Fraction(1, d) for e in row]
            for row in adjugate(R, Poly.zero(dG), Poly.one(dG))]
    Lp = _as_poly_matrix(L, dG, (dG, dG))
    return tuple(tuple(r) for r in mat_mul(mat_mul(R, Lp), Rinv))


def _equivariant(G: PolyGroupoid, L) -> bool:
    Ad = adjoint_matrix(G)
    Lp = _as_poly_matrix(L, G.dim_G, (G.dim_G, G.dim_G))
    return mat_mul(Ad, Lp) == mat_mul(Lp, Ad)


def group_cases_check(G: PolyGroupoid, seed: int = 0,
                      samples: int = DEFAULT_SAMPLES) -> dict:
    """Battery for group instances (constant maps on the tangent space at
    the identity are affine exactly when they commute with the adjoint
    action) and for pair-times-group products (block maps are affine for
    any two base blocks, multiplicative only when they agree)."""
    if G.dim_M == 0:
        return _group_battery(G, seed, samples)
    return _product_battery(G, seed, samples)


def _group_battery(G: PolyGroupoid, seed: int, samples: int) -> dict:
    dG = G.dim_G
    one = Poly.one(dG)
    zero = Poly.zero(dG)
    eye = [[one if i == j else zero for j in range(dG)] for i in range(dG)]
    cases = {"identity": eye}
    if dG >= 3:
        shear = [[one if i == j else zero for j in range(dG)] for i in range(dG)]
        shear[dG - 1][0] = Poly.const(dG, 2)
        shear[dG - 1][1] = Poly.const(dG, Fraction(-1, 3))
        cases["central_shear"] = shear
        swap = [[zero] * dG for _ in range(dG)]
        for i in range(dG):
            swap[i][i] = one
        swap[0][0] = zero
        swap[dG - 1][dG - 1] = zero
        swap[0][dG - 1] = one
        swap[dG - 1][0] = one
        cases["swap_outer"] = swap
    report = {}
    for name, L in cases.items():
        eq = _equivariant(G, L)
        NL = right_invariant_endomorphism(G, L)
        field = t11_field(G, _as_poly_matrix(NL, dG, (dG, dG)))
        aff = is_affine_tensor(G, field, seed=seed, samples=samples)
        mult = aff and restrict_project(G, field).is_zero
        report[name] = {"equivariant": eq, "affine": aff,
                        "multiplicative": mult, "agree": eq == aff == mult}
    report["pass"] = all(v["agree"] for v in report.values()
                         if isinstance(v, dict))
    return report


def _product_battery(G: PolyGroupoid, seed: int, samples: int) -> dict:
    """Expects a pair-groupoid factor on the first 2 dim_M coordinates and
    a group factor on the rest."""
    dG, dM = G.dim_G, G.dim_M
    gdim = dG - 2 * dM
    if gdim <= 0:
        raise ArityError("needs a pair-times-group product instance")
    from .catalog import make_heisenberg
    H = make_heisenberg()
    if gdim != H.dim_G:
        raise ArityError("group factor is not the catalog group instance")
    zero = Poly.zero(dG)

    def block_map(N1, N2, L):
        NL = right_invariant_endomorphism(H, L)
        rows = [[zero] * dG for _ in range(dG)]
        for i in range(dM):
            for j in range(dM):
                rows[i][j] = Poly.const(dG, N1[i][j])
                rows[dM + i][dM + j] = Poly.const(dG, N2[i][j])
        for i in range(gdim):
            for j in range(gdim):
                rows[2 * dM + i][2 * dM + j] = NL[i][j].embed(dG, 2 * dM)
        return rows

    N1 = [[Fraction(2) if i == j else Fraction(0) for j in range(dM)]
          for i in range(dM)]
    N2 = [[Fraction(-1) if i == j else Fraction(0) for j in range(dM)]
          for i in range(dM)]
    eyeH = [[Poly.one(3) if i == j else Poly.zero(3) for j in range(3)]
            for i in range(3)]
    swapH = [[Poly.zero(3)] * 3 for _ in range(3)]
    swapH[0][2] = Poly.one(3)
    swapH[1][1] = Poly.one(3)
    swapH[2][0] = Poly.one(3)

    distinct = t11_field(G, _as_poly_matrix(block_map(N1, N2, eyeH),
                                            dG, (dG, dG)))
    matched = t11_field(G, _as_poly_matrix(block_map(N1, N1, eyeH),
                                           dG, (dG, dG)))
    broken = t11_field(G, _as_poly_matrix(block_map(N1, N1, swapH),
                                          dG, (dG, dG)))
    report = {
        "distinct_blocks_affine": is_affine_tensor(G, distinct, seed=seed,
                                                   samples=samples),
        "distinct_blocks_multiplicative": is_multiplicative_tensor(
            G, distinct, seed=seed, samples=samples),
        "matched_blocks_multiplicative": is_multiplicative_tensor(
            G, matched, seed=seed, samples=samples),
        "broken_group_factor_affine": is_affine_tensor(G, broken, seed=seed,
                                                       samples=samples),
    }
    report["pass"] = (report["distinct_blocks_affine"]
                      and not report["distinct_blocks_multiplicative"]
                      and report["matched_blocks_multiplicative"]
                      and not report["broken_group_factor_affine"])
    return report
