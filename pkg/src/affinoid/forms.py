"""Affine and multiplicative differential forms on a polynomial groupoid.

A form on the arrow space is multiplicative when its pullback along the
multiplication map equals the sum of its pullbacks along the two pair
projections; it is affine when the defect is the pullback of its base
restriction along either outer corner of a composable pair.  Affine
forms are the arrows of a groupoid over multiplicative forms, mirroring
the multivector picture with source/target pullbacks in place of
translations; the unit splits the correspondence into a multiplicative
part and a base form, and the multiplicative part is equivalent to a
pair of bundle maps on the algebroid subject to three exact identities.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .fields import (
    DegreeError,
    DifferentialForm,
    MultiVectorField,
    derham_d,
    interior_vector,
    lie_derivative_form,
    pullback,
)
from .groupoid import (
    ComposabilityError,
    LieAlgebroidData,
    PolyGroupoid,
    StructureError,
    unit_restriction_in_frame,
)
from .linalg import kernel_basis
from .poly import ArityError, Poly, PolyMap, polymap_compose


def _check_form(G: PolyGroupoid, Theta: DifferentialForm) -> None:
    if not isinstance(Theta, DifferentialForm):
        raise ArityError(f"expected a differential form, got {type(Theta).__name__}")
    if Theta.space_dim != G.dim_G:
        raise ArityError("form does not live on the arrow space")


def base_restriction(G: PolyGroupoid, Theta: DifferentialForm) -> DifferentialForm:
    """Pull the form back along the unit embedding; degree-k forms keep
    only their pure base-coframe component."""
    _check_form(G, Theta)
    return pullback(G.unit, Theta)


def is_multiplicative_form(G: PolyGroupoid, Theta: DifferentialForm) -> bool:
    """Pullback along multiplication equals the sum of the pullbacks along
    the two pair projections, as an exact identity on the parametrized
    composable space."""
    _check_form(G, Theta)
    lhs = pullback(G.mult, Theta)
    return lhs == pullback(G.pair_first, Theta) + pullback(G.pair_second, Theta)


def is_affine_form(G: PolyGroupoid, Theta: DifferentialForm) -> bool:
    """Multiplicativity up to the base restriction: the defect must equal
    its pullback through the source of the first factor, and equivalently
    through the target of the second."""
    _check_form(G, Theta)
    theta = pullback(G.unit, Theta)
    lhs = pullback(G.mult, Theta)
    shared = pullback(G.pair_first, Theta) + pullback(G.pair_second, Theta)
    via_src = lhs == shared - pullback(
        polymap_compose(G.src, G.pair_first), theta)
    via_tgt = lhs == shared - pullback(
        polymap_compose(G.tgt, G.pair_second), theta)
    if via_src != via_tgt:
        raise StructureError(
            "source and target forms of the affineness identity disagree")
    return via_src


def parallelogram_isotropy(G: PolyGroupoid, Theta: DifferentialForm) -> bool:
    """Signed pullback sum over the parallelogram parametrization; vanishes
    exactly when the form is affine.  Serves as the independent route to
    the affineness verdict."""
    _check_form(G, Theta)
    dG = G.dim_G
    pm = G.parallelogram_map
    blocks = [pm.block(i * dG, dG) for i in range(4)]
    acc = (pullback(blocks[0], Theta) - pullback(blocks[1], Theta)
           - pullback(blocks[2], Theta) + pullback(blocks[3], Theta))
    return acc.is_zero


class AffineForm:
    """An affine form bundled with its base restriction theta and the
    multiplicative forms Theta_r = Theta - t*theta and Theta_l =
    Theta - s*theta.  Construction fails on a non-affine form."""

    __slots__ = ("parent", "Theta", "theta", "Theta_r", "Theta_l")

    def __init__(self, parent: PolyGroupoid, Theta: DifferentialForm):
        if not is_affine_form(parent, Theta):
            raise StructureError("form is not affine over this groupoid")
        theta = pullback(parent.unit, Theta)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "Theta", Theta)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "Theta_r", Theta - pullback(parent.tgt, theta))
        object.__setattr__(self, "Theta_l", Theta - pullback(parent.src, theta))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("AffineForm is immutable")

    @property
    def degree(self) -> int:
        return self.Theta.degree

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineForm):
            return NotImplemented
        return self.parent is other.parent and self.Theta == other.Theta

    def __repr__(self) -> str:
        return f"AffineForm(degree={self.degree}, {len(self.Theta.coeffs)} terms)"

    def __add__(self, other: AffineForm) -> AffineForm:
        if self.parent is not other.parent:
            raise ArityError("operands live on different groupoids")
        return AffineForm(self.parent, self.Theta + other.Theta)

    def __sub__(self, other: AffineForm) -> AffineForm:
        if self.parent is not other.parent:
            raise ArityError("operands live on different groupoids")
        return AffineForm(self.parent, self.Theta - other.Theta)

    def scale(self, c) -> AffineForm:
        return AffineForm(self.parent, self.Theta.scale(c))


def form_source_target(T: AffineForm) -> tuple[DifferentialForm, DifferentialForm]:
    """Source and target of an affine form in the groupoid of affine
    forms: both are multiplicative."""
    return T.Theta_r, T.Theta_l


def form_compose(T: AffineForm, U: AffineForm) -> AffineForm:
    """Composition of affine forms over a shared multiplicative form:
    defined when T's source equals U's target, the result adds the source
    pullback of U's base restriction."""
    if T.parent is not U.parent:
        raise ArityError("operands live on different groupoids")
    if T.Theta_r != U.Theta_l:
        raise ComposabilityError("source form of the left factor does not "
                                 "match target form of the right factor")
    return AffineForm(T.parent, T.Theta + pullback(T.parent.src, U.theta))


def form_inverse(T: AffineForm) -> AffineForm:
    """Inverse arrow: subtract both the source and target pullbacks of the
    base restriction."""
    G = T.parent
    return AffineForm(G, T.Theta - pullback(G.src, T.theta)
                      - pullback(G.tgt, T.theta))


def form_identity(G: PolyGroupoid, theta: DifferentialForm) -> AffineForm:
    """The chain-complex image of a base form: t*theta - s*theta is
    multiplicative, hence a unit-like affine form."""
    if theta.space_dim != G.dim_M:
        raise ArityError("base form does not live on the base")
    w = pullback(G.tgt, theta) - pullback(G.src, theta)
    return AffineForm(G, w)


# -- cochain isomorphism ------------------------------------------------------

def phi(T: AffineForm) -> tuple[DifferentialForm, DifferentialForm]:
    """Split an affine form into its multiplicative part and base form."""
    return T.Theta_r, T.theta


def phi_inverse(G: PolyGroupoid, Lam: DifferentialForm,
                lam: DifferentialForm) -> AffineForm:
    """Rebuild the affine form from a multiplicative form and a base form."""
    if lam.space_dim != G.dim_M:
        raise ArityError("base form does not live on the base")
    return AffineForm(G, Lam + pullback(G.tgt, lam))


def _coordinate_battery(G: PolyGroupoid, degrees: tuple[int, ...]) -> list[AffineForm]:
    dM = G.dim_M
    out: list[AffineForm] = []
    for k in degrees:
        if k > dM:
            continue
        idx = tuple(range(k))
        coeff = Poly.one(dM)
        for i in range(dM):
            coeff = coeff * Poly.variable(dM, i)
        flat = DifferentialForm(dM, k, {idx: Poly.one(dM)})
        curved = DifferentialForm(dM, k, {idx: coeff})
        for theta in (flat, curved):
            out.append(AffineForm(G, pullback(G.src, theta)))
            out.append(AffineForm(G, pullback(G.tgt, theta)))
            out.append(AffineForm(G, pullback(G.tgt, theta)
                                   - pullback(G.src, theta)))
        out.append(AffineForm(G, pullback(G.src, flat)
                              + pullback(G.tgt, curved)))
    return out


def cochain_iso_check(G: PolyGroupoid,
                      battery: list[AffineForm] | None = None,
                      degrees: tuple[int, ...] = (1, 2)) -> bool:
    """On a battery of affine forms: the split map and its inverse are
    mutually inverse, the split lands in multiplicative-plus-base, the
    exterior derivative preserves affineness and multiplicativity, and it
    commutes with the split."""
    if battery is None:
        battery = _coordinate_battery(G, degrees)
    for T in battery:
        Lam, lam = phi(T)
        if not is_multiplicative_form(G, Lam):
            return False
        if phi_inverse(G, Lam, lam).Theta != T.Theta:
            return False
        dT = AffineForm(G, derham_d(T.Theta))
        dLam, dlam = phi(dT)
        if dLam != derham_d(Lam) or dlam != derham_d(lam):
            return False
        if T.theta.is_zero and not is_multiplicative_form(G, derham_d(T.Theta)):
            return False
    return True


# -- infinitesimal data -------------------------------------------------------

def _function_scale(f: Poly, w: DifferentialForm) -> DifferentialForm:
    return DifferentialForm(w.space_dim, w.degree,
                            {idx: f * c for idx, c in w.coeffs.items()})


def _anchor_fields(alg: LieAlgebroidData) -> list[MultiVectorField]:
    dM = alg.groupoid.dim_M
    out = []
    for i in range(alg.rank):
        comps = {(r,): alg.anchor[r][i] for r in range(dM)
                 if not alg.anchor[r][i].is_zero}
        out.append(MultiVectorField(dM, 1, comps))
    return out


def _bracket_combination(alg: LieAlgebroidData, i: int, j: int,
                         values: tuple[DifferentialForm, ...],
                         dM: int, degree: int) -> DifferentialForm:
    """Value of a bundle map on the frame bracket [b_i, b_j], expanded
    through the structure functions."""
    acc = DifferentialForm.zero(dM, degree)
    if i == j:
        return acc
    if i < j:
        comps, sign = alg.structure[(i, j)], 1
    else:
        comps, sign = alg.structure[(j, i)], -1
    for l, c in enumerate(comps):
        if c.is_zero:
            continue
        term = _function_scale(c, values[l])
        acc = acc + (term if sign > 0 else -term)
    return acc


class IMForm:
    """Bundle maps mu: A -> wedge^{k-1} T*M and nu: A -> wedge^k T*M given
    on the frame, subject to three exact identities tying them to the
    anchor and the frame bracket.  Construction fails when an identity
    does not hold."""

    __slots__ = ("parent", "degree", "mu", "nu")

    def __init__(self, parent: LieAlgebroidData, degree: int,
                 mu: tuple[DifferentialForm, ...],
                 nu: tuple[DifferentialForm, ...]):
        dM = parent.groupoid.dim_M
        if degree < 1:
            raise DegreeError("infinitesimal data needs degree >= 1")
        if len(mu) != parent.rank or len(nu) != parent.rank:
            raise ArityError("one value per frame section required")
        for w in mu:
            if w.space_dim != dM or w.degree != degree - 1:
                raise DegreeError("mu values must be base forms of degree k-1")
        for w in nu:
            if w.space_dim != dM or w.degree != degree:
                raise DegreeError("nu values must be base forms of degree k")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "mu", tuple(mu))
        object.__setattr__(self, "nu", tuple(nu))
        failure = self._equations_failure()
        if failure is not None:
            raise StructureError(f"infinitesimal form identity failed: {failure}")

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("IMForm is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, IMForm):
            return NotImplemented
        return (self.parent is other.parent and self.degree == other.degree
                and self.mu == other.mu and self.nu == other.nu)

    def __repr__(self) -> str:
        return f"IMForm(degree={self.degree}, rank={self.parent.rank})"

    def _equations_failure(self) -> str | None:
        alg = self.parent
        dM = alg.groupoid.dim_M
        k = self.degree
        rho = _anchor_fields(alg)
        for i in range(alg.rank):
            for j in range(alg.rank):
                if k >= 2 and j >= i:
                    lhs = interior_vector(rho[i], self.mu[j])
                    rhs = interior_vector(rho[j], self.mu[i])
                    if not (lhs + rhs).is_zero:
                        return f"anchor contraction symmetry at ({i}, {j})"
                lhs = _bracket_combination(alg, i, j, self.mu, dM, k - 1)
                rhs = (lie_derivative_form(rho[i], self.mu[j])
                       - interior_vector(rho[j], derham_d(self.mu[i]))
                       - interior_vector(rho[j], self.nu[i]))
                if lhs != rhs:
                    return f"bracket compatibility of mu at ({i}, {j})"
                lhs = _bracket_combination(alg, i, j, self.nu, dM, k)
                rhs = (lie_derivative_form(rho[i], self.nu[j])
                       - interior_vector(rho[j], derham_d(self.nu[i])))
                if lhs != rhs:
                    return f"bracket compatibility of nu at ({i}, {j})"
        return None


def _frame_contractions(G: PolyGroupoid, W: DifferentialForm
                        ) -> tuple[DifferentialForm, ...]:
    """Contract each algebroid frame vector into the unit restriction of W
    and keep the pure base-coframe part: the coefficient sits in the
    blocks with exactly one algebroid coframe index, which sorts last."""
    k = W.degree
    dM = G.dim_M
    frame = unit_restriction_in_frame(G, W)
    sign = 1 if (k - 1) % 2 == 0 else -1
    out: list[dict] = [dict() for _ in range(G.rank)]
    for (_, L), c in frame.items():
        if L and L[-1] >= dM and all(l < dM for l in L[:-1]):
            out[L[-1] - dM][L[:-1]] = c if sign > 0 else -c
    return tuple(DifferentialForm(dM, k - 1, d) for d in out)


def im_form_extract(T: AffineForm) -> tuple[IMForm, DifferentialForm]:
    """Split an affine form into its infinitesimal data and base form.
    The bundle maps come from contracting frame vectors into the unit
    restriction of the multiplicative part and of its exterior
    derivative."""
    G = T.parent
    k = T.degree
    if k < 1:
        raise DegreeError("infinitesimal data needs degree >= 1")
    mu = _frame_contractions(G, T.Theta_r)
    nu = _frame_contractions(G, derham_d(T.Theta_r))
    return IMForm(G.algebroid, k, mu, nu), T.theta


def im_form_rebuild(T: AffineForm) -> DifferentialForm:
    """Round trip of the correspondence at the form level."""
    return T.Theta_r + pullback(T.parent.tgt, T.theta)


def affine_form_family(G: PolyGroupoid, degree: int,
                       coeff_degree: int) -> list[DifferentialForm]:
    """Basis of the affine forms of the given degree whose coefficients
    are polynomials of bounded total degree.  The affineness defect is
    linear in the form, so the family is the kernel of one exact linear
    system; both corner variants of the identity contribute rows."""
    dG = G.dim_G
    idxs = list(itertools.combinations(range(dG), degree))
    monos: list[tuple[int, ...]] = []
    for total in range(coeff_degree + 1):
        for combo in itertools.combinations_with_replacement(range(dG), total):
            e = [0] * dG
            for v in combo:
                e[v] += 1
            monos.append(tuple(e))
    basis = [(idx, e) for idx in idxs for e in monos]
    src_corner = polymap_compose(G.src, G.pair_first)
    tgt_corner = polymap_compose(G.tgt, G.pair_second)
    defects: list[DifferentialForm] = []
    for idx, e in basis:
        Theta = DifferentialForm(dG, degree, {idx: Poly(dG, {e: Fraction(1)})})
        theta = pullback(G.unit, Theta)
        shared = (pullback(G.mult, Theta) - pullback(G.pair_first, Theta)
                  - pullback(G.pair_second, Theta))
        defects.append(shared + pullback(src_corner, theta))
        defects.append(shared + pullback(tgt_corner, theta))
    coords = sorted({(oidx, oexp) for D in defects
                     for oidx, c in D.coeffs.items() for oexp in c.terms})
    if not coords:
        return [DifferentialForm(dG, degree, {idx: Poly(dG, {e: Fraction(1)})})
                for idx, e in basis]
    mat = []
    for corner in (0, 1):
        for oidx, oexp in coords:
            row = []
            for j in range(len(basis)):
                c = defects[2 * j + corner].coeffs.get(oidx)
                row.append(c.terms.get(oexp, Fraction(0))
                           if c is not None else Fraction(0))
            mat.append(row)
    out = []
    for vec in kernel_basis(mat):
        coeffs: dict = {}
        for (idx, e), v in zip(basis, vec):
            if v:
                coeffs[idx] = coeffs.get(idx, Poly.zero(dG)) + Poly(dG, {e: v})
        out.append(DifferentialForm(dG, degree, coeffs))
    return out
