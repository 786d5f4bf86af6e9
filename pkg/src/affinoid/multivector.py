"""Affine and multiplicative multivector fields on a polynomial groupoid.

An affine k-vector field restricts over the units to a section pi of
wedge^k A, and subtracting the right or left translate of pi yields two
multiplicative fields Pi_r and Pi_l.  Affine fields are the arrows of a
groupoid whose objects are the multiplicative fields (source Pi_r,
target Pi_l); the Schouten bracket is compatible with that composition,
and every affine field induces a degree-k differential on the algebroid
of the groupoid.  For degree 2 the Poisson condition reduces to an exact
obstruction section once Pi_r is Poisson."""

from __future__ import annotations

from .fields import (
    DegreeError,
    MultiVectorField,
    interior_product,
    schouten_bracket,
)
from .groupoid import (
    AlgebroidSection,
    ComposabilityError,
    LieAlgebroidData,
    OracleResult,
    PolyGroupoid,
    StructureError,
    algebroid_schouten,
    coisotropy_oracle,
    is_left_invariant,
    is_right_invariant,
    restrict_project,
    translate_left_mv,
    translate_right_mv,
)
from .poly import ArityError, Poly


def _check_mv(G: PolyGroupoid, Pi: MultiVectorField) -> None:
    if not isinstance(Pi, MultiVectorField):
        raise ArityError(f"expected a multivector field, got {type(Pi).__name__}")
    if Pi.space_dim != G.dim_G:
        raise ArityError("field does not live on the arrow space")
    if Pi.degree < 1:
        raise DegreeError("degree-0 fields are handled by the tensor layer")


def is_affine_mv(G: PolyGroupoid, Pi: MultiVectorField) -> bool:
    """Exact affineness test: the bracket with every right-translated
    frame field is right-invariant, and so is the contraction with every
    coordinate one-form pulled back along the target."""
    _check_mv(G, Pi)
    for i in range(G.rank):
        if not is_right_invariant(G, schouten_bracket(Pi, G.right_frame_field(i))):
            return False
    for form in G._coordinate_pullbacks["right"]:
        if not is_right_invariant(G, interior_product(form, Pi)):
            return False
    return True


def is_multiplicative_mv(G: PolyGroupoid, Pi: MultiVectorField) -> bool:
    """Exact multiplicativity test: affine with vanishing unit restriction."""
    _check_mv(G, Pi)
    if not is_affine_mv(G, Pi):
        return False
    return restrict_project(G, Pi).is_zero


def affine_mv_oracle(G: PolyGroupoid, Pi: MultiVectorField,
                     seed: int = 0, samples: int = 25) -> OracleResult:
    """Independent sampled check of affineness via parallelogram coisotropy."""
    _check_mv(G, Pi)
    return coisotropy_oracle(G, Pi, "parallelograms", seed=seed, samples=samples)


def multiplicative_mv_oracle(G: PolyGroupoid, Pi: MultiVectorField,
                             seed: int = 0, samples: int = 25) -> OracleResult:
    """Independent sampled check of multiplicativity via triangle coisotropy."""
    _check_mv(G, Pi)
    return coisotropy_oracle(G, Pi, "triangles", seed=seed, samples=samples)


class AffineMV:
    """An affine multivector field bundled with its unit-restriction
    section pi and the multiplicative fields Pi_r = Pi - (right translate
    of pi) and Pi_l = Pi - (left translate of pi).  Construction fails on
    a field that is not affine."""

    __slots__ = ("parent", "Pi", "pi", "Pi_r", "Pi_l")

    def __init__(self, parent: PolyGroupoid, Pi: MultiVectorField):
        if not is_affine_mv(parent, Pi):
            raise StructureError("field is not affine over this groupoid")
        pi = restrict_project(parent, Pi)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "Pi", Pi)
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "Pi_r", Pi - translate_right_mv(parent, pi))
        object.__setattr__(self, "Pi_l", Pi - translate_left_mv(parent, pi))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("AffineMV is immutable")

    @property
    def degree(self) -> int:
        return self.Pi.degree

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineMV):
            return NotImplemented
        return self.parent is other.parent and self.Pi == other.Pi

    def __repr__(self) -> str:
        return f"AffineMV(degree={self.degree}, {len(self.Pi.coeffs)} terms)"

    def __add__(self, other: AffineMV) -> AffineMV:
        if self.parent is not other.parent:
            raise ArityError("operands live on different groupoids")
        return AffineMV(self.parent, self.Pi + other.Pi)

    def __sub__(self, other: AffineMV) -> AffineMV:
        if self.parent is not other.parent:
            raise ArityError("operands live on different groupoids")
        return AffineMV(self.parent, self.Pi - other.Pi)

    def scale(self, c) -> AffineMV:
        return AffineMV(self.parent, self.Pi.scale(c))


def mv_source_target(P: AffineMV) -> tuple[MultiVectorField, MultiVectorField]:
    """The two multiplicative fields an affine field decomposes into."""
    return P.Pi_r, P.Pi_l


def mv_compose(P: AffineMV, Q: AffineMV) -> AffineMV:
    """Groupoid composition P * Q = P.Pi + (left translate of Q.pi),
    defined when the source of P equals the target of Q."""
    if P.parent is not Q.parent:
        raise ArityError("operands live on different groupoids")
    if P.Pi_r != Q.Pi_l:
        raise ComposabilityError("source of the first field is not the "
                                 "target of the second")
    return AffineMV(P.parent, P.Pi + translate_left_mv(P.parent, Q.pi))


def mv_inverse(P: AffineMV) -> AffineMV:
    """Inverse arrow: subtract both translates of the restriction."""
    G = P.parent
    return AffineMV(G, P.Pi - translate_right_mv(G, P.pi)
                    - translate_left_mv(G, P.pi))


def lie2_functoriality_check(P1: AffineMV, P1p: AffineMV,
                             P2: AffineMV, P2p: AffineMV) -> bool:
    """Whether the Schouten bracket commutes with composition on the
    composable pairs (P1, P1p) and (P2, P2p): bracketing the composites
    equals composing the brackets."""
    lhs = schouten_bracket(mv_compose(P1, P1p).Pi, mv_compose(P2, P2p).Pi)
    G = P1.parent
    b = AffineMV(G, schouten_bracket(P1.Pi, P2.Pi))
    bp = AffineMV(G, schouten_bracket(P1p.Pi, P2p.Pi))
    try:
        rhs = mv_compose(b, bp).Pi
    except ComposabilityError:
        return False
    return lhs == rhs


class KDifferential:
    """The degree-k differential induced on the algebroid by an affine
    field: bracket with the right translate of a section (a base function
    counts as a degree-0 section) and read the result back at the units.
    Tables over the base coordinates and the frame are precomputed."""

    def __init__(self, algebroid: LieAlgebroidData, degree: int,
                 field: MultiVectorField):
        self.algebroid = algebroid
        self.degree = degree
        self.field = field
        G = algebroid.groupoid
        self.delta0_coordinates = tuple(
            self.delta0(Poly.variable(G.dim_M, j)) for j in range(G.dim_M))
        self.delta1_frame = tuple(
            self.delta1(AlgebroidSection.frame(G, i)) for i in range(G.rank))

    def apply(self, sec: AlgebroidSection) -> AlgebroidSection:
        """delta on a section of any wedge degree."""
        G = self.algebroid.groupoid
        if sec.q:
            raise DegreeError("the differential applies to contravariant sections")
        w = schouten_bracket(self.field, translate_right_mv(G, sec))
        if not is_right_invariant(G, w):
            raise StructureError("bracket with a right translate is not "
                                 "right-invariant; the field is not affine")
        return restrict_project(G, w, self.degree + sec.p - 1, 0)

    def delta0(self, f: Poly) -> AlgebroidSection:
        """delta on a base function, landing in degree k - 1."""
        G = self.algebroid.groupoid
        return self.apply(AlgebroidSection.from_function(G, f))

    def delta1(self, sec: AlgebroidSection) -> AlgebroidSection:
        """delta on a (1, 0) section, landing in degree k."""
        if sec.p != 1:
            raise DegreeError("delta1 applies to (1, 0) sections")
        return self.apply(sec)


def k_differential_of(P: AffineMV) -> KDifferential:
    return KDifferential(P.parent.algebroid, P.degree, P.Pi)


def decomposition_iso_check(P: AffineMV, Q: AffineMV) -> bool:
    """Component identity tying the bracket of two affine fields to the
    induced differentials: the pure algebroid block of [P, Q] over the
    units equals delta_P(Q.pi) - (-1)^((k-1)(l-1)) delta_Q(P.pi)
    - [P.pi, Q.pi].  The middle sign is forced by specializing both
    fields to right translates; it flips the usual statement on mixed
    degree parity."""
    if P.parent is not Q.parent:
        raise ArityError("operands live on different groupoids")
    G = P.parent
    k, l = P.degree, Q.degree
    lhs = restrict_project(G, schouten_bracket(P.Pi, Q.Pi), k + l - 1, 0)
    dP = k_differential_of(P)
    dQ = k_differential_of(Q)
    rhs = (dP.apply(Q.pi) - dQ.apply(P.pi).scale((-1) ** ((k - 1) * (l - 1)))
           - algebroid_schouten(G, P.pi, Q.pi))
    return lhs == rhs


def poisson_checks(P: AffineMV) -> dict:
    """Poisson analysis of an affine bivector field.  Reports whether the
    field and its multiplicative parts are Poisson, whether the
    self-bracket is right/left-invariant (which must match Pi_r/Pi_l
    being Poisson), the obstruction section 2 delta_{Pi_r}(pi) + [pi, pi]
    (zero iff Poisson, once Pi_r is), and whether the inverse arrow stays
    Poisson."""
    if P.degree != 2:
        raise DegreeError("Poisson analysis applies to bivector fields")
    G = P.parent
    B = schouten_bracket(P.Pi, P.Pi)
    Br = schouten_bracket(P.Pi_r, P.Pi_r)
    Bl = schouten_bracket(P.Pi_l, P.Pi_l)
    report = {
        "is_poisson": B.is_zero,
        "Pr_is_poisson": Br.is_zero,
        "Pl_is_poisson": Bl.is_zero,
        "bracket_right_invariant": is_right_invariant(G, B),
        "bracket_left_invariant": is_left_invariant(G, B),
    }
    report["clause1_right_ok"] = \
        report["bracket_right_invariant"] == report["Pr_is_poisson"]
    report["clause1_left_ok"] = \
        report["bracket_left_invariant"] == report["Pl_is_poisson"]
    dPr = KDifferential(G.algebroid, 2, P.Pi_r)
    obstruction = dPr.apply(P.pi).scale(2) + algebroid_schouten(G, P.pi, P.pi)
    report["obstruction"] = obstruction
    report["obstruction_is_zero"] = obstruction.is_zero
    report["clause2_ok"] = (report["is_poisson"] == obstruction.is_zero) \
        if report["Pr_is_poisson"] else None
    if report["is_poisson"]:
        Q = mv_inverse(P)
        report["inverse_is_poisson"] = schouten_bracket(Q.Pi, Q.Pi).is_zero
    else:
        report["inverse_is_poisson"] = None
    return report
