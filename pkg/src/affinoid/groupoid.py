"""Polynomial Lie groupoids.

A groupoid lives on polynomially parametrized coordinate spaces: arrows
form R^dim_G, objects R^dim_M, and all structure maps (source, target,
unit, inversion) are polynomial maps.  Multiplication is polynomial on a
parametrized model of the composable-pair space: comp_param maps a
parameter space P onto {(g, h) : src(g) = tgt(h)} inside R^(2 dim_G) and
mult gives the product of the pair at each parameter.  Two further pieces
make every identity in this package a polynomial identity:

* comp_section, a polynomial right inverse of comp_param defined on all
  of R^(2 dim_G).  Composing mult with it extends multiplication to a
  polynomial map mult_pair on the ambient pair space that agrees with the
  groupoid product on composable pairs, which is what unit laws, inverse
  laws and tangent-level products are stated against.
* chain3, a parametrization of composable triples, used for the
  associativity axiom and for the parallelogram model: a triple (a, b, c)
  with matching ends corresponds to the parallelogram tuple
  (inv(b), a, c, a b c).

The splitting matrix trivializes T(R^dim_G) along the units: its first
dim_M columns are the unit embedding of the base frame and the remaining
columns frame the kernel of d(src) at units, i.e. the algebroid bundle A.
Restriction of a field to the units decomposes it in this frame, and
sections of mixed powers of A and T*M are stored in frame components.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Literal, Mapping, Sequence

from .fields import (
    DegreeError,
    DifferentialForm,
    MultiVectorField,
    TensorField,
    eval_mv_point,
    form_to_tensor,
    mv_to_tensor,
    pullback,
    tensor_to_mv,
    wedge,
)
from .linalg import det, kernel_basis, matrix_rank, mat_vec, transpose
from .poly import ArityError, Poly, PolyMap, Rational, jacobian, polymap_compose
from .sampling import RationalSampler

Index = tuple[int, ...]
Side = Literal["left", "right"]


class ComposabilityError(ValueError):
    """Arguments are not composable in the relevant groupoid."""


class StructureError(RuntimeError):
    """An identity that valid input data guarantees failed to hold."""


class SplittingError(ValueError):
    """The splitting matrix is unusable (wrong shape, bad columns, or a
    determinant that cannot be certified nonzero)."""


def _poly_matrix_eval(mat: Sequence[Sequence[Poly]],
                      point: Sequence[Rational]) -> list[list[Fraction]]:
    return [[e.eval_at(point) for e in row] for row in mat]


def _poly_matrix_subs(mat: Sequence[Sequence[Poly]], args: list[Poly],
                      out_vars: int) -> list[list[Poly]]:
    return [[e.subs(args, out_vars=out_vars) for e in row] for row in mat]


@dataclass(eq=False)
class PolyGroupoid:
    """A groupoid with polynomial structure maps; see the module docstring
    for the roles of comp_param, comp_section, chain3 and splitting."""

    dim_G: int
    dim_M: int
    src: PolyMap
    tgt: PolyMap
    unit: PolyMap
    inv: PolyMap
    comp_param: PolyMap
    mult: PolyMap
    comp_section: PolyMap
    chain3: PolyMap
    splitting: list[list[Poly]]
    name: str = ""

    def __post_init__(self):
        dG, dM = self.dim_G, self.dim_M
        if not 0 <= dM <= dG:
            raise ArityError("dim_M must lie between 0 and dim_G")
        expect = [
            (self.src, dG, dM, "src"),
            (self.tgt, dG, dM, "tgt"),
            (self.unit, dM, dG, "unit"),
            (self.inv, dG, dG, "inv"),
            (self.comp_section, 2 * dG, self.comp_param.domain_dim, "comp_section"),
        ]
        for m, dom, cod, nm in expect:
            if m.domain_dim != dom or m.codomain_dim != cod:
                raise ArityError(f"{nm} has shape {m.domain_dim}->{m.codomain_dim}, "
                                 f"expected {dom}->{cod}")
        if self.comp_param.codomain_dim != 2 * dG:
            raise ArityError("comp_param must land in the pair space")
        if self.mult.domain_dim != self.comp_param.domain_dim \
                or self.mult.codomain_dim != dG:
            raise ArityError("mult must map the pair parameter space to arrows")
        if self.chain3.codomain_dim != 3 * dG:
            raise ArityError("chain3 must land in the triple space")
        if len(self.splitting) != dG or any(len(r) != dG for r in self.splitting):
            raise SplittingError("splitting must be a dim_G x dim_G matrix")
        for row in self.splitting:
            for e in row:
                if e.num_vars != dM:
                    raise SplittingError("splitting entries must be base polynomials")

    # -- basic derived data -------------------------------------------------

    @property
    def rank(self) -> int:
        return self.dim_G - self.dim_M

    @cached_property
    def mult_pair(self) -> PolyMap:
        """Multiplication extended polynomially to the ambient pair space."""
        return polymap_compose(self.mult, self.comp_section)

    @cached_property
    def pair_first(self) -> PolyMap:
        return self.comp_param.block(0, self.dim_G)

    @cached_property
    def pair_second(self) -> PolyMap:
        return self.comp_param.block(self.dim_G, self.dim_G)

    @cached_property
    def chain3_blocks(self) -> tuple[PolyMap, PolyMap, PolyMap]:
        dG = self.dim_G
        return (self.chain3.block(0, dG), self.chain3.block(dG, dG),
                self.chain3.block(2 * dG, dG))

    def _pairing(self, f: PolyMap, g: PolyMap) -> PolyMap:
        """(f, g) as a map into the pair space; f, g share a domain."""
        return PolyMap.stack([f, g])

    @cached_property
    def triangle_map(self) -> PolyMap:
        """Parameter space of composable pairs -> (g, h, gh)."""
        return PolyMap.stack([self.pair_first, self.pair_second, self.mult])

    @cached_property
    def parallelogram_map(self) -> PolyMap:
        """Composable triples (a, b, c) -> (inv b, a, c, a b c), which runs
        through {(g, h, l, k) : src g = src h, tgt g = tgt l, k = h g^{-1} l}."""
        a, b, c = self.chain3_blocks
        inv_b = polymap_compose(self.inv, b)
        ab = polymap_compose(self.mult_pair, self._pairing(a, b))
        abc = polymap_compose(self.mult_pair, self._pairing(ab, c))
        return PolyMap.stack([inv_b, a, c, abc])

    # -- jacobians ------------------------------------------------------------

    @cached_property
    def J_src(self) -> list[list[Poly]]:
        return jacobian(self.src)

    @cached_property
    def J_tgt(self) -> list[list[Poly]]:
        return jacobian(self.tgt)

    @cached_property
    def J_unit(self) -> list[list[Poly]]:
        return jacobian(self.unit)

    @cached_property
    def J_inv(self) -> list[list[Poly]]:
        return jacobian(self.inv)

    @cached_property
    def J_mult_pair(self) -> list[list[Poly]]:
        return jacobian(self.mult_pair)

    # -- splitting frame --------------------------------------------------------

    @cached_property
    def splitting_det(self) -> Fraction:
        d = det(self.splitting, Poly.zero(self.dim_M), Poly.one(self.dim_M))
        c = d.constant_value()
        if c is None:
            raise SplittingError("splitting determinant is not constant; "
                                 "cannot certify invertibility over the base")
        if not c:
            raise SplittingError("splitting matrix is singular")
        return c

    @cached_property
    def splitting_inv(self) -> list[list[Poly]]:
        from .linalg import adjugate
        adj = adjugate(self.splitting, Poly.zero(self.dim_M), Poly.one(self.dim_M))
        c = 1 / self.splitting_det
        return [[e * c for e in row] for row in adj]

    def frame_column(self, i: int) -> list[Poly]:
        """Column i of the splitting: base frame for i < dim_M, algebroid
        frame for dim_M <= i < dim_G."""
        return [row[i] for row in self.splitting]

    # -- unit-point substitutions -------------------------------------------------

    @cached_property
    def _unit_comps(self) -> list[Poly]:
        return list(self.unit.components)

    @cached_property
    def _unit_of_src(self) -> list[Poly]:
        return list(polymap_compose(self.unit, self.src).components)

    @cached_property
    def _unit_of_tgt(self) -> list[Poly]:
        return list(polymap_compose(self.unit, self.tgt).components)

    # -- translation frames --------------------------------------------------------

    @cached_property
    def _J_mult_first_at_right(self) -> list[list[Poly]]:
        """d(mult) in the first slot, evaluated at (unit(tgt g), g)."""
        dG = self.dim_G
        args = self._unit_of_tgt + [Poly.variable(dG, i) for i in range(dG)]
        block = [row[:dG] for row in self.J_mult_pair]
        return _poly_matrix_subs(block, args, dG)

    @cached_property
    def _J_mult_second_at_left(self) -> list[list[Poly]]:
        """d(mult) in the second slot, evaluated at (g, unit(src g))."""
        dG = self.dim_G
        args = [Poly.variable(dG, i) for i in range(dG)] + self._unit_of_src
        block = [row[dG:] for row in self.J_mult_pair]
        return _poly_matrix_subs(block, args, dG)

    @cached_property
    def _J_inv_at_src_units(self) -> list[list[Poly]]:
        return _poly_matrix_subs(self.J_inv, self._unit_of_src, self.dim_G)

    @cached_property
    def right_frame_matrix(self) -> list[list[Poly]]:
        """Columns are the right translates of the algebroid frame: column i
        at an arrow g is d(right mult by g) applied to frame i at tgt(g)."""
        dG, dM = self.dim_G, self.dim_M
        tgt_comps = list(self.tgt.components)
        cols = []
        for i in range(dM, dG):
            b = [e.subs(tgt_comps, out_vars=dG) for e in self.frame_column(i)]
            cols.append(mat_vec(self._J_mult_first_at_right, b))
        return transpose(cols)

    @cached_property
    def left_frame_matrix(self) -> list[list[Poly]]:
        """Columns are the left translates of the algebroid frame: column i
        at g is -d(left mult by g) . d(inv) applied to frame i at src(g)."""
        dG, dM = self.dim_G, self.dim_M
        src_comps = list(self.src.components)
        cols = []
        for i in range(dM, dG):
            b = [e.subs(src_comps, out_vars=dG) for e in self.frame_column(i)]
            v = mat_vec(self._J_inv_at_src_units, b)
            w = mat_vec(self._J_mult_second_at_left, v)
            cols.append([-e for e in w])
        return transpose(cols)

    def right_frame_field(self, i: int) -> MultiVectorField:
        """Right-invariant vector field extending algebroid frame i."""
        col = [row[i] for row in self.right_frame_matrix]
        return MultiVectorField.from_vector(col)

    def left_frame_field(self, i: int) -> MultiVectorField:
        col = [row[i] for row in self.left_frame_matrix]
        return MultiVectorField.from_vector(col)

    @cached_property
    def _coordinate_pullbacks(self) -> dict[Side, list[DifferentialForm]]:
        out: dict[Side, list[DifferentialForm]] = {"left": [], "right": []}
        for j in range(self.dim_M):
            dxj = DifferentialForm.coordinate(self.dim_M, j)
            out["right"].append(pullback(self.tgt, dxj))
            out["left"].append(pullback(self.src, dxj))
        return out

    @cached_property
    def algebroid(self) -> "LieAlgebroidData":
        return lie_algebroid(self)

    # -- pointwise helpers ------------------------------------------------------------

    def is_composable(self, g: Sequence[Rational], h: Sequence[Rational]) -> bool:
        return self.src(g) == self.tgt(h)

    def multiply(self, g: Sequence[Rational], h: Sequence[Rational]) -> tuple[Fraction, ...]:
        if not self.is_composable(g, h):
            raise ComposabilityError("arrows are not composable")
        return self.mult_pair(list(g) + list(h))


# -- axiom validation ----------------------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    violations: tuple[str, ...]


def validate_axioms(G: PolyGroupoid) -> AxiomReport:
    """Check the groupoid axioms as exact polynomial identities on the
    parametrized models.  Failures are reported as data."""
    bad: list[str] = []
    dG, dM = G.dim_G, G.dim_M
    ident_G = PolyMap.identity(dG)
    ident_M = PolyMap.identity(dM)

    def eq(name: str, f: PolyMap, g: PolyMap) -> None:
        if f != g:
            bad.append(name)

    eq("src(unit(x)) = x", polymap_compose(G.src, G.unit), ident_M)
    eq("tgt(unit(x)) = x", polymap_compose(G.tgt, G.unit), ident_M)
    eq("src(inv(g)) = tgt(g)", polymap_compose(G.src, G.inv), G.tgt)
    eq("tgt(inv(g)) = src(g)", polymap_compose(G.tgt, G.inv), G.src)
    eq("inv(inv(g)) = g", polymap_compose(G.inv, G.inv), ident_G)

    eq("pairs from comp_param are composable",
       polymap_compose(G.src, G.pair_first), polymap_compose(G.tgt, G.pair_second))
    eq("src(g h) = src(h)",
       polymap_compose(G.src, G.mult), polymap_compose(G.src, G.pair_second))
    eq("tgt(g h) = tgt(g)",
       polymap_compose(G.tgt, G.mult), polymap_compose(G.tgt, G.pair_first))
    eq("mult_pair restricts to mult",
       polymap_compose(G.mult_pair, G.comp_param), G.mult)

    unit_tgt = polymap_compose(G.unit, G.tgt)
    unit_src = polymap_compose(G.unit, G.src)
    eq("unit(tgt(g)) g = g",
       polymap_compose(G.mult_pair, PolyMap.stack([unit_tgt, ident_G])), ident_G)
    eq("g unit(src(g)) = g",
       polymap_compose(G.mult_pair, PolyMap.stack([ident_G, unit_src])), ident_G)
    eq("inv(g) g = unit(src(g))",
       polymap_compose(G.mult_pair, PolyMap.stack([G.inv, ident_G])), unit_src)
    eq("g inv(g) = unit(tgt(g))",
       polymap_compose(G.mult_pair, PolyMap.stack([ident_G, G.inv])), unit_tgt)

    a, b, c = G.chain3_blocks
    eq("chain3 pairs (a, b) are composable",
       polymap_compose(G.src, a), polymap_compose(G.tgt, b))
    eq("chain3 pairs (b, c) are composable",
       polymap_compose(G.src, b), polymap_compose(G.tgt, c))
    ab = polymap_compose(G.mult_pair, PolyMap.stack([a, b]))
    bc = polymap_compose(G.mult_pair, PolyMap.stack([b, c]))
    eq("(a b) c = a (b c)",
       polymap_compose(G.mult_pair, PolyMap.stack([ab, c])),
       polymap_compose(G.mult_pair, PolyMap.stack([a, bc])))

    # splitting: base block is the unit embedding, algebroid block kills d(src)
    for j in range(dM):
        col = G.frame_column(j)
        want = [row[j] for row in G.J_unit]
        if col != want:
            bad.append("splitting base block is the unit frame")
            break
    J_src_at_units = _poly_matrix_subs(G.J_src, G._unit_comps, dM)
    for i in range(dM, dG):
        v = mat_vec(J_src_at_units, G.frame_column(i))
        if any(not e.is_zero for e in v):
            bad.append("splitting algebroid block lies in ker d(src)")
            break
    try:
        G.splitting_det
    except SplittingError as e:
        bad.append(str(e))

    return AxiomReport(ok=not bad, violations=tuple(bad))


# -- algebroid sections -----------------------------------------------------------------


class AlgebroidSection:
    """A section of wedge^p A tensor wedge^q T*M, stored in splitting-frame
    components over the base: contravariant indices run over the algebroid
    frame 0..rank-1, covariant indices over base coordinates 0..dim_M-1."""

    __slots__ = ("groupoid", "p", "q", "coeffs")

    def __init__(self, groupoid: PolyGroupoid, p: int, q: int,
                 coeffs: Mapping[tuple[Index, Index], Poly] | None = None):
        if p < 0 or q < 0:
            raise DegreeError("negative degree")
        clean: dict[tuple[Index, Index], Poly] = {}
        for (up, down), poly in (coeffs or {}).items():
            up, down = tuple(up), tuple(down)
            if len(up) != p or len(down) != q:
                raise DegreeError(f"index ({up}, {down}) does not match ({p}, {q})")
            if any(not 0 <= i < groupoid.rank for i in up) \
                    or any(a >= b for a, b in zip(up, up[1:])):
                raise ArityError(f"bad frame index {up}")
            if any(not 0 <= j < groupoid.dim_M for j in down) \
                    or any(a >= b for a, b in zip(down, down[1:])):
                raise ArityError(f"bad base index {down}")
            if poly.num_vars != groupoid.dim_M:
                raise ArityError("section coefficients live on the base")
            if not poly.is_zero:
                clean[(up, down)] = poly
        object.__setattr__(self, "groupoid", groupoid)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("AlgebroidSection is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebroidSection):
            return NotImplemented
        return (self.groupoid is other.groupoid and self.p == other.p
                and self.q == other.q and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return (f"AlgebroidSection(p={self.p}, q={self.q}, "
                f"{len(self.coeffs)} terms)")

    def _with_coeffs(self, coeffs) -> AlgebroidSection:
        out = AlgebroidSection.__new__(AlgebroidSection)
        object.__setattr__(out, "groupoid", self.groupoid)
        object.__setattr__(out, "p", self.p)
        object.__setattr__(out, "q", self.q)
        object.__setattr__(out, "coeffs", coeffs)
        return out

    def __add__(self, other: AlgebroidSection) -> AlgebroidSection:
        if self.groupoid is not other.groupoid or (self.p, self.q) != (other.p, other.q):
            raise ArityError("section shapes disagree")
        coeffs = dict(self.coeffs)
        for k, p in other.coeffs.items():
            s = coeffs.get(k)
            s = p if s is None else s + p
            if s.is_zero:
                coeffs.pop(k, None)
            else:
                coeffs[k] = s
        return self._with_coeffs(coeffs)

    def __neg__(self) -> AlgebroidSection:
        return self._with_coeffs({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: AlgebroidSection) -> AlgebroidSection:
        return self + (-other)

    def scale(self, c: Rational) -> AlgebroidSection:
        if not c:
            return self._with_coeffs({})
        return self._with_coeffs({k: p * c for k, p in self.coeffs.items()})

    @staticmethod
    def zero(G: PolyGroupoid, p: int, q: int) -> AlgebroidSection:
        return AlgebroidSection(G, p, q)

    @staticmethod
    def frame(G: PolyGroupoid, i: int) -> AlgebroidSection:
        """The i-th algebroid frame section."""
        return AlgebroidSection(G, 1, 0, {((i,), ()): Poly.one(G.dim_M)})

    @staticmethod
    def from_function(G: PolyGroupoid, f: Poly) -> AlgebroidSection:
        return AlgebroidSection(G, 0, 0, {((), ()): f})

    def wedge_section(self, other: AlgebroidSection) -> AlgebroidSection:
        """Wedge in both the frame and the base factors."""
        from .fields import merge_indices
        if self.groupoid is not other.groupoid:
            raise ArityError("sections live on different groupoids")
        if self.q and other.q:
            # the covariant legs anticommute past the contravariant ones
            # only through the sign computed below; mixed wedges are only
            # needed with at most one covariant factor in this package
            raise DegreeError("wedge of two covariant sections is not used")
        out: dict[tuple[Index, Index], Poly] = {}
        for (ua, da), ca in self.coeffs.items():
            for (ub, db), cb in other.coeffs.items():
                m_up = merge_indices(ua, ub)
                if m_up is None:
                    continue
                m_dn = merge_indices(da, db)
                if m_dn is None:
                    continue
                up, s1 = m_up
                dn, s2 = m_dn
                term = ca * cb * (s1 * s2)
                key = (up, dn)
                s = out.get(key)
                s = term if s is None else s + term
                if s.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = s
        return AlgebroidSection(self.groupoid, self.p + other.p, self.q + other.q, out)


# -- translation of sections to invariant fields ----------------------------------------


def translate_section(G: PolyGroupoid, sec: AlgebroidSection, side: Side) -> TensorField:
    """Extend a section over the base to a tensor field on the arrow space:
    frame legs become translated frame fields (right translation, or left
    translation through inversion), covariant legs pull back along tgt
    (right) or src (left)."""
    if sec.groupoid is not G:
        raise ArityError("section belongs to a different groupoid")
    dG = G.dim_G
    base_map = G.tgt if side == "right" else G.src
    base_comps = list(base_map.components)
    frame_fields = [G.right_frame_field(i) if side == "right" else G.left_frame_field(i)
                    for i in range(G.rank)]
    one_forms = G._coordinate_pullbacks[side]
    acc = TensorField.zero(dG, sec.p, sec.q)
    for (up, down), c in sec.coeffs.items():
        c_up = c.subs(base_comps, out_vars=dG)
        mv = MultiVectorField(dG, 0, {(): c_up})
        for i in up:
            mv = wedge(mv, frame_fields[i])
        fm = DifferentialForm(dG, 0, {(): Poly.one(dG)})
        for j in down:
            fm = wedge(fm, one_forms[j])
        term: dict[tuple[Index, Index], Poly] = {}
        for iu, cu in mv.coeffs.items():
            for idn, cd in fm.coeffs.items():
                term[(iu, idn)] = cu * cd
        acc = acc + TensorField(dG, sec.p, sec.q, term)
    return acc


def translate_right(G: PolyGroupoid, sec: AlgebroidSection) -> TensorField:
    return translate_section(G, sec, "right")


def translate_left(G: PolyGroupoid, sec: AlgebroidSection) -> TensorField:
    return translate_section(G, sec, "left")


def translate_right_mv(G: PolyGroupoid, sec: AlgebroidSection) -> MultiVectorField:
    return tensor_to_mv(translate_section(G, sec, "right"))


def translate_left_mv(G: PolyGroupoid, sec: AlgebroidSection) -> MultiVectorField:
    return tensor_to_mv(translate_section(G, sec, "left"))


# -- restriction to units ------------------------------------------------------------------


def _as_tensor(F) -> TensorField:
    if isinstance(F, MultiVectorField):
        return mv_to_tensor(F)
    if isinstance(F, DifferentialForm):
        return form_to_tensor(F)
    if isinstance(F, TensorField):
        return F
    raise ArityError(f"not a field: {type(F).__name__}")


def unit_restriction_in_frame(G: PolyGroupoid, F) -> dict[tuple[Index, Index], Poly]:
    """Restrict a field to the units and express it in the splitting frame.
    Keys are (contravariant frame index, covariant coframe index) over all
    of 0..dim_G-1; the algebroid block sits at indices >= dim_M."""
    T = _as_tensor(F)
    if T.space_dim != G.dim_G:
        raise ArityError("field does not live on the arrow space")
    dM = G.dim_M
    unit_comps = G._unit_comps
    restricted: dict[tuple[Index, Index], Poly] = {}
    for key, c in T.coeffs.items():
        r = c.subs(unit_comps, out_vars=dM)
        if not r.is_zero:
            restricted[key] = r
    if not restricted:
        return {}
    Sinv = G.splitting_inv
    S = G.splitting
    zero, one = Poly.zero(dM), Poly.one(dM)
    p, q = T.p, T.q
    out: dict[tuple[Index, Index], Poly] = {}
    up_targets = list(itertools.combinations(range(G.dim_G), p))
    dn_targets = list(itertools.combinations(range(G.dim_G), q))
    for (up, down), c in restricted.items():
        for K in up_targets:
            m1 = det([[Sinv[k][i] for i in up] for k in K], zero, one) if p else one
            if m1.is_zero:
                continue
            for L in dn_targets:
                m2 = det([[S[j][l] for l in L] for j in down], zero, one) if q else one
                if m2.is_zero:
                    continue
                term = c * m1 * m2
                key = (K, L)
                s = out.get(key)
                s = term if s is None else s + term
                if s.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = s
    return out


def restrict_project(G: PolyGroupoid, F, p: int | None = None,
                     q: int | None = None) -> AlgebroidSection:
    """Project the unit restriction onto its pure block: wedge^p of the
    algebroid frame tensor wedge^q of the base coframe."""
    T = _as_tensor(F)
    if p is None:
        p = T.p
    if q is None:
        q = T.q
    if (T.p, T.q) != (p, q):
        raise DegreeError(f"field has shape ({T.p}, {T.q}), expected ({p}, {q})")
    dM = G.dim_M
    frame = unit_restriction_in_frame(G, T)
    coeffs: dict[tuple[Index, Index], Poly] = {}
    for (K, L), c in frame.items():
        if all(k >= dM for k in K) and all(l < dM for l in L):
            coeffs[(tuple(k - dM for k in K), L)] = c
    return AlgebroidSection(G, p, q, coeffs)


def restriction_residue_is_zero(G: PolyGroupoid, F) -> bool:
    """True when the unit restriction is supported on the pure block only."""
    dM = G.dim_M
    frame = unit_restriction_in_frame(G, F)
    for (K, L), c in frame.items():
        if not (all(k >= dM for k in K) and all(l < dM for l in L)):
            if not c.is_zero:
                return False
    return True


def is_invariant(G: PolyGroupoid, F, side: Side) -> bool:
    """A field equals the translation of its projected unit restriction.
    Right translates of multivectors restrict purely to the algebroid
    block, so that side also demands a residue-free restriction; left
    translates pick up base-frame terms through the anchor at units and
    carry residue by design."""
    T = _as_tensor(F)
    sec = restrict_project(G, T)
    if translate_section(G, sec, side) != T:
        return False
    if side == "right" and T.q == 0:
        return restriction_residue_is_zero(G, T)
    return True


def is_right_invariant(G: PolyGroupoid, F) -> bool:
    return is_invariant(G, F, "right")


def is_left_invariant(G: PolyGroupoid, F) -> bool:
    return is_invariant(G, F, "left")


# -- Lie algebroid ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LieAlgebroidData:
    """Anchor matrix (rows: base coordinates, columns: frame sections) and
    structure functions c[i][j] with bracket(frame_i, frame_j) =
    sum_l c[(i, j)][l] frame_l, all polynomials over the base."""
    groupoid: PolyGroupoid
    rank: int
    anchor: tuple[tuple[Poly, ...], ...]
    structure: dict[tuple[int, int], tuple[Poly, ...]]

    def anchor_of_section(self, sec: AlgebroidSection) -> MultiVectorField:
        """The base vector field rho(u) of a (1, 0) section."""
        if sec.p != 1 or sec.q != 0:
            raise DegreeError("anchor applies to (1, 0) sections")
        dM = self.groupoid.dim_M
        comps = [Poly.zero(dM) for _ in range(dM)]
        for ((i,), _), c in sec.coeffs.items():
            for r in range(dM):
                comps[r] = comps[r] + self.anchor[r][i] * c
        return MultiVectorField.from_vector(comps)


def lie_algebroid(G: PolyGroupoid) -> LieAlgebroidData:
    """Anchor: d(tgt) applied to the algebroid frame along units.  Bracket:
    bracket the right-invariant extensions on the arrow space and read the
    result back at the units."""
    dM = G.dim_M
    J_tgt_units = _poly_matrix_subs(G.J_tgt, G._unit_comps, dM)
    anchor_cols = [mat_vec(J_tgt_units, G.frame_column(i))
                   for i in range(dM, G.dim_G)]
    anchor = tuple(tuple(anchor_cols[i][r] for i in range(G.rank))
                   for r in range(dM))
    structure: dict[tuple[int, int], tuple[Poly, ...]] = {}
    from .fields import schouten_bracket
    for i in range(G.rank):
        for j in range(i + 1, G.rank):
            w = schouten_bracket(G.right_frame_field(i), G.right_frame_field(j))
            if not is_right_invariant(G, w):
                raise StructureError(
                    "bracket of right-invariant frame fields is not right-invariant")
            sec = restrict_project(G, w, 1, 0)
            comps = [Poly.zero(dM)] * G.rank
            for ((l,), _), c in sec.coeffs.items():
                comps[l] = c
            structure[(i, j)] = tuple(comps)
    return LieAlgebroidData(groupoid=G, rank=G.rank, anchor=anchor,
                            structure=structure)


def algebroid_schouten(G: PolyGroupoid, a: AlgebroidSection,
                       b: AlgebroidSection) -> AlgebroidSection:
    """Graded bracket on sections of wedge A, computed through the
    right-invariant extensions."""
    if a.q or b.q:
        raise DegreeError("bracket applies to purely contravariant sections")
    from .fields import schouten_bracket
    w = schouten_bracket(translate_right_mv(G, a), translate_right_mv(G, b))
    if not is_right_invariant(G, w):
        raise StructureError("bracket of invariant extensions lost invariance")
    return restrict_project(G, w, a.p + b.p - 1, 0)


# -- cotangent groupoid, pointwise -----------------------------------------------------------


def _left_frame_at(G: PolyGroupoid, g: Sequence[Rational]) -> list[list[Fraction]]:
    return _poly_matrix_eval(G.left_frame_matrix, g)


def _right_frame_at(G: PolyGroupoid, g: Sequence[Rational]) -> list[list[Fraction]]:
    return _poly_matrix_eval(G.right_frame_matrix, g)


def cot_source(G: PolyGroupoid, g: Sequence[Rational],
               xi: Sequence[Rational]) -> tuple[Fraction, ...]:
    """Source of a covector at g: pair xi against the left frame translates."""
    L = _left_frame_at(G, g)
    xi = [Fraction(v) for v in xi]
    return tuple(sum((xi[r] * L[r][i] for r in range(G.dim_G)), Fraction(0))
                 for i in range(G.rank))

def cot_target(G: PolyGroupoid, g: Sequence[Rational],
               xi: Sequence[Rational]) -> tuple[Fraction, ...]:
    """Target of a covector at g: pair xi against the right frame translates."""
    R = _right_frame_at(G, g)
    xi = [Fraction(v) for v in xi]
    return tuple(sum((xi[r] * R[r][i] for r in range(G.dim_G)), Fraction(0))
                 for i in range(G.rank))


def unit_covector(G: PolyGroupoid, x: Sequence[Rational],
                  alpha: Sequence[Rational]) -> tuple[Fraction, ...]:
    """The covector at unit(x) that kills the base frame and restricts to
    alpha on the algebroid frame."""
    if len(alpha) != G.rank:
        raise ArityError(f"need {G.rank} frame components")
    Sinv = _poly_matrix_eval(G.splitting_inv, x)
    dG, dM = G.dim_G, G.dim_M
    out = [Fraction(0)] * dG
    for i, a in enumerate(alpha):
        a = Fraction(a)
        if a:
            row = Sinv[dM + i]
            for c in range(dG):
                out[c] += a * row[c]
    return tuple(out)


def tangent_composable_basis(G: PolyGroupoid, g: Sequence[Rational],
                             h: Sequence[Rational]) -> list[list[Fraction]]:
    """Basis of {(X, Y) : d(src)_g X = d(tgt)_h Y}."""
    Js = [[e.eval_at(g) for e in row] for row in G.J_src]
    Jt = [[e.eval_at(h) for e in row] for row in G.J_tgt]
    rows = [Js[r] + [-v for v in Jt[r]] for r in range(G.dim_M)]
    if not rows:
        n = 2 * G.dim_G
        return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    return kernel_basis(rows)


def covector_composable_basis(G: PolyGroupoid, g: Sequence[Rational],
                              h: Sequence[Rational]) -> list[list[Fraction]]:
    """Basis of {(xi, eta) : cot_source(g, xi) = cot_target(h, eta)}."""
    L = _left_frame_at(G, g)
    R = _right_frame_at(G, h)
    dG = G.dim_G
    rows = []
    for i in range(G.rank):
        rows.append([L[r][i] for r in range(dG)] + [-R[r][i] for r in range(dG)])
    if not rows:
        n = 2 * dG
        return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    return kernel_basis(rows)


class CotangentOps:
    """Pointwise cotangent-groupoid operations bound to a composable pair."""

    def __init__(self, G: PolyGroupoid, g: Sequence[Rational], h: Sequence[Rational]):
        if not G.is_composable(g, h):
            raise ComposabilityError("base arrows are not composable")
        self.G = G
        self.g = [Fraction(v) for v in g]
        self.h = [Fraction(v) for v in h]
        self.gh = list(G.multiply(self.g, self.h))
        self._J_mult = [[e.eval_at(self.g + self.h) for e in row] for row in G.J_mult_pair]
        self._tangent_basis = tangent_composable_basis(G, self.g, self.h)

    def source_at_first(self, xi: Sequence[Rational]) -> tuple[Fraction, ...]:
        return cot_source(self.G, self.g, xi)

    def target_at_second(self, eta: Sequence[Rational]) -> tuple[Fraction, ...]:
        return cot_target(self.G, self.h, eta)

    def tangent_multiply(self, X: Sequence[Rational],
                         Y: Sequence[Rational]) -> list[Fraction]:
        """Product of composable tangent vectors through d(mult)."""
        Js = [[e.eval_at(self.g) for e in row] for row in self.G.J_src]
        Jt = [[e.eval_at(self.h) for e in row] for row in self.G.J_tgt]
        if mat_vec(Js, [Fraction(v) for v in X]) != mat_vec(Jt, [Fraction(v) for v in Y]):
            raise ComposabilityError("tangent vectors are not composable")
        vec = [Fraction(v) for v in X] + [Fraction(v) for v in Y]
        return mat_vec(self._J_mult, vec)

    def multiply(self, xi: Sequence[Rational],
                 eta: Sequence[Rational]) -> tuple[Fraction, ...]:
        """The unique covector zeta at gh with zeta(X . Y) = xi(X) + eta(Y)
        for all composable (X, Y)."""
        xi = [Fraction(v) for v in xi]
        eta = [Fraction(v) for v in eta]
        if self.source_at_first(xi) != self.target_at_second(eta):
            raise ComposabilityError("covectors are not composable")
        dG = self.G.dim_G
        rows = []
        rhs = []
        for vec in self._tangent_basis:
            X, Y = vec[:dG], vec[dG:]
            rows.append(mat_vec(self._J_mult, vec))
            rhs.append(sum((xi[i] * X[i] for i in range(dG)), Fraction(0))
                       + sum((eta[i] * Y[i] for i in range(dG)), Fraction(0)))
        from .linalg import linsolve, NoSolution
        sol = linsolve(rows, rhs)
        if isinstance(sol, NoSolution):
            raise StructureError("no covector implements the pairing; "
                                 "multiplication is not a submersion here")
        if sol.kernel:
            raise StructureError("covector product is not unique; "
                                 "multiplication is not a submersion here")
        return tuple(sol.particular)


def cotangent_ops_at(G: PolyGroupoid, g: Sequence[Rational],
                     h: Sequence[Rational]) -> CotangentOps:
    return CotangentOps(G, g, h)


# -- coisotropy oracle -----------------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    passed: bool
    witness: dict | None
    seed: int
    samples: int

    def __bool__(self) -> bool:
        return self.passed


def coisotropy_oracle(G: PolyGroupoid, P: MultiVectorField,
                      which: Literal["triangles", "parallelograms"],
                      seed: int = 0, samples: int = 25) -> OracleResult:
    """Sample rational points on the graph submanifold (triangles of
    composable pairs, or parallelograms built from composable triples),
    compute an exact conormal basis at each, and test that the signed
    block sum of P kills every k-tuple of conormal covectors.

    Triangles carry P + P + (-1)^(k+1) P on (g, h, gh); parallelograms
    carry P + (-1)^(k+1) P + (-1)^(k+1) P + P on (g, h, l, h g^{-1} l)."""
    k = P.degree
    if P.space_dim != G.dim_G:
        raise ArityError("field does not live on the arrow space")
    if which == "triangles":
        graph = G.triangle_map
        sign_flip = [False, False, k % 2 == 0]
    elif which == "parallelograms":
        graph = G.parallelogram_map
        sign_flip = [False, k % 2 == 0, k % 2 == 0, False]
    else:
        raise ValueError(f"unknown submanifold {which!r}")
    dG = G.dim_G
    blocks = len(sign_flip)
    sampler = RationalSampler(seed)
    J_sym = jacobian(graph)
    for s_idx in range(samples):
        pt = sampler.point(graph.domain_dim)
        J = [[e.eval_at(pt) for e in row] for row in J_sym]
        if matrix_rank(J) != graph.domain_dim:
            raise StructureError("graph parametrization is singular at a sample")
        conormals = kernel_basis(transpose(J))
        if len(conormals) < k:
            continue
        image = graph(pt)
        points = [image[b * dG:(b + 1) * dG] for b in range(blocks)]
        vals = []
        for b in range(blocks):
            at = {idx: c.eval_at(points[b]) for idx, c in P.coeffs.items()}
            if sign_flip[b]:
                at = {idx: -v for idx, v in at.items()}
            vals.append(at)
        for combo in itertools.combinations(range(len(conormals)), k):
            total = Fraction(0)
            for b in range(blocks):
                covs = [conormals[c][b * dG:(b + 1) * dG] for c in combo]
                total += eval_mv_point(vals[b], covs)
            if total:
                witness = {
                    "sample_index": s_idx,
                    "parameter_point": [str(v) for v in pt],
                    "conormal_tuple": list(combo),
                    "value": str(total),
                }
                return OracleResult(False, witness, seed, samples)
    return OracleResult(True, None, seed, samples)
