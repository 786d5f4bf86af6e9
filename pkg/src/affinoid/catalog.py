"""Built-in polynomial groupoids and their fixture batteries.

make_pair(n) is the pair groupoid on R^n, make_abelian(n) the additive
group R^n over a point, make_heisenberg() a three-dimensional nilpotent
group whose multiplication and inversion are polynomial, and
make_product_pair_group(n) the componentwise product of the first and
third.  product_groupoid assembles any two groupoids blockwise, with
coordinates ordered (arrows of the first, arrows of the second) and base
coordinates likewise.

Each catalog entry carries named fields with frozen affine and
multiplicative verdicts; the test suite reproduces every verdict through
both the structural predicates and the sampling oracles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import DifferentialForm, MultiVectorField, TensorField, pullback
from .groupoid import (
    AlgebroidSection,
    PolyGroupoid,
    translate_left,
    translate_left_mv,
    translate_right,
    translate_right_mv,
)
from .poly import ArityError, Poly, PolyMap, polymap_compose


def _project(total: int, idx: list[int]) -> PolyMap:
    return PolyMap(total, [Poly.variable(total, i) for i in idx])


def make_pair(n: int) -> PolyGroupoid:
    """Pair groupoid on R^n: the arrow (x, y) runs from y to x and
    (x, y) (y, z) = (x, z)."""
    if n < 1:
        raise ArityError("dimension must be positive")
    dG = 2 * n

    def seg(total: int, start: int) -> list[Poly]:
        return [Poly.variable(total, start + i) for i in range(n)]

    zero_b, one_b = Poly.zero(n), Poly.one(n)
    splitting = [[one_b if (r % n == c % n and (c < n or r < n)) else zero_b
                  for c in range(dG)] for r in range(dG)]
    return PolyGroupoid(
        dim_G=dG,
        dim_M=n,
        src=PolyMap(dG, seg(dG, n)),
        tgt=PolyMap(dG, seg(dG, 0)),
        unit=PolyMap(n, seg(n, 0) + seg(n, 0)),
        inv=PolyMap(dG, seg(dG, n) + seg(dG, 0)),
        comp_param=PolyMap(3 * n, seg(3 * n, 0) + seg(3 * n, n)
                           + seg(3 * n, n) + seg(3 * n, 2 * n)),
        mult=PolyMap(3 * n, seg(3 * n, 0) + seg(3 * n, 2 * n)),
        comp_section=PolyMap(4 * n, seg(4 * n, 0) + seg(4 * n, n)
                             + seg(4 * n, 3 * n)),
        chain3=PolyMap(4 * n, seg(4 * n, 0) + seg(4 * n, n) + seg(4 * n, n)
                       + seg(4 * n, 2 * n) + seg(4 * n, 2 * n)
                       + seg(4 * n, 3 * n)),
        splitting=splitting,
        name=f"pair({n})",
    )


def make_abelian(n: int) -> PolyGroupoid:
    """The abelian group R^n under addition, over a zero-dimensional base."""
    if n < 1:
        raise ArityError("dimension must be positive")
    add = PolyMap(2 * n, [Poly.variable(2 * n, i) + Poly.variable(2 * n, n + i)
                          for i in range(n)])
    zero0, one0 = Poly.zero(0), Poly.one(0)
    return PolyGroupoid(
        dim_G=n,
        dim_M=0,
        src=PolyMap(n, []),
        tgt=PolyMap(n, []),
        unit=PolyMap(0, [Poly.zero(0) for _ in range(n)]),
        inv=PolyMap(n, [-Poly.variable(n, i) for i in range(n)]),
        comp_param=PolyMap.identity(2 * n),
        mult=add,
        comp_section=PolyMap.identity(2 * n),
        chain3=PolyMap.identity(3 * n),
        splitting=[[one0 if r == c else zero0 for c in range(n)]
                   for r in range(n)],
        name=f"abelian({n})",
    )


def make_heisenberg() -> PolyGroupoid:
    """Nilpotent group on coordinates (a, b, c) with
    (a, b, c) (a', b', c') = (a + a', b + b', c + c' + a b')."""
    v = [Poly.variable(6, i) for i in range(6)]
    mult = PolyMap(6, [v[0] + v[3], v[1] + v[4], v[2] + v[5] + v[0] * v[4]])
    a, b, c = (Poly.variable(3, i) for i in range(3))
    zero0, one0 = Poly.zero(0), Poly.one(0)
    return PolyGroupoid(
        dim_G=3,
        dim_M=0,
        src=PolyMap(3, []),
        tgt=PolyMap(3, []),
        unit=PolyMap(0, [Poly.zero(0) for _ in range(3)]),
        inv=PolyMap(3, [-a, -b, -c + a * b]),
        comp_param=PolyMap.identity(6),
        mult=mult,
        comp_section=PolyMap.identity(6),
        chain3=PolyMap.identity(9),
        splitting=[[one0 if r == c else zero0 for c in range(3)]
                   for r in range(3)],
        name="heisenberg",
    )


def product_groupoid(G1: PolyGroupoid, G2: PolyGroupoid,
                     name: str = "") -> PolyGroupoid:
    """Componentwise product of two groupoids."""
    dG1, dG2, dG = G1.dim_G, G2.dim_G, G1.dim_G + G2.dim_G
    dM1, dM2, dM = G1.dim_M, G2.dim_M, G1.dim_M + G2.dim_M
    pG1 = _project(dG, list(range(dG1)))
    pG2 = _project(dG, list(range(dG1, dG)))
    pM1 = _project(dM, list(range(dM1)))
    pM2 = _project(dM, list(range(dM1, dM)))

    def through(f1: PolyMap, f2: PolyMap, p1: PolyMap, p2: PolyMap) -> PolyMap:
        return PolyMap.stack([polymap_compose(f1, p1), polymap_compose(f2, p2)])

    dP1, dP2 = G1.comp_param.domain_dim, G2.comp_param.domain_dim
    pP1 = _project(dP1 + dP2, list(range(dP1)))
    pP2 = _project(dP1 + dP2, list(range(dP1, dP1 + dP2)))
    cp1 = polymap_compose(G1.comp_param, pP1)
    cp2 = polymap_compose(G2.comp_param, pP2)
    comp_param = PolyMap.stack([cp1.block(0, dG1), cp2.block(0, dG2),
                                cp1.block(dG1, dG1), cp2.block(dG2, dG2)])

    pair1 = _project(2 * dG, list(range(dG1)) + list(range(dG, dG + dG1)))
    pair2 = _project(2 * dG, list(range(dG1, dG)) + list(range(dG + dG1, 2 * dG)))

    dQ1, dQ2 = G1.chain3.domain_dim, G2.chain3.domain_dim
    pQ1 = _project(dQ1 + dQ2, list(range(dQ1)))
    pQ2 = _project(dQ1 + dQ2, list(range(dQ1, dQ1 + dQ2)))
    c31 = polymap_compose(G1.chain3, pQ1)
    c32 = polymap_compose(G2.chain3, pQ2)
    chain3 = PolyMap.stack([c31.block(0, dG1), c32.block(0, dG2),
                            c31.block(dG1, dG1), c32.block(dG2, dG2),
                            c31.block(2 * dG1, dG1), c32.block(2 * dG2, dG2)])

    # columns: base of G1, base of G2, algebroid of G1, algebroid of G2
    rank1 = dG1 - dM1
    S = [[Poly.zero(dM) for _ in range(dG)] for _ in range(dG)]
    for r in range(dG1):
        for c in range(dM1):
            S[r][c] = G1.splitting[r][c].embed(dM, 0)
        for c in range(dM1, dG1):
            S[r][dM + c - dM1] = G1.splitting[r][c].embed(dM, 0)
    for r in range(dG2):
        for c in range(dM2):
            S[dG1 + r][dM1 + c] = G2.splitting[r][c].embed(dM, dM1)
        for c in range(dM2, dG2):
            S[dG1 + r][dM + rank1 + c - dM2] = G2.splitting[r][c].embed(dM, dM1)

    return PolyGroupoid(
        dim_G=dG,
        dim_M=dM,
        src=through(G1.src, G2.src, pG1, pG2),
        tgt=through(G1.tgt, G2.tgt, pG1, pG2),
        unit=through(G1.unit, G2.unit, pM1, pM2),
        inv=through(G1.inv, G2.inv, pG1, pG2),
        comp_param=comp_param,
        mult=through(G1.mult, G2.mult, pP1, pP2),
        comp_section=through(G1.comp_section, G2.comp_section, pair1, pair2),
        chain3=chain3,
        splitting=S,
        name=name or f"{G1.name} x {G2.name}",
    )


def make_product_pair_group(n: int) -> PolyGroupoid:
    """Product of the pair groupoid on R^n with the nilpotent group."""
    return product_groupoid(make_pair(n), make_heisenberg())


# -- fixture batteries ---------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    """A named field with its frozen affine/multiplicative verdict."""

    name: str
    field: MultiVectorField | DifferentialForm | TensorField
    affine: bool
    multiplicative: bool

    @property
    def kind(self) -> str:
        if isinstance(self.field, MultiVectorField):
            return "mv"
        if isinstance(self.field, DifferentialForm):
            return "form"
        return "tensor"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    groupoid: PolyGroupoid
    fixtures: tuple[Fixture, ...]

    def fixture(self, name: str) -> Fixture:
        for f in self.fixtures:
            if f.name == name:
                return f
        raise KeyError(f"no fixture named {name!r} in {self.id}")


def _poly(n: int, v) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly.const(n, Fraction(v))


def _mv(G: PolyGroupoid, k: int, entries: dict) -> MultiVectorField:
    n = G.dim_G
    return MultiVectorField(n, k, {tuple(i): _poly(n, c) for i, c in entries.items()})


def _form(G: PolyGroupoid, k: int, entries: dict) -> DifferentialForm:
    n = G.dim_G
    return DifferentialForm(n, k, {tuple(i): _poly(n, c) for i, c in entries.items()})


def _fn(G: PolyGroupoid, f: Poly) -> TensorField:
    return TensorField(G.dim_G, 0, 0, {((), ()): f})


def _t11(G: PolyGroupoid, rows) -> TensorField:
    n = G.dim_G
    coeffs = {((a,), (b,)): _poly(n, rows[a][b])
              for a in range(n) for b in range(n)}
    return TensorField(n, 1, 1, coeffs)


def _tgt_form(G: PolyGroupoid, k: int, entries: dict) -> DifferentialForm:
    theta = DifferentialForm(G.dim_M, k,
                             {tuple(i): _poly(G.dim_M, c) for i, c in entries.items()})
    return pullback(G.tgt, theta)


def _src_form(G: PolyGroupoid, k: int, entries: dict) -> DifferentialForm:
    theta = DifferentialForm(G.dim_M, k,
                             {tuple(i): _poly(G.dim_M, c) for i, c in entries.items()})
    return pullback(G.src, theta)


def _sec(G: PolyGroupoid, p: int, q: int, entries: dict) -> AlgebroidSection:
    return AlgebroidSection(G, p, q, {(tuple(u), tuple(d)): _poly(G.dim_M, c)
                                      for (u, d), c in entries.items()})


def _pair1_fixtures(G: PolyGroupoid) -> list[Fixture]:
    x0, x1 = (Poly.variable(2, i) for i in range(2))
    u = Poly.variable(1, 0)
    e0 = AlgebroidSection.frame(G, 0)
    sec_u = _sec(G, 1, 0, {((0,), ()): u})
    sec11 = _sec(G, 1, 1, {((0,), (0,)): 1})
    R, L = translate_right_mv, translate_left_mv
    out = [
        Fixture("mv.right-frame", R(G, e0), True, False),
        Fixture("mv.left-frame", L(G, e0), True, False),
        Fixture("mv.frame-diff", R(G, e0) - L(G, e0), True, True),
        Fixture("mv.frame-sum", R(G, e0) + L(G, e0), True, False),
        Fixture("mv.curved-right", R(G, sec_u), True, False),
        Fixture("mv.curved-diff", R(G, sec_u) - L(G, sec_u), True, True),
        Fixture("mv.factor-pair", _mv(G, 1, {(0,): x0 * x0, (1,): x1 * x1}),
                True, True),
        Fixture("mv.factor-pair-linear", _mv(G, 1, {(0,): x0, (1,): x1}),
                True, True),
        Fixture("mv.reject-src-coeff", _mv(G, 1, {(0,): x1}), False, False),
        Fixture("mv.reject-tgt-on-src", _mv(G, 1, {(1,): x0}), False, False),
        Fixture("mv.reject-mixed-coeff", _mv(G, 1, {(0,): x0 * x1}), False, False),
        Fixture("mv.reject-cross-square",
                _mv(G, 1, {(0,): (x0 - x1) * (x0 - x1)}), False, False),
        Fixture("mv.reject-wedge", _mv(G, 2, {(0, 1): 1}), False, False),
        Fixture("form.tgt-dx", _tgt_form(G, 1, {(0,): 1}), True, False),
        Fixture("form.src-dx", _src_form(G, 1, {(0,): 1}), True, False),
        Fixture("form.coboundary",
                _tgt_form(G, 1, {(0,): 1}) - _src_form(G, 1, {(0,): 1}),
                True, True),
        Fixture("form.tgt-curved", _tgt_form(G, 1, {(0,): u}), True, False),
        Fixture("form.two-sided",
                _tgt_form(G, 1, {(0,): 1}) + _src_form(G, 1, {(0,): u * u}),
                True, False),
        Fixture("form.coboundary-curved",
                _tgt_form(G, 1, {(0,): u}) - _src_form(G, 1, {(0,): u}),
                True, True),
        Fixture("form.reject-src-on-tgt", _form(G, 1, {(0,): x1}), False, False),
        Fixture("form.reject-mixed", _form(G, 1, {(0,): x0 * x1}), False, False),
        Fixture("form.reject-area", _form(G, 2, {(0, 1): 1}), False, False),
        Fixture("t11.diag-mult", _t11(G, [[2, 0], [0, 2]]), True, True),
        Fixture("t11.diag-affine", _t11(G, [[2, 0], [0, -3]]), True, False),
        Fixture("t11.diag-curved-mult",
                _t11(G, [[x0 * x0, 0], [0, x1 * x1]]), True, True),
        Fixture("t11.diag-curved-affine",
                _t11(G, [[x0 * x0, 0], [0, x1 * x1 + 1]]), True, False),
        Fixture("t11.reject-swap", _t11(G, [[0, 1], [1, 0]]), False, False),
        Fixture("t11.reject-cross", _t11(G, [[x1, 0], [0, 0]]), False, False),
        Fixture("tensor.sec-right", translate_right(G, sec11), True, False),
        Fixture("tensor.sec-diff",
                translate_right(G, sec11) - translate_left(G, sec11), True, True),
        Fixture("fn.coboundary", _fn(G, x0 - x1), True, True),
        Fixture("fn.sum", _fn(G, x0 + x1), True, False),
        Fixture("fn.reject", _fn(G, x0 * x1), False, False),
    ]
    return out


def _pair2_fixtures(G: PolyGroupoid) -> list[Fixture]:
    x = [Poly.variable(4, i) for i in range(4)]
    u0, u1 = (Poly.variable(2, i) for i in range(2))
    e0 = AlgebroidSection.frame(G, 0)
    e1 = AlgebroidSection.frame(G, 1)
    e01 = e0.wedge_section(e1)
    sec_mix_r = _sec(G, 1, 0, {((1,), ()): u0})
    sec_mix_l = _sec(G, 1, 0, {((0,), ()): u1})
    sec11 = _sec(G, 1, 1, {((0,), (1,)): 1})
    R, L = translate_right_mv, translate_left_mv
    cross = (x[0] - x[2]) * (x[0] - x[2])
    out = [
        Fixture("mv.right-frame0", R(G, e0), True, False),
        Fixture("mv.left-frame1", L(G, e1), True, False),
        Fixture("mv.frame-diff", R(G, e0) - L(G, e0), True, True),
        Fixture("mv.poly-mix", R(G, sec_mix_r) + L(G, sec_mix_l), True, False),
        Fixture("mv.factor-pair-k1",
                _mv(G, 1, {(0,): x[0] * x[0], (2,): x[2] * x[2]}), True, True),
        Fixture("mv.factor-k1-affine", _mv(G, 1, {(0,): x[0] * x[0]}), True, False),
        Fixture("mv.wedge-right", R(G, e01), True, False),
        Fixture("mv.wedge-diff", R(G, e01) - L(G, e01), True, True),
        Fixture("mv.factor-pair-k2", _mv(G, 2, {(0, 1): 1, (2, 3): -1}), True, True),
        Fixture("mv.factor-k2-affine", _mv(G, 2, {(0, 1): 1, (2, 3): 1}), True, False),
        Fixture("mv.poisson",
                _mv(G, 2, {(0, 1): x[0] * x[0] + 1, (2, 3): x[3]}), True, False),
        Fixture("mv.reject-cross-square", _mv(G, 2, {(0, 1): cross}), False, False),
        Fixture("mv.reject-src-coeff", _mv(G, 1, {(0,): x[2]}), False, False),
        Fixture("mv.reject-mixed-legs", _mv(G, 2, {(0, 2): 1}), False, False),
        Fixture("mv.reject-cross-k1", _mv(G, 1, {(1,): x[0] * x[3]}), False, False),
        Fixture("mv.reject-tgt-on-src", _mv(G, 1, {(2,): x[0]}), False, False),
        Fixture("mv.factor-pair-shear", _mv(G, 1, {(0,): x[1], (2,): x[3]}),
                True, True),
        Fixture("form.tgt-dx0", _tgt_form(G, 1, {(0,): 1}), True, False),
        Fixture("form.src-dx1", _src_form(G, 1, {(1,): 1}), True, False),
        Fixture("form.coboundary",
                _tgt_form(G, 1, {(0,): 1}) - _src_form(G, 1, {(0,): 1}), True, True),
        Fixture("form.tgt-curved", _tgt_form(G, 1, {(1,): u0}), True, False),
        Fixture("form.two-sided",
                _tgt_form(G, 1, {(1,): 1}) + _src_form(G, 1, {(0,): u0}), True, False),
        Fixture("form.area-mult",
                _tgt_form(G, 2, {(0, 1): 1}) - _src_form(G, 2, {(0, 1): 1}),
                True, True),
        Fixture("form.area-affine", _tgt_form(G, 2, {(0, 1): 1}), True, False),
        Fixture("form.area-curved-mult",
                _tgt_form(G, 2, {(0, 1): u0}) - _src_form(G, 2, {(0, 1): u0}),
                True, True),
        Fixture("form.reject-pairing",
                _form(G, 2, {(0, 2): 1, (1, 3): 1}), False, False),
        Fixture("form.reject-src-coeff", _form(G, 1, {(0,): x[2]}), False, False),
        Fixture("form.reject-cross",
                _form(G, 2, {(0, 1): x[0] - x[2]}), False, False),
        Fixture("form.reject-mixed-legs", _form(G, 2, {(0, 2): 1}), False, False),
        Fixture("t11.block-nonconst",
                _t11(G, [[1, x[0], 0, 0], [0, 1, 0, 0],
                         [0, 0, 2, 0], [0, 0, x[2], 1]]), True, False),
        Fixture("t11.block-mult",
                _t11(G, [[1, x[0], 0, 0], [0, 1, 0, 0],
                         [0, 0, 1, x[2]], [0, 0, 0, 1]]), True, True),
        Fixture("t11.reject-swap02",
                _t11(G, [[0, 0, 1, 0], [0, 1, 0, 0],
                         [1, 0, 0, 0], [0, 0, 0, 1]]), False, False),
        Fixture("tensor.sec11-right", translate_right(G, sec11), True, False),
        Fixture("tensor.sec11-diff",
                translate_right(G, sec11) - translate_left(G, sec11), True, True),
    ]
    return out


def _abelian1_fixtures(G: PolyGroupoid) -> list[Fixture]:
    x = Poly.variable(1, 0)
    out = [
        Fixture("mv.linear", _mv(G, 1, {(0,): x}), True, True),
        Fixture("mv.linear-scaled", _mv(G, 1, {(0,): 2 * x}), True, True),
        Fixture("mv.const", _mv(G, 1, {(0,): 1}), True, False),
        Fixture("mv.const-plus-linear", _mv(G, 1, {(0,): x + 1}), True, False),
        Fixture("mv.reject-square", _mv(G, 1, {(0,): x * x}), False, False),
        Fixture("mv.reject-square-plus", _mv(G, 1, {(0,): x * x + x}), False, False),
        Fixture("form.const", _form(G, 1, {(0,): 1}), True, True),
        Fixture("form.const-scaled", _form(G, 1, {(0,): Fraction(5, 3)}), True, True),
        Fixture("form.reject-linear", _form(G, 1, {(0,): x}), False, False),
        Fixture("form.reject-square", _form(G, 1, {(0,): x * x}), False, False),
        Fixture("t11.const", _t11(G, [[7]]), True, True),
        Fixture("t11.reject-linear", _t11(G, [[x]]), False, False),
        Fixture("fn.linear", _fn(G, x), True, True),
        Fixture("fn.affine", _fn(G, x + 1), True, False),
        Fixture("fn.reject", _fn(G, x * x), False, False),
    ]
    return out


def _abelian2_fixtures(G: PolyGroupoid) -> list[Fixture]:
    x0, x1 = (Poly.variable(2, i) for i in range(2))
    out = [
        Fixture("mv.euler", _mv(G, 1, {(0,): x0, (1,): x1}), True, True),
        Fixture("mv.shear", _mv(G, 1, {(1,): x0}), True, True),
        Fixture("mv.rotation", _mv(G, 1, {(0,): x1, (1,): -x0}), True, True),
        Fixture("mv.const", _mv(G, 1, {(0,): 1}), True, False),
        Fixture("mv.const-wedge", _mv(G, 2, {(0, 1): 1}), True, False),
        Fixture("mv.linear-wedge", _mv(G, 2, {(0, 1): x0}), True, True),
        Fixture("mv.reject-square", _mv(G, 1, {(0,): x0 * x0}), False, False),
        Fixture("mv.reject-product", _mv(G, 1, {(1,): x0 * x1}), False, False),
        Fixture("form.const", _form(G, 1, {(0,): 1}), True, True),
        Fixture("form.const-combo", _form(G, 1, {(0,): 1, (1,): 3}), True, True),
        Fixture("form.reject-linear", _form(G, 1, {(1,): x0}), False, False),
        Fixture("form.reject-area", _form(G, 2, {(0, 1): 1}), False, False),
        Fixture("form.reject-curved-area", _form(G, 2, {(0, 1): x0}), False, False),
        Fixture("t11.const-shear", _t11(G, [[0, 1], [0, 0]]), True, True),
        Fixture("t11.identity", _t11(G, [[1, 0], [0, 1]]), True, True),
        Fixture("t11.reject-linear", _t11(G, [[x0, 0], [0, x0]]), False, False),
    ]
    return out


def _heisenberg_fixtures(G: PolyGroupoid) -> list[Fixture]:
    a, b, c = (Poly.variable(3, i) for i in range(3))
    e0 = AlgebroidSection.frame(G, 0)
    e1 = AlgebroidSection.frame(G, 1)
    e2 = AlgebroidSection.frame(G, 2)
    e01 = e0.wedge_section(e1)
    R, L = translate_right_mv, translate_left_mv
    out = [
        Fixture("mv.right-frame-a", R(G, e0), True, False),
        Fixture("mv.left-frame-b", L(G, e1), True, False),
        Fixture("mv.adjoint-a", R(G, e0) - L(G, e0), True, True),
        Fixture("mv.adjoint-b", R(G, e1) - L(G, e1), True, True),
        Fixture("mv.wedge-right", R(G, e01), True, False),
        Fixture("mv.wedge-adjoint", R(G, e01) - L(G, e01), True, True),
        Fixture("mv.reject-square", _mv(G, 1, {(0,): a * a}), False, False),
        Fixture("mv.reject-center-coeff", _mv(G, 1, {(0,): c}), False, False),
        Fixture("mv.reject-mixed", _mv(G, 1, {(2,): a * b}), False, False),
        Fixture("form.da", _form(G, 1, {(0,): 1}), True, True),
        Fixture("form.db-scaled", _form(G, 1, {(1,): Fraction(1, 2)}), True, True),
        Fixture("form.combo", _form(G, 1, {(0,): 1, (1,): -1}), True, True),
        Fixture("form.reject-dc", _form(G, 1, {(2,): 1}), False, False),
        Fixture("form.reject-a-db", _form(G, 1, {(1,): a}), False, False),
        Fixture("form.reject-area", _form(G, 2, {(0, 1): 1}), False, False),
        Fixture("form.reject-bc-area", _form(G, 2, {(1, 2): 1}), False, False),
        Fixture("form.reject-curved-area", _form(G, 2, {(0, 2): a}), False, False),
        Fixture("t11.identity", _t11(G, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
                True, True),
        Fixture("t11.central-shear",
                _t11(G, [[1, 0, 0], [0, 1, 0], [2, Fraction(-1, 3), 1]]),
                True, True),
        Fixture("t11.reject-swap", _t11(G, [[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
                False, False),
        Fixture("t11.reject-linear-row",
                _t11(G, [[1, 0, 0], [0, 1, 0], [0, b, 1]]), False, False),
    ]
    return out


def _pairgroup1_fixtures(G: PolyGroupoid) -> list[Fixture]:
    x = [Poly.variable(5, i) for i in range(5)]
    u = Poly.variable(1, 0)
    e0 = AlgebroidSection.frame(G, 0)
    e1 = AlgebroidSection.frame(G, 1)
    e3 = AlgebroidSection.frame(G, 3)
    sec_u = _sec(G, 1, 0, {((0,), ()): u})
    R, L = translate_right_mv, translate_left_mv
    out = [
        Fixture("mv.right-frame-pair", R(G, e0), True, False),
        Fixture("mv.right-frame-grp", R(G, e1), True, False),
        Fixture("mv.frame-diff-pair", R(G, e0) - L(G, e0), True, True),
        Fixture("mv.frame-diff-grp", R(G, e3) - L(G, e3), True, True),
        Fixture("mv.mixed-sum", R(G, sec_u) + L(G, e1), True, False),
        Fixture("mv.reject-cross-factor", _mv(G, 1, {(0,): x[0] * x[2]}),
                False, False),
        Fixture("mv.reject-src-coeff", _mv(G, 1, {(0,): x[1]}), False, False),
        Fixture("mv.reject-center-coeff", _mv(G, 1, {(2,): x[4]}), False, False),
        Fixture("form.coboundary",
                _tgt_form(G, 1, {(0,): 1}) - _src_form(G, 1, {(0,): 1}), True, True),
        Fixture("form.da", _form(G, 1, {(2,): 1}), True, True),
        Fixture("form.db", _form(G, 1, {(3,): 1}), True, True),
        Fixture("form.tgt-dx", _tgt_form(G, 1, {(0,): 1}), True, False),
        Fixture("form.reject-dc", _form(G, 1, {(4,): 1}), False, False),
        Fixture("form.reject-a-db", _form(G, 1, {(3,): x[2]}), False, False),
        Fixture("form.reject-group-area", _form(G, 2, {(2, 3): 1}), False, False),
        Fixture("form.reject-cross", _form(G, 1, {(2,): x[0]}), False, False),
        Fixture("t11.block-matched",
                _t11(G, [[2, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 1, 0, 0],
                         [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]), True, True),
        Fixture("t11.block-distinct",
                _t11(G, [[2, 0, 0, 0, 0], [0, -1, 0, 0, 0], [0, 0, 1, 0, 0],
                         [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]), True, False),
        Fixture("t11.reject-swap-grp",
                _t11(G, [[2, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 0, 0, 1],
                         [0, 0, 0, 1, 0], [0, 0, 1, 0, 0]]), False, False),
    ]
    return out


_BUILDERS = (
    ("pair1", lambda: make_pair(1), _pair1_fixtures),
    ("pair2", lambda: make_pair(2), _pair2_fixtures),
    ("abelian1", lambda: make_abelian(1), _abelian1_fixtures),
    ("abelian2", lambda: make_abelian(2), _abelian2_fixtures),
    ("heisenberg", make_heisenberg, _heisenberg_fixtures),
    ("pairgroup1", lambda: make_product_pair_group(1), _pairgroup1_fixtures),
)

_ENTRIES: dict[str, CatalogEntry] | None = None


def entries() -> tuple[CatalogEntry, ...]:
    global _ENTRIES
    if _ENTRIES is None:
        built = {}
        for cid, make, fixtures in _BUILDERS:
            G = make()
            built[cid] = CatalogEntry(cid, G, tuple(fixtures(G)))
        _ENTRIES = built
    return tuple(_ENTRIES.values())


def catalog_ids() -> list[str]:
    return [e.id for e in entries()]


def get_entry(cid: str) -> CatalogEntry:
    for e in entries():
        if e.id == cid:
            return e
    raise KeyError(f"unknown catalog groupoid {cid!r}")
