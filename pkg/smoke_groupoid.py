"""Hand-built pair groupoid checks before the catalog exists."""
from fractions import Fraction

from affinoid.poly import Poly, PolyMap
from affinoid.fields import MultiVectorField, schouten_bracket
from affinoid.groupoid import (
    AlgebroidSection, CotangentOps, PolyGroupoid, coisotropy_oracle,
    cot_source, cot_target, is_left_invariant, is_right_invariant,
    lie_algebroid, restrict_project, restriction_residue_is_zero,
    translate_left_mv, translate_right_mv, unit_covector, validate_axioms,
)


def make_pair(n):
    dG, dM = 2 * n, n
    v = lambda k, i: Poly.variable(k, i)
    src = PolyMap(dG, [v(dG, n + i) for i in range(n)])
    tgt = PolyMap(dG, [v(dG, i) for i in range(n)])
    unit = PolyMap(dM, [v(dM, i) for i in range(n)] * 2)
    inv = PolyMap(dG, [v(dG, n + i) for i in range(n)] + [v(dG, i) for i in range(n)])
    # pairs ((x, y), (y, z)) parametrized by (x, y, z)
    comp_param = PolyMap(3 * n, [v(3 * n, i) for i in range(2 * n)]
                         + [v(3 * n, n + i) for i in range(n)]
                         + [v(3 * n, 2 * n + i) for i in range(n)])
    mult = PolyMap(3 * n, [v(3 * n, i) for i in range(n)]
                   + [v(3 * n, 2 * n + i) for i in range(n)])
    comp_section = PolyMap(4 * n, [v(4 * n, i) for i in range(2 * n)]
                           + [v(4 * n, 3 * n + i) for i in range(n)])
    chain3 = PolyMap(4 * n, [v(4 * n, i) for i in range(2 * n)]
                     + [v(4 * n, n + i) for i in range(2 * n)]
                     + [v(4 * n, 2 * n + i) for i in range(2 * n)])
    one, zero = Poly.one(dM), Poly.zero(dM)
    splitting = [[one if (r % n == c % n and (c < n or r < n)) else zero
                  for c in range(dG)] for r in range(dG)]
    return PolyGroupoid(dim_G=dG, dim_M=dM, src=src, tgt=tgt, unit=unit,
                        inv=inv, comp_param=comp_param, mult=mult,
                        comp_section=comp_section, chain3=chain3,
                        splitting=splitting, name=f"pair({n})")


G = make_pair(1)
rep = validate_axioms(G)
assert rep.ok, rep.violations
print("pair(1) axioms ok")

G2 = make_pair(2)
rep2 = validate_axioms(G2)
assert rep2.ok, rep2.violations
print("pair(2) axioms ok")

# translations of the frame section u = x * e0
x = Poly.variable(1, 0)
u = AlgebroidSection(G, 1, 0, {((0,), ()): x})
right = translate_right_mv(G, u)
left = translate_left_mv(G, u)
x1 = Poly.variable(2, 0)
x2 = Poly.variable(2, 1)
assert right == MultiVectorField.from_vector([x1, Poly.zero(2)]), right.coeffs
assert left == MultiVectorField.from_vector([Poly.zero(2), -x2]), left.coeffs
print("pair translations ok")
assert is_right_invariant(G, right) and not is_left_invariant(G, right)
assert is_left_invariant(G, left) and not is_right_invariant(G, left)

# restrict_project of (f(x), g(y)) gives f - g on the frame
W = MultiVectorField.from_vector([x1 * x1, x2])
sec = restrict_project(G, W, 1, 0)
assert sec.coeffs == {((0,), ()): x * x - x}, sec.coeffs
assert not restriction_residue_is_zero(G, W)
assert restriction_residue_is_zero(G, right)
print("restriction ok")

# round trip: translate then restrict returns the section
assert restrict_project(G, translate_right_mv(G, u), 1, 0) == u
assert restrict_project(G, translate_left_mv(G, u), 1, 0) == u
print("translate/restrict round trip ok")

# algebroid of the pair groupoid: anchor is the identity, abelian bracket
A = lie_algebroid(G)
assert A.rank == 1
assert A.anchor == ((Poly.one(1),),), A.anchor
print("pair algebroid ok")

# cotangent operations: (a, b) . (-b, c) = (a, c)
g = [Fraction(2), Fraction(5)]
h = [Fraction(5), Fraction(-1)]
ops = CotangentOps(G, g, h)
a, b, c = Fraction(3), Fraction(7, 2), Fraction(-4)
zeta = ops.multiply([a, b], [-b, c])
assert zeta == (a, c), zeta
assert cot_source(G, g, [a, b]) == (-b,)
assert cot_target(G, h, [-b, c]) == (-b,)
print("cotangent multiply ok")

# unit covector kills the base frame
cov = unit_covector(G, [Fraction(3)], [Fraction(5)])
# frame columns at x=3: base (1,1), algebroid (1,0)
assert cov[0] * 1 + cov[1] * 1 == 0
assert cov[0] * 1 + cov[1] * 0 == 5
print("unit covector ok")

# coisotropy oracle: (c, c) passes triangles, (c, 0) fails
cpoly = Poly.const(2, Fraction(3, 2))
good = MultiVectorField.from_vector([cpoly, cpoly])
bad = MultiVectorField.from_vector([cpoly, Poly.zero(2)])
r1 = coisotropy_oracle(G, good, "triangles", seed=5)
r2 = coisotropy_oracle(G, bad, "triangles", seed=5)
assert r1.passed, r1
assert not r2.passed and r2.witness is not None
print("triangle oracle ok", r2.witness["conormal_tuple"])

r3 = coisotropy_oracle(G, good, "parallelograms", seed=5)
# (c, 0) is affine (any pair of base fields is) though not multiplicative
r4 = coisotropy_oracle(G, bad, "parallelograms", seed=5)
# y d/dx mixes the factors: not affine
r5 = coisotropy_oracle(G, MultiVectorField.from_vector([x2, Poly.zero(2)]),
                       "parallelograms", seed=5)
assert r3.passed
assert r4.passed
assert not r5.passed and r5.witness is not None
print("parallelogram oracle ok")

# k=2 on pair(2): componentwise lift of a base bivector x1 d1^d2
Pi2 = MultiVectorField(4, 2, {(0, 1): Poly.variable(4, 0),
                              (2, 3): Poly.variable(4, 2)})
r6 = coisotropy_oracle(G2, Pi2, "triangles", seed=9)
print("pair(2) bivector triangle oracle:", r6.passed)
r7 = coisotropy_oracle(G2, Pi2, "parallelograms", seed=9)
print("pair(2) bivector parallelogram oracle:", r7.passed)

# and the bracket through right-invariant extensions stays consistent
w = schouten_bracket(right, right)
assert w.is_zero
print("all groupoid smoke checks passed")
