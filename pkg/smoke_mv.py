"""Scratch verification of catalog constructors + multivector layer."""
from fractions import Fraction

from affinoid.catalog import (make_abelian, make_heisenberg, make_pair,
                              make_product_pair_group)
from affinoid.fields import MultiVectorField, schouten_bracket
from affinoid.groupoid import (AlgebroidSection, algebroid_schouten,
                               restrict_project, translate_left_mv,
                               translate_right_mv, validate_axioms)
from affinoid.multivector import (AffineMV, KDifferential, affine_mv_oracle,
                                  decomposition_iso_check, is_affine_mv,
                                  is_multiplicative_mv, k_differential_of,
                                  lie2_functoriality_check, mv_compose,
                                  mv_inverse, mv_source_target,
                                  multiplicative_mv_oracle, poisson_checks)
from affinoid.poly import Poly

# 1. axioms
for G in [make_pair(1), make_pair(2), make_abelian(1), make_abelian(2),
          make_heisenberg(), make_product_pair_group(1)]:
    rep = validate_axioms(G)
    assert rep.ok, (G.name, rep.violations)
print("catalog axioms ok")

# anchor of pair(2) is the identity
P2 = make_pair(2)
alg = P2.algebroid
assert alg.anchor == ((Poly.one(2), Poly.zero(2)), (Poly.zero(2), Poly.one(2))), alg.anchor
print("pair(2) anchor ok")

# heisenberg structure constants
H = make_heisenberg()
algH = H.algebroid
print("heisenberg structure:", {k: tuple(str(p) for p in v) for k, v in algH.structure.items()})

# 2. abelian R examples
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
for P, ea, em in [(lin, True, True), (aff, True, False), (quad, False, False),
                  (const, True, False)]:
    assert bool(affine_mv_oracle(A1, P)) == ea, P
    assert bool(multiplicative_mv_oracle(A1, P)) == em, P
print("abelian(1) predicates + oracles ok")

A2 = make_abelian(2)
y1, y2 = Poly.variable(2, 0), Poly.variable(2, 1)
P22 = MultiVectorField(2, 2, {(0, 1): y1 + y2})
assert is_multiplicative_mv(A2, P22)
assert bool(multiplicative_mv_oracle(A2, P22))
# delta1 of a linear field is its coefficient matrix action
linf = MultiVectorField.from_vector([Poly.zero(2), y1])  # x1 d/dx2
assert is_multiplicative_mv(A2, linf)
d = k_differential_of(AffineMV(A2, linf))
print("delta1 on abelian(2) frames:",
      [{k: str(p) for k, p in s.coeffs.items()} for s in d.delta1_frame])
print("abelian(2) ok")

# 3. pair(1) decomposition fixtures
G = make_pair(1)
xb = Poly.variable(1, 0)
pi = AlgebroidSection(G, 1, 0, {((0,), ()): xb})
gam = AlgebroidSection(G, 1, 0, {((0,), ()): xb * xb})
rho = AlgebroidSection(G, 1, 0, {((0,), ()): Poly.one(1)})
rpi = translate_right_mv(G, pi)
lgam = translate_left_mv(G, gam)

P = AffineMV(G, rpi)
assert P.Pi_r.is_zero
assert P.Pi_l == rpi - translate_left_mv(G, pi)
assert is_multiplicative_mv(G, P.Pi_l)
assert mv_source_target(P) == (P.Pi_r, P.Pi_l)
inv = mv_inverse(P)
assert inv.Pi == -translate_left_mv(G, pi)
assert mv_inverse(inv) == P

Q = AffineMV(G, lgam)
C = mv_compose(P, Q)
assert C.Pi == rpi + lgam
assert C.Pi_r == Q.Pi_r and C.Pi_l == P.Pi_l

u = mv_compose(P, inv)
assert u.Pi == P.Pi_l and u.pi.is_zero
u2 = mv_compose(inv, P)
assert u2.Pi == P.Pi_r and u2.pi.is_zero

# associativity on a composable triple
R = AffineMV(G, Q.Pi_r + translate_left_mv(G, rho))
assert mv_compose(mv_compose(P, Q), R).Pi == mv_compose(P, mv_compose(Q, R)).Pi
# linearity
Pb = AffineMV(G, translate_right_mv(G, rho))
Qb = AffineMV(G, translate_left_mv(G, pi))
lhs = mv_compose(P + Pb, Q + Qb)
rhs = mv_compose(P, Q) + mv_compose(Pb, Qb)
assert lhs.Pi == rhs.Pi
print("pair(1) 2-vector space ok")

# 4. kernel identities
dR = k_differential_of(P)                       # field = right translate of pi
dL = k_differential_of(AffineMV(G, translate_left_mv(G, pi)))
f = xb * xb + xb
for sec in [rho, gam, pi]:
    assert dR.delta1(sec) == algebroid_schouten(G, pi, sec)
    assert dL.delta1(sec).is_zero
assert dR.delta0(f) == algebroid_schouten(G, pi, AlgebroidSection.from_function(G, f))
assert dL.delta0(f).is_zero
print("kernel identities ok")

# 5. pair(2): componentwise bivector convention
x1, x2, x3, x4 = (Poly.variable(4, i) for i in range(4))
fb = Poly.variable(2, 0) + Poly.variable(2, 1) ** 2
fx = fb.subs([x1, x2], out_vars=4)               # f(target copy)
fy = fb.subs([x3, x4], out_vars=4)
mixed_minus = MultiVectorField(4, 2, {(0, 1): fx, (2, 3): -fy})
mixed_plus = MultiVectorField(4, 2, {(0, 1): fx, (2, 3): fy})
assert is_multiplicative_mv(P2, mixed_minus)
assert bool(multiplicative_mv_oracle(P2, mixed_minus))
assert is_affine_mv(P2, mixed_plus) and not is_multiplicative_mv(P2, mixed_plus)
assert bool(affine_mv_oracle(P2, mixed_plus))
assert not bool(multiplicative_mv_oracle(P2, mixed_plus))
ybad = MultiVectorField.from_vector([x3, Poly.zero(4), Poly.zero(4), Poly.zero(4)])
assert not is_affine_mv(P2, ybad)
assert not bool(affine_mv_oracle(P2, ybad))
print("pair(2) componentwise convention ok")

# 6. k-differential axioms on pair(2), degree 2
pi2 = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.variable(2, 0)})
gam2 = AlgebroidSection(P2, 2, 0, {((0, 1), ()): Poly.variable(2, 1) ** 2})
Pi2 = AffineMV(P2, translate_right_mv(P2, pi2) + translate_left_mv(P2, gam2))
d2 = k_differential_of(Pi2)
bf, bg = Poly.variable(2, 0), Poly.variable(2, 1) + Poly.one(2)
X = AlgebroidSection(P2, 1, 0, {((0,), ()): bg})
Y = AlgebroidSection.frame(P2, 1)
# Leibniz on functions
assert d2.delta0(bf * bg) == \
    d2.delta0(bf).wedge_section(AlgebroidSection.from_function(P2, bg)) \
    + AlgebroidSection.from_function(P2, bf).wedge_section(d2.delta0(bg))
# Leibniz on sections
assert d2.delta1(AlgebroidSection.from_function(P2, bf).wedge_section(X)) == \
    d2.delta0(bf).wedge_section(X) \
    + AlgebroidSection.from_function(P2, bf).wedge_section(d2.delta1(X))
# derivation on brackets
assert d2.delta1(algebroid_schouten(P2, X, Y)) == \
    algebroid_schouten(P2, d2.delta1(X), Y) + algebroid_schouten(P2, X, d2.delta1(Y))
print("k-differential axioms ok")

# 7. decomposition identity, mixed degrees
one2 = Poly.one(2)
secs1 = [AlgebroidSection(P2, 1, 0, {((0,), ()): Poly.variable(2, 1)}),
         AlgebroidSection(P2, 1, 0, {((1,), ()): Poly.variable(2, 0) ** 2})]
fields = [AffineMV(P2, translate_right_mv(P2, secs1[0]) + translate_left_mv(P2, secs1[1])),
          AffineMV(P2, translate_left_mv(P2, secs1[0])),
          Pi2,
          AffineMV(P2, translate_right_mv(P2, pi2))]
for a in fields:
    for b in fields:
        assert decomposition_iso_check(a, b), (a, b)
print("decomposition identity ok")

# 8. functoriality quadruples
quads = [
    (AffineMV(G, rpi), AffineMV(G, lgam),
     AffineMV(G, translate_right_mv(G, rho)), AffineMV(G, translate_left_mv(G, pi))),
    (fields[3], AffineMV(P2, translate_left_mv(P2, gam2)),
     AffineMV(P2, translate_right_mv(P2, secs1[0])),
     AffineMV(P2, translate_left_mv(P2, secs1[1]))),
]
for q in quads:
    assert lie2_functoriality_check(*q)
print("functoriality ok")

# 9. Poisson battery on pair(3)
P3 = make_pair(3)
z1, z2, z3 = (Poly.variable(3, i) for i in range(3))
cyb = AlgebroidSection(P3, 2, 0, {((0, 1), ()): z3})            # [pi, pi] = 0
noncyb = AlgebroidSection(P3, 2, 0, {((0, 1), ()): z3, ((1, 2), ()): z2})
assert algebroid_schouten(P3, cyb, cyb).is_zero
br = algebroid_schouten(P3, noncyb, noncyb)
assert not br.is_zero
print("noncyb self-bracket:", {k: str(p) for k, p in br.coeffs.items()})

cybg = AlgebroidSection(P3, 2, 0, {((1, 2), ()): z1})           # [gam, gam] = 0
rep = poisson_checks(AffineMV(P3, translate_right_mv(P3, cyb)))
assert rep["is_poisson"] and rep["Pr_is_poisson"] and rep["obstruction_is_zero"]
assert rep["clause1_right_ok"] and rep["clause1_left_ok"] and rep["clause2_ok"]
assert rep["inverse_is_poisson"]

rep = poisson_checks(AffineMV(P3, translate_right_mv(P3, noncyb)))
assert not rep["is_poisson"] and rep["Pr_is_poisson"]
assert not rep["obstruction_is_zero"]
assert rep["clause1_right_ok"] and rep["clause1_left_ok"] and rep["clause2_ok"]
assert rep["inverse_is_poisson"] is None

rep = poisson_checks(AffineMV(
    P3, translate_right_mv(P3, cyb) + translate_left_mv(P3, cybg)))
assert rep["is_poisson"] and rep["Pr_is_poisson"] and rep["clause2_ok"]
assert rep["inverse_is_poisson"]

rep = poisson_checks(AffineMV(
    P3, translate_right_mv(P3, cyb) + translate_left_mv(P3, noncyb)))
assert not rep["is_poisson"] and not rep["Pr_is_poisson"]
assert rep["clause1_right_ok"] and rep["clause1_left_ok"]
assert rep["clause2_ok"] is None
print("poisson battery ok")

print("all multivector smoke checks passed")
