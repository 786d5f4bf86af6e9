"""Scratch checks for forms.py; absorbed into the test suite later."""
from fractions import Fraction

from affinoid.poly import Poly, PolyMap, polymap_compose
from affinoid.fields import (DifferentialForm, derham_d, pullback, wedge)
from affinoid.groupoid import ComposabilityError, StructureError, validate_axioms
from affinoid.catalog import make_abelian, make_heisenberg, make_pair
from affinoid.forms import (
    AffineForm, IMForm, base_restriction, cochain_iso_check, form_compose,
    form_identity, form_inverse, form_source_target, im_form_extract,
    im_form_rebuild, is_affine_form, is_multiplicative_form,
    parallelogram_isotropy, phi, phi_inverse,
)


def d1(dim, i, c=None):
    return DifferentialForm(dim, 1, {(i,): c if c is not None else Poly.one(dim)})


def agree(G, Theta, expect_affine):
    a = is_affine_form(G, Theta)
    p = parallelogram_isotropy(G, Theta)
    assert a == p == expect_affine, (G.name, expect_affine, a, p)


# -- pair(1): basic predicates ------------------------------------------------
P1 = make_pair(1)
x = Poly.variable(1, 0)
alpha = d1(1, 0, x * x)          # x^2 dx on M
beta = d1(1, 0, x + Poly.one(1)) # (x+1) dx on M

pr1 = PolyMap(2, [Poly.variable(2, 0)])
pr2 = PolyMap(2, [Poly.variable(2, 1)])
t_mult = pullback(pr1, alpha) - pullback(pr2, alpha)
assert is_multiplicative_form(P1, t_mult)
agree(P1, t_mult, True)
t_aff = pullback(pr1, alpha) + pullback(pr2, beta)
assert not is_multiplicative_form(P1, t_aff)
agree(P1, t_aff, True)

s_theta = pullback(P1.src, alpha)
t_theta = pullback(P1.tgt, alpha)
agree(P1, s_theta, True)
agree(P1, t_theta, True)
assert is_multiplicative_form(P1, t_theta - s_theta)

# non-affine on Pair(R): any nonzero 2-form
xy = Poly.variable(2, 0) - Poly.variable(2, 1)
bad2 = DifferentialForm(2, 2, {(0, 1): xy * xy})
agree(P1, bad2, False)
bad1 = DifferentialForm(2, 1, {(0,): Poly.variable(2, 1) ** 2})
agree(P1, bad1, False)
print("pair(1) predicates ok")

# -- pair(1): source/target, compose, inverse ----------------------------------
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
assert form_source_target(TU)[0] == form_source_target(U)[0]
assert form_source_target(TU)[1] == form_source_target(T)[1]

try:
    form_compose(U, T)
    raise AssertionError("expected ComposabilityError")
except ComposabilityError:
    pass

Tinv = form_inverse(T)
assert Tinv.Theta == -s_theta
left = form_compose(T, Tinv)
assert left.Theta == T.Theta_l          # 1 at the target
right = form_compose(Tinv, T)
assert right.Theta == T.Theta_r         # 1 at the source

M_mult = AffineForm(P1, t_mult)
assert form_compose(M_mult, M_mult).Theta == t_mult

idf = form_identity(P1, alpha)
assert idf.Theta == t_theta - s_theta

# associativity and linearity
V = AffineForm(P1, U.Theta_r + pullback(P1.src, d1(1, 0, x)))
lhs = form_compose(form_compose(T, U), V)
rhs = form_compose(T, form_compose(U, V))
assert lhs.Theta == rhs.Theta
T2 = AffineForm(P1, t_theta.scale(Fraction(3)))
U2 = AffineForm(P1, pullback(P1.src, d1(1, 0, x * x * x)))
assert (form_compose(T, U) + form_compose(T2, U2)).Theta == \
    form_compose(T + T2, U + U2).Theta
print("pair(1) two-vector space ok")

# -- cochain isomorphism --------------------------------------------------------
P2 = make_pair(2)
assert cochain_iso_check(P1)
assert cochain_iso_check(P2)
T = AffineForm(P2, pullback(P2.tgt, d1(2, 0, Poly.variable(2, 1))))
Lam, lam = phi(T)
assert Lam.is_zero and lam == d1(2, 0, Poly.variable(2, 1))
assert phi_inverse(P2, Lam, lam).Theta == T.Theta
print("cochain iso ok")

# -- infinitesimal data: flat pair(2) example -----------------------------------
a12 = DifferentialForm(2, 2, {(0, 1): Poly.one(2)})
pr1 = PolyMap(4, [Poly.variable(4, 0), Poly.variable(4, 1)])
pr2 = PolyMap(4, [Poly.variable(4, 2), Poly.variable(4, 3)])
Theta = pullback(pr1, a12) - pullback(pr2, a12)
assert is_multiplicative_form(P2, Theta)
T = AffineForm(P2, Theta)
imf, theta = im_form_extract(T)
assert theta.is_zero
assert imf.mu[0] == d1(2, 1)                         # dx2
assert imf.mu[1] == d1(2, 0).scale(Fraction(-1))     # -dx1
assert all(w.is_zero for w in imf.nu)
assert im_form_rebuild(T) == Theta

# curved: alpha = x2 dx1, Theta = pr1*alpha - pr2*alpha
ax = d1(2, 0, Poly.variable(2, 1))
Theta = pullback(pr1, ax) - pullback(pr2, ax)
assert is_multiplicative_form(P2, Theta)
T = AffineForm(P2, Theta)
imf, theta = im_form_extract(T)
x2 = Poly.variable(2, 1)
assert imf.mu[0] == DifferentialForm(2, 0, {(): x2})
assert imf.mu[1].is_zero
assert imf.nu[0] == d1(2, 1).scale(Fraction(-1))     # -dx2
assert imf.nu[1] == d1(2, 0)                         # dx1
assert im_form_rebuild(T) == Theta

# tampered data must fail the identities
try:
    IMForm(P2.algebroid, 1, (imf.mu[0].scale(Fraction(2)), imf.mu[1]), imf.nu)
    raise AssertionError("expected StructureError")
except StructureError:
    pass

# affine input with nonzero base part: the multiplicative part drives (mu, nu)
gam = d1(2, 0)
T = AffineForm(P2, Theta + pullback(P2.src, gam))
imf2, theta2 = im_form_extract(T)
assert theta2 == gam
assert imf2.mu[0] == DifferentialForm(2, 0, {(): x2 - Poly.one(2)})
assert imf2.mu[1].is_zero
assert imf2.nu == imf.nu
assert im_form_rebuild(T) == T.Theta

beta2 = DifferentialForm(2, 2, {(0, 1): Poly.variable(2, 0)})
T2 = AffineForm(P2, pullback(pr1, a12) - pullback(pr2, a12)
                + pullback(P2.tgt, beta2))
imf3, theta3 = im_form_extract(T2)
assert theta3 == beta2
assert imf3.mu[0] == d1(2, 1) and imf3.mu[1] == d1(2, 0).scale(Fraction(-1))
assert all(w.is_zero for w in imf3.nu)
assert im_form_rebuild(T2) == T2.Theta
print("infinitesimal data ok")

# -- Pair(R) explicit s*theta - t*theta -----------------------------------------
f = x * x
th = d1(1, 0, f)
T = AffineForm(P1, pullback(P1.src, th) - pullback(P1.tgt, th))
imf, theta = im_form_extract(T)
assert theta.is_zero
assert imf.mu[0] == DifferentialForm(1, 0, {(): -f})
assert imf.nu[0].is_zero
print("pair(1) infinitesimal ok")

# -- groups: affine == multiplicative -------------------------------------------
H = make_heisenberg()
dxH = d1(3, 0)
dyH = d1(3, 1)
dzH = d1(3, 2)
assert is_multiplicative_form(H, dxH) and is_affine_form(H, dxH)
agree(H, dxH, True)
agree(H, dyH, True)
agree(H, dzH, False)
assert not is_multiplicative_form(H, dzH)
agree(H, wedge(dxH, dyH), False)
agree(H, wedge(dxH, dzH), False)

A2 = make_abelian(2)
const = d1(2, 0, Poly.const(2, 3)) - d1(2, 1, Poly.const(2, Fraction(1, 2)))
agree(A2, const, True)
assert is_multiplicative_form(A2, const)
agree(A2, d1(2, 0, Poly.variable(2, 0)), False)
print("group forms ok")

# -- degree 0: affine functions as 0-forms --------------------------------------
F = DifferentialForm(2, 0, {(): Poly.variable(2, 0) - Poly.variable(2, 1)})
assert is_multiplicative_form(P1, F)
agree(P1, F, True)
Fa = DifferentialForm(2, 0, {(): Poly.variable(2, 0) + Poly.variable(2, 1)})
assert not is_multiplicative_form(P1, Fa)
agree(P1, Fa, True)
Fbad = DifferentialForm(2, 0, {(): Poly.variable(2, 0) * Poly.variable(2, 1)})
agree(P1, Fbad, False)
print("degree-0 forms ok")

print("all forms smoke checks passed")
