"""Multivector fields, differential forms and mixed tensor fields with
polynomial coefficients, together with the exterior-calculus operations.

Storage is dense over sorted index subsets: a degree-k multivector field
on an n-dimensional space maps strictly increasing k-tuples of 0-based
indices to Poly coefficients, and only nonzero coefficients are kept, so
equality of coefficient maps decides equality of fields.  A (p, q) tensor
field keys on a pair (contravariant tuple, covariant tuple).

The Schouten bracket is computed through the odd-coordinate picture:
a multivector is a polynomial in anticommuting generators, one per
coordinate vector field, and the bracket pairs an odd right-derivative
of one argument against coefficient x-derivatives of the other:

    [P, Q] = sum_i dP/dz_i . dQ/dx_i
             - (-1)^((p-1)(q-1)) sum_i dQ/dz_i . dP/dx_i

with dP/dz_i the right derivative (remove z_i from the last slot).  This
normalization gives [X, f] = X(f), reduces to the commutator in degree
(1, 1), and satisfies the graded antisymmetry, Leibniz and Jacobi laws
checked in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import det
from .poly import ArityError, Poly, PolyMap, Rational, jacobian

Index = tuple[int, ...]


class DegreeError(ValueError):
    """Degrees out of range for the requested operation."""


def _check_index(idx: Index, degree: int, dim: int) -> None:
    if len(idx) != degree:
        raise DegreeError(f"index {idx} does not have degree {degree}")
    if any(not 0 <= i < dim for i in idx):
        raise ArityError(f"index {idx} out of range for dimension {dim}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"index {idx} is not strictly increasing")


def sort_index(idx: Sequence[int]) -> tuple[Index, int] | None:
    """Sort an index tuple, tracking the permutation sign.  None when an
    index repeats (the term dies by antisymmetry)."""
    lst = list(idx)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and lst[j - 1] == lst[j]:
            return None
    return tuple(lst), sign


def merge_indices(a: Index, b: Index) -> tuple[Index, int] | None:
    """Concatenate two increasing tuples into one, with the shuffle sign."""
    return sort_index(a + b)


def _normalize(coeffs: Mapping, build) -> dict:
    clean = {}
    for key, poly in coeffs.items():
        if not poly.is_zero:
            clean[build(key)] = poly
    return clean


class _GradedMixin:
    """Shared arithmetic for coefficient-map containers."""

    def _same_shape(self, other) -> None:
        if type(self) is not type(other):
            raise ArityError(
                f"mixed kinds {type(self).__name__} and {type(other).__name__}")
        if self.shape() != other.shape():
            raise ArityError(
                f"mixed shapes {self.shape()} and {other.shape()}")

    def __add__(self, other):
        self._same_shape(other)
        coeffs = dict(self.coeffs)
        for k, p in other.coeffs.items():
            s = coeffs.get(k)
            s = p if s is None else s + p
            if s.is_zero:
                coeffs.pop(k, None)
            else:
                coeffs[k] = s
        return self._with_coeffs(coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._with_coeffs({k: -p for k, p in self.coeffs.items()})

    def scale(self, c: Rational):
        if not c:
            return self._with_coeffs({})
        return self._with_coeffs({k: p * c for k, p in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return self.shape() == other.shape() and self.coeffs == other.coeffs

    def __hash__(self):  # pragma: no cover
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


class MultiVectorField(_GradedMixin):
    """Degree-k field of alternating contravariant tensors."""

    __slots__ = ("space_dim", "degree", "coeffs")

    def __init__(self, space_dim: int, degree: int,
                 coeffs: Mapping[Index, Poly] | None = None):
        if degree < 0:
            raise DegreeError("negative degree")
        clean: dict[Index, Poly] = {}
        for idx, poly in (coeffs or {}).items():
            idx = tuple(idx)
            _check_index(idx, degree, space_dim)
            if poly.num_vars != space_dim:
                raise ArityError("coefficient arity disagrees with space_dim")
            if not poly.is_zero:
                clean[idx] = poly
        object.__setattr__(self, "space_dim", space_dim)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("MultiVectorField is immutable")

    def shape(self) -> tuple:
        return (self.space_dim, self.degree)

    def _with_coeffs(self, coeffs) -> MultiVectorField:
        out = MultiVectorField.__new__(MultiVectorField)
        object.__setattr__(out, "space_dim", self.space_dim)
        object.__setattr__(out, "degree", self.degree)
        object.__setattr__(out, "coeffs", coeffs)
        return out

    def __repr__(self) -> str:
        return f"MultiVectorField(dim={self.space_dim}, k={self.degree}, {len(self.coeffs)} terms)"

    @staticmethod
    def zero(space_dim: int, degree: int) -> MultiVectorField:
        return MultiVectorField(space_dim, degree)

    @staticmethod
    def from_function(f: Poly) -> MultiVectorField:
        return MultiVectorField(f.num_vars, 0, {(): f})

    @staticmethod
    def from_vector(components: Sequence[Poly]) -> MultiVectorField:
        dim = len(components)
        return MultiVectorField(dim, 1, {(i,): c for i, c in enumerate(components)})


class DifferentialForm(_GradedMixin):
    """Degree-k field of alternating covariant tensors."""

    __slots__ = ("space_dim", "degree", "coeffs")

    def __init__(self, space_dim: int, degree: int,
                 coeffs: Mapping[Index, Poly] | None = None):
        if degree < 0:
            raise DegreeError("negative degree")
        clean: dict[Index, Poly] = {}
        for idx, poly in (coeffs or {}).items():
            idx = tuple(idx)
            _check_index(idx, degree, space_dim)
            if poly.num_vars != space_dim:
                raise ArityError("coefficient arity disagrees with space_dim")
            if not poly.is_zero:
                clean[idx] = poly
        object.__setattr__(self, "space_dim", space_dim)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("DifferentialForm is immutable")

    def shape(self) -> tuple:
        return (self.space_dim, self.degree)

    def _with_coeffs(self, coeffs) -> DifferentialForm:
        out = DifferentialForm.__new__(DifferentialForm)
        object.__setattr__(out, "space_dim", self.space_dim)
        object.__setattr__(out, "degree", self.degree)
        object.__setattr__(out, "coeffs", coeffs)
        return out

    def __repr__(self) -> str:
        return f"DifferentialForm(dim={self.space_dim}, k={self.degree}, {len(self.coeffs)} terms)"

    @staticmethod
    def zero(space_dim: int, degree: int) -> DifferentialForm:
        return DifferentialForm(space_dim, degree)

    @staticmethod
    def coordinate(space_dim: int, i: int) -> DifferentialForm:
        """The coordinate one-form dx_{i+1}."""
        return DifferentialForm(space_dim, 1, {(i,): Poly.one(space_dim)})


class TensorField(_GradedMixin):
    """A (p, q) tensor field: alternating in the p contravariant slots and
    in the q covariant slots separately."""

    __slots__ = ("space_dim", "p", "q", "coeffs")

    def __init__(self, space_dim: int, p: int, q: int,
                 coeffs: Mapping[tuple[Index, Index], Poly] | None = None):
        if p < 0 or q < 0:
            raise DegreeError("negative degree")
        clean: dict[tuple[Index, Index], Poly] = {}
        for (up, down), poly in (coeffs or {}).items():
            up, down = tuple(up), tuple(down)
            _check_index(up, p, space_dim)
            _check_index(down, q, space_dim)
            if poly.num_vars != space_dim:
                raise ArityError("coefficient arity disagrees with space_dim")
            if not poly.is_zero:
                clean[(up, down)] = poly
        object.__setattr__(self, "space_dim", space_dim)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("TensorField is immutable")

    def shape(self) -> tuple:
        return (self.space_dim, self.p, self.q)

    def _with_coeffs(self, coeffs) -> TensorField:
        out = TensorField.__new__(TensorField)
        object.__setattr__(out, "space_dim", self.space_dim)
        object.__setattr__(out, "p", self.p)
        object.__setattr__(out, "q", self.q)
        object.__setattr__(out, "coeffs", coeffs)
        return out

    def __repr__(self) -> str:
        return (f"TensorField(dim={self.space_dim}, p={self.p}, q={self.q}, "
                f"{len(self.coeffs)} terms)")

    @staticmethod
    def zero(space_dim: int, p: int, q: int) -> TensorField:
        return TensorField(space_dim, p, q)


# -- conversions ---------------------------------------------------------------

def mv_to_tensor(P: MultiVectorField) -> TensorField:
    return TensorField(P.space_dim, P.degree, 0,
                       {(idx, ()): c for idx, c in P.coeffs.items()})


def form_to_tensor(w: DifferentialForm) -> TensorField:
    return TensorField(w.space_dim, 0, w.degree,
                       {((), idx): c for idx, c in w.coeffs.items()})


def tensor_to_mv(F: TensorField) -> MultiVectorField:
    if F.q != 0:
        raise DegreeError("tensor has covariant slots")
    return MultiVectorField(F.space_dim, F.p,
                            {up: c for (up, _), c in F.coeffs.items()})


def tensor_to_form(F: TensorField) -> DifferentialForm:
    if F.p != 0:
        raise DegreeError("tensor has contravariant slots")
    return DifferentialForm(F.space_dim, F.q,
                            {down: c for (_, down), c in F.coeffs.items()})


# -- wedge and contractions ------------------------------------------------------

def wedge(a, b):
    """Exterior product of two multivector fields or two forms."""
    if isinstance(a, MultiVectorField) and isinstance(b, MultiVectorField):
        cls = MultiVectorField
    elif isinstance(a, DifferentialForm) and isinstance(b, DifferentialForm):
        cls = DifferentialForm
    else:
        raise ArityError("wedge requires two multivectors or two forms")
    if a.space_dim != b.space_dim:
        raise ArityError("wedge operands disagree on space_dim")
    out: dict[Index, Poly] = {}
    for ia, ca in a.coeffs.items():
        for ib, cb in b.coeffs.items():
            merged = merge_indices(ia, ib)
            if merged is None:
                continue
            idx, sign = merged
            term = ca * cb if sign > 0 else -(ca * cb)
            s = out.get(idx)
            s = term if s is None else s + term
            if s.is_zero:
                out.pop(idx, None)
            else:
                out[idx] = s
    return cls(a.space_dim, a.degree + b.degree, out)


def interior_product(xi: DifferentialForm, P: MultiVectorField) -> MultiVectorField:
    """Contract a one-form into the first slot of a multivector field."""
    if xi.degree != 1:
        raise DegreeError("interior product needs a one-form")
    if P.degree < 1:
        raise DegreeError("cannot contract a degree-0 multivector")
    if xi.space_dim != P.space_dim:
        raise ArityError("operands disagree on space_dim")
    out: dict[Index, Poly] = {}
    for idx, c in P.coeffs.items():
        for pos, i in enumerate(idx):
            co = xi.coeffs.get((i,))
            if co is None:
                continue
            rest = idx[:pos] + idx[pos + 1:]
            term = co * c if pos % 2 == 0 else -(co * c)
            s = out.get(rest)
            s = term if s is None else s + term
            if s.is_zero:
                out.pop(rest, None)
            else:
                out[rest] = s
    return MultiVectorField(P.space_dim, P.degree - 1, out)


def interior_vector(X: MultiVectorField, w: DifferentialForm) -> DifferentialForm:
    """Contract a vector field into the first slot of a form."""
    if X.degree != 1:
        raise DegreeError("interior product needs a vector field")
    if w.degree < 1:
        raise DegreeError("cannot contract a degree-0 form")
    if X.space_dim != w.space_dim:
        raise ArityError("operands disagree on space_dim")
    out: dict[Index, Poly] = {}
    for idx, c in w.coeffs.items():
        for pos, i in enumerate(idx):
            co = X.coeffs.get((i,))
            if co is None:
                continue
            rest = idx[:pos] + idx[pos + 1:]
            term = co * c if pos % 2 == 0 else -(co * c)
            s = out.get(rest)
            s = term if s is None else s + term
            if s.is_zero:
                out.pop(rest, None)
            else:
                out[rest] = s
    return DifferentialForm(w.space_dim, w.degree - 1, out)


# -- Schouten bracket -----------------------------------------------------------

def _odd_partial_right(P: MultiVectorField, i: int) -> MultiVectorField:
    """Right derivative with respect to the odd generator of coordinate i:
    remove i from an index tuple, signed by its distance from the end."""
    out: dict[Index, Poly] = {}
    for idx, c in P.coeffs.items():
        try:
            pos = idx.index(i)
        except ValueError:
            continue
        sign = 1 if (len(idx) - 1 - pos) % 2 == 0 else -1
        rest = idx[:pos] + idx[pos + 1:]
        out[rest] = c if sign > 0 else -c
    return MultiVectorField(P.space_dim, P.degree - 1, out)


def _coeff_diff(P: MultiVectorField, i: int) -> MultiVectorField:
    return MultiVectorField(P.space_dim, P.degree,
                            {idx: c.diff(i) for idx, c in P.coeffs.items()})


def _dot(P: MultiVectorField, Q: MultiVectorField) -> MultiVectorField:
    n = P.space_dim
    acc = MultiVectorField.zero(n, P.degree + Q.degree - 1)
    if P.degree == 0:
        return acc
    for i in range(n):
        left = _odd_partial_right(P, i)
        if left.is_zero:
            continue
        right = _coeff_diff(Q, i)
        if right.is_zero:
            continue
        acc = acc + wedge(left, right)
    return acc


def schouten_bracket(P: MultiVectorField, Q: MultiVectorField) -> MultiVectorField:
    """Schouten bracket of multivector fields; degree p + q - 1."""
    if P.space_dim != Q.space_dim:
        raise ArityError("operands disagree on space_dim")
    p, q = P.degree, Q.degree
    if p + q < 1:
        raise DegreeError("bracket of two degree-0 fields is not defined")
    first = _dot(P, Q)
    second = _dot(Q, P)
    if (p - 1) * (q - 1) % 2 == 0:
        return first - second
    return first + second


def lie_derivative_form(X: MultiVectorField, w: DifferentialForm) -> DifferentialForm:
    """Cartan formula: L_X w = i_X dw + d i_X w."""
    if w.degree == 0:
        # plain directional derivative of the coefficient
        f = w.coeffs.get((), Poly.zero(w.space_dim))
        g = Poly.zero(w.space_dim)
        for (i,), c in X.coeffs.items():
            g = g + c * f.diff(i)
        return DifferentialForm(w.space_dim, 0, {(): g})
    return interior_vector(X, derham_d(w)) + derham_d(interior_vector(X, w))


# -- de Rham differential ---------------------------------------------------------

def derham_d(w: DifferentialForm) -> DifferentialForm:
    out: dict[Index, Poly] = {}
    n = w.space_dim
    for idx, c in w.coeffs.items():
        for i in range(n):
            dc = c.diff(i)
            if dc.is_zero:
                continue
            merged = merge_indices((i,), idx)
            if merged is None:
                continue
            new, sign = merged
            term = dc if sign > 0 else -dc
            s = out.get(new)
            s = term if s is None else s + term
            if s.is_zero:
                out.pop(new, None)
            else:
                out[new] = s
    return DifferentialForm(n, w.degree + 1, out)


# -- pullback and pointwise pushforward -------------------------------------------

def pullback(f: PolyMap, w: DifferentialForm) -> DifferentialForm:
    """Pull a form on the codomain of f back along f."""
    if w.space_dim != f.codomain_dim:
        raise ArityError("form does not live on the codomain of the map")
    n = f.domain_dim
    k = w.degree
    if k == 0:
        c = w.coeffs.get(())
        if c is None:
            return DifferentialForm.zero(n, 0)
        return DifferentialForm(n, 0, {(): c.subs(list(f.components), out_vars=n)})
    J = jacobian(f)  # rows: outputs, cols: inputs
    out: dict[Index, Poly] = {}
    from itertools import combinations
    for target in combinations(range(n), k):
        acc = Poly.zero(n)
        for idx, c in w.coeffs.items():
            minor = [[J[r][col] for col in target] for r in idx]
            m = det(minor, Poly.zero(n), Poly.one(n))
            if m.is_zero:
                continue
            acc = acc + c.subs(list(f.components), out_vars=n) * m
        if not acc.is_zero:
            out[target] = acc
    return DifferentialForm(n, k, out)


PointCoeffs = dict[Index, Fraction]


def pushforward_linear(J: Sequence[Sequence[Fraction]],
                       P: Mapping[Index, Rational]) -> PointCoeffs:
    """Push a pointwise multivector (index -> scalar) through a linear map
    given by the matrix J (rows index the target space)."""
    rows = len(J)
    out: PointCoeffs = {}
    from itertools import combinations
    items = [(idx, Fraction(c)) for idx, c in P.items() if c]
    if not items:
        return {}
    k = len(items[0][0])
    if k == 0:
        return {(): sum((c for _, c in items), Fraction(0))}
    for target in combinations(range(rows), k):
        acc = Fraction(0)
        for idx, c in items:
            minor = [[Fraction(J[r][col]) for col in idx] for r in target]
            acc += c * det(minor, Fraction(0), Fraction(1))
        if acc:
            out[target] = acc
    return out


# -- pointwise evaluation -----------------------------------------------------------

def _eval_coeffs(coeffs: Mapping, point: Sequence[Rational]) -> dict:
    out = {}
    for key, poly in coeffs.items():
        v = poly.eval_at(point)
        if v:
            out[key] = v
    return out


def eval_mv(P: MultiVectorField, point: Sequence[Rational],
            covectors: Sequence[Sequence[Rational]]) -> Fraction:
    """Evaluate P at a point on k covectors."""
    if len(covectors) != P.degree:
        raise DegreeError(f"need {P.degree} covectors")
    vals = _eval_coeffs(P.coeffs, point)
    return eval_mv_point(vals, covectors)


def eval_mv_point(coeffs: Mapping[Index, Fraction],
                  covectors: Sequence[Sequence[Rational]]) -> Fraction:
    total = Fraction(0)
    for idx, c in coeffs.items():
        minor = [[Fraction(cov[i]) for i in idx] for cov in covectors]
        total += c * det(minor, Fraction(0), Fraction(1))
    return total


def eval_form(w: DifferentialForm, point: Sequence[Rational],
              vectors: Sequence[Sequence[Rational]]) -> Fraction:
    if len(vectors) != w.degree:
        raise DegreeError(f"need {w.degree} vectors")
    vals = _eval_coeffs(w.coeffs, point)
    total = Fraction(0)
    for idx, c in vals.items():
        minor = [[Fraction(vec[i]) for i in idx] for vec in vectors]
        total += c * det(minor, Fraction(0), Fraction(1))
    return total


def eval_tensor(F: TensorField, point: Sequence[Rational],
                vectors: Sequence[Sequence[Rational]],
                covectors: Sequence[Sequence[Rational]]) -> Fraction:
    """Full contraction: q vectors fill the covariant slots, p covectors
    fill the contravariant slots."""
    if len(vectors) != F.q or len(covectors) != F.p:
        raise DegreeError(f"need {F.q} vectors and {F.p} covectors")
    vals = _eval_coeffs(F.coeffs, point)
    total = Fraction(0)
    for (up, down), c in vals.items():
        m1 = [[Fraction(cov[i]) for i in up] for cov in covectors]
        m2 = [[Fraction(vec[j]) for j in down] for vec in vectors]
        d1 = det(m1, Fraction(0), Fraction(1))
        if not d1:
            continue
        d2 = det(m2, Fraction(0), Fraction(1))
        total += c * d1 * d2
    return total


# -- matrix views for degree-2 objects ------------------------------------------------

def mv2_matrix(P: MultiVectorField) -> list[list[Poly]]:
    """Antisymmetric matrix A with A[a][b] the coefficient on pair (a, b);
    as a bundle map it sends a covector xi to A^T xi."""
    if P.degree != 2:
        raise DegreeError("matrix view needs degree 2")
    n = P.space_dim
    zero = Poly.zero(n)
    A = [[zero] * n for _ in range(n)]
    for (a, b), c in P.coeffs.items():
        A[a][b] = c
        A[b][a] = -c
    return A


def form2_matrix(w: DifferentialForm) -> list[list[Poly]]:
    if w.degree != 2:
        raise DegreeError("matrix view needs degree 2")
    n = w.space_dim
    zero = Poly.zero(n)
    A = [[zero] * n for _ in range(n)]
    for (a, b), c in w.coeffs.items():
        A[a][b] = c
        A[b][a] = -c
    return A
