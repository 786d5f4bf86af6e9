"""Exact multivariate polynomial arithmetic over the rationals.

A polynomial in n variables is stored as a map from exponent tuples
(one nonnegative integer per variable) to nonzero Fraction coefficients.
The zero polynomial stores no terms.  Keeping the map free of zero
coefficients makes the representation canonical: two polynomials are
equal exactly when their variable counts and term maps coincide, so
``==`` decides polynomial identity.

Polynomial maps between coordinate spaces are tuples of polynomials and
compose by substitution.  Jacobians are matrices of partial derivatives,
either symbolic (entries are polynomials) or evaluated at a rational
point.

Text syntax, used inside JSON payloads: a sum of terms
``c * x1^e1 * ... * xn^en`` with ``c`` a rational literal like ``3/2``
and 1-based variable names ``x1..xn``.  ``format_poly`` emits the
canonical form (graded-lex term order, highest first) and ``parse_poly``
round-trips it bit-exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence


class ArityError(ValueError):
    """Operands disagree on variable counts or map dimensions."""


Exponent = tuple[int, ...]
Rational = Fraction | int


def _as_fraction(c: Rational) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected a rational scalar, got {type(c).__name__}")


def grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    """Sort key for graded lexicographic monomial order."""
    return (sum(exp), exp)


class Poly:
    """Immutable multivariate polynomial with Fraction coefficients."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[Exponent, Rational] | None = None):
        if num_vars < 0:
            raise ArityError("num_vars must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != num_vars:
                    raise ArityError(
                        f"exponent {exp} has length {len(exp)}, expected {num_vars}")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = _as_fraction(coeff)
                if c:
                    clean[exp] = c
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(num_vars: int) -> Poly:
        return Poly(num_vars)

    @staticmethod
    def const(num_vars: int, c: Rational) -> Poly:
        return Poly(num_vars, {(0,) * num_vars: _as_fraction(c)})

    @staticmethod
    def one(num_vars: int) -> Poly:
        return Poly.const(num_vars, 1)

    @staticmethod
    def variable(num_vars: int, i: int) -> Poly:
        """The coordinate polynomial x_{i+1} (0-based index i)."""
        if not 0 <= i < num_vars:
            raise ArityError(f"variable index {i} out of range for {num_vars} vars")
        exp = tuple(1 if j == i else 0 for j in range(num_vars))
        return Poly(num_vars, {exp: Fraction(1)})

    # -- predicates and views ----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is reported as -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_value(self) -> Fraction | None:
        """The value of a constant polynomial, None if non-constant."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            exp, c = next(iter(self.terms.items()))
            if not any(exp):
                return c
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Poly({self.num_vars}, {format_poly(self)!r})"

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _check_arity(self, other: Poly) -> None:
        if self.num_vars != other.num_vars:
            raise ArityError(
                f"mixed variable counts {self.num_vars} and {other.num_vars}")

    def __add__(self, other: Poly | Rational) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.num_vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_arity(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp, Fraction(0)) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        out = Poly.__new__(Poly)
        object.__setattr__(out, "num_vars", self.num_vars)
        object.__setattr__(out, "terms", terms)
        return out

    __radd__ = __add__

    def __neg__(self) -> Poly:
        out = Poly.__new__(Poly)
        object.__setattr__(out, "num_vars", self.num_vars)
        object.__setattr__(out, "terms", {e: -c for e, c in self.terms.items()})
        return out

    def __sub__(self, other: Poly | Rational) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.num_vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Rational) -> Poly:
        return Poly.const(self.num_vars, other) - self

    def __mul__(self, other: Poly | Rational) -> Poly:
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Poly.zero(self.num_vars)
            out = Poly.__new__(Poly)
            object.__setattr__(out, "num_vars", self.num_vars)
            object.__setattr__(out, "terms",
                               {e: k * c for e, k in self.terms.items()})
            return out
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_arity(other)
        terms: dict[Exponent, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(exp, Fraction(0)) + ca * cb
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        out = Poly.__new__(Poly)
        object.__setattr__(out, "num_vars", self.num_vars)
        object.__setattr__(out, "terms", terms)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.num_vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and substitution -------------------------------------------

    def diff(self, i: int) -> Poly:
        """Partial derivative with respect to variable i (0-based)."""
        if not 0 <= i < self.num_vars:
            raise ArityError(f"variable index {i} out of range")
        terms: dict[Exponent, Fraction] = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e:
                new = list(exp)
                new[i] = e - 1
                terms[tuple(new)] = c * e
        return Poly(self.num_vars, terms)

    def subs(self, args: Sequence[Poly], out_vars: int | None = None) -> Poly:
        """Substitute args[i] for variable i.  All args share a variable
        count, which becomes the variable count of the result; for a
        polynomial in zero variables pass out_vars explicitly."""
        if len(args) != self.num_vars:
            raise ArityError(
                f"{self.num_vars} substitutions required, got {len(args)}")
        if args:
            m = args[0].num_vars
            for a in args:
                if a.num_vars != m:
                    raise ArityError("substitution arguments disagree on arity")
        elif out_vars is None:
            raise ArityError("out_vars required when substituting into 0 variables")
        else:
            m = out_vars
        if out_vars is not None and out_vars != m:
            raise ArityError("out_vars disagrees with substitution arguments")
        # cache powers of each argument as they are needed
        pows: list[list[Poly]] = [[Poly.one(m)] for _ in range(self.num_vars)]
        result = Poly.zero(m)
        for exp, c in self.terms.items():
            term = Poly.const(m, c)
            for i, e in enumerate(exp):
                if not e:
                    continue
                cache = pows[i]
                while len(cache) <= e:
                    cache.append(cache[-1] * args[i])
                term = term * cache[e]
            result = result + term
        return result

    def eval_at(self, point: Sequence[Rational]) -> Fraction:
        if len(point) != self.num_vars:
            raise ArityError(
                f"point has {len(point)} coordinates, expected {self.num_vars}")
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            val = c
            for v, e in zip(pt, exp):
                if e:
                    val *= v ** e
            total += val
        return total

    def embed(self, num_vars: int, offset: int = 0) -> Poly:
        """Reinterpret in a larger variable space, shifting variable i to
        i + offset."""
        if offset < 0 or self.num_vars + offset > num_vars:
            raise ArityError("embedding does not fit")
        pad_l = (0,) * offset
        pad_r = (0,) * (num_vars - offset - self.num_vars)
        return Poly(num_vars, {pad_l + exp + pad_r: c for exp, c in self.terms.items()})


# -- text syntax -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|x(\d+)|(\^)|(\*)|(\+)|(-))")


def format_poly(p: Poly) -> str:
    """Canonical text form: graded-lex order, highest term first."""
    if p.is_zero:
        return "0"
    pieces: list[str] = []
    for exp in sorted(p.terms, key=grlex_key, reverse=True):
        c = p.terms[exp]
        factors = []
        for i, e in enumerate(exp):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        mag = abs(c)
        coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        if factors and mag == 1:
            body = " * ".join(factors)
        elif factors:
            body = " * ".join([coeff] + factors)
        else:
            body = coeff
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def _tokenize(text: str) -> Iterator[tuple[str, str]]:
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot parse polynomial near {text[pos:pos + 12]!r}")
            return
        pos = m.end()
        num, var, caret, star, plus, minus = m.groups()
        if num is not None:
            yield ("num", num)
        elif var is not None:
            yield ("var", var)
        elif caret:
            yield ("op", "^")
        elif star:
            yield ("op", "*")
        elif plus:
            yield ("op", "+")
        elif minus:
            yield ("op", "-")


def parse_poly(text: str, num_vars: int) -> Poly:
    """Parse the canonical text syntax; inverse of format_poly."""
    tokens = list(_tokenize(text))
    if not tokens:
        raise ValueError("empty polynomial text")
    terms: dict[Exponent, Fraction] = {}
    i = 0
    n = len(tokens)

    def term_done(coeff: Fraction, exp: list[int]) -> None:
        e = tuple(exp)
        s = terms.get(e, Fraction(0)) + coeff
        if s:
            terms[e] = s
        else:
            terms.pop(e, None)

    while i < n:
        sign = Fraction(1)
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError("dangling sign in polynomial text")
        coeff = sign
        exp = [0] * num_vars
        expect_factor = True
        while i < n:
            kind, val = tokens[i]
            if kind == "op" and val in "+-":
                break
            if kind == "op" and val == "*":
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise ValueError("missing '*' between factors")
            if kind == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind == "var":
                idx = int(val) - 1
                if not 0 <= idx < num_vars:
                    raise ValueError(f"variable x{val} out of range for {num_vars} vars")
                e = 1
                i += 1
                if i + 1 < n and tokens[i] == ("op", "^") and tokens[i + 1][0] == "num":
                    etext = tokens[i + 1][1]
                    if "/" in etext:
                        raise ValueError("fractional exponent")
                    e = int(etext)
                    i += 2
                exp[idx] += e
            else:
                raise ValueError(f"unexpected token {val!r}")
            expect_factor = False
        if expect_factor:
            raise ValueError("empty term in polynomial text")
        term_done(coeff, exp)
    return Poly(num_vars, terms)


# -- polynomial maps ----------------------------------------------------------

class PolyMap:
    """A polynomial map between coordinate spaces, one Poly per output."""

    __slots__ = ("domain_dim", "codomain_dim", "components")

    def __init__(self, domain_dim: int, components: Iterable[Poly]):
        comps = tuple(components)
        for c in comps:
            if c.num_vars != domain_dim:
                raise ArityError(
                    f"component in {c.num_vars} vars, domain has {domain_dim}")
        object.__setattr__(self, "domain_dim", domain_dim)
        object.__setattr__(self, "codomain_dim", len(comps))
        object.__setattr__(self, "components", comps)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("PolyMap is immutable")

    @staticmethod
    def identity(n: int) -> PolyMap:
        return PolyMap(n, [Poly.variable(n, i) for i in range(n)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMap):
            return NotImplemented
        return (self.domain_dim == other.domain_dim
                and self.components == other.components)

    def __repr__(self) -> str:
        body = ", ".join(format_poly(c) for c in self.components)
        return f"PolyMap({self.domain_dim} -> {self.codomain_dim}: [{body}])"

    def __call__(self, point: Sequence[Rational]) -> tuple[Fraction, ...]:
        return tuple(c.eval_at(point) for c in self.components)

    def block(self, start: int, count: int) -> PolyMap:
        """The sub-map made of components [start, start + count)."""
        if start < 0 or start + count > self.codomain_dim:
            raise ArityError("block out of range")
        return PolyMap(self.domain_dim, self.components[start:start + count])

    @staticmethod
    def stack(maps: Sequence[PolyMap]) -> PolyMap:
        """Concatenate outputs of maps sharing one domain."""
        if not maps:
            raise ArityError("cannot stack zero maps")
        d = maps[0].domain_dim
        comps: list[Poly] = []
        for m in maps:
            if m.domain_dim != d:
                raise ArityError("stacked maps disagree on domain")
            comps.extend(m.components)
        return PolyMap(d, comps)


def polymap_compose(f: PolyMap, g: PolyMap) -> PolyMap:
    """The composite f after g."""
    if f.domain_dim != g.codomain_dim:
        raise ArityError(
            f"cannot compose: f expects {f.domain_dim}, g produces {g.codomain_dim}")
    comps = [c.subs(list(g.components), out_vars=g.domain_dim) for c in f.components]
    return PolyMap(g.domain_dim, comps)


def jacobian(f: PolyMap, at: Sequence[Rational] | None = None):
    """Matrix of partials J[i][j] = d f_i / d x_j.  Symbolic entries when
    at is None, Fractions when a point is given."""
    rows = [[c.diff(j) for j in range(f.domain_dim)] for c in f.components]
    if at is None:
        return rows
    return [[e.eval_at(at) for e in row] for row in rows]
