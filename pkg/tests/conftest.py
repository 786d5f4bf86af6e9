import random
from fractions import Fraction

from affinoid.fields import DifferentialForm, MultiVectorField
from affinoid.poly import Poly


def rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def rand_poly(rng: random.Random, n: int, deg: int = 2,
              terms: int = 3) -> Poly:
    out = Poly.zero(n)
    for _ in range(terms):
        e = [0] * n
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(n)] += 1
        c = rand_fraction(rng)
        if c:
            out = out + Poly(n, {tuple(e): c})
    return out


def rand_mv(rng: random.Random, dim: int, degree: int) -> MultiVectorField:
    idxs = _tuples(dim, degree)
    coeffs = {}
    for idx in idxs:
        p = rand_poly(rng, dim)
        if not p.is_zero:
            coeffs[idx] = p
    return MultiVectorField(dim, degree, coeffs)


def rand_form(rng: random.Random, dim: int, degree: int) -> DifferentialForm:
    coeffs = {}
    for idx in _tuples(dim, degree):
        p = rand_poly(rng, dim)
        if not p.is_zero:
            coeffs[idx] = p
    return DifferentialForm(dim, degree, coeffs)


def _tuples(dim: int, degree: int) -> list[tuple[int, ...]]:
    if degree == 0:
        return [()]
    out = []

    def rec(start, acc):
        if len(acc) == degree:
            out.append(tuple(acc))
            return
        for i in range(start, dim):
            rec(i + 1, acc + [i])

    rec(0, [])
    return out
