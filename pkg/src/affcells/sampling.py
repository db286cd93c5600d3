"""Seeded random generators for property sweeps.

Everything takes an explicit random.Random so runs are reproducible.
Group-valued samples are built as products of elementary matrices and
balanced diagonal pairs, which keeps determinants exactly one; a raw
"identity plus noise" draw would almost never have unit determinant.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .affine import AffinePermutation
from .laurent import LaurentMatrix, LaurentPoly
from .partitions import Composition, Partition

__all__ = [
    "random_iwahori",
    "random_finite_borel",
    "random_sl",
    "random_nilradical",
    "random_parabolic",
    "random_window",
    "jordan_matrix",
    "random_conjugate_frame",
]

_SMALL = (-2, -1, 1, 2)
_UNITS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))


def _elementary(n: int, i: int, j: int, p: LaurentPoly) -> LaurentMatrix:
    return LaurentMatrix.identity(n) + LaurentMatrix.from_entries(n, {(i, j): p})


def random_iwahori(rng: random.Random, n: int, factors: int | None = None) -> LaurentMatrix:
    """A random element of the standard Iwahori with determinant one.

    Product of constant upper elementaries, t-multiple lower elementaries,
    and balanced diagonal pairs.
    """
    if n == 1:
        return LaurentMatrix.identity(1)
    out = LaurentMatrix.identity(n)
    for _ in range(factors if factors is not None else 2 * n + 2):
        kind = rng.randrange(3)
        if kind == 0:
            i = rng.randrange(1, n)
            j = rng.randrange(i + 1, n + 1)
            out = out * _elementary(n, i, j, LaurentPoly.constant(rng.choice(_SMALL)))
        elif kind == 1:
            j = rng.randrange(1, n)
            i = rng.randrange(j + 1, n + 1)
            out = out * _elementary(n, i, j, LaurentPoly.monomial(1, rng.choice(_SMALL)))
        else:
            i = rng.randrange(1, n + 1)
            j = rng.randrange(1, n + 1)
            if i == j:
                continue
            u = rng.choice(_UNITS)
            diag = [LaurentPoly.one()] * n
            diag[i - 1] = LaurentPoly.constant(u)
            diag[j - 1] = LaurentPoly.constant(1 / u)
            out = out * LaurentMatrix.diagonal(diag)
    return out


def random_finite_borel(rng: random.Random, n: int) -> LaurentMatrix:
    """A random constant upper-triangular matrix with determinant one."""
    out = LaurentMatrix.identity(n)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            c = rng.choice(_SMALL + (0, 0))
            if c:
                out = out * _elementary(n, i, j, LaurentPoly.constant(c))
    for i in range(1, n):
        u = rng.choice(_UNITS)
        diag = [LaurentPoly.one()] * n
        diag[i - 1] = LaurentPoly.constant(u)
        diag[i] = LaurentPoly.constant(1 / u)
        out = out * LaurentMatrix.diagonal(diag)
    return out


def random_sl(rng: random.Random, n: int, factors: int | None = None) -> LaurentMatrix:
    """A random constant matrix of determinant one (product of elementaries)."""
    out = LaurentMatrix.identity(n)
    if n == 1:
        return out
    for _ in range(factors if factors is not None else 2 * n):
        i = rng.randrange(1, n + 1)
        j = rng.randrange(1, n + 1)
        if i == j:
            continue
        out = out * _elementary(n, i, j, LaurentPoly.constant(rng.choice(_SMALL)))
    return out


def random_nilradical(rng: random.Random, lam: Composition) -> LaurentMatrix:
    """A random constant matrix carrying each standard block into earlier ones."""
    n = lam.n
    d = lam.d
    entries = {}
    for bi in range(1, lam.r + 1):
        for bj in range(bi + 1, lam.r + 1):
            for p in range(d[bi - 1] + 1, d[bi] + 1):
                for q in range(d[bj - 1] + 1, d[bj] + 1):
                    c = rng.choice(_SMALL + (0,))
                    if c:
                        entries[(p, q)] = LaurentPoly.constant(c)
    return LaurentMatrix.from_entries(n, entries) if entries else LaurentMatrix.zero(n)


def random_parabolic(rng: random.Random, lam: Composition) -> LaurentMatrix:
    """A random constant block-upper-triangular matrix with determinant one."""
    n = lam.n
    d = lam.d
    block = [next(b for b in range(1, lam.r + 1) if d[b - 1] < p <= d[b]) for p in range(1, n + 1)]
    out = LaurentMatrix.identity(n)
    for _ in range(2 * n):
        i = rng.randrange(1, n + 1)
        j = rng.randrange(1, n + 1)
        if i == j or block[i - 1] > block[j - 1]:
            continue
        out = out * _elementary(n, i, j, LaurentPoly.constant(rng.choice(_SMALL)))
    for _ in range(2):
        i = rng.randrange(1, n + 1)
        j = rng.randrange(1, n + 1)
        if i == j:
            continue
        u = rng.choice(_UNITS)
        diag = [LaurentPoly.one()] * n
        diag[i - 1] = LaurentPoly.constant(u)
        diag[j - 1] = LaurentPoly.constant(1 / u)
        out = out * LaurentMatrix.diagonal(diag)
    return out


def random_window(rng: random.Random, n: int, spread: int = 3) -> AffinePermutation:
    """A random affine permutation with orders bounded by roughly `spread`."""
    sigma = list(range(1, n + 1))
    rng.shuffle(sigma)
    c = [rng.randint(-spread, spread) for _ in range(n - 1)]
    c.append(-sum(c))
    return AffinePermutation(tuple(sigma[i] - c[i] * n for i in range(n)))


def jordan_matrix(mu: Partition) -> LaurentMatrix:
    """The nilpotent in Jordan form with block sizes mu."""
    n = mu.n
    entries = {}
    start = 0
    for size in mu.parts:
        for k in range(1, size):
            entries[(start + k, start + k + 1)] = LaurentPoly.one()
        start += size
    return LaurentMatrix.from_entries(n, entries) if entries else LaurentMatrix.zero(n)


def random_conjugate_frame(rng: random.Random, n: int) -> tuple[LaurentMatrix, LaurentMatrix]:
    """A random determinant-one frame together with its exact inverse."""
    from .laurent import invert

    g = random_sl(rng, n)
    return g, invert(g)
