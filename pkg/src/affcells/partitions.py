"""Partitions, compositions, dominance order, and Jordan types.

A partition is a weakly decreasing tuple of positive integers with implicit
zero-extension.  A composition is any tuple of positive integers; its prefix
sums d_0 = 0 < d_1 < ... < d_r = n cut {1, ..., n} into consecutive blocks.

Jordan types of constant nilpotent matrices are computed by exact ranks of
powers over the rationals (fraction-free elimination never enters: Fraction
arithmetic is already exact).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import NotNilpotent, SizeMismatch
from .laurent import LaurentMatrix

__all__ = [
    "Partition",
    "Composition",
    "conjugate",
    "dominance_leq",
    "jordan_type",
    "constant_rank",
    "partitions_of",
    "compositions_of",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must weakly decrease: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-based part with zero-extension."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class Composition:
    """A composition lambda of n, with block bounds d_i = lambda_1 + ... + lambda_i."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p <= 0 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Composition":
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def d(self) -> tuple[int, ...]:
        """Prefix sums (d_0, d_1, ..., d_r) with d_0 = 0 and d_r = n."""
        out = [0]
        for p in self.parts:
            out.append(out[-1] + p)
        return tuple(out)

    def row(self, i: int) -> range:
        """The i-th consecutive block of {1, ..., n}, 1-based."""
        d = self.d
        return range(d[i - 1] + 1, d[i] + 1)

    def sorted_partition(self) -> Partition:
        return Partition(tuple(sorted(self.parts, reverse=True)))

    def column_partition(self) -> Partition:
        """The conjugate of the decreasing rearrangement; column heights."""
        return conjugate(self.sorted_partition())

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def conjugate(mu: Partition) -> Partition:
    """Transpose of the Young diagram: entry i counts parts >= i."""
    if not mu.parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in mu.parts if p >= i) for i in range(1, mu.parts[0] + 1)))


def dominance_leq(mu: Partition, nu: Partition) -> bool:
    """Prefix-sum comparison; both partitions must have the same total."""
    if mu.n != nu.n:
        raise SizeMismatch(f"totals {mu.n} and {nu.n}")
    acc_mu = acc_nu = 0
    for i in range(1, max(len(mu), len(nu)) + 1):
        acc_mu += mu.part(i)
        acc_nu += nu.part(i)
        if acc_mu > acc_nu:
            return False
    return True


def constant_rank(M: LaurentMatrix) -> int:
    """Exact rank of a constant matrix, by Gaussian elimination over the field."""
    if not M.is_constant():
        raise ValueError("constant_rank expects a constant matrix")
    n = M.n
    a = [[M.rows[i][j].coeff(0) for j in range(n)] for i in range(n)]
    rank = 0
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if a[r][col]), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = a[row][col]
        for r in range(row + 1, n):
            if a[r][col]:
                factor = a[r][col] / inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[row])]
        rank += 1
        row += 1
        if row == n:
            break
    return rank


def jordan_type(X: LaurentMatrix) -> Partition:
    """Jordan type of a constant nilpotent matrix, by ranks of powers.

    The conjugate partition has i-th entry dim ker X^i - dim ker X^{i-1}.
    Raises NotNilpotent when X is not constant or X^n != 0.
    """
    if not X.is_constant():
        raise NotNilpotent("matrix is not constant")
    n = X.n
    ranks = [n]
    power = LaurentMatrix.identity(n)
    for _ in range(n):
        power = power * X
        ranks.append(constant_rank(power))
    if ranks[-1] != 0:
        raise NotNilpotent("X^n is not zero")
    diffs = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
    cols = tuple(d for d in diffs if d > 0)
    if any(cols[i] < cols[i + 1] for i in range(len(cols) - 1)):
        raise NotNilpotent("kernel dimensions not monotone; not nilpotent")
    return conjugate(Partition(cols)) if cols else Partition((1,) * n if n else ())


def partitions_of(n: int, _max: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first within each."""
    if n == 0:
        yield Partition(())
        return
    top = n if _max is None else min(n, _max)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def compositions_of(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n, by choosing cut points."""
    if n == 0:
        return
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            yield Composition(tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1)))
