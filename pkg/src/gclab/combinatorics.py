"""Partitions, tableaux, Kostka numbers and the closed-form counts for G(A_n)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, prod
from typing import Iterator, Sequence


class CombinatoricsError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple

    def __init__(self, parts: Sequence[int]):
        ps = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in ps):
            raise CombinatoricsError(f"negative part in {parts}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise CombinatoricsError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", ps)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def padded(self, length: int | None = None) -> tuple:
        length = self.n if length is None else length
        if length < len(self.parts):
            raise CombinatoricsError("padding length shorter than the partition")
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition([sum(1 for p in self.parts if p > i) for i in range(self.parts[0])])

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


@dataclass(frozen=True)
class Multidegree:
    entries: tuple
    n: int

    def __init__(self, entries: Sequence[int], n: int):
        e = tuple(int(x) for x in entries)
        if len(e) != n - 1:
            raise CombinatoricsError(f"multidegree for n={n} needs {n - 1} entries, got {len(e)}")
        if any(x < 0 for x in e):
            raise CombinatoricsError(f"negative multidegree entry in {e}")
        object.__setattr__(self, "entries", e)
        object.__setattr__(self, "n", n)

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def complement(self) -> int:
        return self.n - self.total

    @property
    def is_representable(self) -> bool:
        return self.total <= self.n

    def ordered(self) -> tuple:
        """The composition (n - sum d, d_1, ..., d_{n-1})."""
        return (self.complement,) + self.entries


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    max_part = n if max_part is None else min(max_part, n)

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for ps in rec(n, max_part):
        yield Partition(ps)


def dominates(mu, la) -> bool:
    mu, la = as_partition(mu), as_partition(la)
    if mu.n != la.n:
        raise CombinatoricsError(f"size mismatch: |{mu}| != |{la}|")
    a = b = 0
    for i in range(max(len(mu), len(la))):
        a += mu.parts[i] if i < len(mu) else 0
        b += la.parts[i] if i < len(la) else 0
        if a < b:
            return False
    return True


def partition_of_multidegree(d) -> Partition:
    if not isinstance(d, Multidegree):
        raise CombinatoricsError("expected a Multidegree")
    if d.complement < 0:
        raise CombinatoricsError(f"sum of {d.entries} exceeds n={d.n}: the component is zero")
    return Partition(sorted(d.ordered(), reverse=True))


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    labels: tuple  # read left-to-right, top-down

    def __post_init__(self):
        if len(self.labels) != self.shape.n:
            raise CombinatoricsError("label count does not match the shape")

    def rows(self) -> list[tuple]:
        out, k = [], 0
        for p in self.shape:
            out.append(tuple(self.labels[k:k + p]))
            k += p
        return out

    def content(self) -> tuple:
        m = max(self.labels, default=0)
        return tuple(self.labels.count(i) for i in range(1, m + 1))

    def is_semistandard(self) -> bool:
        rows = self.rows()
        for r in rows:
            if any(r[i] > r[i + 1] for i in range(len(r) - 1)):
                return False
        for i in range(1, len(rows)):
            if any(rows[i - 1][j] >= rows[i][j] for j in range(len(rows[i]))):
                return False
        return True

    def columns(self) -> list[tuple]:
        rows = self.rows()
        return [tuple(r[j] for r in rows if j < len(r)) for j in range(len(rows[0]) if rows else 0)]


@dataclass(frozen=True)
class Tabloid:
    shape: Partition
    row_sets: tuple  # tuple of frozensets

    def __post_init__(self):
        if tuple(len(r) for r in self.row_sets) != self.shape.parts:
            raise CombinatoricsError("row sizes do not match the shape")
        allv = set().union(*self.row_sets) if self.row_sets else set()
        if allv != set(range(1, self.shape.n + 1)):
            raise CombinatoricsError("rows must partition {1..n}")

    @classmethod
    def of_numbering(cls, shape: Partition, numbering: Sequence[int]) -> "Tabloid":
        rows, k = [], 0
        for p in shape:
            rows.append(frozenset(numbering[k:k + p]))
            k += p
        return cls(shape, tuple(rows))


def ssyt_enumerate(mu, la) -> list[Tableau]:
    """Semistandard tableaux of shape mu and content la (la may be any composition)."""
    mu = as_partition(mu)
    content = tuple(la.parts if isinstance(la, Partition) else la)
    if sum(content) != mu.n:
        raise CombinatoricsError("shape and content sizes differ")
    shape = mu.parts
    out: list[Tableau] = []
    # fill label by label: each label occupies a horizontal strip
    def rec(label, filled, grid):
        if label > len(content):
            if all(filled[i] == shape[i] for i in range(len(shape))):
                out.append(Tableau(mu, tuple(x for row in grid for x in row)))
            return
        c = content[label - 1]
        # distribute c boxes over rows as a horizontal strip
        def strip(i, left, new):
            if i == len(shape):
                if left == 0:
                    g = [row + [label] * (new[r] - filled[r]) for r, row in enumerate(grid)]
                    rec(label + 1, new, g)
                return
            cap = shape[i] - filled[i]
            if i > 0:
                # may not exceed row above's length before this label
                cap = min(cap, filled[i - 1] - filled[i])
            for k in range(min(cap, left), -1, -1):
                strip(i + 1, left - k, new + [filled[i] + k])
        strip(0, c, [])

    rec(1, [0] * len(shape), [[] for _ in shape])
    return out


@lru_cache(maxsize=None)
def _kostka(mu: tuple, la: tuple) -> int:
    return len(ssyt_enumerate(Partition(mu), la))


def kostka(mu, la) -> int:
    mu = as_partition(mu)
    la_t = tuple(la.parts if isinstance(la, Partition) else la)
    if sum(la_t) != mu.n:
        raise CombinatoricsError("shape and content sizes differ")
    la_sorted = Partition(sorted(la_t, reverse=True))
    if not dominates(mu, la_sorted):
        return 0
    # Kostka numbers are symmetric in the content order
    return _kostka(mu.parts, la_sorted.parts)


def hook_lengths(mu) -> list[list[int]]:
    mu = as_partition(mu)
    conj = mu.conjugate().parts
    return [[mu[i] - j + conj[j] - i - 1 for j in range(mu[i])] for i in range(len(mu))]


def specht_dim(mu) -> int:
    mu = as_partition(mu)
    return factorial(mu.n) // prod(h for row in hook_lengths(mu) for h in row)


def standard_tableaux(mu) -> list[Tableau]:
    mu = as_partition(mu)
    return ssyt_enumerate(mu, (1,) * mu.n)


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def m_lambda(la, n: int) -> int:
    la = as_partition(la)
    if la.n != n:
        raise CombinatoricsError(f"|{la}| != {n}")
    padded = la.padded(n)
    counts: dict[int, int] = {}
    for x in padded[1:]:
        counts[x] = counts.get(x, 0) + 1
    return factorial(n - 1) // prod(factorial(k) for k in counts.values())


def permutation_module_dim(la) -> int:
    la = as_partition(la)
    return factorial(la.n) // prod(factorial(p) for p in la)


def _eq1_terms(n: int):
    """Yields (lambda, mu, m_lambda * K * dim V_mu) over pairs with mu_1 = lambda_1."""
    for la in partitions(n):
        m = m_lambda(la, n)
        for mu in partitions(n, max_part=la[0]):
            if mu[0] != la[0]:
                continue
            k = kostka(mu, la)
            if k:
                yield la, mu, m * k * specht_dim(mu)


def d_of_n(n: int) -> int:
    if n < 1:
        raise CombinatoricsError("n must be positive")
    return sum(t for _, _, t in _eq1_terms(n))


def hilbert_formula(n: int, r: int = 0) -> tuple:
    h = [0] * n
    for la, _, t in _eq1_terms(n):
        i = n - la[0]
        h[i] += t
    if r:
        if n >= 4 and not 0 <= r <= big_r(n):
            raise CombinatoricsError(f"r={r} outside [0, R({n})]")
        h[(n + 1) // 2] -= r
    return tuple(h)


def socle_partitions_family(n: int) -> list[Partition]:
    """Partitions with lambda_1 = floor(n/2) and lambda_2 <= floor(n/2) - 2."""
    f = n // 2
    return [la for la in partitions(n) if la[0] == f and (len(la) < 2 or la[1] <= f - 2)]


def big_r(n: int) -> int:
    if n == 4:
        return 12
    if n == 5:
        return 40
    if n >= 6 and n % 2 == 0:
        return catalan(n // 2) * sum(m_lambda(la, n) for la in socle_partitions_family(n))
    raise CombinatoricsError(f"R({n}) is undefined (only n=4, n=5 and even n>=6 are covered)")


def compositions_of_multidegrees(n: int, total: int) -> Iterator[tuple]:
    """All d in N^{n-1} with sum d = total, in lexicographically decreasing order."""
    def rec(k, rest):
        if k == 1:
            yield (rest,)
            return
        for x in range(rest, -1, -1):
            for tail in rec(k - 1, rest - x):
                yield (x,) + tail

    if n == 1:
        if total == 0:
            yield ()
        return
    yield from rec(n - 1, total)


def all_multidegrees(n: int) -> Iterator[tuple]:
    for t in range(n + 1):
        yield from compositions_of_multidegrees(n, t)


def distinct_permutations(seq: Sequence[int]) -> list[tuple]:
    return sorted(set(permutations(seq)))
