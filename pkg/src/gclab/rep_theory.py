"""Specht-module structure of the components of G(A_n).

G(A_n)_d decomposes as a sum of K_{mu,lambda} copies of V_mu over partitions
mu dominating lambda (the partition of d) with mu_1 = lambda_1.  The copies
are realized by the maps theta_{T,sigma}: M_mu -> G(A_n)_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Mapping, Sequence

from gmpy2 import mpq

from .combinatorics import (
    CombinatoricsError,
    Multidegree,
    Partition,
    Tableau,
    as_partition,
    compositions_of_multidegrees,
    kostka,
    partition_of_multidegree,
    partitions,
    specht_dim,
    ssyt_enumerate,
    standard_tableaux,
)
from .gc_ring import GcRing, GradedRing, RingError, RingVector, mono_json
from .linalg import ONE, Echelon, add_scaled


@dataclass(frozen=True)
class Decomposition:
    n: int
    d: tuple
    lam: Partition | None
    summands: tuple  # (mu, multiplicity, dim V_mu)

    @property
    def total(self) -> int:
        return sum(k * v for _, k, v in self.summands)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": list(self.d),
            "lambda": list(self.lam.parts) if self.lam else None,
            "summands": [[list(mu.parts), k, v] for mu, k, v in self.summands],
            "total": self.total,
        }


def structure_dim(n: int, d: Sequence[int]) -> int:
    """Dimension of G(A_n)_d predicted by the Specht decomposition."""
    return _decompose(n, tuple(d)).total


def _decompose(n: int, d: tuple) -> Decomposition:
    md = Multidegree(d, n)
    if md.complement < 0 or md.complement < max(d, default=0):
        return Decomposition(n, d, None, ())
    lam = partition_of_multidegree(md)
    out = []
    for mu in partitions(n, max_part=lam[0]):
        if mu[0] != lam[0]:
            continue
        k = kostka(mu, lam)
        if k:
            out.append((mu, k, specht_dim(mu)))
    return Decomposition(n, d, lam, tuple(out))


def decompose(n: int, d: Sequence[int], ring: GcRing | None = None) -> Decomposition:
    dec = _decompose(n, tuple(d))
    if ring is not None:
        got = ring.dim(tuple(d))
        if got != dec.total:
            raise AssertionError(f"structure theorem mismatch at n={n}, d={tuple(d)}: {dec.total} vs {got}")
    return dec


def ordered_partition(n: int, d: Sequence[int]) -> tuple:
    return (n - sum(d),) + tuple(d)


def sigma_inverse(a: Sequence[int]) -> tuple:
    """sigma^{-1}(k) for k = 1..n: stable descending sort positions (1-based) of a."""
    order = sorted(range(len(a)), key=lambda i: (-a[i], i))
    return tuple(i + 1 for i in order)


def alpha(labels: Sequence[int], a: Sequence[int] | None = None) -> tuple:
    """Column monomial of a filling: box i carries label S(i) and gives x_{S(i)-1, i}."""
    labels = tuple(labels)
    if a is not None:
        content = tuple(labels.count(k) for k in range(1, len(a) + 1))
        if content != tuple(a) or len(labels) != sum(a):
            raise CombinatoricsError(f"filling {labels} does not have content {tuple(a)}")
    return tuple(x - 1 for x in labels)


def tabloid_key(rows: Sequence[Sequence[int]]) -> tuple:
    return tuple(tuple(sorted(r)) for r in rows)


def standard_numbering(mu: Partition) -> list[list[int]]:
    rows, k = [], 1
    for p in mu:
        rows.append(list(range(k, k + p)))
        k += p
    return rows


@dataclass(frozen=True)
class Polytabloid:
    t: tuple  # rows of the standard tableau
    expansion: tuple  # (tabloid key, sign)

    def as_dict(self) -> dict:
        return dict(self.expansion)


def polytabloid(t: Sequence[Sequence[int]]) -> Polytabloid:
    """Signed sum over the column stabilizer of t of the tabloids pi{t}."""
    rows = [list(r) for r in t]
    ncols = len(rows[0]) if rows else 0
    cols = [[r[j] for r in rows if j < len(r)] for j in range(ncols)]
    out: dict = {}
    perms_per_col = [list(permutations(range(len(c)))) for c in cols]
    for choice in product(*perms_per_col):
        sign = 1
        new_rows = [list(r) for r in rows]
        for j, p in enumerate(choice):
            sign *= _perm_sign(p)
            for src, dst in enumerate(p):
                new_rows[dst][j] = cols[j][src]
        key = tabloid_key(new_rows)
        out[key] = out.get(key, 0) + sign
    return Polytabloid(tuple(tuple(r) for r in rows), tuple((k, v) for k, v in sorted(out.items()) if v))


def _perm_sign(p: Sequence[int]) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _distinct_arrangements(labels: Sequence[int]) -> list[tuple]:
    return sorted(set(permutations(labels)))


@dataclass
class ThetaMap:
    """theta_{T,sigma}: M_mu -> G(A_n)_d for a semistandard T of shape mu, content lambda."""

    n: int
    d: tuple
    T: Tableau
    ring: GradedRing

    def __post_init__(self):
        if not self.T.is_semistandard():
            raise CombinatoricsError("theta needs a semistandard tableau")
        self.a = ordered_partition(self.n, self.d)
        self.sinv = sigma_inverse(self.a)
        lam = tuple(sorted(self.a, reverse=True))
        content = self.T.content()
        if tuple(content) + (0,) * (self.n - len(content)) != lam:
            raise CombinatoricsError(f"tableau content {content} does not match {lam}")
        # labels of sigma^{-1} T row by row
        self.row_labels = [tuple(self.sinv[x - 1] for x in row) for row in self.T.rows()]
        self._row_arr = [_distinct_arrangements(r) for r in self.row_labels]
        self._cache: dict = {}

    @property
    def mu(self) -> Partition:
        return self.T.shape

    def image_of_tabloid(self, key: tuple) -> dict:
        got = self._cache.get(key)
        if got is not None:
            return got
        out: dict = {}
        for choice in product(*self._row_arr):
            m = [0] * self.n
            for cols, labels in zip(key, choice):
                for c, lab in zip(cols, labels):
                    m[c - 1] = lab - 1
            add_scaled(out, self.ring.nf(tuple(m)), ONE)
        self._cache[key] = out
        return out

    def apply(self, element: Mapping[tuple, object]) -> RingVector:
        out: dict = {}
        for key, c in element.items():
            if c:
                add_scaled(out, self.image_of_tabloid(key), mpq(c))
        return RingVector.make(self.d, out)


def theta_apply(theta: ThetaMap, element: Mapping[tuple, object]) -> RingVector:
    return theta.apply(element)


def theta_maps(ring: GradedRing, d: Sequence[int], mu) -> list[ThetaMap]:
    n = ring.n
    d = tuple(d)
    mu = as_partition(mu)
    lam = tuple(sorted(ordered_partition(n, d), reverse=True))
    lam = tuple(x for x in lam if x)
    if sum(lam) != mu.n:
        return []
    return [ThetaMap(n, d, T, ring) for T in ssyt_enumerate(mu, lam)]


def theta_image_vectors(theta: ThetaMap) -> list[RingVector]:
    return [theta.apply(polytabloid(t.rows()).as_dict()) for t in standard_tableaux(theta.mu)]


def span_dim(vectors: Sequence[RingVector], ambient: int) -> int:
    ech = Echelon(ambient)
    for v in vectors:
        ech.add(v.as_dict())
    return ech.rank


def socle_shape(n: int) -> Partition:
    D = (n + 1) // 2
    if n % 2 == 0:
        return Partition((D, D))
    return Partition((D - 1, D - 1, 1))


def socle_basis_min_degree(ring: GradedRing, d: Sequence[int], check: bool = True) -> list[RingVector]:
    """theta-images of polytabloids spanning the minimal-degree socle copies in G_d."""
    n = ring.n
    d = tuple(d)
    D = (n + 1) // 2
    if sum(d) != D:
        raise RingError(f"multidegree {d} is not of total degree {D}")
    out = []
    for theta in theta_maps(ring, d, socle_shape(n)):
        vecs = theta_image_vectors(theta)
        if check:
            for v in vecs:
                ok, var = ring.is_socle(v)
                if not ok:
                    raise AssertionError(f"theta image in {d} not killed by x_{var}")
        out.extend(vecs)
    return out


def independent_subset(vectors: Sequence[RingVector], ambient: int) -> list[RingVector]:
    ech = Echelon(ambient)
    keep = []
    for v in vectors:
        if ech.add(v.as_dict()) is not None:
            keep.append(v)
    return keep


def admissible_socle_multidegrees(n: int) -> list[tuple]:
    D = (n + 1) // 2
    cap = n // 2 - 2
    if cap < 0:
        return []
    return sorted((d for d in compositions_of_multidegrees(n, D) if max(d) <= cap), reverse=True)


def epsilon_shape(n: int) -> Partition:
    """The shape (D, D-1) used for odd n in degree D-1."""
    D = (n + 1) // 2
    return Partition((D, D - 1))


def decomposition_json(dec: Decomposition) -> dict:
    return dec.to_json()


def tableau_json(T: Tableau) -> list:
    return [list(r) for r in T.rows()]


def socle_vectors_json(ring: GradedRing, vectors: Sequence[RingVector]) -> list:
    return [ring.vector_json(v) for v in vectors]
