"""Exact sparse linear algebra over the rationals.

Vectors are plain ``dict[int, mpq]`` maps from column index to a nonzero
entry.  Matrices are stored row-major.  Nothing here ever touches floating
point.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

Q = mpq
ZERO = mpq(0)
ONE = mpq(1)

SparseVec = dict


class DimensionMismatch(ValueError):
    pass


class ContainmentError(ValueError):
    """Raised when a subspace is not contained in another one."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


def as_rational(x) -> mpq:
    if isinstance(x, str):
        return mpq(Fraction(x))
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def rational_str(x) -> str:
    x = mpq(x)
    return f"{x.numerator}/{x.denominator}"


def clean(vec: Mapping[int, object]) -> dict:
    return {k: mpq(v) for k, v in vec.items() if v != 0}


def add_scaled(target: dict, src: Mapping[int, mpq], c: mpq) -> None:
    """target += c * src, in place, dropping cancelled entries."""
    for k, v in src.items():
        w = target.get(k)
        if w is None:
            target[k] = c * v
        else:
            w = w + c * v
            if w:
                target[k] = w
            else:
                del target[k]


def bitsize(x: mpq) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


@dataclass(frozen=True)
class SparseMatrix:
    n_rows: int
    n_cols: int
    rows: tuple  # tuple of tuples of (col, value), columns strictly increasing

    @classmethod
    def from_dicts(cls, n_rows: int, n_cols: int, rows: Sequence[Mapping[int, object]]):
        if len(rows) != n_rows:
            raise DimensionMismatch(f"expected {n_rows} rows, got {len(rows)}")
        packed = []
        for r in rows:
            items = []
            for c, v in sorted(r.items()):
                if not 0 <= c < n_cols:
                    raise DimensionMismatch(f"column {c} out of range for {n_cols} columns")
                v = as_rational(v)
                if v:
                    items.append((c, v))
            packed.append(tuple(items))
        return cls(n_rows, n_cols, tuple(packed))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[object]], n_cols: int | None = None):
        if n_cols is None:
            n_cols = len(dense[0]) if dense else 0
        return cls.from_dicts(
            len(dense), n_cols, [{j: v for j, v in enumerate(row) if v != 0} for row in dense]
        )

    @classmethod
    def zero(cls, n_rows: int, n_cols: int):
        return cls(n_rows, n_cols, tuple(() for _ in range(n_rows)))

    def row_dict(self, i: int) -> dict:
        return dict(self.rows[i])

    def to_dense(self) -> list[list[mpq]]:
        out = [[ZERO] * self.n_cols for _ in range(self.n_rows)]
        for i, r in enumerate(self.rows):
            for c, v in r:
                out[i][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        cols: list[dict] = [{} for _ in range(self.n_cols)]
        for i, r in enumerate(self.rows):
            for c, v in r:
                cols[c][i] = v
        return SparseMatrix.from_dicts(self.n_cols, self.n_rows, cols)

    def apply(self, v: Mapping[int, mpq]) -> dict:
        """Matrix-vector product with a sparse column vector."""
        out = {}
        for i, r in enumerate(self.rows):
            s = ZERO
            for c, a in r:
                x = v.get(c)
                if x is not None:
                    s += a * x
            if s:
                out[i] = s
        return out


class Echelon:
    """Incrementally maintained echelon form of a row space.

    Rows are kept reduced against the pivots that existed when they were
    inserted; ``reduce`` always returns the canonical remainder of a vector
    modulo the current row space (supported on non-pivot columns only).
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Mapping[int, mpq], record: bool = False):
        v = dict(vec)
        coeffs = {} if record else None
        pivots = self.pivots
        heap = [c for c in v if c in pivots]
        if not heap:
            return (v, coeffs) if record else v
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            a = v.get(c)
            if a is None:
                continue
            row = pivots[c]
            if record:
                coeffs[c] = a
            for k, w in row.items():
                x = v.get(k)
                if x is None:
                    v[k] = -a * w
                    if k in pivots and k not in seen:
                        heapq.heappush(heap, k)
                else:
                    x = x - a * w
                    if x:
                        v[k] = x
                    else:
                        del v[k]
        return (v, coeffs) if record else v

    def add(self, vec: Mapping[int, mpq]) -> int | None:
        """Insert a vector; returns its new pivot column or None if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        a = v[p]
        if a != 1:
            inv = 1 / a
            v = {k: w * inv for k, w in v.items()}
        self.pivots[p] = v
        return p

    def contains(self, vec: Mapping[int, mpq]) -> bool:
        return not self.reduce(vec)

    def to_subspace(self) -> "Subspace":
        return Subspace.from_echelon(self)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim stored by its reduced row-echelon basis."""

    ambient_dim: int
    basis: tuple  # tuple of dicts, RREF rows
    pivot_cols: tuple = field(default=())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_echelon(cls, ech: Echelon) -> "Subspace":
        # back-substitute so every pivot column is zero outside its own row
        order = sorted(ech.pivots)
        done: dict[int, dict] = {}
        for p in reversed(order):
            row = dict(ech.pivots[p])
            hits = [c for c in row if c != p and c in done]
            for c in sorted(hits):
                a = row.get(c)
                if a is not None:
                    add_scaled(row, done[c], -a)
            done[p] = row
        basis = tuple(done[p] for p in order)
        return cls(ech.ambient_dim, basis, tuple(order))

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Mapping[int, object]]) -> "Subspace":
        ech = Echelon(ambient_dim)
        for v in vectors:
            ech.add(clean(v))
        return cls.from_echelon(ech)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple({i: ONE} for i in range(ambient_dim)), tuple(range(ambient_dim)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim)
        for p, row in zip(self.pivot_cols, self.basis):
            ech.pivots[p] = dict(row)
        return ech

    def contains(self, v: Mapping[int, mpq]) -> bool:
        return is_in_span(v, self)[0]

    def contains_subspace(self, other: "Subspace") -> bool:
        ech = self.echelon()
        return all(ech.contains(b) for b in other.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivot_cols == other.pivot_cols
            and list(self.basis) == list(other.basis)
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.pivot_cols))


def rref(m: SparseMatrix) -> tuple[Subspace, int]:
    """Row-reduce ``m``; returns the RREF basis of its row space and the rank."""
    ech = Echelon(m.n_cols)
    # shortest rows first keeps fill-in and coefficient growth down;
    # the RREF of the row space does not depend on insertion order
    order = sorted(range(m.n_rows), key=lambda i: (len(m.rows[i]), i))
    for i in order:
        if m.rows[i]:
            ech.add(dict(m.rows[i]))
    s = Subspace.from_echelon(ech)
    return s, s.dim


def kernel_vectors_from_rref(row_space: Subspace) -> list[dict]:
    """Kernel of a matrix given the RREF of its row space (one vector per free column)."""
    pivset = set(row_space.pivot_cols)
    by_free: dict[int, dict] = {}
    for p, row in zip(row_space.pivot_cols, row_space.basis):
        for c, a in row.items():
            if c != p:
                by_free.setdefault(c, {})[p] = -a
    out = []
    for f in range(row_space.ambient_dim):
        if f in pivset:
            continue
        v = by_free.get(f, {})
        v[f] = ONE
        out.append(v)
    return out


def kernel_basis(m: SparseMatrix) -> Subspace:
    """Basis of {v : m v = 0}, returned in RREF."""
    rs, _ = rref(m)
    return Subspace.span(m.n_cols, kernel_vectors_from_rref(rs))


def is_in_span(v: Mapping[int, object], s: Subspace) -> tuple[bool, dict | None]:
    """Decide membership; on success return coefficients against the RREF basis."""
    v = clean(v)
    if any(not 0 <= k < s.ambient_dim for k in v):
        raise DimensionMismatch(f"vector does not live in dimension {s.ambient_dim}")
    rem = dict(v)
    coeffs = {}
    for idx, (p, row) in enumerate(zip(s.pivot_cols, s.basis)):
        a = rem.get(p)
        if a is None:
            continue
        coeffs[idx] = a
        add_scaled(rem, row, -a)
    if rem:
        return False, None
    return True, coeffs


def quotient_dim(big: Subspace, small: Subspace) -> int:
    if big.ambient_dim != small.ambient_dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")
    ech = big.echelon()
    for b in small.basis:
        if not ech.contains(b):
            raise ContainmentError("subspace is not contained in the larger one", dict(b))
    return big.dim - small.dim


def solve_kernel(rows: Iterable[Mapping[int, mpq]], n_cols: int) -> Subspace:
    """Kernel of the matrix whose rows are given (helper for constraint systems)."""
    ech = Echelon(n_cols)
    for r in rows:
        if r:
            ech.add(r)
    rs = Subspace.from_echelon(ech)
    return Subspace.span(n_cols, kernel_vectors_from_rref(rs))


def vec_to_json(v: Mapping[int, mpq]) -> dict:
    return {str(k): rational_str(v[k]) for k in sorted(v)}
