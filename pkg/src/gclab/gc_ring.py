"""The multigraded ring G(A_n) and its socle quotients.

G(A_n) = k[x_{i,j} : 1 <= i < n, 1 <= j <= n] / I with
I = (e_1(x_i)) + sum_j (x_{1,j}, ..., x_{n-1,j})^2.

A monomial that survives the quadrics uses each column at most once, so it is
stored as a length-n tuple ``m`` with ``m[j-1]`` the row of the variable in
column j (0 when column j is unused).  Multidegrees are tuples of length n-1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .combinatorics import Multidegree, distinct_permutations
from .linalg import (
    ONE,
    Echelon,
    Subspace,
    add_scaled,
    rational_str,
    solve_kernel,
)


class RingError(ValueError):
    pass


class NotSocleError(RingError):
    def __init__(self, message: str, variable: tuple):
        super().__init__(message)
        self.variable = variable


def unit(n: int) -> tuple:
    return (0,) * n


def mono_multidegree(m: Sequence[int], n: int) -> tuple:
    d = [0] * (n - 1)
    for r in m:
        if r:
            d[r - 1] += 1
    return tuple(d)


def mono_key(m: Sequence[int]) -> tuple:
    cols = tuple(j for j, r in enumerate(m) if r)
    return (cols, tuple(m[j] for j in cols))


def mono_vars(m: Sequence[int]) -> list[tuple]:
    """Variables (i, j) of a column monomial, 1-based, ordered by column."""
    return [(r, j + 1) for j, r in enumerate(m) if r]


def mono_from_vars(n: int, variables: Iterable[tuple]) -> tuple | None:
    """Column monomial of a product of variables, or None if a column repeats."""
    m = [0] * n
    for i, j in variables:
        if m[j - 1]:
            return None
        m[j - 1] = i
    return tuple(m)


def mono_times(m: Sequence[int], variables: Iterable[tuple]) -> tuple | None:
    out = list(m)
    for i, j in variables:
        if out[j - 1]:
            return None
        out[j - 1] = i
    return tuple(out)


def mono_str(m: Sequence[int]) -> str:
    vs = mono_vars(m)
    return "*".join(f"x_{i}_{j}" for i, j in vs) if vs else "1"


def mono_json(m: Sequence[int]) -> list:
    return [[i, j] for i, j in mono_vars(m)]


def add_eps(d: Sequence[int], i: int, k: int = 1) -> tuple:
    d = list(d)
    d[i - 1] += k
    return tuple(d)


def is_structurally_zero(n: int, d: Sequence[int]) -> bool:
    """Zero-component rule: G_d = 0 unless n - sum(d) >= max(d)."""
    if any(x < 0 for x in d):
        return True
    rest = n - sum(d)
    return rest < 0 or (len(d) > 0 and rest < max(d))


@lru_cache(maxsize=None)
def column_monomials(n: int, d: tuple) -> tuple:
    """All column monomials of multidegree d, in basis order."""
    if any(x < 0 for x in d) or sum(d) > n:
        return ()
    total = sum(d)
    rows = []
    for i, di in enumerate(d, start=1):
        rows.extend([i] * di)
    arrangements = distinct_permutations(rows)
    out = []
    for cols in combinations(range(n), total):
        for arr in arrangements:
            m = [0] * n
            for c, r in zip(cols, arr):
                m[c] = r
            out.append(tuple(m))
    return tuple(out)


@dataclass
class ComponentBasis:
    """Basis and normal-form data of one multidegree component of G(A_n)."""

    n: int
    d: tuple
    monomials: tuple
    relation_space: Subspace
    basis_positions: tuple  # indices into monomials that form the basis
    index: dict = field(repr=False)
    _nf: dict = field(repr=False)  # pivot monomial index -> basis coordinate dict

    @property
    def dim(self) -> int:
        return len(self.basis_positions)

    @property
    def basis_monomials(self) -> list:
        return [self.monomials[p] for p in self.basis_positions]

    def nf_monomial(self, m: tuple) -> dict:
        k = self.index.get(m)
        if k is None:
            raise RingError(f"monomial {m} is not in component {self.d}")
        got = self._nf.get(k)
        return dict(got) if got is not None else {}

    def nf(self, vec: Mapping[int, mpq]) -> dict:
        """Normal form of a combination of spanning monomials (by index)."""
        out: dict = {}
        for k, a in vec.items():
            got = self._nf.get(k)
            if got:
                add_scaled(out, got, mpq(a))
        return out

    def nf_matrix(self) -> list[dict]:
        return [dict(self._nf.get(k, {})) for k in range(len(self.monomials))]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": list(self.d),
            "dim": self.dim,
            "monomials": [mono_json(m) for m in self.monomials],
            "basis": [mono_json(self.monomials[p]) for p in self.basis_positions],
        }


def build_component(n: int, d: tuple, prune: bool = True) -> ComponentBasis:
    d = tuple(d)
    if len(d) != n - 1:
        raise RingError(f"multidegree {d} has wrong length for n={n}")
    monos = column_monomials(n, d)
    index = {m: k for k, m in enumerate(monos)}
    if not monos or (prune and is_structurally_zero(n, d)):
        return ComponentBasis(n, d, monos, Subspace.full(len(monos)), (), index, {})
    ech = Echelon(len(monos))
    for i in range(1, n):
        if d[i - 1] == 0:
            continue
        for mp in column_monomials(n, add_eps(d, i, -1)):
            rel = {}
            for j in range(n):
                if mp[j] == 0:
                    m = list(mp)
                    m[j] = i
                    rel[index[tuple(m)]] = ONE
            if rel:
                ech.add(rel)
    rel_space = Subspace.from_echelon(ech)
    pivots = set(rel_space.pivot_cols)
    basis_positions = tuple(k for k in range(len(monos)) if k not in pivots)
    pos_of = {k: t for t, k in enumerate(basis_positions)}
    nf = {}
    for k in basis_positions:
        nf[k] = {pos_of[k]: ONE}
    for p, row in zip(rel_space.pivot_cols, rel_space.basis):
        nf[p] = {pos_of[c]: -a for c, a in row.items() if c != p}
    return ComponentBasis(n, d, monos, rel_space, basis_positions, index, nf)


@dataclass(frozen=True)
class RingVector:
    d: tuple
    coords: tuple  # sorted (position, value) pairs

    @classmethod
    def make(cls, d, coords: Mapping[int, mpq]) -> "RingVector":
        return cls(tuple(d), tuple(sorted((k, mpq(v)) for k, v in coords.items() if v)))

    def as_dict(self) -> dict:
        return dict(self.coords)

    def is_zero(self) -> bool:
        return not self.coords


class GradedRing:
    """Common interface for G(A_n) and its quotients by socle elements.

    Every component has a basis of monomials; ``nf`` maps any column monomial
    to coordinates in that basis.
    """

    n: int

    def dim(self, d) -> int:
        raise NotImplementedError

    def basis_monomials(self, d) -> list:
        raise NotImplementedError

    def nf(self, m: tuple) -> dict:
        raise NotImplementedError

    # generic operations -------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.n * (self.n - 1)

    def variables(self) -> list[tuple]:
        return [(i, j) for i in range(1, self.n) for j in range(1, self.n + 1)]

    def top_degree(self) -> int:
        return self.n - 1

    def multidegrees(self, total: int | None = None):
        from .combinatorics import all_multidegrees, compositions_of_multidegrees

        if total is None:
            return list(all_multidegrees(self.n))
        return list(compositions_of_multidegrees(self.n, total))

    def element(self, d, combo: Mapping[tuple, object]) -> RingVector:
        """Class of a combination of column monomials (all of multidegree d)."""
        out: dict = {}
        for m, a in combo.items():
            if m is None:
                continue
            add_scaled(out, self.nf(tuple(m)), mpq(a))
        return RingVector.make(d, out)

    def monomial_element(self, variables: Iterable[tuple]) -> RingVector:
        variables = list(variables)
        d = [0] * (self.n - 1)
        for i, _ in variables:
            d[i - 1] += 1
        m = mono_from_vars(self.n, variables)
        if m is None:
            return RingVector.make(tuple(d), {})
        return RingVector.make(tuple(d), self.nf(m))

    def multiply_monomial(self, v: RingVector, variables: Sequence[tuple]) -> RingVector:
        d = list(v.d)
        for i, _ in variables:
            d[i - 1] += 1
        d = tuple(d)
        out: dict = {}
        if v.coords and self.dim(d):
            basis = self.basis_monomials(v.d)
            for k, a in v.coords:
                m = mono_times(basis[k], variables)
                if m is not None:
                    add_scaled(out, self.nf(m), a)
        return RingVector.make(d, out)

    def multiply(self, v: RingVector, var: tuple) -> RingVector:
        return self.multiply_monomial(v, [var])

    def _stacked_kernel(self, d, multipliers: Sequence[Sequence[tuple]]) -> Subspace:
        d = tuple(d)
        dim = self.dim(d)
        basis = self.basis_monomials(d)
        rows: dict = {}
        for t, mult in enumerate(multipliers):
            td = list(d)
            for i, _ in mult:
                td[i - 1] += 1
            if not self.dim(tuple(td)):
                continue
            for k, b in enumerate(basis):
                m = mono_times(b, mult)
                if m is None:
                    continue
                for p, a in self.nf(m).items():
                    rows.setdefault((t, p), {})[k] = a
        return solve_kernel((rows[key] for key in sorted(rows)), dim)

    def socle_component(self, d) -> Subspace:
        return self._stacked_kernel(d, [[v] for v in self.variables()])

    def ann_m2_component(self, d) -> Subspace:
        vs = self.variables()
        pairs = [[vs[a], vs[b]] for a in range(len(vs)) for b in range(a, len(vs))
                 if vs[a][1] != vs[b][1]]
        return self._stacked_kernel(d, pairs)

    def hilbert_function(self) -> tuple:
        return tuple(sum(self.dim(d) for d in self.multidegrees(t)) for t in range(self.n))

    def total_dim(self) -> int:
        return sum(self.hilbert_function())

    def socle_dims_by_degree(self) -> tuple:
        out = []
        for t in range(self.n):
            out.append(sum(self.socle_component(d).dim for d in self.multidegrees(t) if self.dim(d)))
        return tuple(out)

    def min_socle_degree(self) -> int:
        for t in range(self.n):
            for d in self.multidegrees(t):
                if self.dim(d) and self.socle_component(d).dim:
                    return t
        raise RingError("no socle found")

    def is_socle(self, v: RingVector) -> tuple[bool, tuple | None]:
        for var in self.variables():
            if not self.multiply(v, var).is_zero():
                return False, var
        return True, None

    def ideal_membership(self, v: RingVector, gens: Sequence) -> bool:
        """Decide whether v lies in the ideal generated by gens (variables or RingVectors)."""
        if v.is_zero():
            return True
        target = tuple(v.d)
        spanning = []
        for g in gens:
            if isinstance(g, tuple) and len(g) == 2 and all(isinstance(x, int) for x in g):
                g = self.monomial_element([g])
            comp = tuple(a - b for a, b in zip(target, g.d))
            if any(x < 0 for x in comp) or not self.dim(comp):
                continue
            for b in self.basis_monomials(comp):
                prod = self.multiply_monomial(g, mono_vars(b))
                if not prod.is_zero():
                    spanning.append(prod.as_dict())
        ech = Echelon(self.dim(target))
        for s in spanning:
            ech.add(s)
        return ech.contains(v.as_dict())

    def vector_json(self, v: RingVector) -> dict:
        basis = self.basis_monomials(v.d)
        return {
            "d": list(v.d),
            "coords": [[mono_json(basis[k]), rational_str(a)] for k, a in v.coords],
        }


class GcRing(GradedRing):
    """G(A_n) with components built lazily and cached by multidegree."""

    def __init__(self, n: int, prune: bool = True):
        if n < 2:
            raise RingError("n must be at least 2")
        self.n = n
        self.prune = prune
        self._cache: dict = {}

    def component(self, d) -> ComponentBasis:
        d = tuple(d)
        c = self._cache.get(d)
        if c is None:
            if any(x < 0 for x in d):
                c = ComponentBasis(self.n, d, (), Subspace.zero(0), (), {}, {})
            else:
                c = build_component(self.n, d, self.prune)
            self._cache[d] = c
        return c

    def dim(self, d) -> int:
        if any(x < 0 for x in d) or sum(d) > self.n:
            return 0
        return self.component(d).dim

    def basis_monomials(self, d) -> list:
        return self.component(d).basis_monomials

    def nf(self, m: tuple) -> dict:
        return self.component(mono_multidegree(m, self.n)).nf_monomial(m)

    def relation_count(self) -> tuple:
        n = self.n
        return (n - 1, n * (n - 1) * n // 2)


class GcQuotient(GradedRing):
    """B = G(A_n) / (s_1, ..., s_r) for homogeneous socle elements s_k.

    Since each s_k is killed by every variable, the ideal it generates is
    just its k-span, so B_d = G_d / span{s_k : deg s_k = d}.
    """

    def __init__(self, ring: GcRing, socle_elements: Sequence[RingVector], check: bool = True):
        self.ring = ring
        self.n = ring.n
        self.gens = list(socle_elements)
        by_deg: dict = {}
        for s in self.gens:
            if check:
                ok, var = ring.is_socle(s)
                if not ok:
                    raise NotSocleError(f"element of degree {s.d} is not in the socle", var)
            by_deg.setdefault(tuple(s.d), []).append(s.as_dict())
        self._sub: dict = {}
        for d, vecs in by_deg.items():
            dim = ring.dim(d)
            ech = Echelon(dim)
            for v in vecs:
                if ech.add(v) is None:
                    raise RingError(f"quotient generators in degree {d} are linearly dependent")
            sub = Subspace.from_echelon(ech)
            piv = set(sub.pivot_cols)
            keep = tuple(k for k in range(dim) if k not in piv)
            self._sub[d] = (sub, keep, {k: t for t, k in enumerate(keep)})
        self._nf_cache: dict = {}

    @property
    def r(self) -> int:
        return len(self.gens)

    def dim(self, d) -> int:
        d = tuple(d)
        base = self.ring.dim(d)
        q = self._sub.get(d)
        return base - (q[0].dim if q else 0)

    def basis_monomials(self, d) -> list:
        d = tuple(d)
        base = self.ring.basis_monomials(d)
        q = self._sub.get(d)
        if not q:
            return base
        return [base[k] for k in q[1]]

    def nf(self, m: tuple) -> dict:
        got = self._nf_cache.get(m)
        if got is not None:
            return dict(got)
        v = self.ring.nf(m)
        d = mono_multidegree(m, self.n)
        q = self._sub.get(d)
        if q:
            sub, _, pos = q
            for p, row in zip(sub.pivot_cols, sub.basis):
                a = v.get(p)
                if a is not None:
                    add_scaled(v, row, -a)
            v = {pos[k]: a for k, a in v.items()}
        self._nf_cache[m] = v
        return dict(v)

    def lift(self, s: RingVector) -> dict:
        """Lift of a generator to a combination of column monomials of G's basis."""
        basis = self.ring.basis_monomials(s.d)
        return {basis[k]: a for k, a in s.coords}


def gc_ring(n: int, prune: bool = True) -> GcRing:
    return GcRing(n, prune)


def hilbert_function(n: int) -> tuple:
    return GcRing(n).hilbert_function()


def component_dims(n: int, prune: bool = True) -> dict:
    g = GcRing(n, prune)
    return {d: g.dim(d) for d in g.multidegrees()}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def as_multidegree(d, n: int) -> tuple:
    if isinstance(d, Multidegree):
        return d.entries
    d = tuple(int(x) for x in d)
    Multidegree(d, n)
    return d


_RINGS: dict = {}


def _cache_path(n: int):
    import os

    root = os.environ.get("GCLAB_CACHE_DIR")
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    return os.path.join(root, f"gc_components_n{n}.pkl")


def get_ring(n: int) -> GcRing:
    """Shared (pruned) GcRing for n, loading cached components from GCLAB_CACHE_DIR if set."""
    ring = _RINGS.get(n)
    if ring is None:
        import pickle

        ring = GcRing(n)
        path = _cache_path(n)
        if path:
            try:
                with open(path, "rb") as fh:
                    ring._cache.update(pickle.load(fh))
            except (OSError, EOFError, pickle.UnpicklingError):
                pass
        _RINGS[n] = ring
    return ring


def save_ring_cache(n: int) -> None:
    import os
    import pickle

    path = _cache_path(n)
    ring = _RINGS.get(n)
    if not path or ring is None:
        return
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        pickle.dump(ring._cache, fh)
    os.replace(tmp, path)
