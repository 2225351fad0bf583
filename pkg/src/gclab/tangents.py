"""Negative tangents of G(A_n) and of its socle quotients.

For a presentation B = R/I with homogeneous generators g_t, a degree-e map
phi: I -> B is determined by the values phi(g_t) in B_{deg g_t + e}, subject
to sum_t r_t phi(g_t) = 0 in B for every syzygy sum_t r_t g_t = 0.  B has
trivial negative tangents when, for every e of negative total degree, every
such phi comes from a constant-coefficient derivation d/dx_{i,j}.

Two routes to the syzygy constraints are implemented:

* ``free``: degree-by-degree kernels of the multiplication matrices over the
  free polynomial ring.  Simple, generic, and only practical for tiny cases.
* ``reduced`` (default for G(A_n) and its quotients): the quadrics of I are
  the monomial ideal M, with P = R/M = A^{(x)n}.  Syzygies of I are generated
  by Koszul pairs (automatic in B), the cubic syzygies among quadrics sharing
  a variable, and lifts of the P-syzygies among the linear forms e_1(x_i)
  and the socle generators.  The latter are kernels over P, whose components
  are spanned by column monomials and are far smaller.

Constraints of a multidegree are imposed without forming kernels: for a fixed
target coordinate, the vector of constraint contributions indexed by the
sources must lie in the row space of the multiplication matrix; its remainder
modulo that row space gives the linear conditions on phi.

The derivations always lie in the solution space, and every partial set of
constraints cuts out a superspace of Hom.  Once the running solution space
has the dimension of the derivation span it equals Hom exactly, so the
remaining constraint degrees can be skipped.
"""

from __future__ import annotations

import sys
import time
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Callable, Mapping, Sequence

from gmpy2 import mpq

from . import polys
from .combinatorics import all_multidegrees, compositions_of_multidegrees, hilbert_formula
from .gc_ring import (
    GcQuotient,
    GcRing,
    GradedRing,
    RingError,
    RingVector,
    column_monomials,
    mono_from_vars,
    mono_json,
    mono_times,
    mono_vars,
    get_ring,
)
from .linalg import (
    ONE,
    Echelon,
    Subspace,
    add_scaled,
    kernel_vectors_from_rref,
    rational_str,
)


class TangentError(ValueError):
    pass


class HypothesisFailure(Exception):
    """The odd-n quotient hypothesis (no socle in degree D-1) does not hold."""

    def __init__(self, message: str, payload: dict):
        super().__init__(message)
        self.payload = payload


# ---------------------------------------------------------------------------
# presentations


@dataclass
class Generator:
    label: str
    deg: tuple
    poly: dict
    kind: str  # "linear", "quadric", "socle" or "other"
    data: tuple = ()


@dataclass
class IdealPresentation:
    n: int
    variables: list
    var_deg: dict
    generators: list
    quotient_gens: list = field(default_factory=list)
    name: str = ""

    @property
    def all_generators(self) -> list:
        return self.generators + self.quotient_gens

    @property
    def grading_rank(self) -> int:
        return len(next(iter(self.var_deg.values())))

    def free_monomials(self, D: Sequence[int]) -> list:
        """All monomials of the free ring of multidegree D."""
        by_row: dict = defaultdict(list)
        for v in self.variables:
            deg = self.var_deg[v]
            if sum(deg) != 1:
                raise TangentError("free monomial enumeration expects unit-vector variable degrees")
            by_row[deg.index(1)].append(v)
        parts = []
        for i, di in enumerate(D):
            if di < 0:
                return []
            parts.append(list(combinations_with_replacement(by_row[i], di)))
        return [tuple(sorted(sum(c, ()))) for c in product(*parts)]


def _unit(m: int, i: int) -> tuple:
    return tuple(1 if k == i else 0 for k in range(m))


def gc_presentation(n: int, quotient: GcQuotient | None = None) -> IdealPresentation:
    """Linear forms e_1(x_i), the column quadrics, and lifts of socle generators."""
    variables = [(i, j) for i in range(1, n) for j in range(1, n + 1)]
    var_deg = {(i, j): _unit(n - 1, i - 1) for i, j in variables}
    gens = []
    for i in range(1, n):
        gens.append(Generator(f"e1(x_{i})", _unit(n - 1, i - 1),
                              {((i, j),): ONE for j in range(1, n + 1)}, "linear", (i,)))
    for j in range(1, n + 1):
        for i in range(1, n):
            for k in range(i, n):
                deg = tuple(a + b for a, b in zip(_unit(n - 1, i - 1), _unit(n - 1, k - 1)))
                gens.append(Generator(f"x_{i}_{j}*x_{k}_{j}", deg,
                                      {polys.mono((i, j), (k, j)): ONE}, "quadric", (i, k, j)))
    qgens = []
    if quotient is not None:
        for idx, s in enumerate(quotient.gens):
            lift = quotient.lift(s)
            poly = {tuple(sorted(mono_vars(m))): a for m, a in lift.items()}
            qgens.append(Generator(f"s_{idx + 1}", tuple(s.d), poly, "socle", (idx, lift)))
    name = f"G(A_{n})" if quotient is None else f"G(A_{n})/J (r={len(qgens)})"
    return IdealPresentation(n, variables, var_deg, gens, qgens, name)


def eliminated_presentation(n: int) -> IdealPresentation:
    """G(A_n) presented without the variables x_{i,n} (substituted via e_1(x_i) = 0)."""
    variables = [(i, j) for i in range(1, n) for j in range(1, n)]
    var_deg = {(i, j): _unit(n - 1, i - 1) for i, j in variables}
    last = {i: {((i, j),): mpq(-1) for j in range(1, n)} for i in range(1, n)}
    gens = []
    for j in range(1, n + 1):
        for i in range(1, n):
            for k in range(i, n):
                if j < n:
                    poly = {polys.mono((i, j), (k, j)): ONE}
                else:
                    poly = polys.mul(last[i], last[k])
                deg = tuple(a + b for a, b in zip(_unit(n - 1, i - 1), _unit(n - 1, k - 1)))
                gens.append(Generator(f"q_{i}_{k}_{j}", deg, poly, "other", (i, k, j)))
    return IdealPresentation(n, variables, var_deg, gens, [], f"G(A_{n}) eliminated")


def toy_presentation() -> IdealPresentation:
    """The ideal (x^2) in k[x]."""
    return IdealPresentation(1, ["x"], {"x": (1,)},
                             [Generator("x^2", (2,), {("x", "x"): ONE}, "other")], [], "k[x]/(x^2)")


# ---------------------------------------------------------------------------
# target rings seen through free monomials


class RingHandle:
    grading_rank: int

    def dim(self, D) -> int:
        raise NotImplementedError

    def nf(self, m: tuple) -> dict:
        raise NotImplementedError

    def times(self, D, k: int, cofactor: tuple) -> dict:
        raise NotImplementedError

    def nonzero_degrees(self) -> list:
        raise NotImplementedError

    def basis_json(self, D, k: int):
        raise NotImplementedError


class GcHandle(RingHandle):
    def __init__(self, ring: GradedRing):
        self.ring = ring
        self.n = ring.n
        self.grading_rank = ring.n - 1
        self._times: dict = {}
        self._nonzero = None

    def dim(self, D) -> int:
        D = tuple(D)
        if any(x < 0 for x in D) or sum(D) > self.n:
            return 0
        return self.ring.dim(D)

    def nf(self, m: tuple) -> dict:
        cm = mono_from_vars(self.n, m)
        if cm is None:
            return {}
        return self.ring.nf(cm)

    def times(self, D, k, cofactor) -> dict:
        key = (D, k, cofactor)
        got = self._times.get(key)
        if got is None:
            m = mono_times(self.ring.basis_monomials(D)[k], cofactor)
            got = {} if m is None else self.ring.nf(m)
            self._times[key] = got
        return got

    def nonzero_degrees(self) -> list:
        if self._nonzero is None:
            self._nonzero = [d for d in all_multidegrees(self.n) if self.dim(d)]
        return self._nonzero

    def basis_json(self, D, k):
        return mono_json(self.ring.basis_monomials(D)[k])


class ToyHandle(RingHandle):
    """B = k[x]/(x^2), graded by degree."""

    grading_rank = 1

    def dim(self, D) -> int:
        return 1 if tuple(D) in ((0,), (1,)) else 0

    def nf(self, m: tuple) -> dict:
        return {0: ONE} if len(m) < 2 else {}

    def times(self, D, k, cofactor) -> dict:
        return self.nf(("x",) * D[0] + tuple(cofactor))

    def nonzero_degrees(self) -> list:
        return [(0,), (1,)]

    def basis_json(self, D, k):
        return "x^%d" % D[0]


# ---------------------------------------------------------------------------
# Hom computation


def _add(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


@dataclass
class Layout:
    blocks: dict  # generator index -> (target degree, offset, size)
    size: int


def unknown_layout(pres: IdealPresentation, handle: RingHandle, e: tuple) -> Layout:
    blocks = {}
    off = 0
    for t, g in enumerate(pres.all_generators):
        D = _add(g.deg, e)
        if any(x < 0 for x in D):
            continue
        k = handle.dim(D)
        if k:
            blocks[t] = (D, off, k)
            off += k
    return Layout(blocks, off)


@dataclass
class HomSolution:
    shift: tuple
    layout: Layout
    solution_space: Subspace
    derivations: Subspace
    constraint_rows: int
    degrees_used: int
    stopped_early: bool

    @property
    def dim(self) -> int:
        return self.solution_space.dim

    @property
    def dim_deriv(self) -> int:
        return self.derivations.dim


class _Constraints:
    def __init__(self, size: int):
        self.size = size
        self.ech = Echelon(size)
        self.rows_seen = 0

    def add_rows(self, rows: Mapping) -> None:
        for key in sorted(rows):
            r = rows[key]
            if r:
                self.rows_seen += 1
                self.ech.add(r)

    @property
    def free_dim(self) -> int:
        return self.size - self.ech.rank

    def satisfied_by(self, v: Mapping[int, mpq]) -> bool:
        for row in self.ech.pivots.values():
            s = 0
            for k, a in row.items():
                x = v.get(k)
                if x is not None:
                    s += a * x
            if s:
                return False
        return True

    def solution_space(self) -> Subspace:
        rs = Subspace.from_echelon(self.ech)
        return Subspace.span(self.size, kernel_vectors_from_rref(rs))


def _contributions(handle, layout, sources_terms) -> dict:
    """(unknown, target coordinate) -> {source index: coefficient}."""
    contrib: dict = defaultdict(dict)
    blocks = layout.blocks
    for s, terms in enumerate(sources_terms):
        for t, cof, c in terms:
            blk = blocks.get(t)
            if blk is None:
                continue
            D, off, size = blk
            for k in range(size):
                for b, a in handle.times(D, k, cof).items():
                    key = (off + k, b)
                    row = contrib[key]
                    w = row.get(s)
                    w = a * c if w is None else w + a * c
                    if w:
                        row[s] = w
                    else:
                        del row[s]
    return contrib


def _impose_residual(cs: _Constraints, n_src: int, n_rows: Sequence[Mapping], contrib: Mapping) -> None:
    ech = Echelon(n_src)
    for r in n_rows:
        if r:
            ech.add(r)
    rows: dict = defaultdict(dict)
    for (u, b), w in contrib.items():
        if not w:
            continue
        rem = ech.reduce(w)
        for c, a in rem.items():
            rows[(b, c)][u] = a
    cs.add_rows(rows)


def _impose_direct(cs: _Constraints, contrib: Mapping) -> None:
    """Each source is itself a syzygy: its contribution must vanish outright."""
    rows: dict = defaultdict(dict)
    for (u, b), w in contrib.items():
        for s, a in w.items():
            rows[(s, b)][u] = a
    cs.add_rows(rows)


def derivation_vectors(pres: IdealPresentation, handle: RingHandle, e: tuple, layout: Layout) -> list[dict]:
    vecs = []
    gens = pres.all_generators
    for v in pres.variables:
        if tuple(-x for x in pres.var_deg[v]) != tuple(e):
            continue
        vec: dict = {}
        for t, (D, off, size) in layout.blocks.items():
            dp = polys.diff(gens[t].poly, v)
            for m, a in dp.items():
                for k, c in handle.nf(m).items():
                    add_scaled(vec, {off + k: c}, a)
        vecs.append(vec)
    return vecs


def derivation_span(pres: IdealPresentation, handle: RingHandle, e: Sequence[int]) -> Subspace:
    e = tuple(e)
    layout = unknown_layout(pres, handle, e)
    return Subspace.span(layout.size, derivation_vectors(pres, handle, e, layout))


def _constraint_degrees(handle: RingHandle, e: tuple, extra_degree: int, n_bound: int | None) -> list:
    """Multidegrees Delta with B_{Delta+e} possibly nonzero, by increasing total degree."""
    out = set()
    for c in handle.nonzero_degrees():
        D = _sub(c, e)
        if all(x >= 0 for x in D):
            out.add(D)
    if extra_degree:
        top = max(sum(c) for c in handle.nonzero_degrees())
        m = handle.grading_rank
        for t in range(top + 1, top + 1 + extra_degree):
            for c in (compositions_of_multidegrees(m + 1, t) if m else []):
                D = _sub(c, e)
                if all(x >= 0 for x in D):
                    out.add(D)
    return sorted(out, key=lambda D: (sum(D), tuple(-x for x in D)))


def hom_component(pres: IdealPresentation, handle: RingHandle, e: Sequence[int], method: str = "auto",
                  early_stop: bool = True, extra_degree: int = 0, check: bool = False) -> HomSolution:
    """Degree-e part of Hom(I, B) as a subspace of the coordinates of (phi(g_t))_t."""
    e = tuple(e)
    if sum(e) >= 0:
        raise TangentError(f"shift {e} does not have negative total degree")
    if method == "auto":
        method = "reduced" if all(g.kind in ("linear", "quadric", "socle") for g in pres.all_generators) \
            and pres.generators and pres.generators[0].kind == "linear" else "free"
    layout = unknown_layout(pres, handle, e)
    cs = _Constraints(layout.size)
    derivs = derivation_vectors(pres, handle, e, layout)
    deriv_space = Subspace.span(layout.size, derivs)
    if method == "free":
        stages = _free_stages(pres, handle, e, layout, extra_degree, check)
    elif method == "reduced":
        stages = _reduced_stages(pres, handle, e, layout, extra_degree, check)
    else:
        raise TangentError(f"unknown method {method!r}")
    used = 0
    stopped = False
    if layout.size:
        for stage in stages:
            if early_stop and cs.free_dim == deriv_space.dim:
                stopped = True
                break
            stage(cs)
            used += 1
    sol = cs.solution_space() if cs.free_dim != layout.size else Subspace.full(layout.size)
    for v in derivs:
        if not cs.satisfied_by(v):
            raise AssertionError(f"derivation violates a syzygy constraint at shift {e}")
    return HomSolution(e, layout, sol, deriv_space, cs.rows_seen, used, stopped)


def _free_stages(pres, handle, e, layout, extra_degree, check):
    gens = pres.all_generators
    for D in _constraint_degrees(handle, e, extra_degree, None):
        if not any(all(x >= y for x, y in zip(D, g.deg)) for g in gens):
            continue

        def stage(cs, D=D):
            targets = pres.free_monomials(D)
            tindex = {m: k for k, m in enumerate(targets)}
            n_rows: list = [dict() for _ in targets]
            terms = []
            for t, g in enumerate(gens):
                rd = _sub(D, g.deg)
                if any(x < 0 for x in rd):
                    continue
                for r in pres.free_monomials(rd):
                    s = len(terms)
                    terms.append([(t, r, ONE)])
                    for m, a in g.poly.items():
                        k = tindex[polys.mono_mul(r, m)]
                        add_scaled(n_rows[k], {s: a}, ONE)
            if check:
                _check_free_syzygies(pres, D, n_rows, terms)
            contrib = _contributions(handle, layout, terms)
            _impose_residual(cs, len(terms), n_rows, contrib)

        yield stage


def _check_free_syzygies(pres, D, n_rows, terms) -> None:
    ech = Echelon(len(terms))
    for r in n_rows:
        if r:
            ech.add(r)
    gens = pres.all_generators
    for v in kernel_vectors_from_rref(Subspace.from_echelon(ech)):
        total: dict = {}
        for s, c in v.items():
            (t, r, _), = terms[s]
            add_scaled(total, polys.mono_times_poly(r, gens[t].poly), c)
        if total:
            raise AssertionError(f"syzygy in degree {D} does not vanish")


def _reduced_stages(pres, handle, e, layout, extra_degree, check):
    n = pres.n
    gens = pres.all_generators
    quad = {g.data: t for t, g in enumerate(gens) if g.kind == "quadric"}
    lin = {g.data[0]: t for t, g in enumerate(gens) if g.kind == "linear"}
    socles = [(t, g) for t, g in enumerate(gens) if g.kind == "socle"]

    def qidx(a, b, j):
        return quad[(min(a, b), max(a, b), j)]

    # cubic syzygies among quadrics sharing a variable
    def cubic_stage(cs):
        terms = []
        for j in range(1, n + 1):
            qs = [(i, k) for i in range(1, n) for k in range(i, n)]
            for x in range(len(qs)):
                for y in range(x + 1, len(qs)):
                    q1, q2 = qs[x], qs[y]
                    if not set(q1) & set(q2):
                        continue
                    lcm = []
                    for r in sorted(set(q1) | set(q2)):
                        lcm += [r] * max(q1.count(r), q2.count(r))
                    if len(lcm) != 3:
                        continue
                    c1 = list(lcm)
                    for r in q1:
                        c1.remove(r)
                    c2 = list(lcm)
                    for r in q2:
                        c2.remove(r)
                    terms.append([(qidx(*q1, j), ((c1[0], j),), ONE),
                                  (qidx(*q2, j), ((c2[0], j),), mpq(-1))])
        _impose_direct(cs, _contributions(handle, layout, terms))

    if any(gens[t].kind == "quadric" for t in layout.blocks):
        yield cubic_stage

    for D in _constraint_degrees(handle, e, extra_degree, n + 1):
        if sum(D) > n + 1:
            continue
        lin_rows = [i for i in range(1, n) if D[i - 1] >= 1 and sum(D) - 1 <= n]
        soc = [(t, g) for t, g in socles if all(x >= y for x, y in zip(D, g.deg))]
        if not lin_rows and not soc:
            continue

        def stage(cs, D=D, lin_rows=lin_rows, soc=soc):
            targets = column_monomials(n, D)
            tindex = {m: k for k, m in enumerate(targets)}
            n_rows: list = [dict() for _ in targets]
            terms = []
            for i in lin_rows:
                for a in column_monomials(n, _sub(D, _unit(n - 1, i - 1))):
                    s = len(terms)
                    av = mono_vars(a)
                    tl = [(lin[i], tuple(sorted(av)), ONE)]
                    for j in range(n):
                        if a[j] == 0:
                            m = list(a)
                            m[j] = i
                            n_rows[tindex[tuple(m)]][s] = ONE
                        else:
                            cof = tuple(sorted(v for v in av if v[1] != j + 1))
                            tl.append((qidx(a[j], i, j + 1), cof, mpq(-1)))
                    terms.append(tl)
                    if check:
                        _check_source(n, {tuple(sorted(av)) + (): ONE}, gens[lin[i]].poly, tl, n_rows, s,
                                      targets, gens)
            for t, g in soc:
                lift = g.data[1]
                for c in column_monomials(n, _sub(D, g.deg)):
                    s = len(terms)
                    cv = mono_vars(c)
                    tl = [(t, tuple(sorted(cv)), ONE)]
                    for m, coef in lift.items():
                        coll = [j for j in range(n) if c[j] and m[j]]
                        if not coll:
                            prod = tuple(x or y for x, y in zip(c, m))
                            add_scaled(n_rows[tindex[prod]], {s: coef}, ONE)
                        else:
                            j = coll[0]
                            cof = [v for v in cv if v[1] != j + 1] + [v for v in mono_vars(m) if v[1] != j + 1]
                            tl.append((qidx(c[j], m[j], j + 1), tuple(sorted(cof)), -coef))
                    terms.append(tl)
                    if check:
                        _check_source(n, {tuple(sorted(cv)): ONE}, g.poly, tl, n_rows, s, targets, gens)
            contrib = _contributions(handle, layout, terms)
            _impose_residual(cs, len(terms), n_rows, contrib)

        yield stage


def _check_source(n, coeff, gpoly, terms, n_rows, s, targets, gens) -> None:
    """coeff * g == (its image in P, lifted) + sum of the quadric terms, in the free ring."""
    lhs = polys.mul(coeff, gpoly)
    rhs: dict = {}
    for k, row in enumerate(n_rows):
        a = row.get(s)
        if a:
            add_scaled(rhs, {tuple(sorted(mono_vars(targets[k]))): ONE}, a)
    for t, cof, c in terms[1:]:
        add_scaled(rhs, polys.mono_times_poly(cof, gens[t].poly), -c)
    if polys.sub(lhs, rhs):
        raise AssertionError("lifted syzygy does not expand to zero")


# ---------------------------------------------------------------------------
# reports


@dataclass
class ShiftResult:
    e: tuple
    unknowns: int
    dim_hom: int
    dim_deriv: int
    orbit: int = 1
    stopped_early: bool = False

    def to_json(self) -> dict:
        return {"e": list(self.e), "unknowns": self.unknowns, "dim_hom": self.dim_hom,
                "dim_deriv": self.dim_deriv, "orbit": self.orbit}


@dataclass
class TangentReport:
    n: int
    quotient: str
    shifts: list
    tnt: bool
    witness: dict | None = None
    hilbert: tuple | None = None
    extra: dict = field(default_factory=dict)

    @property
    def dim_hom_neg(self) -> int:
        return sum(s.dim_hom * s.orbit for s in self.shifts)

    @property
    def dim_derivation_span(self) -> int:
        return sum(s.dim_deriv * s.orbit for s in self.shifts)

    @property
    def dim_t1_neg(self) -> int:
        return self.dim_hom_neg - self.dim_derivation_span

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "quotient": self.quotient,
            "shifts": [s.to_json() for s in self.shifts],
            "dim_hom_neg": self.dim_hom_neg,
            "dim_derivation_span": self.dim_derivation_span,
            "dim_t1_neg": self.dim_t1_neg,
            "tnt": self.tnt,
        }
        if self.hilbert is not None:
            out["hilbert"] = list(self.hilbert)
        if self.witness is not None:
            out["witness"] = self.witness
        out.update(self.extra)
        return out


def candidate_shifts(pres: IdealPresentation, handle: RingHandle) -> list[tuple]:
    shifts = set()
    for g in pres.all_generators:
        for c in handle.nonzero_degrees():
            e = _sub(c, g.deg)
            if sum(e) < 0:
                shifts.add(e)
    return sorted(shifts, key=lambda e: (-sum(e), tuple(-x for x in e)))


def _row_orbits(shifts: Sequence[tuple]) -> list[tuple]:
    """Group shifts into orbits under permutations of the rows; returns (rep, size)."""
    reps: dict = {}
    for e in shifts:
        key = tuple(sorted(e, reverse=True))
        reps.setdefault(key, []).append(e)
    return [(min(v, key=lambda x: tuple(-y for y in x)), len(v)) for v in reps.values()]


def _witness(pres, handle, sol: HomSolution) -> dict:
    dech = Subspace.echelon(sol.derivations)
    gens = pres.all_generators
    for v in sol.solution_space.basis:
        if dech.contains(v):
            continue
        images = []
        for t, (D, off, size) in sorted(sol.layout.blocks.items()):
            coords = [(k - off, a) for k, a in sorted(v.items()) if off <= k < off + size]
            if coords:
                images.append({"generator": gens[t].label, "degree": list(D),
                               "value": [[handle.basis_json(D, k), rational_str(a)] for k, a in coords]})
        return {"e": list(sol.shift), "phi": images}
    return {}


def _heartbeat(msg: str, enabled: bool) -> None:
    if enabled:
        print(msg, file=sys.stderr, flush=True)


def _solve_shift(args):
    pres, handle, e, method, early_stop, extra_degree, check = args
    return hom_component(pres, handle, e, method=method, early_stop=early_stop,
                         extra_degree=extra_degree, check=check)


def tnt_for(pres: IdealPresentation, handle: RingHandle, quotient: str = "none", method: str = "auto",
            row_symmetry: bool = False, early_stop: bool = True, extra_degree: int = 0,
            check: bool = False, jobs: int = 1, heartbeat: bool = False,
            shifts: Sequence[tuple] | None = None) -> TangentReport:
    all_shifts = list(shifts) if shifts is not None else candidate_shifts(pres, handle)
    if row_symmetry:
        work = _row_orbits(all_shifts)
    else:
        work = [(e, 1) for e in all_shifts]
    work.sort(key=lambda p: (-sum(p[0]), tuple(-x for x in p[0])))
    results = []
    failing = []
    t0 = time.time()
    args = [(pres, handle, e, method, early_stop, extra_degree, check) for e, _ in work]
    if jobs > 1 and len(work) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            sols = list(ex.map(_solve_shift, args))
    else:
        sols = []
        for k, a in enumerate(args):
            sols.append(_solve_shift(a))
            _heartbeat(f"[tnt] {pres.name} shift {k + 1}/{len(args)} e={a[2]} "
                       f"hom={sols[-1].dim} deriv={sols[-1].dim_deriv} t={time.time() - t0:.1f}s", heartbeat)
    for (e, orbit), sol in zip(work, sols):
        if not sol.derivations.dim <= sol.dim or not sol.solution_space.contains_subspace(sol.derivations):
            raise AssertionError(f"derivation span not contained in Hom at shift {e}")
        results.append(ShiftResult(e, sol.layout.size, sol.dim, sol.dim_deriv, orbit, sol.stopped_early))
        if sol.dim != sol.dim_deriv:
            failing.append(sol)
    witness = None
    if failing:
        worst = min(failing, key=lambda s: (sum(s.shift), s.shift))
        witness = _witness(pres, handle, worst)
    return TangentReport(pres.n, quotient, results, not failing, witness)


def tnt_check(n: int, quotient: GcQuotient | None = None, **kw) -> TangentReport:
    """Trivial-negative-tangents verdict for G(A_n), or for G(A_n)/J when quotient is given."""
    if n < 2:
        raise TangentError("n must be at least 2")
    ring = quotient if quotient is not None else get_ring(n)
    pres = gc_presentation(n, quotient)
    desc = "none" if quotient is None else f"socle quotient r={quotient.r}"
    if kw.get("row_symmetry") and quotient is not None and not kw.pop("row_stable", False):
        raise TangentError("row symmetry is only valid for row-stable quotients")
    kw.pop("row_stable", None)
    rep = tnt_for(pres, GcHandle(ring), desc, **kw)
    rep.hilbert = ring.hilbert_function()
    return rep


def toy_tnt(**kw) -> TangentReport:
    return tnt_for(toy_presentation(), ToyHandle(), "k[x]/(x^2)", **kw)


def toy_hom(e=(-2,)) -> HomSolution:
    return hom_component(toy_presentation(), ToyHandle(), e, method="free", early_stop=False)


# ---------------------------------------------------------------------------
# quotients by minimal-degree socle


def default_selection(n: int) -> list[tuple]:
    from .rep_theory import admissible_socle_multidegrees

    D = (n + 1) // 2
    if n == 4:
        return sorted(compositions_of_multidegrees(n, D), reverse=True)
    if n == 5:
        return sorted({p for p in permutations((1, 1, 1, 0))}, reverse=True)
    return admissible_socle_multidegrees(n)


def socle_generators(ring: GcRing, selection: Sequence[tuple], r: int | None = None) -> list[RingVector]:
    from .rep_theory import independent_subset, socle_basis_min_degree

    out = []
    for d in selection:
        vecs = independent_subset(socle_basis_min_degree(ring, d), ring.dim(d))
        out.extend(vecs)
    if r is not None:
        if r > len(out):
            raise TangentError(f"r={r} exceeds the {len(out)} socle elements available in the selection")
        out = out[:r]
    return out


def odd_hypothesis_violation(B: GradedRing) -> dict | None:
    """For odd n: a socle element of B in degree D-1, if there is one."""
    n = B.n
    D = (n + 1) // 2
    for d in B.multidegrees(D - 1):
        if not B.dim(d):
            continue
        soc = B.socle_component(d)
        if soc.dim:
            v = RingVector.make(d, soc.basis[0])
            return B.vector_json(v)
    return None


def quotient_workflow(n: int, r: int | None = None, selection: Sequence[tuple] | None = None,
                      run_tnt: bool = True, check_hypothesis: bool = True, **kw) -> TangentReport:
    ring = get_ring(n)
    sel = [tuple(d) for d in (selection if selection is not None else default_selection(n))]
    gens = socle_generators(ring, sel, r)
    r = len(gens)
    B = GcQuotient(ring, gens)
    h = B.hilbert_function()
    expected = None
    try:
        expected = hilbert_formula(n, r)
    except Exception:
        pass
    extra = {"selection": [list(d) for d in sel], "r": r,
             "hilbert_expected": list(expected) if expected is not None else None}
    if n % 2 == 1 and check_hypothesis:
        bad = odd_hypothesis_violation(B)
        if bad is not None:
            raise HypothesisFailure(f"B has socle in degree {(n + 1) // 2 - 1}", {"socle_element": bad, **extra})
    if run_tnt:
        rep = tnt_check(n, B, **kw)
    else:
        rep = TangentReport(n, f"socle quotient r={r}", [], True)
    rep.hilbert = h
    rep.extra.update(extra)
    return rep


def odd_example(n: int = 7) -> dict:
    """The odd-n configuration where the degree-(D-1) socle hypothesis fails.

    Quotienting by the whole degree-D socle, the element theta_{T,1}(e_t) of
    degree D-1 (T of shape (D, D-1), content (D, 1, ..., 1), t = t_mu) is a
    nonzero socle element of B as soon as it is annihilated by m^2 in G: then
    x v lies in the degree-D socle of G, which is zero in B, while J has no
    degree D-1 part.  The check of v * m^2 = 0 runs over the degree-(D+1)
    components reached from d, using the row permutations fixing v.
    """
    from .combinatorics import Partition, Tableau
    from .rep_theory import ThetaMap, polytabloid, standard_numbering

    if n % 2 == 0 or n < 5:
        raise TangentError("the example needs odd n >= 5")
    D = (n + 1) // 2
    ring = get_ring(n)
    d = tuple([1] * (D - 1) + [0] * (n - D))
    mu = Partition((D, D - 1))
    labels = [1] * D + list(range(2, D + 1))
    T = Tableau(mu, tuple(labels))
    theta = ThetaMap(n, d, T, ring)
    t = standard_numbering(mu)
    v = theta.apply(polytabloid(t).as_dict())
    nonzero = not v.is_zero()
    # rows D..n-1 do not occur in v; permuting them fixes v
    used_rows = list(range(1, D))
    spare = list(range(D, n))
    row_reps = used_rows + spare[:2]
    checked = []
    killed = True
    for a in range(len(row_reps)):
        for b in range(a, len(row_reps)):
            ra, rb = row_reps[a], row_reps[b]
            if ra in spare and rb in spare and ra == rb and ra != spare[0]:
                continue
            if ra in spare and rb in spare and ra != rb and (ra, rb) != (spare[0], spare[1]):
                continue
            if ra in spare and rb not in spare:
                continue
            if rb in spare and ra not in spare and rb != spare[0]:
                continue
            target = list(d)
            target[ra - 1] += 1
            target[rb - 1] += 1
            checked.append(target)
            if not ring.dim(tuple(target)):
                continue
            for ja in range(1, n + 1):
                for jb in range(1, n + 1):
                    if ja == jb:
                        continue
                    if ra == rb and jb < ja:
                        continue
                    w = ring.multiply_monomial(v, [(ra, ja), (rb, jb)])
                    if not w.is_zero():
                        killed = False
    return {
        "n": n,
        "degree": D - 1,
        "multidegree": list(d),
        "tableau": [list(r) for r in T.rows()],
        "t": t,
        "nonzero": nonzero,
        "annihilated_by_m2": killed,
        "components_checked": len(checked),
        "hypothesis_failed": nonzero and killed,
        "socle_element": ring.vector_json(v),
    }


# ---------------------------------------------------------------------------
# the obstruction witness


def t2_witness_element(n: int) -> list[tuple]:
    vs = [(1, 2), (1, 3)] + [(k, k + 2) for k in range(2, n - 2)]
    return vs


def t2_witness(n: int) -> dict:
    """Checks that f = x_{1,2} x_{1,3} prod_{k=2}^{n-3} x_{k,k+2} is a nonzero socle
    element outside the ideal (x_{n-1,1}, x_{n-2,1}); the outcome for n = 4 is
    'inapplicable' since G(A_4) is a smooth point."""
    if n == 4:
        return {"n": 4, "outcome": "inapplicable", "reason": "smooth point regime", "witness": False}
    if n < 4:
        raise TangentError("the witness needs n >= 5")
    ring = get_ring(n)
    vs = t2_witness_element(n)
    f = ring.monomial_element(vs)
    nonzero = not f.is_zero()
    socle, var = ring.is_socle(f)
    outside = not ring.ideal_membership(f, [(n - 1, 1), (n - 2, 1)])
    ok = nonzero and socle and outside
    return {
        "n": n,
        "outcome": "confirmed" if ok else "failed",
        "f": "*".join(f"x_{i}_{j}" for i, j in vs),
        "multidegree": list(f.d),
        "nonzero": nonzero,
        "socle": socle,
        "outside_ideal": outside,
        "witness": ok,
    }


def prop_quadric_support(sol: HomSolution, pres: IdealPresentation, handle: GcHandle) -> bool:
    """Every solution sends x_{i,j} x_{k,j} into the span of column-j variables (degree -1)."""
    gens = pres.all_generators
    for v in sol.solution_space.basis:
        for t, (D, off, size) in sol.layout.blocks.items():
            g = gens[t]
            if g.kind != "quadric" or sum(D) != 1:
                continue
            j = g.data[2]
            row = D.index(1) + 1
            allowed = Echelon(size)
            allowed.add(handle.nf((((row, j)),)))
            block = {k - off: a for k, a in v.items() if off <= k < off + size}
            if block and not allowed.contains(block):
                return False
    return True
