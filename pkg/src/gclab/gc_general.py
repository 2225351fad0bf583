"""Galois-closure ideals of finite-rank algebras given by structure constants.

For A free of rank n over k with basis a_1 = 1, a_2, ..., a_n, the Galois
closure is A^{(x)n} modulo s_j(a) - e_j(a), where s_j(a) are the signed
coefficients of the characteristic polynomial of multiplication by a and
e_j(a) is the j-th elementary symmetric function of the n tensor-slot copies
a^{(1)}, ..., a^{(n)}.  Variables: x_{i,l} stands for a_{i+1} in slot l.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from math import comb, factorial
from typing import Mapping, Sequence

from gmpy2 import mpq

from . import polys
from .linalg import ONE, ZERO, Echelon, as_rational, rational_str


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraPresentation:
    """Basis labels (labels[0] is the unit) and c[i][j][k] with a_i a_j = sum_k c_ijk a_k."""

    labels: tuple
    consts: tuple

    @property
    def n(self) -> int:
        return len(self.labels)

    def __post_init__(self):
        n = self.n
        c = self.consts
        if len(c) != n or any(len(row) != n or any(len(x) != n for x in row) for row in c):
            raise AlgebraError("structure constants must be an n x n x n array")
        for j in range(n):
            for k in range(n):
                if c[0][j][k] != (1 if j == k else 0):
                    raise AlgebraError(f"unit law fails for {self.labels[j]}")
        for i in range(n):
            for j in range(n):
                if c[i][j] != c[j][i]:
                    raise AlgebraError(f"not commutative: {self.labels[i]}*{self.labels[j]}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self._mul(self._mul(_e(n, i), _e(n, j)), _e(n, k)) != \
                            self._mul(_e(n, i), self._mul(_e(n, j), _e(n, k))):
                        raise AlgebraError(
                            f"not associative on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    def _mul(self, u: Sequence[mpq], v: Sequence[mpq]) -> list:
        n = self.n
        out = [ZERO] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j]:
                    continue
                for k in range(n):
                    out[k] += u[i] * v[j] * self.consts[i][j][k]
        return out

    def mult_matrix(self, a: Sequence) -> list[list[mpq]]:
        """m_a with (m_a)[k][j] = coefficient of a_k in a * a_j."""
        n = self.n
        a = [as_rational(x) for x in a]
        return [[sum((a[i] * self.consts[i][j][k] for i in range(n)), ZERO) for j in range(n)]
                for k in range(n)]

    @property
    def is_square_zero(self) -> bool:
        return all(x == 0 for row in self.consts[1:] for col in row[1:] for x in col)


def _e(n: int, i: int) -> list:
    return [ONE if k == i else ZERO for k in range(n)]


def algebra(labels: Sequence[str], products: Mapping) -> AlgebraPresentation:
    """Build from products of non-unit labels, e.g. {("x", "x"): {"y": 1}}; missing products are 0."""
    labels = tuple(labels)
    n = len(labels)
    pos = {l: k for k, l in enumerate(labels)}
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        c[0][j][j] = ONE
        c[j][0][j] = ONE
    for (p, q), out in products.items():
        i, j = pos[p], pos[q]
        if i == 0 or j == 0:
            raise AlgebraError("products with the unit are implied")
        for lab, v in out.items():
            c[i][j][pos[lab]] = as_rational(v)
            c[j][i][pos[lab]] = as_rational(v)
    return AlgebraPresentation(labels, tuple(tuple(tuple(x) for x in row) for row in c))


def square_zero(n: int) -> AlgebraPresentation:
    """A_n = k[x_1..x_{n-1}]/(x_1..x_{n-1})^2."""
    return algebra(["1"] + [f"x{i}" for i in range(1, n)], {})


def truncated_polynomial(n: int) -> AlgebraPresentation:
    """k[x]/(x^n) with basis 1, x, ..., x^{n-1}."""
    labels = ["1"] + [f"x^{i}" for i in range(1, n)]
    products = {}
    for i in range(1, n):
        for j in range(i, n):
            if i + j < n:
                products[(labels[i], labels[j])] = {labels[i + j]: 1}
    return algebra(labels, products)


def load_algebra(path: str) -> AlgebraPresentation:
    """JSON: {"labels": [...], "products": [[p, q, {label: "a/b"}], ...]}."""
    with open(path) as fh:
        data = json.load(fh)
    return algebra(data["labels"], {(p, q): out for p, q, out in data.get("products", [])})


def char_poly(A: AlgebraPresentation, a: Sequence) -> list[mpq]:
    """[s_0, ..., s_n] with det(t - m_a) = sum_i (-1)^i s_i t^{n-i} (Faddeev-LeVerrier)."""
    n = A.n
    m = A.mult_matrix(a)
    coeffs = [ZERO] * (n + 1)  # coeffs[i] = coefficient of t^i
    coeffs[n] = ONE
    prev = [[ZERO] * n for _ in range(n)]
    for k in range(1, n + 1):
        mk = _matmul(m, prev)
        c = coeffs[n - k + 1]
        for i in range(n):
            mk[i][i] += c
        am = _matmul(m, mk)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), ZERO) / k
        prev = mk
    return [coeffs[n - i] * (-1) ** i for i in range(n + 1)]


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]


@dataclass
class GcIdealOutput:
    n: int
    labels: tuple
    variables: list  # (i, l) for 1 <= i < n, 1 <= l <= n
    generators: list  # polynomials e_j(x_i) - s_j(a_{i+1})
    generator_names: list
    slot_relations: list  # products within one tensor slot

    @property
    def all_polys(self) -> list:
        return self.slot_relations + self.generators


def gc_ideal(A: AlgebraPresentation) -> GcIdealOutput:
    n = A.n
    variables = [(i, l) for i in range(1, n) for l in range(1, n + 1)]
    gens, names = [], []
    for i in range(1, n):
        s = char_poly(A, _e(n, i))
        slot_vars = [(i, l) for l in range(1, n + 1)]
        for j in range(1, n + 1):
            p = polys.sub(polys.elementary(slot_vars, j), polys.const(s[j]))
            gens.append(p)
            names.append(f"e_{j}({A.labels[i]}) - s_{j}({A.labels[i]})")
    rel = []
    for l in range(1, n + 1):
        for p in range(1, n):
            for q in range(p, n):
                prod = polys.mono((p, l), (q, l))
                rhs: dict = {}
                for k in range(n):
                    c = A.consts[p][q][k]
                    if c:
                        term = polys.const(c) if k == 0 else {((k, l),): c}
                        rhs = polys.add(rhs, term)
                rel.append(polys.sub({prod: ONE}, rhs))
    return GcIdealOutput(n, A.labels, variables, gens, names, rel)


def _var_name(v) -> str:
    return f"x_{v[0]}_{v[1]}"


def poly_text(p: Mapping) -> str:
    return polys.to_text(p, _var_name)


def export_ideal(out: GcIdealOutput, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(export_json(out), separators=(",", ":"))
    lines = [f"# n = {out.n}", "# basis = " + ", ".join(out.labels)]
    for r in out.slot_relations:
        lines.append("# slot relation: " + poly_text(r))
    lines.extend(poly_text(g) for g in out.generators)
    return "\n".join(lines) + "\n"


def export_json(out: GcIdealOutput) -> dict:
    return {
        "n": out.n,
        "labels": list(out.labels),
        "variables": [_var_name(v) for v in out.variables],
        "slot_relations": [poly_text(r) for r in out.slot_relations],
        "generators": [poly_text(g) for g in out.generators],
    }


def is_homogeneous(p: Mapping) -> bool:
    return len({len(m) for m in p}) <= 1


def graded_dims(out: GcIdealOutput, max_degree: int | None = None) -> list[int] | None:
    """Hilbert function of k[x]/I in total degree, for homogeneous I (None otherwise)."""
    allp = [p for p in out.all_polys if p]
    if not all(is_homogeneous(p) for p in allp):
        return None
    variables = out.variables
    top = max_degree if max_degree is not None else len(variables) + 1
    dims = []
    for t in range(top + 1):
        monos = _monomials(variables, t)
        index = {m: k for k, m in enumerate(monos)}
        ech = Echelon(len(monos))
        for p in allp:
            dp = len(next(iter(p)))
            if dp > t:
                continue
            for m in _monomials(variables, t - dp):
                ech.add({index[polys.mono_mul(m, k)]: a for k, a in p.items()})
        dims.append(len(monos) - ech.rank)
        if max_degree is None and dims[-1] == 0:
            break
    if max_degree is None:
        while dims and dims[-1] == 0 and len(dims) > 1:
            dims.pop()
    return dims


def _monomials(variables, t):
    from itertools import combinations_with_replacement

    return [tuple(sorted(c)) for c in combinations_with_replacement(variables, t)]


def newton_girard_certificate(n: int, i: int, j: int) -> tuple[dict, dict]:
    """Multipliers (m_lin, {l: m_l}) with e_j(x_i) = m_lin * e_1(x_i) + sum_l m_l * x_{i,l}^2."""
    vs = [(i, l) for l in range(1, n + 1)]
    inv = mpq(1, j)
    m_lin = polys.scale(polys.elementary(vs, j - 1), inv)
    m_sq = {}
    for l in range(1, n + 1):
        acc: dict = {}
        for k in range(2, j + 1):
            term = polys.mul(polys.elementary(vs, j - k), {((i, l),) * (k - 2): ONE})
            acc = polys.add(acc, polys.scale(term, (-1) ** (k - 1) * inv))
        m_sq[l] = acc
    return m_lin, m_sq


def check_newton_girard(n: int) -> bool:
    """Every e_j(x_i), j >= 2, lies in (e_1(x_i)) + (x_{i,l}^2) by explicit rewriting."""
    for i in range(1, n):
        vs = [(i, l) for l in range(1, n + 1)]
        e1 = polys.elementary(vs, 1)
        for j in range(2, n + 1):
            m_lin, m_sq = newton_girard_certificate(n, i, j)
            rhs = polys.mul(m_lin, e1)
            for l, m in m_sq.items():
                rhs = polys.add(rhs, polys.mul(m, {((i, l), (i, l)): ONE}))
            if polys.sub(polys.elementary(vs, j), rhs):
                return False
    return True


def column_permutation_stable(out: GcIdealOutput) -> bool:
    """Permuting the tensor slots maps the generator set onto itself."""
    def canon(ps):
        return {tuple(sorted(p.items())) for p in ps}

    base = canon(out.all_polys)
    for perm in permutations(range(1, out.n + 1)):
        moved = [{tuple(sorted((v[0], perm[v[1] - 1]) for v in m)): a for m, a in p.items()}
                 for p in out.all_polys]
        if canon(moved) != base:
            return False
    return True


def agrees_with_simplified(n: int, check_degree: int = 3) -> dict:
    """Compare gc_ideal(A_n) with the presentation (e_1(x_i)) + column quadrics."""
    from .gc_ring import GcRing

    out = gc_ideal(square_zero(n))
    # the simplified generators: e_1(x_i) appear verbatim, the quadrics are the slot relations
    lin_present = all(
        any(g == polys.elementary([(i, l) for l in range(1, n + 1)], 1) for g in out.generators)
        for i in range(1, n)
    )
    quads = {polys.mono((p, l), (q, l)) for l in range(1, n + 1) for p in range(1, n) for q in range(p, n)}
    quads_present = {next(iter(r)) for r in out.slot_relations if len(r) == 1} >= quads
    ng = check_newton_girard(n)
    dims = graded_dims(out, check_degree)
    expected = list(GcRing(n).hilbert_function()) + [0] * (check_degree + 1)
    return {
        "n": n,
        "simplified_in_full": lin_present and quads_present,
        "full_in_simplified": ng,
        "graded_dims": dims,
        "expected": expected[: check_degree + 1],
        "agree": lin_present and quads_present and ng and dims == expected[: check_degree + 1],
    }


def total_dim(A: AlgebraPresentation) -> int | None:
    dims = graded_dims(gc_ideal(A))
    return None if dims is None else sum(dims)


def expected_rank(n: int) -> int:
    return factorial(n)


def unit_char_poly(n: int) -> list[int]:
    return [comb(n, j) for j in range(n + 1)]


def rational_json(x) -> str:
    return rational_str(x)
