"""Independent reference computations used to freeze expected values.

Nothing here imports the package's linear algebra or tableau code.
"""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial

import sympy


def dense_rank(rows):
    """Rank by textbook Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rank, ncols = 0, len(m[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def brute_kostka(shape, content):
    """Count fillings of the shape with the given content that are semistandard."""
    labels = []
    for k, c in enumerate(content, start=1):
        labels += [k] * c
    seen = set()
    count = 0
    for perm in set(permutations(labels)):
        rows, k = [], 0
        for p in shape:
            rows.append(perm[k:k + p])
            k += p
        ok = all(r[i] <= r[i + 1] for r in rows for i in range(len(r) - 1))
        ok = ok and all(rows[i][j] < rows[i + 1][j] for i in range(len(rows) - 1) for j in range(len(rows[i + 1])))
        if ok and perm not in seen:
            seen.add(perm)
            count += 1
    return count


def syt_count(shape):
    return brute_kostka(shape, [1] * sum(shape))


def gc_component_dim_sympy(n, d):
    """dim G(A_n)_d via a sympy rank over all column monomials of multidegree d."""
    def monos(dd):
        total = sum(dd)
        if min(dd, default=0) < 0 or total > n:
            return []
        rows = [i + 1 for i, x in enumerate(dd) for _ in range(x)]
        out = set()
        for cols in combinations(range(n), total):
            for arr in set(permutations(rows)):
                m = [0] * n
                for c, r in zip(cols, arr):
                    m[c] = r
                out.add(tuple(m))
        return sorted(out)

    target = monos(d)
    if not target:
        return 0
    idx = {m: k for k, m in enumerate(target)}
    rels = []
    for i in range(1, n):
        dd = list(d)
        dd[i - 1] -= 1
        for mp in monos(dd):
            row = [0] * len(target)
            for j in range(n):
                if mp[j] == 0:
                    m = list(mp)
                    m[j] = i
                    row[idx[tuple(m)]] += 1
            rels.append(row)
    if not rels:
        return len(target)
    return len(target) - sympy.Matrix(rels).rank()


def multinomial(parts):
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out
