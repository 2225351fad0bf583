"""Sparse polynomials over Q in a free commutative polynomial ring.

A monomial is a sorted tuple of variable labels (repetition = powers); a
polynomial is a dict monomial -> nonzero mpq.  Labels only need to be
hashable and mutually comparable.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping

from gmpy2 import mpq

from .linalg import ONE, add_scaled

Poly = dict


def mono(*variables) -> tuple:
    return tuple(sorted(variables))


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(sorted(a + b))


def var(v) -> Poly:
    return {(v,): ONE}


def const(c) -> Poly:
    c = mpq(c)
    return {(): c} if c else {}


def add(*ps: Mapping) -> Poly:
    out: dict = {}
    for p in ps:
        add_scaled(out, p, ONE)
    return out


def scale(p: Mapping, c) -> Poly:
    c = mpq(c)
    return {m: a * c for m, a in p.items()} if c else {}


def sub(p: Mapping, q: Mapping) -> Poly:
    out = dict(p)
    add_scaled(out, q, mpq(-1))
    return out


def mul(p: Mapping, q: Mapping) -> Poly:
    out: dict = {}
    for m1, a in p.items():
        for m2, b in q.items():
            m = mono_mul(m1, m2)
            c = out.get(m, 0) + a * b
            if c:
                out[m] = c
            else:
                out.pop(m, None)
    return out


def mono_times_poly(m: tuple, p: Mapping, c=ONE) -> Poly:
    return {mono_mul(m, k): a * c for k, a in p.items()}


def diff(p: Mapping, v) -> Poly:
    out: dict = {}
    for m, a in p.items():
        k = m.count(v)
        if k:
            lst = list(m)
            lst.remove(v)
            t = tuple(lst)
            out[t] = out.get(t, 0) + a * k
    return {m: a for m, a in out.items() if a}


def elementary(variables: Iterable, j: int) -> Poly:
    vs = list(variables)
    if j == 0:
        return const(1)
    return {mono(*c): ONE for c in combinations(vs, j)}


def power_sum(variables: Iterable, j: int) -> Poly:
    return {(v,) * j: ONE for v in variables}


def substitute(p: Mapping, values: Mapping) -> Poly:
    """Replace variables by polynomials (variables absent from ``values`` stay)."""
    out: dict = {}
    for m, a in p.items():
        term = const(a)
        for v in m:
            term = mul(term, values[v] if v in values else var(v))
        add_scaled(out, term, ONE)
    return out


def degree(p: Mapping) -> int:
    return max((len(m) for m in p), default=-1)


def is_zero(p: Mapping) -> bool:
    return not any(a for a in p.values())


def fmt_rational(a: mpq) -> str:
    a = mpq(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def to_text(p: Mapping, name=lambda v: str(v), order=None) -> str:
    if not p:
        return "0"
    items = sorted(p.items(), key=order or (lambda kv: (-len(kv[0]), kv[0])))
    parts = []
    for m, a in items:
        body = "*".join(name(v) for v in m)
        if not body:
            s = fmt_rational(a)
        elif a == 1:
            s = body
        elif a == -1:
            s = "-" + body
        else:
            s = f"{fmt_rational(a)}*{body}"
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out
