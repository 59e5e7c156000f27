"""Independent reference implementations used as test oracles.

Everything here is deliberately written without touching the package
internals: plain (i, j, r) triples, Counter coefficients, factorial
binomials and generating-function counts.  Agreement between these and
the engine is the point of the tests that import them.
"""

from __future__ import annotations

import math
from collections import Counter


def pascal_table_mod2(limit: int) -> list[list[int]]:
    rows = [[1]]
    for n in range(1, limit + 1):
        prev = rows[-1]
        row = [1]
        for k in range(1, n):
            row.append((prev[k - 1] + prev[k]) % 2)
        row.append(1)
        rows.append(row)
    return rows


def binom_factorial_mod2(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k) % 2


# -- naive RTT rewriting ---------------------------------------------------------


def naive_bracket_words(g1, g2) -> Counter:
    """Right-hand side of the defining relation, words keyed by (i,j,r) triples."""
    (i, j, r), (k, l, s) = g1, g2
    out: Counter = Counter()
    for t in range(min(r, s)):
        hi = r + s - 1 - t
        if t == 0:
            if k == j:
                out[((i, l, hi),)] += 1
            if i == l:
                out[((k, j, hi),)] += 1
        else:
            out[((k, j, t), (i, l, hi))] += 1
            out[((k, j, hi), (i, l, t))] += 1
    return out


def naive_normal_form(words) -> set:
    """Worklist rewriting, rightmost inversion first, Counter coefficients."""
    pending: Counter = Counter()
    for w in words:
        pending[tuple(tuple(g) for g in w)] += 1
    done: Counter = Counter()
    while pending:
        word, mult = pending.popitem()
        if mult % 2 == 0:
            continue
        idx = None
        for p in range(len(word) - 2, -1, -1):
            if word[p] > word[p + 1]:
                idx = p
                break
        if idx is None:
            done[word] += mult
            continue
        g1, g2 = word[idx], word[idx + 1]
        pending[word[:idx] + (g2, g1) + word[idx + 2:]] += mult
        for mid, c in naive_bracket_words(g1, g2).items():
            pending[word[:idx] + mid + word[idx + 2:]] += mult * c
    return {w for w, c in done.items() if c % 2}


def gl_bracket_mod2(g1, g2) -> set:
    """Degree-one structure constants of gl over GF(2): [E_ij, E_kl]."""
    (i, j), (k, l) = g1, g2
    out: Counter = Counter()
    if k == j:
        out[(i, l)] += 1
    if i == l:
        out[(k, j)] += 1
    return {g for g, c in out.items() if c % 2}


# -- generating-function monomial counts ------------------------------------------


def _poly_mul(p: list[int], q: list[int], bound: int) -> list[int]:
    out = [0] * (bound + 1)
    for a, ca in enumerate(p):
        if not ca:
            continue
        for b, cb in enumerate(q):
            if a + b > bound:
                break
            out[a + b] += ca * cb
    return out


def monomial_counts(even_per_degree: int, odd_per_degree: int, bound: int,
                    super_only: bool) -> list[int]:
    """Counts of ordered (super)monomials by total degree, via power series.

    Each even generator of degree r contributes 1/(1 - x^r); odd
    generators contribute (1 + x^r) in the super case and the geometric
    factor otherwise.
    """
    poly = [1] + [0] * bound
    for r in range(1, bound + 1):
        geometric = [1 if k % r == 0 else 0 for k in range(bound + 1)]
        binary = [1 if k in (0, r) else 0 for k in range(bound + 1)]
        for _ in range(even_per_degree):
            poly = _poly_mul(poly, geometric, bound)
        odd_factor = binary if super_only else geometric
        for _ in range(odd_per_degree):
            poly = _poly_mul(poly, odd_factor, bound)
    return poly


def count_full(m: int, n: int, bound: int) -> list[int]:
    """Cumulative dimension of the degree filtration, all generators free."""
    per_degree = monomial_counts((m + n) ** 2, 0, bound, super_only=False)
    out = []
    total = 0
    for c in per_degree:
        total += c
        out.append(total)
    return out


def count_super(m: int, n: int, bound: int) -> list[int]:
    """Cumulative count of ordered supermonomials (odd exponents <= 1)."""
    per_degree = monomial_counts(m * m + n * n, 2 * m * n, bound, super_only=True)
    out = []
    total = 0
    for c in per_degree:
        total += c
        out.append(total)
    return out
