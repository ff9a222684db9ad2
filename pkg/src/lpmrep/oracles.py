"""Slow, independent reference computations used to cross-check the fast paths.

Nothing here shares code with the elimination, Rabin test or matching
routines it is compared against.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .matroid import BipartiteGraph


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def leibniz_determinant(F, rows: Sequence[Sequence]):
    """sum over permutations of sign * prod_i a[i][perm(i)], with FieldElement arithmetic."""
    n = len(rows)
    total = F.zero
    for perm in itertools.permutations(range(n)):
        term = F.one
        for i, j in enumerate(perm):
            term = term * F(rows[i][j])
        total = total + term if permutation_sign(perm) > 0 else total - term
    return total


def rank_by_minors(F, rows: Sequence[Sequence]) -> int:
    """Size of the largest square submatrix with a nonzero Leibniz determinant."""
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    for k in range(min(nr, nc), 0, -1):
        for ri in itertools.combinations(range(nr), k):
            for ci in itertools.combinations(range(nc), k):
                if leibniz_determinant(F, [[rows[i][j] for j in ci] for i in ri]):
                    return k
    return 0


def _monic_polys(p: int, d: int):
    for digits in itertools.product(range(p), repeat=d):
        yield list(digits) + [1]


def _remainder(f: list[int], g: list[int], p: int) -> list[int]:
    r = list(f)
    while len(r) >= len(g):
        c = r[-1] % p
        shift = len(r) - len(g)
        for i, gi in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gi) % p
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def is_irreducible_by_trial_division(f: Sequence[int], p: int) -> bool:
    """A monic f is irreducible iff no monic g of degree 1..deg(f)/2 divides it."""
    f = list(f)
    s = len(f) - 1
    for d in range(1, s // 2 + 1):
        for g in _monic_polys(p, d):
            if not _remainder(f, g, p):
                return False
    return True


def first_irreducible_by_trial_division(p: int, s: int) -> tuple[int, ...]:
    for digits in itertools.product(range(p), repeat=s):
        f = list(reversed(digits)) + [1]
        if is_irreducible_by_trial_division(f, p):
            return tuple(f)
    raise AssertionError


def perfect_matchings_by_permutation(g: BipartiteGraph, cols: Sequence[int]) -> list[tuple[tuple[int, int], ...]]:
    cols = sorted(cols)
    out = []
    for perm in itertools.permutations(cols):
        if all(g.has_edge(j, x) for j, x in enumerate(perm, 1)):
            out.append(tuple(enumerate(perm, 1)))
    return out


def basis_polynomial(g: BipartiteGraph, weights, cols: Sequence[int]) -> dict[int, int]:
    """Integer polynomial det of the submatrix with a^w(j,x) on edges, as {degree: coefficient}."""
    cols = sorted(cols)
    poly: dict[int, int] = {}
    for perm in itertools.permutations(range(len(cols))):
        pairs = [(j, cols[k]) for j, k in enumerate(perm, 1)]
        if all(g.has_edge(j, x) for j, x in pairs):
            deg = sum(weights[e] for e in pairs)
            poly[deg] = poly.get(deg, 0) + permutation_sign(perm)
    return {d: c for d, c in poly.items() if c}


def muniform_basis_polynomial(g: BipartiteGraph, weights, beta: dict, F, cols: Sequence[int]) -> dict:
    """det of the submatrix with b_x^(j-1) a^w(j,x) on edges, coefficients in F (prime field)."""
    cols = sorted(cols)
    poly: dict = {}
    for perm in itertools.permutations(range(len(cols))):
        pairs = [(j, cols[k]) for j, k in enumerate(perm, 1)]
        if not all(g.has_edge(j, x) for j, x in pairs):
            continue
        deg = sum(weights[e] for e in pairs)
        c = F.one
        for j, x in pairs:
            c = c * F(beta[x]) ** (j - 1)
        if permutation_sign(perm) < 0:
            c = -c
        poly[deg] = poly.get(deg, F.zero) + c
    return {d: c for d, c in poly.items() if c}


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = permutation_sign(perm)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total
