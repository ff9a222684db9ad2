"""Deterministic representations of lattice path matroids over finite fields.

All three constructions start from the biadjacency matrix of an interval
presentation and put a power of one field element on every edge, with
the exponent given by a weight function (see ``weights``):

* ``build_extension_rep``: entry a^w(j,x) in F_p[a]/(f), deg f = s larger than
  any perfect-matching weight.
* ``build_prime_rep``: entry 2^w(j,x) reduced modulo a prime above the
  Hadamard bound for the basis determinants of the integer matrix.
* ``build_muniform_rep``: entry b_x^(j-1) a^w(j,x) with the coarser per-part
  weights, over an extension of a small prime field F_q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import isqrt

from .errors import DimensionMismatch, FieldError, NotPartConstant
from .ff import ExtensionField, FieldMatrix, PrimeField, find_irreducible, is_prime, next_prime
from .ff.linalg import raw_rank
from .matroid import (
    SUBSET_LIMIT,
    SWEEP_LIMIT,
    GroundPartition,
    IntervalPresentation,
    TransversalMatroid,
    _check_scale,
    part_constant_violation,
)
from .weights import max_matching_weight_bound, muniform_weights, simple_weight_bound, standard_weights


@dataclass(frozen=True)
class Representation:
    """A matrix over ``field`` whose columns are meant to represent a matroid on [cols]."""

    field: PrimeField | ExtensionField
    matrix: FieldMatrix
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.matrix.field != self.field:
            raise FieldError("matrix entries belong to a different field")

    @property
    def rows(self) -> int:
        return self.matrix.nrows

    @property
    def cols(self) -> int:
        return self.matrix.ncols


def ceil_sqrt(v: int) -> int:
    c = isqrt(v)
    return c if c * c == v else c + 1


def hadamard_bound(r: int, t: int) -> int:
    """2^(r t) * ceil(r^(r/2))."""
    return (1 << (r * t)) * ceil_sqrt(r**r)


def extension_degree(r: int, n: int) -> int:
    return max_matching_weight_bound(r, n) + 1


def build_extension_rep(p: IntervalPresentation, base_prime: int = 2) -> Representation:
    if not is_prime(base_prime):
        raise FieldError(f"{base_prime} is not prime")
    r, n = p.r, p.n
    w = standard_weights(p)
    s = extension_degree(r, n)
    F = ExtensionField(base_prime, find_irreducible(base_prime, s), check=False)
    a = F.alpha.value
    zero = F.raw_zero
    rows = [[F.power(a, w[(j, x)]) if p.graph.has_edge(j, x) else zero for x in range(1, n + 1)] for j in range(1, r + 1)]
    prov = {
        "construction": "extension",
        "p": base_prime,
        "s": s,
        "s_simple_bound": simple_weight_bound(r, n),
        "max_matching_weight_bound": s - 1,
        "t": w.t,
        "weights": w.to_json(),
        "intervals": [list(iv) for iv in p.intervals],
    }
    return Representation(F, FieldMatrix.from_raw(F, rows), prov)


def build_prime_rep(p: IntervalPresentation) -> Representation:
    r, n = p.r, p.n
    w = standard_weights(p)
    bound = hadamard_bound(r, w.t)
    prime = next_prime(bound)
    F = PrimeField(prime, check=False)
    rows = [[pow(2, w[(j, x)], prime) if p.graph.has_edge(j, x) else 0 for x in range(1, n + 1)] for j in range(1, r + 1)]
    prov = {
        "construction": "prime",
        "p": str(prime),
        "t": w.t,
        "bound": str(bound),
        "worst_case_bound": str(hadamard_bound(r, (r - 1) * (n - 1))),
        "weights": w.to_json(),
        "intervals": [list(iv) for iv in p.intervals],
    }
    return Representation(F, FieldMatrix.from_raw(F, rows), prov)


def muniform_degree(r: int, m: int) -> int:
    return (m - 1) * r * (r - 1) // 2 + 1


def build_muniform_rep(p: IntervalPresentation, part: GroundPartition, q: int) -> Representation:
    if not is_prime(q):
        raise FieldError(f"q={q} must be prime")
    bad = part_constant_violation(p.graph, part)
    if bad:
        raise NotPartConstant(*bad)
    largest = max(len(s) for s in part.parts)
    if q <= largest:
        raise FieldError(f"q={q} must exceed the largest part size {largest}")
    r, n, m = p.r, p.n, part.m
    w = muniform_weights(p, part)
    s = muniform_degree(r, m)
    F = ExtensionField(q, find_irreducible(q, s), check=False)
    a = F.alpha.value
    beta = {x: F.coerce(x - part.thresholds[part.part_of(x) - 1] + 1) for x in range(1, n + 1)}
    rows = []
    for j in range(1, r + 1):
        row = []
        for x in range(1, n + 1):
            if p.graph.has_edge(j, x):
                row.append(F.mul(F.power(beta[x], j - 1), F.power(a, w[(j, x)])))
            else:
                row.append(F.raw_zero)
        rows.append(row)
    prov = {
        "construction": "muniform",
        "q": q,
        "s": s,
        "s_simple_bound": (m - 1) * r * (r - 1) // 2,
        "partition": list(part.thresholds),
        "beta": [int(beta[x][0]) for x in range(1, n + 1)],
        "weights": w.to_json(),
        "intervals": [list(iv) for iv in p.intervals],
    }
    return Representation(F, FieldMatrix.from_raw(F, rows), prov)


@dataclass(frozen=True)
class Verification:
    """Result of ``verify_representation``; truthy on success."""

    ok: bool
    mode: str
    checked: int
    witness: tuple[int, ...] | None = None
    expected: int | None = None
    actual: int | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"ok": self.ok, "mode": self.mode, "checked": self.checked}
        if not self.ok:
            out.update(witness=list(self.witness), expected=self.expected, actual=self.actual)
        return out


def verify_representation(m: TransversalMatroid, rep: Representation, mode: str = "bases", limit: int | None = None) -> Verification:
    """Exhaustively compare the column matroid of ``rep`` with ``m``.

    ``bases``: full row rank r, and each r-subset has a nonzero minor iff it
    is a basis.  ``all-subsets``: column rank of every X equals rank(X).
    """
    if rep.cols != m.n:
        raise DimensionMismatch(f"representation has {rep.cols} columns, matroid has {m.n} elements")
    F = rep.field
    rows = rep.matrix.rows
    if mode == "bases":
        if rep.rows != m.r:
            raise DimensionMismatch(f"bases mode needs {m.r} rows, representation has {rep.rows}")
        _check_scale(m.n, SUBSET_LIMIT if limit is None else limit, "basis verification")
        checked = 0
        for b in itertools.combinations(m.ground, m.r):
            sub = [[row[x - 1] for x in b] for row in rows]
            got = raw_rank(F, sub, m.r)
            want = m.rank(b)
            checked += 1
            if (got == m.r) != (want == m.r):
                return Verification(False, mode, checked, b, want, got)
        # a basis exists, so rank r already follows; kept as a cheap guard
        full = raw_rank(F, rows, m.n)
        if full != m.r:
            return Verification(False, mode, checked, tuple(m.ground), m.r, full)
        return Verification(True, mode, checked)
    if mode == "all-subsets":
        checked = 0
        for xs in m.subsets(SWEEP_LIMIT if limit is None else limit):
            sub = [[row[x - 1] for x in xs] for row in rows]
            got = raw_rank(F, sub, len(xs))
            want = m.rank(xs)
            checked += 1
            if got != want:
                return Verification(False, mode, checked, xs, want, got)
        return Verification(True, mode, checked)
    raise ValueError(f"unknown verification mode {mode!r}")
