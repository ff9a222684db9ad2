"""Exhaustive desk-scale acceptance sweep.

Every valid interval presentation with n <= 6 and r <= 3 is generated and
each criterion is checked on all of them.  Criteria are independent
functions returning a ``CriterionResult``; ``run_sweep`` runs them all.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .errors import InvalidPresentation
from .ff import ExtensionField, FieldMatrix, PrimeField, find_irreducible, is_irreducible, next_prime
from .matroid import (
    GroundPartition,
    IntervalPresentation,
    TransversalMatroid,
    BipartiteGraph,
    hierarchically_inferior,
    is_independent_hall,
    part_constant_violation,
    port,
)
from .oracles import (
    first_irreducible_by_trial_division,
    is_irreducible_by_trial_division,
    leibniz_determinant,
    perfect_matchings_by_permutation,
    rank_by_minors,
)
from .representation import build_extension_rep, build_muniform_rep, build_prime_rep, verify_representation
from .sharing import (
    SharingScheme,
    coefficients_for,
    deal,
    is_qualified,
    maximal_unqualified_sets,
    privacy_check,
    reconstruct,
)
from .weights import is_isolating, max_matching_weight_bound, perfect_matchings, simple_weight_bound, standard_weights

SMALL_FIELD = 9
PRIVACY_CODEWORDS = 1 << 12
MAX_FAILURES_KEPT = 5


def presentations(max_n: int = 6, max_r: int = 3) -> Iterator[IntervalPresentation]:
    """All valid interval presentations, by (n, r, a, b) in lexicographic order."""
    for n in range(1, max_n + 1):
        for r in range(1, min(n, max_r) + 1):
            for a in itertools.combinations_with_replacement(range(1, n + 1), r):
                if a[0] != 1:
                    continue
                for b in itertools.combinations_with_replacement(range(1, n + 1), r):
                    if b[-1] != n or any(x > y for x, y in zip(a, b)):
                        continue
                    try:
                        yield IntervalPresentation(n, tuple(zip(a, b)))
                    except InvalidPresentation:
                        continue


def partitions(n: int, m: int) -> Iterator[GroundPartition]:
    for inner in itertools.combinations(range(2, n + 1), m - 1):
        yield GroundPartition(n, (1,) + inner)


def part_constant_instances(max_n: int = 6, max_r: int = 3, ms: Iterable[int] = (2, 3)) -> Iterator[tuple[IntervalPresentation, GroundPartition]]:
    ms = tuple(ms)
    for p in presentations(max_n, max_r):
        for m in ms:
            if m > p.n:
                continue
            for part in partitions(p.n, m):
                if part_constant_violation(p.graph, part) is None:
                    yield p, part


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    notes: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; {self.notes}" if self.notes else ""
        return f"[{status}] criterion {self.number}: {self.title} ({self.checked} checked, {self.seconds:.1f}s{extra})"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "notes": self.notes,
        }


def _label(p: IntervalPresentation, part: GroundPartition | None = None) -> str:
    s = f"n={p.n} intervals={[list(iv) for iv in p.intervals]}"
    return s if part is None else s + f" partition={list(part.thresholds)}"


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


def _collect(number: int, title: str, outcomes: list, start: float, notes: str = "") -> CriterionResult:
    failures = [f for f in outcomes if f]
    return CriterionResult(number, title, not failures, len(outcomes), failures[:MAX_FAILURES_KEPT], notes, time.perf_counter() - start)


# per-instance checks (module level so they pickle for --jobs)


def _check_extension(p: IntervalPresentation) -> str | None:
    v = verify_representation(p.matroid, build_extension_rep(p, 2), "all-subsets")
    return None if v else f"{_label(p)}: witness {list(v.witness)} rank {v.actual} != {v.expected}"


def _check_prime(p: IntervalPresentation) -> str | None:
    rep = build_prime_rep(p)
    bound = int(rep.provenance["bound"])
    if not rep.field.p > bound:
        return f"{_label(p)}: prime {rep.field.p} not above bound {bound}"
    v = verify_representation(p.matroid, rep, "all-subsets")
    return None if v else f"{_label(p)}: witness {list(v.witness)} rank {v.actual} != {v.expected}"


def _check_isolation(p: IntervalPresentation) -> str | None:
    g = p.graph
    w = standard_weights(p)
    report = is_isolating(g, w)
    if not report:
        return f"{_label(p)}: not isolating, witness {report.witness}"
    for b in report.per_basis:
        diag = tuple((j, x) for j, x in enumerate(b.basis, 1))
        if not all(g.has_edge(*e) for e in diag):
            return f"{_label(p)}: basis {list(b.basis)} lacks a diagonal edge"
        if b.minimizers != (diag,):
            return f"{_label(p)}: basis {list(b.basis)} minimiser {b.minimizers} is not diagonal"
    return None


def _measure_weights(p: IntervalPresentation) -> tuple[int, int, int, int]:
    report = is_isolating(p.graph, standard_weights(p))
    return p.r, report.max_weight, max_matching_weight_bound(p.r, p.n), simple_weight_bound(p.r, p.n)


def _check_muniform(item: tuple[IntervalPresentation, GroundPartition]) -> str | None:
    p, part = item
    q = next_prime(max(len(s) for s in part.parts))
    v = verify_representation(p.matroid, build_muniform_rep(p, part, q), "all-subsets")
    return None if v else f"{_label(p, part)} q={q}: witness {list(v.witness)}"


def _sample_secrets(F):
    if F.order <= SMALL_FIELD:
        return list(F.elements())
    out = [F.zero, F.one]
    if isinstance(F, ExtensionField) and F.degree > 1:
        a = F.alpha
        out += [a, a + 1, a ** (F.degree - 1)]
    else:
        out += [F(2), F(-1)]
    return out


def _check_sharing(item: tuple[int, IntervalPresentation]) -> tuple[str | None, bool]:
    """Returns (failure, whether privacy was checked by full codeword enumeration)."""
    index, p = item
    m = p.matroid
    rep = build_extension_rep(p, 2)
    scheme = SharingScheme(rep, dealer=1)
    F = scheme.field
    access = port(m, 1)
    rng = random.Random(index)
    elems = None
    for k in range(len(scheme.players) + 1):
        for xs in itertools.combinations(scheme.players, k):
            q_rep = is_qualified(scheme, xs)
            if q_rep != access.is_qualified(xs):
                return f"{_label(p)}: qualification of {list(xs)} disagrees with the port", False
            if not q_rep:
                continue
            for secret in _sample_secrets(F):
                if F.order <= SMALL_FIELD:
                    elems = elems or list(F.elements())
                    free = [rng.choice(elems) for _ in range(rep.rows - 1)]
                else:
                    free = [F([rng.randrange(F.p) for _ in range(F.degree)]) for _ in range(rep.rows - 1)]
                u = coefficients_for(scheme, secret, free)
                shares = deal(scheme, secret, u, xs)
                if reconstruct(scheme, shares) != secret:
                    return f"{_label(p)}: round trip failed on {list(xs)} secret {secret}", False
    exhaustive = F.order**rep.rows <= PRIVACY_CODEWORDS
    if exhaustive:
        for xs in maximal_unqualified_sets(scheme):
            if not privacy_check(scheme, xs):
                return f"{_label(p)}: set {list(xs)} learns something about the secret", True
    return None, exhaustive


def _check_hierarchy(p: IntervalPresentation) -> str | None:
    m = p.matroid
    n = p.n
    if n < 3:
        return None
    low = port(m, 1)
    for x, y in itertools.permutations(low.players, 2):
        if y <= x and not hierarchically_inferior(low, x, y):
            return f"{_label(p)}: port at 1, {x} not inferior to {y}"
    high = port(m, n)
    for x, y in itertools.permutations(high.players, 2):
        if x <= y and not hierarchically_inferior(high, x, y):
            return f"{_label(p)}: port at {n}, {x} not inferior to {y}"
    return None


# criteria


def criterion_extension(insts: list, jobs: int = 1) -> CriterionResult:
    t = time.perf_counter()
    return _collect(1, "extension-field representations (p=2) pass all-subsets verification", _map(_check_extension, insts, jobs), t)


def criterion_prime(insts: list, jobs: int = 1) -> CriterionResult:
    t = time.perf_counter()
    out = _map(_check_prime, insts, jobs)
    bits = max((build_prime_rep(p).field.p.bit_length() for p in insts), default=0)
    return _collect(2, "prime-field representations pass all-subsets verification", out, t, f"largest prime {bits} bits")


def criterion_isolation(insts: list, jobs: int = 1) -> CriterionResult:
    t = time.perf_counter()
    return _collect(3, "standard weights isolate, diagonal matching is the unique minimum", _map(_check_isolation, insts, jobs), t)


def criterion_degree_bounds(insts: list, jobs: int = 1) -> CriterionResult:
    t = time.perf_counter()
    outcomes = []
    equal = []
    for p, (r, measured, bound, simple) in zip(insts, _map(_measure_weights, insts, jobs)):
        if measured > bound:
            outcomes.append(f"{_label(p)}: max weight {measured} > bound {bound}")
        elif r == 3 and not measured < simple:
            outcomes.append(f"{_label(p)}: max weight {measured} not < {simple}")
        else:
            outcomes.append(None)
            if r <= 2 and measured == simple:
                equal.append(r)
    notes = f"equality with r(r-1)(n-1)/2 at r=2 on {equal.count(2)} instances, r=1 on {equal.count(1)}"
    return _collect(4, "matching weights within the bound sum, strict simple bound at r=3", outcomes, t, notes)


def criterion_muniform(max_n: int = 6, max_r: int = 3, jobs: int = 1) -> CriterionResult:
    t = time.perf_counter()
    items = list(part_constant_instances(max_n, max_r, (2, 3)))
    return _collect(5, "m-uniform representations (m in {2,3}) pass all-subsets verification", _map(_check_muniform, items, jobs), t)


def criterion_sharing(insts: list, jobs: int = 1) -> CriterionResult:
    t = time.perf_counter()
    results = _map(_check_sharing, list(enumerate(insts)), jobs)
    exhaustive = sum(1 for _, e in results if e)
    return _collect(
        6,
        "secret sharing round trips and perfect privacy at p_o=1",
        [f for f, _ in results],
        t,
        f"every secret tried when q <= {SMALL_FIELD}; exhaustive privacy on {exhaustive} instances with q^r <= {PRIVACY_CODEWORDS}",
    )


def criterion_hierarchy(insts: list, jobs: int = 1) -> CriterionResult:
    t = time.perf_counter()
    return _collect(7, "ports at 1 and n follow the ground-set order", _map(_check_hierarchy, insts, jobs), t)


def _random_matrix(F, rng: random.Random, nr: int, nc: int):
    elems = list(F.raw_elements()) if F.order <= 64 else None
    def pick():
        if elems is not None:
            return rng.choice(elems)
        return rng.randrange(F.p)
    return [[pick() for _ in range(nc)] for _ in range(nr)]


def criterion_oracles(insts: list, seed: int = 2024) -> CriterionResult:
    t = time.perf_counter()
    rng = random.Random(seed)
    outcomes: list[str | None] = []
    fields = [PrimeField(5), PrimeField(37), ExtensionField(2, (1, 1, 0, 1)), ExtensionField(3, (1, 0, 1))]
    for F in fields:
        for size in range(1, 5):
            for _ in range(25):
                rows = _random_matrix(F, rng, size, size)
                got = FieldMatrix.from_raw(F, rows).determinant()
                want = leibniz_determinant(F, rows)
                outcomes.append(None if got == want else f"det mismatch over {F!r}: {rows}")
        for nr, nc in [(2, 3), (3, 4), (4, 5), (4, 4)]:
            for _ in range(10):
                rows = _random_matrix(F, rng, nr, nc)
                if rng.random() < 0.5:
                    rows[-1] = [F.add(a, b) for a, b in zip(rows[0], rows[1])]
                got = FieldMatrix.from_raw(F, rows).rank()
                want = rank_by_minors(F, [[F(v) for v in row] for row in rows])
                outcomes.append(None if got == want else f"rank mismatch over {F!r}: {rows}")
    for s in range(1, 9):
        got, want = find_irreducible(2, s), first_irreducible_by_trial_division(2, s)
        outcomes.append(None if got == want else f"findIrreducible(2,{s}) = {got}, trial division gives {want}")
        for digits in itertools.product((0, 1), repeat=s):
            f = list(digits) + [1]
            if is_irreducible(f, 2) != is_irreducible_by_trial_division(f, 2):
                outcomes.append(f"irreducibility disagreement on {f}")
    for p in insts:
        g, m = p.graph, p.matroid
        for xs in m.subsets():
            if m.is_independent(xs) != is_independent_hall(g, xs):
                outcomes.append(f"{_label(p)}: Hall disagrees on {list(xs)}")
                break
            if len(xs) == p.r and sorted(perfect_matchings(g, xs)) != sorted(perfect_matchings_by_permutation(g, xs)):
                outcomes.append(f"{_label(p)}: matching enumerators disagree on {list(xs)}")
                break
        else:
            outcomes.append(None)
    return _collect(8, "determinant, irreducibility and Hall oracles agree", outcomes, t)


def run_sweep(max_n: int = 6, max_r: int = 3, jobs: int = 1) -> list[CriterionResult]:
    insts = list(presentations(max_n, max_r))
    return [
        criterion_extension(insts, jobs),
        criterion_prime(insts, jobs),
        criterion_isolation(insts, jobs),
        criterion_degree_bounds(insts, jobs),
        criterion_muniform(max_n, max_r, jobs),
        criterion_sharing(insts, jobs),
        criterion_hierarchy(insts, jobs),
        criterion_oracles(insts),
    ]
