"""Edge weights on presentation graphs and the isolation property.

A weight function is isolating when, for every basis B, the subgraph on the
rows and B has exactly one perfect matching of minimum weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import InvalidPresentation, NotPartConstant
from .matroid import (
    SUBSET_LIMIT,
    BipartiteGraph,
    GroundPartition,
    IntervalPresentation,
    TransversalMatroid,
    part_constant_violation,
)

Matching = tuple[tuple[int, int], ...]


class WeightFunction:
    """Non-negative integer weight on every edge of ``graph`` and nowhere else."""

    __slots__ = ("graph", "weights", "t")

    def __init__(self, graph: BipartiteGraph, weights: Mapping[tuple[int, int], int]):
        weights = {(int(j), int(x)): int(w) for (j, x), w in weights.items()}
        if set(weights) != graph.edges:
            missing = sorted(graph.edges - set(weights))
            extra = sorted(set(weights) - graph.edges)
            raise InvalidPresentation(f"weights must cover exactly the edges (missing {missing}, extra {extra})")
        if any(w < 0 for w in weights.values()):
            raise InvalidPresentation("weights must be non-negative")
        self.graph = graph
        self.weights = weights
        self.t = max(weights.values(), default=0)

    def __getitem__(self, edge: tuple[int, int]) -> int:
        return self.weights[edge]

    def __eq__(self, other):
        return isinstance(other, WeightFunction) and self.graph == other.graph and self.weights == other.weights

    def __repr__(self):
        return f"WeightFunction(t={self.t}, edges={len(self.weights)})"

    def to_json(self) -> list[list[int]]:
        return [[j, x, w] for (j, x), w in sorted(self.weights.items())]


def standard_weights(p: IntervalPresentation) -> WeightFunction:
    """w(j, x) = (j - 1)(n - x)."""
    n = p.n
    return WeightFunction(p.graph, {(j, x): (j - 1) * (n - x) for j, x in p.graph.edges})


def muniform_weights(p: IntervalPresentation | BipartiteGraph, part: GroundPartition) -> WeightFunction:
    """w(j, x) = (j - 1)(m - pi(x)); requires equal neighbourhoods inside each part."""
    g = p.graph if isinstance(p, IntervalPresentation) else p
    bad = part_constant_violation(g, part)
    if bad:
        raise NotPartConstant(*bad)
    m = part.m
    return WeightFunction(g, {(j, x): (j - 1) * (m - part.part_of(x)) for j, x in g.edges})


def doubling_weights(g: BipartiteGraph) -> WeightFunction:
    """w(e_k) = 2^k over the edges listed in sorted order; isolating on any graph."""
    return WeightFunction(g, {e: 1 << k for k, e in enumerate(sorted(g.edges))})


def matching_weight(matching: Iterable[tuple[int, int]], w: WeightFunction) -> int:
    return sum(w[e] for e in matching)


def max_matching_weight_bound(r: int, n: int) -> int:
    """sum_{k=1}^{r-1} k (n - r + k): largest perfect-matching weight under standard weights."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    return sum(k * (n - r + k) for k in range(1, r))


def simple_weight_bound(r: int, n: int) -> int:
    """The coarser r (r-1)(n-1) / 2."""
    return r * (r - 1) * (n - 1) // 2


def perfect_matchings(g: BipartiteGraph, cols: Iterable[int]) -> Iterator[Matching]:
    """Perfect matchings of the subgraph on all rows and ``cols`` (|cols| = r).

    Rows are assigned in increasing order, each trying its free columns in
    increasing order, so the enumeration order is fixed.
    """
    cols = sorted(set(cols))
    if len(cols) != g.r:
        return
    allowed = set(cols)
    options = [[x for x in g.row_neighbors(j) if x in allowed] for j in range(1, g.r + 1)]
    used: set[int] = set()
    chosen: list[tuple[int, int]] = []

    def extend(j: int) -> Iterator[Matching]:
        if j > g.r:
            yield tuple(chosen)
            return
        for x in options[j - 1]:
            if x in used:
                continue
            used.add(x)
            chosen.append((j, x))
            yield from extend(j + 1)
            chosen.pop()
            used.discard(x)

    yield from extend(1)


@dataclass(frozen=True)
class BasisIsolation:
    basis: tuple[int, ...]
    min_weight: int
    max_weight: int
    multiplicity: int
    minimizers: tuple[Matching, ...]

    def to_json(self) -> dict:
        return {
            "basis": list(self.basis),
            "min_weight": self.min_weight,
            "max_weight": self.max_weight,
            "multiplicity": self.multiplicity,
            "minimizers": [[list(e) for e in mt] for mt in self.minimizers],
        }


@dataclass(frozen=True)
class IsolationReport:
    """Outcome of ``is_isolating``; truthy iff the weights are isolating."""

    isolating: bool
    per_basis: tuple[BasisIsolation, ...]

    def __bool__(self):
        return self.isolating

    @property
    def witness(self) -> tuple[tuple[int, ...], Matching, Matching] | None:
        """A basis with two distinct minimum-weight perfect matchings."""
        for b in self.per_basis:
            if b.multiplicity > 1:
                return b.basis, b.minimizers[0], b.minimizers[1]
        return None

    @property
    def max_weight(self) -> int:
        return max((b.max_weight for b in self.per_basis), default=0)

    def to_json(self) -> dict:
        w = self.witness
        return {
            "isolating": self.isolating,
            "max_matching_weight": self.max_weight,
            "bases": [b.to_json() for b in self.per_basis],
            "witness": None if w is None else {"basis": list(w[0]), "matchings": [[list(e) for e in mt] for mt in w[1:]]},
        }


def is_isolating(g: BipartiteGraph, w: WeightFunction, limit: int = SUBSET_LIMIT) -> IsolationReport:
    if w.graph != g:
        raise InvalidPresentation("weight function belongs to a different graph")
    rows = []
    ok = True
    for b in TransversalMatroid(g).bases(limit):
        weighted = [(matching_weight(mt, w), mt) for mt in perfect_matchings(g, b)]
        lo = min(v for v, _ in weighted)
        mins = tuple(mt for v, mt in weighted if v == lo)
        ok = ok and len(mins) == 1
        rows.append(BasisIsolation(b, lo, max(v for v, _ in weighted), len(mins), mins))
    return IsolationReport(ok, tuple(rows))
