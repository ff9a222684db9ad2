"""Transversal and lattice path matroids.

Rows J = [r] and columns S = [n] are labelled from 1.  A column set is any
iterable of column labels; results that are sets come back as sorted tuples.

The subset oracles (clones, hierarchy, Hall) enumerate every subset of the
ground set, so they refuse to run beyond ``SWEEP_LIMIT`` elements unless the
caller raises the limit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

from .errors import InvalidPresentation, NotLatticePath, ScaleLimitError

SUBSET_LIMIT = 16
SWEEP_LIMIT = 12


def _check_scale(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise ScaleLimitError(f"{what} enumerates subsets of {n} elements (limit {limit})")


def _mask(cols: Iterable[int]) -> int:
    m = 0
    for x in cols:
        m |= 1 << (x - 1)
    return m


def _members(mask: int) -> tuple[int, ...]:
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


class BipartiteGraph:
    """Presentation graph with rows 1..r and columns 1..n.

    The constructor insists on a matching that covers every row, so that
    the number of rows is the rank of the induced transversal matroid.
    """

    __slots__ = ("r", "n", "edges", "_row_nbrs", "_col_nbrs")

    def __init__(self, r: int, n: int, edges: Iterable[tuple[int, int]]):
        if not 1 <= r <= n:
            raise InvalidPresentation(f"need 1 <= r <= n, got r={r}, n={n}")
        edges = frozenset((int(j), int(x)) for j, x in edges)
        for j, x in edges:
            if not (1 <= j <= r and 1 <= x <= n):
                raise InvalidPresentation(f"edge ({j},{x}) is outside [{r}]x[{n}]")
        self.r = r
        self.n = n
        self.edges = edges
        self._row_nbrs = tuple(tuple(sorted(x for jj, x in edges if jj == j)) for j in range(1, r + 1))
        self._col_nbrs = tuple(tuple(sorted(j for j, xx in edges if xx == x)) for x in range(1, n + 1))
        if len(self.max_matching(range(1, n + 1))) < r:
            raise InvalidPresentation("no matching covers every row (presentation size exceeds rank)")

    @classmethod
    def from_row_sets(cls, n: int, row_sets: Sequence[Iterable[int]]) -> BipartiteGraph:
        return cls(len(row_sets), n, [(j, x) for j, a in enumerate(row_sets, 1) for x in a])

    def __eq__(self, other):
        return isinstance(other, BipartiteGraph) and (self.r, self.n, self.edges) == (other.r, other.n, other.edges)

    def __hash__(self):
        return hash((self.r, self.n, self.edges))

    def __repr__(self):
        return f"BipartiteGraph(r={self.r}, n={self.n}, rows={list(map(list, self._row_nbrs))})"

    def row_neighbors(self, j: int) -> tuple[int, ...]:
        """A_j, the columns adjacent to row j."""
        return self._row_nbrs[j - 1]

    def column_neighbors(self, x: int) -> tuple[int, ...]:
        """C_x, the rows adjacent to column x."""
        return self._col_nbrs[x - 1]

    def neighbors(self, cols: Iterable[int]) -> tuple[int, ...]:
        out: set[int] = set()
        for x in cols:
            out.update(self._col_nbrs[x - 1])
        return tuple(sorted(out))

    def has_edge(self, j: int, x: int) -> bool:
        return (j, x) in self.edges

    def max_matching(self, cols: Iterable[int]) -> tuple[tuple[int, int], ...]:
        """Maximum matching of the subgraph induced by the rows and ``cols``.

        Kuhn's augmenting-path search, rows tried in increasing order and
        columns scanned in increasing order, so the result is reproducible.
        Returned as (row, column) pairs sorted by row.
        """
        allowed = set(cols)
        owner: dict[int, int] = {}

        def augment(j: int, seen: set[int]) -> bool:
            for x in self._row_nbrs[j - 1]:
                if x not in allowed or x in seen:
                    continue
                seen.add(x)
                if x not in owner or augment(owner[x], seen):
                    owner[x] = j
                    return True
            return False

        for j in range(1, self.r + 1):
            augment(j, set())
        return tuple(sorted((j, x) for x, j in owner.items()))


def boolean_polymatroid_rank(g: BipartiteGraph, cols: Iterable[int]) -> int:
    """f(X) = |N(X)|."""
    return len(g.neighbors(cols))


def is_independent_hall(g: BipartiteGraph, cols: Iterable[int]) -> bool:
    """Hall's condition |Y| <= |N(Y)| for every Y inside ``cols`` (exhaustive)."""
    cols = tuple(sorted(set(cols)))
    for k in range(1, len(cols) + 1):
        for y in itertools.combinations(cols, k):
            if boolean_polymatroid_rank(g, y) < k:
                return False
    return True


@dataclass(frozen=True)
class IntervalPresentation:
    """Row intervals A_j = [a_j, b_j] of a lattice path matroid on [n].

    Requires 1 = a_1 <= ... <= a_r, b_1 <= ... <= b_r = n, a_j <= b_j, every
    column covered (no loops) and a matching covering all rows.
    """

    n: int
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ivs = tuple((int(a), int(b)) for a, b in self.intervals)
        object.__setattr__(self, "intervals", ivs)
        n, r = self.n, len(ivs)
        if r == 0:
            raise InvalidPresentation("interval list is empty")
        if n < 1:
            raise InvalidPresentation(f"ground set size must be positive, got n={n}")
        if r > n:
            raise InvalidPresentation(f"more rows ({r}) than columns ({n})")
        for j, (a, b) in enumerate(ivs, 1):
            if not (1 <= a <= b <= n):
                raise InvalidPresentation(f"row {j}: need 1 <= a_j <= b_j <= n, got [{a},{b}]")
        if ivs[0][0] != 1:
            raise InvalidPresentation(f"a_1 must be 1, got {ivs[0][0]}")
        if ivs[-1][1] != n:
            raise InvalidPresentation(f"b_r must equal n={n}, got {ivs[-1][1]}")
        for j in range(1, r):
            if ivs[j][0] < ivs[j - 1][0]:
                raise InvalidPresentation(f"a_j not non-decreasing at row {j + 1}")
            if ivs[j][1] < ivs[j - 1][1]:
                raise InvalidPresentation(f"b_j not non-decreasing at row {j + 1}")
        covered = set()
        for a, b in ivs:
            covered.update(range(a, b + 1))
        for x in range(1, n + 1):
            if x not in covered:
                raise InvalidPresentation(f"column {x} uncovered (loop)")
        # the graph constructor checks the row-covering matching
        _ = self.graph

    @property
    def r(self) -> int:
        return len(self.intervals)

    @cached_property
    def graph(self) -> BipartiteGraph:
        return BipartiteGraph(self.r, self.n, [(j, x) for j, (a, b) in enumerate(self.intervals, 1) for x in range(a, b + 1)])

    @cached_property
    def matroid(self) -> TransversalMatroid:
        return TransversalMatroid(self.graph)

    def column_intervals(self) -> tuple[tuple[int, int], ...]:
        return column_intervals(self)


def graph_from_intervals(p: IntervalPresentation) -> BipartiteGraph:
    return p.graph


def column_intervals(p: IntervalPresentation) -> tuple[tuple[int, int], ...]:
    """(c_x, d_x) = (min, max) of the rows whose interval contains x."""
    out = []
    for x in range(1, p.n + 1):
        rows = [j for j, (a, b) in enumerate(p.intervals, 1) if a <= x <= b]
        out.append((rows[0], rows[-1]))
    return tuple(out)


def intervals_from_columns(n: int, col_ivs: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Inverse of ``column_intervals``: rebuild [a_j, b_j] from the C_x."""
    r = max(d for _, d in col_ivs)
    out = []
    for j in range(1, r + 1):
        xs = [x for x, (c, d) in enumerate(col_ivs, 1) if c <= j <= d]
        out.append((xs[0], xs[-1]))
    return tuple(out)


class TransversalMatroid:
    """Matroid of partial transversals of a presentation graph.

    Ranks are memoised per instance; the object is otherwise immutable.
    """

    def __init__(self, graph: BipartiteGraph):
        self.graph = graph
        self._rank_cache: dict[int, int] = {}

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def r(self) -> int:
        return self.graph.r

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def __repr__(self):
        return f"TransversalMatroid({self.graph!r})"

    def _rank_mask(self, mask: int) -> int:
        v = self._rank_cache.get(mask)
        if v is None:
            v = len(self.graph.max_matching(_members(mask)))
            self._rank_cache[mask] = v
        return v

    def rank(self, cols: Iterable[int] = None) -> int:
        if cols is None:
            return self.r
        return self._rank_mask(_mask(cols))

    def is_independent(self, cols: Iterable[int]) -> bool:
        cols = set(cols)
        return self.rank(cols) == len(cols)

    def is_basis(self, cols: Iterable[int]) -> bool:
        cols = set(cols)
        return len(cols) == self.r and self.rank(cols) == self.r

    def bases(self, limit: int = SUBSET_LIMIT) -> Iterator[tuple[int, ...]]:
        """All bases, lexicographic on sorted tuples."""
        _check_scale(self.n, limit, "basis enumeration")
        for b in itertools.combinations(self.ground, self.r):
            if self.is_basis(b):
                yield b

    def loops(self) -> tuple[int, ...]:
        return tuple(x for x in self.ground if not self.graph.column_neighbors(x))

    def subsets(self, limit: int = SWEEP_LIMIT) -> Iterator[tuple[int, ...]]:
        _check_scale(self.n, limit, "subset sweep")
        for mask in range(1 << self.n):
            yield _members(mask)


# Access structures -------------------------------------------------------


@dataclass(frozen=True)
class AccessStructure:
    """Monotone family of qualified player sets, given by an oracle."""

    players: tuple[int, ...]
    qualified: Callable[[frozenset[int]], bool] = field(compare=False)

    def is_qualified(self, cols: Iterable[int]) -> bool:
        cols = frozenset(cols)
        if not cols <= set(self.players):
            raise ValueError(f"{sorted(cols)} is not a set of players")
        return self.qualified(cols)

    def minimal_qualified_sets(self, limit: int = SWEEP_LIMIT) -> list[tuple[int, ...]]:
        _check_scale(len(self.players), limit, "minimal qualified sets")
        found: list[frozenset[int]] = []
        for k in range(len(self.players) + 1):
            for c in itertools.combinations(self.players, k):
                s = frozenset(c)
                if any(m <= s for m in found):
                    continue
                if self.qualified(s):
                    found.append(s)
        return [tuple(sorted(s)) for s in found]


def port(m: TransversalMatroid, p_o: int) -> AccessStructure:
    """Port of ``m`` at ``p_o``: X qualified iff r(X + p_o) = r(X)."""
    if not 1 <= p_o <= m.n:
        raise ValueError(f"p_o={p_o} outside the ground set")
    players = tuple(x for x in m.ground if x != p_o)
    bit = 1 << (p_o - 1)

    def qualified(cols: frozenset[int]) -> bool:
        mask = _mask(cols)
        return m._rank_mask(mask | bit) == m._rank_mask(mask)

    return AccessStructure(players, qualified)


def hierarchically_inferior(a: AccessStructure, x: int, y: int, limit: int = SWEEP_LIMIT) -> bool:
    """x is inferior to y: A+x qualified implies A+y qualified, for all A avoiding x, y."""
    if x == y:
        raise ValueError("players must differ")
    if x not in a.players or y not in a.players:
        raise ValueError("both arguments must be players")
    _check_scale(len(a.players), limit, "hierarchy check")
    rest = [z for z in a.players if z not in (x, y)]
    for k in range(len(rest) + 1):
        for c in itertools.combinations(rest, k):
            s = frozenset(c)
            if a.qualified(s | {x}) and not a.qualified(s | {y}):
                return False
    return True


def are_clones(m: TransversalMatroid, x: int, y: int, limit: int = SWEEP_LIMIT) -> bool:
    """Whether swapping x and y preserves the rank of every subset."""
    if x == y:
        raise ValueError("elements must differ")
    _check_scale(m.n, limit, "clone check")
    bx, by = 1 << (x - 1), 1 << (y - 1)
    for mask in range(1 << m.n):
        # only sets holding exactly one of x, y change under the swap
        if bool(mask & bx) == bool(mask & by):
            continue
        if m._rank_mask(mask) != m._rank_mask(mask ^ bx ^ by):
            return False
    return True


def clonal_classes(m: TransversalMatroid, limit: int = SWEEP_LIMIT) -> list[tuple[int, ...]]:
    classes: list[list[int]] = []
    for x in m.ground:
        for cls in classes:
            if are_clones(m, cls[0], x, limit):
                cls.append(x)
                break
        else:
            classes.append([x])
    return [tuple(c) for c in classes]


def _greedy_basis(m: TransversalMatroid, order: Iterable[int]) -> tuple[int, ...]:
    chosen: list[int] = []
    for x in order:
        if m.is_independent(chosen + [x]):
            chosen.append(x)
    return tuple(sorted(chosen))


def lex_extreme_bases(m: TransversalMatroid) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """First and last bases in lexicographic order.

    The greedy bases scanning 1..n and n..1 are the componentwise minimum and
    maximum bases of any matroid, hence also the lexicographic extremes.
    """
    return _greedy_basis(m, m.ground), _greedy_basis(m, reversed(m.ground))


def canonical_lpm_presentation(m: TransversalMatroid, limit: int = SUBSET_LIMIT) -> IntervalPresentation:
    """Interval presentation [a_j, b_j] built from the lexicographic extreme bases.

    Raises ``NotLatticePath`` carrying an r-subset on which the candidate and
    ``m`` disagree; raises ``InvalidPresentation`` if ``m`` has a loop.
    """
    loops = m.loops()
    if loops:
        raise InvalidPresentation(f"element {loops[0]} is a loop")
    _check_scale(m.n, limit, "lattice path recognition")
    first, last = lex_extreme_bases(m)
    intervals = tuple(zip(first, last))
    edges = [(j, x) for j, (a, b) in enumerate(intervals, 1) for x in range(a, b + 1)]
    candidate = TransversalMatroid(BipartiteGraph(m.r, m.n, edges))
    for b in itertools.combinations(m.ground, m.r):
        if m.is_basis(b) != candidate.is_basis(b):
            raise NotLatticePath(b)
    return IntervalPresentation(m.n, intervals)


def is_nested(p: IntervalPresentation) -> bool:
    """Whether the matroid admits an interval presentation with b_1 = n.

    With the canonical presentation this happens exactly when b_j = n - r + j
    for every row: then x_j <= b_j holds for every r-subset and the upper
    ends can all be raised to n.
    """
    if p.intervals[0][1] == p.n:
        return True
    canon = canonical_lpm_presentation(p.matroid)
    n, r = p.n, p.r
    return all(b == n - r + j for j, (_, b) in enumerate(canon.intervals, 1))


@dataclass(frozen=True)
class GroundPartition:
    """Consecutive parts S_i = [t_i, t_{i+1} - 1] of [n], t_1 = 1 and t_{m+1} = n + 1."""

    n: int
    thresholds: tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(v) for v in self.thresholds)
        object.__setattr__(self, "thresholds", t)
        if not t or t[0] != 1:
            raise InvalidPresentation("partition thresholds must start at 1")
        if any(b <= a for a, b in zip(t, t[1:])):
            raise InvalidPresentation("partition thresholds must be strictly increasing")
        if t[-1] > self.n:
            raise InvalidPresentation(f"threshold {t[-1]} exceeds n={self.n}")

    @property
    def m(self) -> int:
        return len(self.thresholds)

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        bounds = self.thresholds + (self.n + 1,)
        return tuple(tuple(range(bounds[i], bounds[i + 1])) for i in range(self.m))

    def part_of(self, x: int) -> int:
        """pi(x), counting parts from 1."""
        if not 1 <= x <= self.n:
            raise ValueError(f"{x} outside [1, {self.n}]")
        i = 0
        while i + 1 < self.m and self.thresholds[i + 1] <= x:
            i += 1
        return i + 1


def part_constant_violation(g: BipartiteGraph, part: GroundPartition) -> tuple[int, int] | None:
    """First pair of columns sharing a part but not their neighbourhoods."""
    if part.n != g.n:
        raise InvalidPresentation(f"partition is on [{part.n}] but the graph has {g.n} columns")
    for cols in part.parts:
        for x in cols[1:]:
            if g.column_neighbors(x) != g.column_neighbors(cols[0]):
                return cols[0], x
    return None
