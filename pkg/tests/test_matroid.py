import itertools

import pytest

from lpmrep.errors import InvalidPresentation, NotLatticePath, ScaleLimitError
from lpmrep.matroid import (
    BipartiteGraph,
    GroundPartition,
    IntervalPresentation,
    TransversalMatroid,
    are_clones,
    boolean_polymatroid_rank,
    canonical_lpm_presentation,
    clonal_classes,
    column_intervals,
    graph_from_intervals,
    hierarchically_inferior,
    intervals_from_columns,
    is_independent_hall,
    is_nested,
    lex_extreme_bases,
    part_constant_violation,
    port,
)
from lpmrep.sweep import presentations

U23 = IntervalPresentation(3, ((1, 3), (1, 3)))
P4 = IntervalPresentation(4, ((1, 2), (1, 4)))
P3 = IntervalPresentation(3, ((1, 1), (2, 3)))

SWEEP = list(presentations(6, 3))
SMALL = [p for p in SWEEP if p.n <= 5]


def subsets(ground):
    for k in range(len(ground) + 1):
        yield from itertools.combinations(ground, k)


def test_sweep_size():
    assert len(SWEEP) == 589


# graph_from_intervals


def test_full_intervals_give_complete_graph():
    g = graph_from_intervals(U23)
    assert g.edges == {(j, x) for j in (1, 2) for x in (1, 2, 3)}


def test_graph_edges_from_intervals():
    assert graph_from_intervals(P4).edges == {(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (2, 4)}


@pytest.mark.parametrize(
    "n,intervals,needle",
    [
        (5, ((1, 2), (4, 5)), "column 3 uncovered"),
        (4, ((2, 3), (3, 4)), "a_1 must be 1"),
        (4, ((1, 2), (1, 3)), "b_r must equal n"),
        (4, ((1, 4), (1, 2), (3, 4)), "b_j not non-decreasing"),
        (4, ((1, 2), (3, 3), (2, 4)), "a_j not non-decreasing"),
        (3, ((1, 1), (1, 1), (1, 3)), "no matching covers every row"),
        (3, ((1, 4),), "1 <= a_j <= b_j <= n"),
        (2, ((1, 2), (1, 2), (1, 2)), "more rows"),
        (3, (), "empty"),
    ],
)
def test_invalid_presentations_name_the_condition(n, intervals, needle):
    with pytest.raises(InvalidPresentation, match=needle):
        IntervalPresentation(n, intervals)


# column intervals


def test_column_intervals_examples():
    assert column_intervals(U23) == ((1, 2), (1, 2), (1, 2))
    assert column_intervals(P4) == ((1, 2), (1, 2), (2, 2), (2, 2))
    assert column_intervals(P3) == ((1, 1), (2, 2), (2, 2))


@pytest.mark.parametrize("p", SWEEP, ids=str)
def test_interval_duality(p):
    cols = column_intervals(p)
    c = [a for a, _ in cols]
    d = [b for _, b in cols]
    assert c[0] == 1 and d[-1] == p.r
    assert c == sorted(c) and d == sorted(d)
    assert all(a <= b for a, b in cols)
    assert all(set(p.graph.column_neighbors(x)) == set(range(c[x - 1], d[x - 1] + 1)) for x in range(1, p.n + 1))
    assert intervals_from_columns(p.n, cols) == p.intervals


# matching, rank, bases


def test_max_matching_examples():
    assert len(U23.graph.max_matching({1, 2})) == 2
    assert P4.graph.max_matching({3, 4}) == ((2, 3),)
    assert P4.graph.max_matching(()) == ()


def test_max_matching_deterministic():
    g = U23.graph
    m = g.max_matching([1, 2, 3])
    assert m == g.max_matching([3, 2, 1]) == g.max_matching({2, 3, 1})
    assert len(m) == 2 and len({x for _, x in m}) == 2
    assert all(g.has_edge(j, x) for j, x in m)


def test_rank_examples():
    m = P4.matroid
    assert m.rank(()) == 0
    assert m.rank({3, 4}) == 1
    assert m.rank({1, 2, 3, 4}) == 2


def test_bases_examples():
    assert list(U23.matroid.bases()) == [(1, 2), (1, 3), (2, 3)]
    assert list(P4.matroid.bases()) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
    assert list(P3.matroid.bases()) == [(1, 2), (1, 3)]


def test_polymatroid_examples():
    g = P4.graph
    assert boolean_polymatroid_rank(g, ()) == 0
    assert boolean_polymatroid_rank(g, {1}) == 2
    assert boolean_polymatroid_rank(g, {3, 4}) == 1


@pytest.mark.parametrize("p", SWEEP, ids=str)
def test_hall_equivalence_and_rank_axioms(p):
    m, g = p.matroid, p.graph
    ground = m.ground
    ranks = {frozenset(x): m.rank(x) for x in subsets(ground)}
    for xs, rk in ranks.items():
        assert (rk == len(xs)) == is_independent_hall(g, xs)
        assert 0 <= rk <= len(xs)
        for e in ground:
            if e not in xs:
                bigger = ranks[xs | {e}]
                assert rk <= bigger <= rk + 1
    if p.n <= 5:
        for a, b in itertools.product(ranks, repeat=2):
            assert ranks[a] + ranks[b] >= ranks[a | b] + ranks[a & b]


@pytest.mark.parametrize("p", SWEEP, ids=str)
def test_diagonal_edge_property(p):
    for b in p.matroid.bases():
        assert all(p.graph.has_edge(j, x) for j, x in enumerate(b, 1))


@pytest.mark.parametrize("p", SMALL, ids=str)
def test_basis_exchange(p):
    bases = {frozenset(b) for b in p.matroid.bases()}
    for a, b in itertools.product(bases, repeat=2):
        for x in a - b:
            assert any((a - {x}) | {y} in bases for y in b - a)


# ports and hierarchy


def test_port_examples():
    pu = port(U23.matroid, 1)
    assert pu.is_qualified({2, 3}) and not pu.is_qualified({2})
    p4 = port(P4.matroid, 4)
    assert p4.is_qualified({3}) and not p4.is_qualified({2})
    p3 = port(P3.matroid, 1)
    assert p3.minimal_qualified_sets() == []
    assert not p3.is_qualified({2, 3})


def test_port_rejects_non_players():
    with pytest.raises(ValueError):
        port(U23.matroid, 1).is_qualified({1, 2})


@pytest.mark.parametrize("p", SMALL, ids=str)
def test_port_monotone(p):
    for p_o in (1, p.n):
        a = port(p.matroid, p_o)
        qualified = {frozenset(x) for x in subsets(a.players) if a.is_qualified(x)}
        for x in qualified:
            for e in a.players:
                assert x | {e} in qualified


def test_hierarchy_examples():
    a = port(U23.matroid, 1)
    assert hierarchically_inferior(a, 2, 3) and hierarchically_inferior(a, 3, 2)
    b = port(P4.matroid, 4)
    assert hierarchically_inferior(b, 1, 3)
    assert not hierarchically_inferior(b, 3, 1)


@pytest.mark.parametrize("p", [p for p in SWEEP if p.n >= 3], ids=str)
def test_hierarchy_total_and_ordered(p):
    low = port(p.matroid, 1)
    for x, y in itertools.combinations(low.players, 2):
        # x < y, so y sits lower in the hierarchy at the first element
        assert hierarchically_inferior(low, y, x)
    high = port(p.matroid, p.n)
    for x, y in itertools.combinations(high.players, 2):
        assert hierarchically_inferior(high, x, y)


# clones


def test_clone_examples():
    assert are_clones(U23.matroid, 1, 2)
    assert are_clones(P4.matroid, 3, 4)
    assert not are_clones(P4.matroid, 1, 3)
    assert clonal_classes(P4.matroid) == [(1, 2), (3, 4)]
    assert clonal_classes(U23.matroid) == [(1, 2, 3)]


@pytest.mark.parametrize("p", SMALL, ids=str)
def test_matroid_clones_are_port_clones(p):
    # the converse fails: swapping x and y may only matter on sets containing p_o
    a = port(p.matroid, 1)
    for x, y in itertools.combinations(a.players, 2):
        if are_clones(p.matroid, x, y):
            assert hierarchically_inferior(a, x, y) and hierarchically_inferior(a, y, x)


def test_scale_limit():
    big = IntervalPresentation(14, ((1, 14),))
    with pytest.raises(ScaleLimitError):
        are_clones(big.matroid, 1, 2)
    assert are_clones(big.matroid, 1, 2, limit=14)


# lattice path recognition


def test_canonical_uniform():
    assert canonical_lpm_presentation(U23.matroid).intervals == ((1, 2), (2, 3))


def test_canonical_two_identical_rows():
    m = TransversalMatroid(BipartiteGraph.from_row_sets(2, [{1, 2}, {1, 2}]))
    assert canonical_lpm_presentation(m) == IntervalPresentation(2, ((1, 1), (2, 2)))


def test_non_lpm_witness():
    # 1 and 3 parallel, 2 a coloop: no interval presentation in this order
    m = TransversalMatroid(BipartiteGraph.from_row_sets(3, [{1, 3}, {2}]))
    with pytest.raises(NotLatticePath) as info:
        canonical_lpm_presentation(m)
    assert info.value.witness == (1, 3)


def test_non_lpm_uncovered_candidate():
    # lex extremes (1,4) and (2,5) would leave 3 uncovered
    m = TransversalMatroid(BipartiteGraph.from_row_sets(5, [{1, 2, 3}, {3, 4, 5}]))
    first, last = lex_extreme_bases(m)
    assert (first, last) == ((1, 3), (3, 5))
    m2 = TransversalMatroid(BipartiteGraph.from_row_sets(5, [{1, 2, 3}, {4, 5}, ]))
    assert canonical_lpm_presentation(m2).intervals == ((1, 3), (4, 5))
    m3 = TransversalMatroid(BipartiteGraph.from_row_sets(5, [{1, 2, 5}, {3, 4, 5}]))
    with pytest.raises(NotLatticePath):
        canonical_lpm_presentation(m3)


def test_canonical_rejects_loops():
    m = TransversalMatroid(BipartiteGraph.from_row_sets(3, [{1}, {2}]))
    with pytest.raises(InvalidPresentation, match="element 3 is a loop"):
        canonical_lpm_presentation(m)


@pytest.mark.parametrize("p", SWEEP, ids=str)
def test_canonical_presents_same_matroid(p):
    canon = canonical_lpm_presentation(p.matroid)
    assert list(canon.matroid.bases()) == list(p.matroid.bases())
    first, last = lex_extreme_bases(p.matroid)
    bases = list(p.matroid.bases())
    assert (first, last) == (bases[0], bases[-1])


def test_nested_examples():
    assert is_nested(U23)
    assert not is_nested(P4)
    # same matroid as U23, presented without b_1 = n
    assert is_nested(IntervalPresentation(3, ((1, 2), (2, 3))))


@pytest.mark.parametrize("p", SMALL, ids=str)
def test_nested_means_upper_ends_can_be_raised(p):
    raised = IntervalPresentation(p.n, tuple((a, p.n) for a, _ in canonical_lpm_presentation(p.matroid).intervals))
    same = list(raised.matroid.bases()) == list(p.matroid.bases())
    assert is_nested(p) == same


# partitions


def test_ground_partition():
    part = GroundPartition(6, (1, 3, 4))
    assert part.parts == ((1, 2), (3,), (4, 5, 6))
    assert [part.part_of(x) for x in range(1, 7)] == [1, 1, 2, 3, 3, 3]
    with pytest.raises(InvalidPresentation):
        GroundPartition(4, (1, 3, 3))
    with pytest.raises(InvalidPresentation):
        GroundPartition(4, (2,))


def test_part_constant_violation():
    assert part_constant_violation(P4.graph, GroundPartition(4, (1, 3))) is None
    assert part_constant_violation(P4.graph, GroundPartition(4, (1, 2))) == (2, 3)
