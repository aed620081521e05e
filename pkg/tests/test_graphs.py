import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raagcert import (
    Graph,
    InputError,
    VertexSet,
    complement,
    complete_graph,
    complete_multipartite_graph,
    compose,
    cycle_graph,
    dominates,
    edgeless_graph,
    from_edge_list,
    from_edges,
    from_graph6,
    induced,
    mba_parameters,
    neighborhoods,
    path_graph,
    petersen_graph,
    srg_parameters,
    structure_flags,
    to_edge_list,
    to_graph6,
)
from raagcert.isomorphism import are_isomorphic

from conftest import classes, random_graph


def test_vertex_set_basics():
    s = VertexSet.of([0, 2], 4)
    assert list(s) == [0, 2]
    assert len(s) == 2 and 2 in s and 1 not in s
    assert list(s.complement()) == [1, 3]
    assert s.union(VertexSet.of([1], 4)).to_tuple() == (0, 1, 2)
    with pytest.raises(InputError):
        VertexSet.of([4], 4)
    with pytest.raises(InputError):
        s.union(VertexSet.of([0], 3))


def test_graph_validation():
    with pytest.raises(InputError):
        Graph(2, (1, 0))  # vertex 0 adjacent to itself
    with pytest.raises(InputError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(InputError):
        from_edges(0, [])
    with pytest.raises(InputError):
        from_edges(65, [])
    with pytest.raises(InputError):
        from_edges(3, [(0, 0)])


def test_neighborhoods_examples():
    p3 = path_graph(3)
    hood = neighborhoods(p3, 1)
    assert list(hood.link) == [0, 2]
    assert list(hood.star) == [0, 1, 2]
    assert hood.degree == 2

    lonely = from_edges(3, [(1, 2)])
    hood = neighborhoods(lonely, 0)
    assert list(hood.link) == [] and list(hood.star) == [0] and hood.degree == 0

    c9 = cycle_graph(9)
    assert all(neighborhoods(c9, v).degree == 2 for v in range(9))
    with pytest.raises(InputError):
        neighborhoods(p3, 3)


def test_dominates_examples():
    c4 = cycle_graph(4)
    assert dominates(c4, 1, 3) and dominates(c4, 3, 1)
    c5 = cycle_graph(5)
    assert not any(dominates(c5, v, w) for v in range(5) for w in range(5) if v != w)
    assert dominates(path_graph(3), 0, 1)
    with pytest.raises(InputError):
        dominates(c4, 2, 2)


def test_compose():
    c4ish = compose(edgeless_graph(2), edgeless_graph(2), "simplicial_join")
    assert are_isomorphic(c4ish, cycle_graph(4))
    k2 = compose(complete_graph(1), complete_graph(1), "simplicial_join")
    assert k2 == complete_graph(2)
    g = path_graph(3)
    assert compose(g, Graph(0, ()), "disjoint_union") == g
    assert compose(Graph(0, ()), g, "disjoint_union") == g
    union = compose(path_graph(2), path_graph(2), "disjoint_union")
    assert union.edge_count == 2 and not union.is_connected()
    with pytest.raises(InputError):
        compose(g, g, "tensor")


def test_complement():
    assert complement(cycle_graph(3)) == edgeless_graph(3)
    c4c = complement(cycle_graph(4))
    two_edges = from_edges(4, [(0, 2), (1, 3)])
    assert c4c == two_edges
    assert complement(edgeless_graph(5)) == complete_graph(5)
    for g in classes(4):
        assert complement(complement(g)) == g


def test_complement_distributes_over_join():
    a, b = path_graph(3), cycle_graph(4)
    lhs = complement(compose(a, b, "simplicial_join"))
    rhs = compose(complement(a), complement(b), "disjoint_union")
    assert lhs == rhs


def test_induced():
    c4 = cycle_graph(4)
    assert induced(c4, VertexSet.of([0, 1], 4)) == complete_graph(2)
    assert induced(c4, VertexSet.full(4)) == c4
    assert induced(c4, VertexSet.empty(4)).n == 0
    assert induced(c4, [3, 0]).labels == ("v0", "v3")


def test_structure_flags():
    p3 = structure_flags(path_graph(3))
    assert list(p3.max_degree_vertices) == [1]
    assert list(p3.centre_vertices) == [1]
    assert len(p3.components) == 1 and not p3.is_regular

    k4 = structure_flags(complete_graph(4))
    assert k4.is_complete and k4.is_regular and k4.regularity_degree == 3
    assert list(k4.centre_vertices) == [0, 1, 2, 3]

    with pytest.raises(InputError):
        structure_flags(Graph(0, ()))


def test_structure_flags_mba_figure(fig_mba_5_4_3):
    flags = structure_flags(fig_mba_5_4_3)
    assert list(flags.max_degree_vertices) == [1, 2, 3, 4]
    assert flags.max_degree == 3


def test_handshake_on_all_small_classes():
    for n in range(1, 6):
        for g in classes(n):
            assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count


def test_regular_complement_degree():
    for n in range(2, 7):
        for g in classes(n):
            flags = structure_flags(g)
            if flags.is_regular:
                k = flags.regularity_degree
                assert (k * g.n) % 2 == 0
                cflags = structure_flags(complement(g))
                assert cflags.is_regular
                assert cflags.regularity_degree == g.n - k - 1


def test_one_and_two_regular_structure():
    for n in range(2, 7):
        for g in classes(n):
            flags = structure_flags(g)
            if flags.regularity_degree == 1:
                assert all(len(c) == 2 for c in g.components())
            if flags.regularity_degree == 2:
                for c in g.components():
                    assert all(g.degree(v) == 2 for v in c) and len(c) >= 3


def test_srg_parameters_examples():
    for m, p in itertools.product((2, 3), (2, 3)):
        params = srg_parameters(complete_multipartite_graph([m] * p))
        assert params == (m * p, m * (p - 1), m * (p - 2), m * (p - 1))
    assert srg_parameters(petersen_graph()) == (10, 3, 0, 1)
    assert srg_parameters(edgeless_graph(4)) is None
    assert srg_parameters(complete_graph(4)) is None
    assert srg_parameters(path_graph(4)) is None
    with pytest.raises(InputError):
        srg_parameters(Graph(0, ()))


def test_srg_structure_dichotomies():
    for n in range(2, 7):
        for g in classes(n):
            params = srg_parameters(g)
            if params is None:
                continue
            n_, k, lam, mu = params
            assert (n_ - k - 1) * mu == k * (k - lam - 1)
            if lam == k - 1:
                comps = g.components()
                assert len(comps) == n_ // (k + 1)
                assert all(induced(g, c).is_complete() for c in comps)
            if mu == k:
                blocks = n_ // (n_ - k)
                assert are_isomorphic(g, complete_multipartite_graph([n_ - k] * blocks))


def test_mba_parameters_examples(fig_mba_5_4_3, fig_mba_7_5_4):
    assert mba_parameters(fig_mba_5_4_3) == (5, 4, 3)
    joined = compose(
        compose(complete_graph(1), complete_graph(2), "disjoint_union"),
        compose(complete_graph(1), complete_graph(2), "disjoint_union"),
        "simplicial_join",
    )
    assert mba_parameters(joined) == (6, 4, 4)
    assert mba_parameters(fig_mba_7_5_4) == (7, 5, 4)
    assert mba_parameters(cycle_graph(5)) is None
    assert mba_parameters(path_graph(3)) is None  # deletion leaves an edgeless pair


def test_graph6_fixed_strings():
    assert to_graph6(from_edge_list("2; 0-1")) == "A_"
    assert to_graph6(from_edge_list("2;")) == "A?"
    assert from_graph6("A_") == complete_graph(2)
    assert from_graph6(">>graph6<<A_") == complete_graph(2)


def test_graph6_roundtrip_against_networkx():
    rng = random.Random(20260811)
    pool = [g for n in range(1, 6) for g in classes(n)]
    pool += [random_graph(rng, rng.randint(1, 9)) for _ in range(40)]
    pool.append(edgeless_graph(63))
    pool.append(path_graph(64))
    for g in pool:
        ours = to_graph6(g)
        theirs = nx.to_graph6_bytes(_to_networkx(g), header=False).decode().strip()
        assert ours == theirs
        assert from_graph6(ours) == g


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_graph6_parse_errors_carry_offsets():
    with pytest.raises(InputError, match="offset 1"):
        from_graph6("A" + chr(20))
    with pytest.raises(InputError, match="offset"):
        from_graph6("D?")  # truncated body: five vertices need two body bytes
    with pytest.raises(InputError, match="offset"):
        from_graph6("A??")  # overlong body
    with pytest.raises(InputError, match="padding"):
        from_graph6("A@")  # n=2 with a stray bit below the pair bit
    with pytest.raises(InputError):
        from_graph6("?")  # empty graph rejected publicly
    with pytest.raises(InputError):
        from_graph6("")


def test_edge_list_roundtrip():
    for text in ("2; 0-1", "2;", "5; 0-1, 1-2, 2-3"):
        assert to_edge_list(from_edge_list(text)) == text
    for n in range(1, 6):
        for g in classes(n):
            assert from_edge_list(to_edge_list(g)) == g
    with pytest.raises(InputError):
        from_edge_list("3: 0-1")
    with pytest.raises(InputError):
        from_edge_list("3; 0+1")
    with pytest.raises(InputError):
        from_edge_list("x; 0-1")


def test_builtin_shapes():
    pete = petersen_graph()
    assert pete.n == 10 and pete.edge_count == 15
    assert all(pete.degree(v) == 3 for v in range(10))
    k23 = complete_multipartite_graph([2, 3])
    assert k23.edge_count == 6 and not k23.adjacent(0, 1)
    with pytest.raises(InputError):
        cycle_graph(2)
    with pytest.raises(InputError):
        complete_multipartite_graph([])


def test_module_doctests():
    import doctest

    import raagcert.graphs

    assert doctest.testmod(raagcert.graphs).failed == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**28 - 1))
def test_graph6_roundtrip_property(n, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n)
    assert from_graph6(to_graph6(g)) == g
    assert complement(complement(g)) == g
