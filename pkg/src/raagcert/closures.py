"""Characteristic closures, transvection-free vertex sets and related queries.

A vertex set generates a characteristic normal vertex-subgroup of the
right-angled Artin group exactly when it is a union of characteristic
closures, where the closure of a vertex is its domination closure swept
through the graph's automorphism group.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .errors import InputError
from .graphs import Graph, VertexSet, dominates, structure_flags
from .isomorphism import VertexPermutation, automorphisms


def domination_closure(g: Graph, v: int) -> VertexSet:
    """Least vertex set containing ``v`` and closed under taking dominating vertices."""
    g.check_vertex(v)
    closure = 1 << v
    changed = True
    while changed:
        changed = False
        for w in range(g.n):
            if closure >> w & 1:
                continue
            member = closure
            while member:
                low = member & -member
                u = low.bit_length() - 1
                member ^= low
                if dominates(g, u, w):
                    closure |= 1 << w
                    changed = True
                    break
    return VertexSet(closure, g.n)


def characteristic_closure(
    g: Graph, v: int, auts: Optional[Sequence[VertexPermutation]] = None
) -> VertexSet:
    """Union of the automorphism images of the domination closure of ``v``."""
    omega = domination_closure(g, v)
    if auts is None:
        auts = automorphisms(g)
    mask = 0
    for perm in auts:
        for u in omega:
            mask |= 1 << perm[u]
    return VertexSet(mask, g.n)


def transvection_free_vertices(g: Graph) -> VertexSet:
    """Vertices dominated by no other vertex."""
    if g.n < 1:
        raise InputError("need at least one vertex")
    mask = 0
    for v in range(g.n):
        if not any(w != v and dominates(g, v, w) for w in range(g.n)):
            mask |= 1 << v
    return VertexSet(mask, g.n)


def transvection_admitting_vertices(g: Graph) -> VertexSet:
    return transvection_free_vertices(g).complement()


def is_transvection_free_graph(g: Graph) -> bool:
    """True iff every vertex is transvection-free and the graph is not a single vertex."""
    if g.n < 1:
        raise InputError("need at least one vertex")
    if g.n == 1:
        return False
    return len(transvection_free_vertices(g)) == g.n


def is_characteristic_vertex_set(g: Graph, s: VertexSet) -> bool:
    """True iff ``s`` equals the union of the characteristic closures of its members."""
    if s.n != g.n:
        raise InputError("vertex set belongs to a different graph")
    auts = automorphisms(g)
    mask = 0
    for v in s:
        mask |= characteristic_closure(g, v, auts).mask
    return mask == s.mask


class MbaCharacteristicSets(NamedTuple):
    link_intersection: VertexSet
    max_degree_linked: VertexSet


def mba_characteristic_sets(g: Graph) -> MbaCharacteristicSets:
    """The two characteristic vertex sets attached to a non-regular graph.

    ``link_intersection`` collects the vertices adjacent to every vertex of
    non-maximal degree; ``max_degree_linked`` the maximal-degree vertices
    adjacent to at least one vertex of non-maximal degree.
    """
    flags = structure_flags(g)
    if flags.is_regular:
        raise InputError("these sets are only defined for non-regular graphs")
    nonmax = flags.max_degree_vertices.complement()
    inter = (1 << g.n) - 1
    union = 0
    for v in nonmax:
        inter &= g.rows[v]
        union |= g.rows[v]
    return MbaCharacteristicSets(
        link_intersection=VertexSet(inter, g.n),
        max_degree_linked=VertexSet(union & flags.max_degree_vertices.mask, g.n),
    )
