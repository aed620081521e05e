"""
Graphs, structural queries and interchange formats
==================================================

Build small graphs, read off the per-vertex and whole-graph structure that
the certification rules consume, and round-trip the two text formats.
"""

from raagcert import (
    complement,
    compose,
    cycle_graph,
    dominates,
    edgeless_graph,
    from_edge_list,
    from_graph6,
    mba_parameters,
    neighborhoods,
    path_graph,
    petersen_graph,
    srg_parameters,
    structure_flags,
    to_edge_list,
    to_graph6,
)

# A path on three vertices: the middle vertex sees both ends.
p3 = path_graph(3)
hood = neighborhoods(p3, 1)
print("P3, vertex 1:", "link", list(hood.link), "star", list(hood.star), "degree", hood.degree)

# Domination compares a link against a star; it drives every transvection.
print("P3: vertex 1 dominates vertex 0?", dominates(p3, 0, 1))
c5 = cycle_graph(5)
print("C5: any dominations?", any(dominates(c5, v, w) for v in range(5) for w in range(5) if v != w))

# Joins and disjoint unions correspond to direct and free products of the groups.
c4 = compose(edgeless_graph(2), edgeless_graph(2), "simplicial_join")
print("join of two edgeless pairs has edges", sorted(c4.edges()))
print("complement of that join:", sorted(complement(c4).edges()))

# Structure summary: components, regularity, maximal-degree set, centre.
flags = structure_flags(p3)
print("P3 summary: max-degree set", list(flags.max_degree_vertices),
      "centre", list(flags.centre_vertices), "regular?", flags.is_regular)

# Strongly regular parameters, when they exist.
print("Petersen srg parameters:", srg_parameters(petersen_graph()))
print("C5 srg parameters:", srg_parameters(cycle_graph(5)))

# Max-by-abelian parameters: connected, non-regular, and the low-degree
# vertices induce a complete graph.
from raagcert import from_edges

fig = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (2, 4)])
print("five-vertex wheel-like graph is max-by-abelian with", mba_parameters(fig))

# The two interchange formats round-trip exactly.
print("edge-list of C5:", to_edge_list(c5))
print("graph6 of C5:", to_graph6(c5))
print("round-trip equal?", from_graph6(to_graph6(c5)) == c5 == from_edge_list(to_edge_list(c5)))
