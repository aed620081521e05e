"""
Characteristic closures and transvection-free vertices
======================================================

A set of vertices generates a characteristic subgroup of the right-angled
Artin group exactly when it is a union of characteristic closures: sweep the
domination closure of a vertex through the graph's automorphism group.
"""

from raagcert import (
    characteristic_closure,
    cycle_graph,
    domination_closure,
    is_characteristic_vertex_set,
    is_transvection_free_graph,
    mba_characteristic_sets,
    path_graph,
    petersen_graph,
    structure_flags,
    transvection_free_vertices,
    VertexSet,
)

p3 = path_graph(3)
print("domination closure of the end of P3:", list(domination_closure(p3, 0)))
print("characteristic closure of the middle of P3:", list(characteristic_closure(p3, 1)))

# The five-cycle admits no transvections at all; the four-cycle admits them
# everywhere (opposite vertices have equal links).
print("transvection-free vertices of C5:", list(transvection_free_vertices(cycle_graph(5))))
print("transvection-free vertices of C4:", list(transvection_free_vertices(cycle_graph(4))))
print("is C9 transvection-free?", is_transvection_free_graph(cycle_graph(9)))
print("is Petersen transvection-free?", is_transvection_free_graph(petersen_graph()))

# The maximal-degree set is always characteristic; a lone vertex usually is not.
flags = structure_flags(p3)
print("max-degree set characteristic?",
      is_characteristic_vertex_set(p3, flags.max_degree_vertices))
print("single end vertex characteristic?",
      is_characteristic_vertex_set(p3, VertexSet.of([0], 3)))

# For non-regular graphs, two more characteristic sets built from links.
sets = mba_characteristic_sets(p3)
print("vertices adjacent to every low-degree vertex:", list(sets.link_intersection))
print("max-degree vertices adjacent to some low-degree vertex:", list(sets.max_degree_linked))
