"""Automorphisms, canonical forms and isomorphism-class enumeration of small graphs.

All three are backtracking searches over vertex orderings, pruned by an
iterated degree/neighbour-colour refinement.  The sizes this package targets
(at most 8 to 10 vertices) keep the searches comfortably small, so no external
canonical-labelling machinery is used.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import InputError, ResourceError
from .graphs import Graph, from_edges, to_graph6

VertexPermutation = tuple[int, ...]

AUTOMORPHISM_MAX_N = 10
CANONICAL_MAX_N = 10
ENUMERATE_MAX_N = 8


def identity_permutation(n: int) -> VertexPermutation:
    return tuple(range(n))


def compose_permutations(a: Sequence[int], b: Sequence[int]) -> VertexPermutation:
    """Permutation acting as b first, then a."""
    if len(a) != len(b):
        raise InputError("permutations act on different vertex counts")
    return tuple(a[b[i]] for i in range(len(a)))


def invert_permutation(p: Sequence[int]) -> VertexPermutation:
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    return all(
        g.adjacent(u, v) == g.adjacent(perm[u], perm[v])
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def _refined_colors(g: Graph) -> tuple[int, ...]:
    """Stable vertex colouring: start from degrees, refine by neighbour colour multisets."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        keys = []
        for v in range(g.n):
            neigh = sorted(colors[w] for w in g.link(v))
            keys.append((colors[v], tuple(neigh)))
        ranking = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [ranking[key] for key in keys]
        if new == colors:
            return tuple(colors)
        colors = new


def automorphisms(g: Graph) -> list[VertexPermutation]:
    """All adjacency-preserving vertex bijections, sorted by image tuple."""
    if g.n < 1:
        raise InputError("automorphisms need at least one vertex")
    if g.n > AUTOMORPHISM_MAX_N:
        raise ResourceError(f"automorphism search capped at {AUTOMORPHISM_MAX_N} vertices")
    n = g.n
    colors = _refined_colors(g)
    rows = g.rows
    image = [-1] * n
    used = [False] * n
    found: list[VertexPermutation] = []

    def extend(v: int) -> None:
        if v == n:
            found.append(tuple(image))
            return
        for u in range(n):
            if used[u] or colors[u] != colors[v]:
                continue
            ok = True
            for w in range(v):
                if (rows[v] >> w & 1) != (rows[u] >> image[w] & 1):
                    ok = False
                    break
            if ok:
                image[v] = u
                used[u] = True
                extend(v + 1)
                used[u] = False
        image[v] = -1

    extend(0)
    found.sort()
    return found


def _canonical_order(g: Graph) -> VertexPermutation:
    """Vertex ordering whose upper-triangle bit string is lexicographically minimal.

    Position p of the order contributes the column of bits joining it to the
    positions before it; columns are compared as fixed-width integers, which
    matches the graph6 bit ordering.
    """
    n = g.n
    rows = g.rows
    best_cols: list[int] | None = None
    best_order: list[int] | None = None
    order: list[int] = []
    cols: list[int] = []
    used = [False] * n

    def extend(p: int) -> None:
        nonlocal best_cols, best_order
        if p == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_order = order.copy()
            return
        for u in range(n):
            if used[u]:
                continue
            col = 0
            for w in order:
                col = col << 1 | (rows[u] >> w & 1)
            cols.append(col)
            if best_cols is None or cols <= best_cols[: len(cols)]:
                used[u] = True
                order.append(u)
                extend(p + 1)
                order.pop()
                used[u] = False
            cols.pop()

    extend(0)
    assert best_order is not None
    # best_order[p] is the old vertex placed at position p; relabel wants old -> new
    return invert_permutation(best_order)


def canonical_relabelled(g: Graph) -> Graph:
    """Isomorphic copy of ``g`` in its canonical labelling."""
    if g.n > CANONICAL_MAX_N:
        raise ResourceError(f"canonical labelling capped at {CANONICAL_MAX_N} vertices")
    if g.n == 0:
        raise InputError("the empty graph has no canonical form")
    return g.relabel(_canonical_order(g))


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    return to_graph6(canonical_relabelled(g)).encode("ascii")


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if a.degree_sequence() != b.degree_sequence():
        return False
    return canonical_form(a) == canonical_form(b)


def _extensions(g: Graph) -> Iterator[Graph]:
    """All graphs obtained by appending one vertex with an arbitrary neighbourhood."""
    n = g.n + 1
    for mask in range(1 << g.n):
        rows = [row | ((mask >> v & 1) << (n - 1)) for v, row in enumerate(g.rows)]
        rows.append(mask)
        yield Graph(n, tuple(rows))


def enumerate_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Classes are produced by extending the (n-1)-vertex representatives one
    vertex at a time and deduplicating by canonical form; the result comes
    back sorted by canonical form.
    """
    if n < 1:
        raise InputError("enumeration needs at least one vertex")
    if n > ENUMERATE_MAX_N:
        raise ResourceError(f"enumeration capped at {ENUMERATE_MAX_N} vertices")
    level = [from_edges(1, [])]
    for m in range(2, n + 1):
        seen: dict[bytes, Graph] = {}
        for h in level:
            for cand in _extensions(h):
                key = canonical_form(cand)
                if key not in seen:
                    seen[key] = cand
        level = [seen[key] for key in sorted(seen)]
    return level
