"""Trace monoid over a graph's commutation relations, and its Lyndon elements.

Words are tuples of vertex indices.  Two letters commute exactly when they are
joined by an edge, and a trace is the equivalence class of a word under
swapping adjacent commuting letters.  Classes are materialised by breadth-first
closure over single swaps, which is exponential in the worst case but entirely
adequate under the length budget of 6 that this package enforces.

The word order is index-lexicographic with the empty word smallest, so tuple
comparison implements it directly.  The standard representative of a trace is
the largest word in its class, and traces compare through their standard
representatives.  A trace is a Lyndon element iff it is nontrivial and smaller
than every proper right factor; bracketing a Lyndon element via its standard
factorization produces the iterated commutators that form bases of the graded
pieces of the lower central series of the associated right-angled Artin group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import InputError, ResourceError
from .graphs import Graph

TraceWord = tuple[int, ...]

LYNDON_MAX_LENGTH = 6


@lru_cache(maxsize=None)
def _class_words(g: Graph, word: TraceWord) -> frozenset[TraceWord]:
    """All words reachable from ``word`` by swapping adjacent commuting letters."""
    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(len(w) - 1):
                a, b = w[i], w[i + 1]
                if a != b and g.adjacent(a, b):
                    swapped = w[:i] + (b, a) + w[i + 2 :]
                    if swapped not in seen:
                        seen.add(swapped)
                        nxt.append(swapped)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class TraceClass:
    """A trace, identified by its standard (largest) representative word."""

    graph: Graph
    std: TraceWord

    @property
    def length(self) -> int:
        return len(self.std)

    def words(self) -> frozenset[TraceWord]:
        return _class_words(self.graph, self.std)

    def _check_same(self, other: "TraceClass") -> None:
        if self.graph != other.graph:
            raise InputError("traces live over different graphs")

    def __lt__(self, other: "TraceClass") -> bool:
        self._check_same(other)
        return self.std < other.std

    def __le__(self, other: "TraceClass") -> bool:
        self._check_same(other)
        return self.std <= other.std

    def __repr__(self) -> str:
        body = ".".join(self.graph.labels[v] for v in self.std)
        return f"TraceClass({body or '1'})"


def trace_class(g: Graph, word: Sequence[int]) -> TraceClass:
    """The trace of ``word``; letters must be vertices of ``g``."""
    w = tuple(word)
    for letter in w:
        g.check_vertex(letter)
    return TraceClass(g, max(_class_words(g, w)))


def trace_less(a: TraceClass, b: TraceClass) -> bool:
    """Strict total order on traces of one graph."""
    return a < b


def support(m: TraceClass) -> frozenset[int]:
    return frozenset(m.std)


def initial_vertices(m: TraceClass) -> frozenset[int]:
    """Vertices that can start some word of the class."""
    return frozenset(w[0] for w in m.words() if w)


def dependence_set(m: TraceClass) -> frozenset[int]:
    """Support plus every vertex that fails to commute with some support vertex."""
    g = m.graph
    supp = support(m)
    extra = {
        j
        for j in range(g.n)
        for i in supp
        if i != j and not g.adjacent(i, j)
    }
    return supp | extra


def _factorizations(m: TraceClass) -> set[tuple[TraceWord, TraceWord]]:
    """All (std(x), std(y)) with m = xy and x, y nontrivial."""
    g = m.graph
    out = set()
    for w in m.words():
        for cut in range(1, len(w)):
            x = max(_class_words(g, w[:cut]))
            y = max(_class_words(g, w[cut:]))
            out.add((x, y))
    return out


def is_lyndon(m: TraceClass) -> bool:
    """True iff the trace is strictly smaller than every proper right factor."""
    if m.length == 0:
        raise InputError("the trivial trace is not eligible")
    return all(m.std < y for _, y in _factorizations(m))


def enumerate_lyndon(g: Graph, length: int) -> list[TraceClass]:
    """All Lyndon traces of the given length, sorted; their count is the rank
    of the corresponding graded piece of the lower central series."""
    if length < 1:
        raise InputError("length must be positive")
    if length > LYNDON_MAX_LENGTH:
        raise ResourceError(f"Lyndon enumeration capped at length {LYNDON_MAX_LENGTH}")
    seen: set[TraceWord] = set()
    found: list[TraceClass] = []
    for word in itertools.product(range(g.n), repeat=length):
        if word in seen:
            continue
        words = _class_words(g, word)
        seen |= words
        m = TraceClass(g, max(words))
        if is_lyndon(m):
            assert len(initial_vertices(m)) == 1
            found.append(m)
    found.sort(key=lambda m: m.std)
    return found


def closed_form_lyndon(g: Graph, length: int) -> list[TraceClass]:
    """Lyndon traces of length 1, 2 or 3 read off directly from adjacency.

    Lengths 1 and 2 are the vertices and the non-adjacent increasing pairs.
    Length 3 comprises four families over non-commuting pairs: i i k, i j k
    with both j and k non-commuting with i, i j j, and i j k with j != k where
    k fails to commute with i or with j.
    """
    if length not in (1, 2, 3):
        raise InputError("closed forms cover lengths 1, 2 and 3 only")

    def noncomm(i: int, j: int) -> bool:
        return i != j and not g.adjacent(i, j)

    words: set[TraceWord] = set()
    if length == 1:
        words = {(i,) for i in range(g.n)}
    elif length == 2:
        words = {(i, j) for i in range(g.n) for j in range(i + 1, g.n) if noncomm(i, j)}
    else:
        for i, j in itertools.combinations(range(g.n), 2):
            if not noncomm(i, j):
                continue
            words.add((i, i, j))
            words.add((i, j, j))
            # the i < j < k family with both (i,j) and (i,k) non-commuting is
            # the special case of this disjunction with k > j
            for k in range(i + 1, g.n):
                if k != j and (noncomm(i, k) or noncomm(j, k)):
                    words.add((i, j, k))
    classes = {trace_class(g, w) for w in words}
    return sorted(classes, key=lambda m: m.std)


def standard_factorization(m: TraceClass) -> tuple[TraceClass, TraceClass]:
    """The factorization m = xy into Lyndon traces x < y with the initial vertex
    of y in the dependence set of x, with y minimal."""
    if not is_lyndon(m):
        raise InputError("standard factorization is defined for Lyndon traces")
    if m.length < 2:
        raise InputError("needs length at least 2")
    g = m.graph
    best: Optional[tuple[TraceClass, TraceClass]] = None
    for x_std, y_std in _factorizations(m):
        x = TraceClass(g, x_std)
        y = TraceClass(g, y_std)
        if not (x.std < y.std and is_lyndon(x) and is_lyndon(y)):
            continue
        (init_y,) = initial_vertices(y)
        if init_y not in dependence_set(x):
            continue
        if best is None or y.std < best[1].std:
            best = (x, y)
    assert best is not None
    return best


@dataclass(frozen=True)
class BracketTree:
    """Bracketing of a Lyndon trace: a leaf vertex or a pair of subtrees."""

    vertex: Optional[int] = None
    left: Optional["BracketTree"] = None
    right: Optional["BracketTree"] = None

    @classmethod
    def leaf(cls, vertex: int) -> "BracketTree":
        return cls(vertex=vertex)

    @classmethod
    def node(cls, left: "BracketTree", right: "BracketTree") -> "BracketTree":
        return cls(left=left, right=right)

    def leaves(self) -> tuple[int, ...]:
        if self.vertex is not None:
            return (self.vertex,)
        assert self.left is not None and self.right is not None
        return self.left.leaves() + self.right.leaves()

    def render(self, labels: Optional[Sequence[str]] = None) -> str:
        if self.vertex is not None:
            return labels[self.vertex] if labels else f"v{self.vertex}"
        assert self.left is not None and self.right is not None
        return f"[{self.left.render(labels)},{self.right.render(labels)}]"

    def __str__(self) -> str:
        return self.render()


def bracketing(m: TraceClass) -> BracketTree:
    """Iterated-commutator tree obtained from repeated standard factorization."""
    if not is_lyndon(m):
        raise InputError("bracketing is defined for Lyndon traces")
    if m.length == 1:
        return BracketTree.leaf(m.std[0])
    x, y = standard_factorization(m)
    return BracketTree.node(bracketing(x), bracketing(y))
