"""Signed graph automorphisms and their exact matrices on the first three
graded pieces of the lower central series of the associated group.

An automorphism generated by graph symmetries and generator inversions sends
generator i to the image of i under a graph automorphism, raised to a sign.
Partial conjugations act trivially on the associated graded Lie ring, so this
family captures the whole action.  On the graded pieces the matrices are
signed permutation matrices over these bases:

* level 1: the generators themselves;
* level 2: the commutators of non-adjacent increasing pairs (i, j);
* level 3: the left-normed triples (i, j, i) and (i, j, j) per such pair.

Brackets are stored with strictly increasing first two indices; swapping the
first two slots of a triple costs a factor -1 and exchanges the two shapes.
Eigenvalue 1 is detected as det(I - M) = 0 over exact integers, never floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InputError, ResourceError
from .graphs import Graph
from .isomorphism import VertexPermutation, automorphisms, compose_permutations, is_automorphism

SIGNED_AUT_MAX_N = 7
WITNESS_LEVELS = (1, 2, 3)


@dataclass(frozen=True)
class SignedAut:
    """A graph automorphism together with a sign per vertex."""

    perm: VertexPermutation
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.perm) != len(self.signs):
            raise InputError("need one sign per vertex")
        if any(s not in (-1, 1) for s in self.signs):
            raise InputError("signs must be +1 or -1")

    @classmethod
    def identity(cls, n: int) -> "SignedAut":
        return cls(tuple(range(n)), (1,) * n)

    def compose(self, other: "SignedAut") -> "SignedAut":
        """self after other: generator i goes to (self.perm(other.perm(i))) with
        sign self.signs[other.perm(i)] * other.signs[i]."""
        perm = compose_permutations(self.perm, other.perm)
        signs = tuple(self.signs[other.perm[i]] * other.signs[i] for i in range(len(perm)))
        return SignedAut(perm, signs)

    def inverse(self) -> "SignedAut":
        n = len(self.perm)
        inv = [0] * n
        for i, p in enumerate(self.perm):
            inv[p] = i
        signs = tuple(self.signs[inv[i]] for i in range(n))
        return SignedAut(tuple(inv), signs)


@dataclass(frozen=True)
class IntMatrix:
    """Dense exact-integer matrix; square ones support exact determinants."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise InputError("matrix rows must have equal length")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise InputError("matrix shapes differ")
        return IntMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise InputError("matrix shapes do not compose")
        cols = list(zip(*other.entries)) if other.entries else []
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )


def det_exact(m: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination; arbitrary precision."""
    if m.nrows != m.ncols:
        raise InputError("determinant needs a square matrix")
    n = m.nrows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def signed_cycle_matrix(signs: Sequence[int]) -> IntMatrix:
    """k x k cyclic shift with signed entries: position (i+1, i) carries the i-th
    sign and position (0, k-1) the last; det(I - P) = 1 - product of the signs."""
    k = len(signs)
    if k < 1:
        raise InputError("need at least one sign")
    if any(s not in (-1, 1) for s in signs):
        raise InputError("signs must be +1 or -1")
    rows = [[0] * k for _ in range(k)]
    if k == 1:
        rows[0][0] = signs[0]
    else:
        for i in range(k - 1):
            rows[i + 1][i] = signs[i]
        rows[0][k - 1] = signs[k - 1]
    return IntMatrix.from_rows(rows)


def has_eigenvalue_one(m: IntMatrix) -> bool:
    """Exact test det(I - M) = 0."""
    if m.nrows != m.ncols:
        raise InputError("eigenvalue test needs a square matrix")
    return det_exact(IntMatrix.identity(m.nrows) - m) == 0


def signed_automorphisms(g: Graph) -> Iterator[SignedAut]:
    """All |Aut| * 2^n signed automorphisms, in a deterministic order."""
    if g.n > SIGNED_AUT_MAX_N:
        raise ResourceError(f"signed automorphisms capped at {SIGNED_AUT_MAX_N} vertices")
    auts = automorphisms(g)
    for perm in auts:
        for bits in range(1 << g.n):
            signs = tuple(-1 if bits >> i & 1 else 1 for i in range(g.n))
            yield SignedAut(perm, signs)


def l2_basis(g: Graph) -> tuple[tuple[int, int], ...]:
    """Non-adjacent increasing pairs, in lexicographic order."""
    return tuple(
        (i, j)
        for i, j in itertools.combinations(range(g.n), 2)
        if not g.adjacent(i, j)
    )


def l3_sub_basis(g: Graph) -> tuple[tuple[int, int, int], ...]:
    """Per non-adjacent pair (i, j): the triples (i, j, i) and (i, j, j)."""
    out = []
    for i, j in l2_basis(g):
        out.append((i, j, i))
        out.append((i, j, j))
    return tuple(out)


def _check_signed_aut(g: Graph, a: SignedAut) -> None:
    if len(a.perm) != g.n:
        raise InputError("signed automorphism acts on a different vertex count")
    if not is_automorphism(g, a.perm):
        raise InputError("permutation is not a graph automorphism")


def induced_matrix(g: Graph, a: SignedAut, level: int) -> IntMatrix:
    """Matrix of the signed automorphism on the chosen graded piece.

    Columns follow the basis order; every matrix is a signed permutation
    matrix.  On level 2 the pair (i, j) maps to the reordered image pair with
    sign e_i * e_j, negated when the permutation swaps the order.  On level 3
    the triple (i, j, i) picks up e_j and (i, j, j) picks up e_i, with a
    further -1 and a shape exchange when the image pair needs reordering.
    """
    _check_signed_aut(g, a)
    perm, signs = a.perm, a.signs
    if level == 1:
        rows = [[0] * g.n for _ in range(g.n)]
        for i in range(g.n):
            rows[perm[i]][i] = signs[i]
        return IntMatrix.from_rows(rows)
    if level == 2:
        basis = l2_basis(g)
        index = {pair: c for c, pair in enumerate(basis)}
        rows = [[0] * len(basis) for _ in range(len(basis))]
        for c, (i, j) in enumerate(basis):
            p, q = perm[i], perm[j]
            sign = signs[i] * signs[j]
            if p > q:
                p, q = q, p
                sign = -sign
            rows[index[(p, q)]][c] = sign
        return IntMatrix.from_rows(rows)
    if level == 3:
        basis = l3_sub_basis(g)
        index = {triple: c for c, triple in enumerate(basis)}
        rows = [[0] * len(basis) for _ in range(len(basis))]
        for c, (i, j, rep) in enumerate(basis):
            p, q = perm[i], perm[j]
            sign = signs[j] if rep == i else signs[i]
            if p > q:
                # reordering the first two slots negates and exchanges shapes;
                # the third slot is never reordered
                p, q = q, p
                sign = -sign
            rows[index[(p, q, perm[rep])]][c] = sign
        return IntMatrix.from_rows(rows)
    raise InputError("level must be 1, 2 or 3")


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of scanning every signed automorphism for an eigenvalue-1 witness."""

    total: int
    witness_levels: tuple[int, ...]
    failures: tuple[SignedAut, ...]

    @property
    def level_counts(self) -> dict[int, int]:
        counts = {level: 0 for level in WITNESS_LEVELS}
        for lv in self.witness_levels:
            if lv:
                counts[lv] += 1
        return counts


def eigenvalue_witness_report(g: Graph) -> WitnessReport:
    """For each signed automorphism, the least level in {1, 2, 3} whose matrix
    has eigenvalue 1; failures (expected never, for non-complete graphs) are
    reported rather than raised."""
    if g.n > SIGNED_AUT_MAX_N:
        raise ResourceError(f"witness scan capped at {SIGNED_AUT_MAX_N} vertices")
    if g.is_complete():
        raise InputError("the scan requires a non-complete graph")
    levels = []
    failures = []
    for a in signed_automorphisms(g):
        witness = 0
        for level in WITNESS_LEVELS:
            if has_eigenvalue_one(induced_matrix(g, a, level)):
                witness = level
                break
        levels.append(witness)
        if not witness:
            failures.append(a)
    return WitnessReport(len(levels), tuple(levels), tuple(failures))
