"""
Signed automorphisms and their exact graded matrices
====================================================

Automorphisms built from graph symmetries and generator inversions act on
the graded pieces of the lower central series by signed permutation
matrices.  Eigenvalue 1 on any piece forces infinitely many twisted
conjugacy classes, and det(I - M) over exact integers detects it.
"""

from raagcert import (
    IntMatrix,
    SignedAut,
    cycle_graph,
    det_exact,
    edgeless_graph,
    eigenvalue_witness_report,
    has_eigenvalue_one,
    induced_matrix,
    l2_basis,
    signed_cycle_matrix,
)

g = edgeless_graph(2)
swap = SignedAut((1, 0), (1, 1))

# Level 1: the action on the abelianization; a plain swap fixes v0 + v1.
m1 = induced_matrix(g, swap, 1)
print("level-1 matrix of the swap:", m1.entries, "eigenvalue 1?", has_eigenvalue_one(m1))

# Level 2: commutators of non-adjacent pairs; the swap reverses the bracket.
print("level-2 basis:", l2_basis(g))
print("level-2 matrix of the swap:", induced_matrix(g, swap, 2).entries)

# Inverting both generators fixes the bracket on level 2.
flip = SignedAut((0, 1), (-1, -1))
m2 = induced_matrix(g, flip, 2)
print("level-2 matrix after inverting both generators:", m2.entries,
      "eigenvalue 1?", has_eigenvalue_one(m2))

# The signed cyclic-shift determinant identity behind all of this.
for signs in ((1,), (-1,), (-1, -1), (-1, 1, 1)):
    p = signed_cycle_matrix(signs)
    print("signs", signs, "det(I - P) =", det_exact(IntMatrix.identity(len(signs)) - p))

# Exhaustive scan: every signed automorphism of a non-complete graph has a
# witness on level 1, 2 or 3.
report = eigenvalue_witness_report(cycle_graph(5))
print("C5 scan:", report.total, "signed automorphisms, witnesses per level:",
      report.level_counts, "failures:", len(report.failures))
