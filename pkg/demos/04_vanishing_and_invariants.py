"""Invariant subspaces: full motion group and the braid-permutation group.

A transfer argument identifies the cohomology of the full string motion
group with the W_n-invariants of H^k(PSigma_n; Q), and the cohomology of
the orientation-preserving subgroup with the S_n-invariants.  The W_n
invariants vanish for k >= 1: every basis forest admits an involution
acting by -1 (flip an odd-degree vertex, or swap two terminal siblings).
The S_n invariants are nonzero, with stable dimensions 1, 1, 3 in degrees
1, 2, 3.
"""

from stringmotion import (
    act,
    find_negating_involution,
    signed_cycle_type,
    symmetrize_over_sn,
    trivial_multiplicity,
)
from stringmotion.action import invariant_span_rank
from stringmotion.reference_tables import degree3_invariant_forests

# The involution argument, on two examples.
for f in ((2, 0), (3, 3, 0)):
    omega = find_negating_involution(f)
    image, coeff = act(omega, f)
    print(f"forest {f}: involution of type {signed_cycle_type(omega)} "
          f"sends it to {coeff:+d} * itself")

# Exact inner products agree with the involution argument: no trivial
# W_n-summands in positive degree.
print("\ntrivial W_n multiplicities, n = 6:",
      [trivial_multiplicity(6, k, "Wn") for k in range(0, 6)])

# The S_n story is different: the invariant dimensions stabilize at 1, 1, 3.
for n in (5, 6, 7):
    dims = [trivial_multiplicity(n, k, "Sn") for k in range(0, 4)]
    print(f"trivial S_n multiplicities, n = {n}: {dims}")

# In degree 3 the three invariants are symmetrizations of explicit forests:
# a path of length 3, a two-terminal-children tree, and a path of length 2
# plus a disjoint edge.
n = 6
vectors = [symmetrize_over_sn(f) for f in degree3_invariant_forests(n)]
print(f"\nat n = {n} the three symmetrized forests have "
      f"{[len(v) for v in vectors]} supports and span rank "
      f"{invariant_span_rank(vectors)}")
