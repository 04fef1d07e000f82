"""The forest basis of H^k(PSigma_n; Q) and its dimension formula.

The degree-k cohomology of the pure string motion group on n circles has
a basis indexed by rooted labelled forests on {1..n} with k edges: an edge
i <- j stands for the dual generator a*_{i,j} ("circle i passes through
circle j").  Counting those forests gives the closed formula

    dim H^k = binom(n-1, k) * n^k.

This script enumerates the forests, checks the formula, and shows the
wedge-word encoding.
"""

from stringmotion import (
    count_forests_enumerated,
    enumerate_forests,
    forest_count,
    from_wedge,
    to_wedge,
)

# Every forest is a parent vector: entry i is the parent of vertex i+1,
# with 0 marking a root.  At n = 2 there are two one-edge forests.
print("The two basis forests of H^1(PSigma_2):")
for f in enumerate_forests(2, 1):
    print(f"  parent vector {f}  <->  wedge word {to_wedge(f)}")

# The wedge word is the ascending exterior product; converting back is
# exact, and words with directed cycles are rejected (they are zero in
# cohomology).
print("\nround trip:", from_wedge([(1, 2), (2, 3)]))

# The dimension formula, checked by exhaustive enumeration.
print("\nn  k   formula   enumerated")
for n in range(2, 8):
    for k in sorted({1, 2, n - 1} - {0}):
        if k > n - 1:
            continue
        formula = forest_count(n, k)
        counted = count_forests_enumerated(n, k)
        marker = "ok" if formula == counted else "MISMATCH"
        print(f"{n}  {k}   {formula:7d}   {counted:7d}   {marker}")

# k = n-1 recovers a classic: n^(n-1) rooted labelled trees on n vertices.
print("\nrooted labelled trees: ", [forest_count(n, n - 1) for n in range(1, 8)])
