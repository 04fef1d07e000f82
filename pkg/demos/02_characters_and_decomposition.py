"""Decomposing H^k(PSigma_n; Q) into irreducible representations.

The signed permutation group W_n acts on the forest basis: permutations
relabel vertices (with an exterior sign from re-sorting the wedge factors)
and an orientation flip at vertex i negates every edge whose parent is i.
The character of H^k is the signed count of fixed forests per conjugacy
class; exact inner products against the irreducible characters give the
multiplicities.
"""

from stringmotion import (
    character_table,
    cohomology_character,
    decompose,
    format_stable,
    stable_name,
)

# W_n irreducibles are labelled by double partitions (plus, minus); the
# table is built from the pullback/sign-twist/induction construction and
# verified orthonormal before it is returned.
table = character_table("Wn", 3)
print(f"W_3 has {len(table.labels)} irreducible characters; dimensions:")
print(" ", {format_stable("Wn", stable_name("Wn", lab)): table.dimension(lab)
             for lab in table.labels})

# The character of H^1(PSigma_3) as a class function.
cf = cohomology_character(3, 1)
print("\ncharacter of H^1(PSigma_3) per class:", cf.values)

# Decompose: multiplicities are exact integers, and the dimension identity
# sum(mult * dim) = binom(n-1,k) n^k is checked on the way out.
for n in (2, 3, 5):
    mv = decompose(n, 1, "Wn")
    names = ", ".join(
        f"{format_stable('Wn', body)} x{m}" for body, m in sorted(mv.stable().items())
    )
    print(f"H^1(PSigma_{n}) = {names}   (dim {mv.dimension()})")

# The same space as an S_n-representation (forget the orientation flips).
for n in (3, 5, 6):
    mv = decompose(n, 2, "Sn")
    names = ", ".join(
        f"{format_stable('Sn', body)} x{m}" for body, m in sorted(mv.stable().items())
    )
    print(f"H^2(PSigma_{n}) = {names}")
