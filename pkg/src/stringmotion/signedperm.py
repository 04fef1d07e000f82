"""Signed permutations: elements of W_n = (Z/2Z) wr S_n.

An element is stored as (signs, perm) and behaves like the monomial matrix
P_perm * D(signs): first flip coordinate i by signs[i], then move it to
perm(i).  Composition therefore satisfies

    (g * h).perm[i]  = g.perm[h.perm[i]]
    (g * h).signs[i] = h.signs[i] * g.signs[h.perm[i]]

which is exactly the bookkeeping needed so that the action on cohomology
generators reads  g . a*_{i,j} = signs[j] * a*_{perm(i),perm(j)}  with the
sign indexed by the original second index j.
"""

from __future__ import annotations

from .partitions import check_partition


class SignedPermutation:
    __slots__ = ("signs", "perm")

    def __init__(self, signs, perm):
        signs = tuple(signs)
        perm = tuple(perm)
        n = len(perm)
        if len(signs) != n:
            raise ValueError("signs and perm must have equal length")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError(f"perm must be a bijection of 1..{n}")
        self.signs = signs
        self.perm = perm

    @property
    def rank(self):
        return len(self.perm)

    @classmethod
    def identity(cls, n):
        return cls((1,) * n, tuple(range(1, n + 1)))

    @classmethod
    def sign_flip(cls, n, i):
        """The generator that reverses orientation of strand i (rho_i)."""
        signs = [1] * n
        signs[i - 1] = -1
        return cls(signs, tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n, i, j):
        """The permutation (i j) with all signs positive; tau_i is (i, i+1)."""
        if i == j:
            raise ValueError("transposition needs distinct points")
        perm = list(range(1, n + 1))
        perm[i - 1], perm[j - 1] = j, i
        return cls((1,) * n, perm)

    @classmethod
    def from_cycles(cls, n, cycles, negative_starts=()):
        """Build an element from disjoint cycles, flipping the sign at each
        vertex listed in negative_starts."""
        perm = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                perm[a - 1] = b
        signs = [1] * n
        for v in negative_starts:
            signs[v - 1] = -1
        return cls(signs, perm)

    def __mul__(self, other):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        gp, hp = self.perm, other.perm
        gs, hs = self.signs, other.signs
        perm = tuple(gp[hp[i] - 1] for i in range(self.rank))
        signs = tuple(hs[i] * gs[hp[i] - 1] for i in range(self.rank))
        return SignedPermutation(signs, perm)

    def inverse(self):
        n = self.rank
        inv = [0] * n
        for i in range(n):
            inv[self.perm[i] - 1] = i + 1
        signs = tuple(self.signs[inv[i] - 1] for i in range(n))
        return SignedPermutation(signs, inv)

    def is_identity(self):
        return all(s == 1 for s in self.signs) and all(
            self.perm[i] == i + 1 for i in range(self.rank)
        )

    def __eq__(self, other):
        return (
            isinstance(other, SignedPermutation)
            and self.signs == other.signs
            and self.perm == other.perm
        )

    def __hash__(self):
        return hash((self.signs, self.perm))

    def __repr__(self):
        return f"SignedPermutation(signs={self.signs}, perm={self.perm})"


def signed_cycle_type(g):
    """The conjugacy invariant (alpha, beta) of g.

    alpha collects the lengths of cycles whose sign product is +1, beta
    those with product -1; each is sorted decreasingly.
    """
    n = g.rank
    seen = [False] * n
    positive, negative = [], []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        length, prod, v = 0, 1, start
        while not seen[v - 1]:
            seen[v - 1] = True
            prod *= g.signs[v - 1]
            length += 1
            v = g.perm[v - 1]
        (positive if prod == 1 else negative).append(length)
    alpha = tuple(sorted(positive, reverse=True))
    beta = tuple(sorted(negative, reverse=True))
    return (check_partition(alpha), check_partition(beta))


def random_signed_permutation(n, rng):
    """Uniformly random element of W_n from the given random.Random."""
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    signs = tuple(rng.choice((1, -1)) for _ in range(n))
    return SignedPermutation(signs, perm)


def random_plain_permutation(n, rng):
    """Uniformly random element of S_n (all signs positive)."""
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return SignedPermutation((1,) * n, perm)
