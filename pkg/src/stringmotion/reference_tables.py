"""Published low-degree decompositions and stable ranges, frozen as data.

Stable names are used throughout: a key is the partition body after the
first row is stripped, so () is the trivial family V(0)_n and, on the W
side, ((), (1)) is the family V((0),(1))_n.

These tables are what `verify-paper` checks the computed decompositions
against; they are data, not derived by this package.
"""

# H^1 as W_n-representations: rank 2 row, then the stable row (n >= 3).
H1_WN_AT_2 = {((), (1,)): 1}
H1_WN_STABLE = {((), (1,)): 1, ((1,), (1,)): 1}
H1_WN_STABLE_FROM = 3

# H^1 as S_n-representations.
H1_SN = {
    2: {(): 1, (1,): 1},
    3: {(): 1, (1,): 2, (1, 1): 1},
}
H1_SN_STABLE = {(): 1, (1,): 2, (1, 1): 1, (2,): 1}
H1_SN_STABLE_FROM = 4

# H^2 as S_n-representations: explicit rows for n = 2..6, stable for n >= 7.
H2_SN = {
    2: {},
    3: {(1, 1): 2, (1,): 3, (): 1},
    4: {(1, 1, 1): 2, (1, 1): 7, (2,): 3, (1,): 6, (): 1},
    5: {(1, 1, 1): 4, (2, 1): 5, (1, 1): 9, (2,): 6, (1,): 6, (): 1},
    6: {
        (2, 1, 1): 2,
        (1, 1, 1): 4,
        (2, 1): 7,
        (3,): 3,
        (1, 1): 9,
        (2,): 6,
        (1,): 6,
        (): 1,
    },
}
H2_SN_STABLE = {
    (2, 1, 1): 2,
    (3, 1): 2,
    (1, 1, 1): 4,
    (2, 1): 7,
    (3,): 3,
    (1, 1): 9,
    (2,): 6,
    (1,): 6,
    (): 1,
}
H2_SN_STABLE_FROM = 7

# Dimensions of the S_n-invariant subspace of H^k (the cohomology of the
# orientation-preserving motion group), with the rank they hold from.
INVARIANT_DIMS = {1: (2, 1), 2: (3, 1), 3: (5, 3)}  # k: (n_from, dim)


def degree3_invariant_forests(n):
    """Three forests whose S_n-symmetrizations span the invariants in degree 3.

    The path 1<-2<-3<-4; the tree where 3 has the two terminal children 1
    (through 2) and 4; and the path 1<-2<-3 plus the disjoint edge 4<-5.
    Requires n >= 5.
    """
    if n < 5:
        raise ValueError("need n >= 5")

    def forest(pairs):
        parent = [0] * n
        for child, par in pairs:
            parent[child - 1] = par
        return tuple(parent)

    return [
        forest([(1, 2), (2, 3), (3, 4)]),
        forest([(1, 2), (2, 3), (4, 3)]),
        forest([(1, 2), (2, 3), (4, 5)]),
    ]
