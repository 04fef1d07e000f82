"""The W_n action on the forest basis and the characters of H^k(PSigma_n; Q).

A signed permutation g = (signs, perm) sends the basis vector of a forest
with edges i <- j to the forest with edges perm(i) <- perm(j), scaled by

    (sign of re-sorting the wedge factors by first coordinate)
    * prod over edges i <- j of signs[j].

The second factor is the orientation-reversal action: rho_i negates every
generator whose second index is i.  The first factor comes from the fixed
orientation convention (ascending first coordinates = +1); it is certified
against the presentation oracle, which applies the same action inside the
presented exterior algebra.
"""

from __future__ import annotations

from fractions import Fraction

from .classtables import DEFAULT_MAX_N, class_table
from .characters import ClassFunction
from .errors import ConsistencyError
from .forests import forest_count, forests_by_child_set
from .partitions import HYPEROCTAHEDRAL, SYMMETRIC, normalize_kind
from .signedperm import SignedPermutation


def act(g, forest):
    """Apply g to a basis forest; returns (new_forest, coeff) with coeff = +-1."""
    if g.rank != len(forest):
        raise ValueError(f"rank mismatch: {g.rank} vs {len(forest)}")
    return _act_raw(g.signs, g.perm, forest)


def _act_raw(signs, perm, forest):
    n = len(forest)
    new = [0] * n
    firsts = []
    sign = 1
    for i in range(1, n + 1):
        j = forest[i - 1]
        if j == 0:
            continue
        si = perm[i - 1]
        new[si - 1] = perm[j - 1]
        if signs[j - 1] < 0:
            sign = -sign
        firsts.append(si)
    # Parity of the permutation that sorts the relabelled first coordinates.
    k = len(firsts)
    for a in range(k):
        for b in range(a + 1, k):
            if firsts[a] > firsts[b]:
                sign = -sign
    return tuple(new), sign


def _fixed_point_sum(signs, perm, groups):
    """Signed count of fixed basis vectors of one group element.

    Only forests whose child set is perm-invariant can be fixed, so only
    those buckets are scanned (the class-filtered enumeration).
    """
    total = 0
    identity = all(perm[i] == i + 1 for i in range(len(perm)))
    for child_set, bucket in groups.items():
        if not identity and frozenset(perm[v - 1] for v in child_set) != child_set:
            continue
        if identity:
            for f in bucket:
                coeff = 1
                for p in f:
                    if p and signs[p - 1] < 0:
                        coeff = -coeff
                total += coeff
        else:
            for f in bucket:
                image, coeff = _act_raw(signs, perm, f)
                if image == f:
                    total += coeff
    return total


_char_cache = {}


def cohomology_character(n, k, kind=HYPEROCTAHEDRAL, max_n=DEFAULT_MAX_N, threads=1):
    """The character of H^k(PSigma_n; Q) as a class function on S_n or W_n.

    Evaluated per class representative as the signed number of fixed forest
    basis vectors; the value at the identity is the dimension
    binom(n-1, k) n^k.
    """
    kind = normalize_kind(kind)
    key = (kind, n, k)
    cached = _char_cache.get(key)
    if cached is not None:
        return cached
    table = class_table(kind, n, max_n=max_n)
    groups = forests_by_child_set(n, k)

    def value(cls):
        rep = cls.rep
        return _fixed_point_sum(rep.signs, rep.perm, groups)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(value, table.classes))
    else:
        values = [value(c) for c in table.classes]

    cf = ClassFunction(kind, n, values)
    ident = ((1,) * n) if kind == SYMMETRIC else (((1,) * n), ())
    if cf[table.index(ident)] != forest_count(n, k):
        raise ConsistencyError(
            f"character at identity != forest count for n={n}, k={k}"
        )
    _char_cache[key] = cf
    return cf


def sn_cohomology_character(n, k, max_n=DEFAULT_MAX_N, threads=1):
    """Restriction of the W_n character to S_n (all-positive classes)."""
    return cohomology_character(n, k, kind=SYMMETRIC, max_n=max_n, threads=threads)


def find_negating_involution(forest):
    """An involution omega in W_n with omega . f = -f, for any forest with k >= 1.

    If some vertex has an odd number of children, flipping its orientation
    negates an odd number of wedge factors.  Otherwise all child counts are
    even; a deepest vertex with children has at least two, all of them
    leaves, and transposing two of those leaves swaps exactly two factors.
    """
    n = len(forest)
    children = {}
    for i, p in enumerate(forest, start=1):
        if p:
            children.setdefault(p, []).append(i)
    if not children:
        raise ValueError("the empty forest (k=0) is fixed by the whole group")
    for v in sorted(children):
        if len(children[v]) % 2 == 1:
            return SignedPermutation.sign_flip(n, v)

    def depth(v):
        d = 0
        while forest[v - 1] != 0:
            v = forest[v - 1]
            d += 1
        return d

    deepest = max(sorted(children), key=depth)
    p, q = sorted(children[deepest])[:2]
    omega = SignedPermutation.transposition(n, p, q)
    assert act(omega, forest) == (forest, -1)
    return omega


def trivial_multiplicity(n, k, kind, max_n=DEFAULT_MAX_N, threads=1):
    """Multiplicity of the trivial representation in H^k, an exact integer.

    <chi, 1> = sum_c chi(c) |class c| / |G|; a non-integer result would
    mean the class data or character is wrong, so it raises.
    """
    kind = normalize_kind(kind)
    cf = cohomology_character(n, k, kind=kind, max_n=max_n, threads=threads)
    table = class_table(kind, n, max_n=max_n)
    total = Fraction(0)
    for c, v in zip(table, cf.values):
        total += Fraction(v, c.z)
    if total.denominator != 1:
        raise ConsistencyError(f"non-integral trivial multiplicity {total}")
    if total < 0:
        raise ConsistencyError(f"negative trivial multiplicity {total}")
    return int(total)


def symmetrize_over_sn(forest):
    """Sum of sigma . f over all sigma in S_n, as {forest: coefficient}.

    The projection (up to the positive factor n!) of the basis vector onto
    the S_n-invariant subspace.
    """
    from itertools import permutations

    n = len(forest)
    out = {}
    for perm in permutations(range(1, n + 1)):
        image, coeff = _act_raw((1,) * n, perm, forest)
        out[image] = out.get(image, 0) + coeff
    return {f: c for f, c in out.items() if c != 0}


def invariant_span_rank(vectors):
    """Rank over Q of sparse vectors given as {basis_forest: coefficient}."""
    echelon = []  # list of (pivot_key, {key: Fraction})
    rank = 0
    for vec in vectors:
        row = {key: Fraction(val) for key, val in vec.items() if val != 0}
        for pivot, prow in echelon:
            coeff = row.get(pivot)
            if coeff:
                for key, val in prow.items():
                    newval = row.get(key, Fraction(0)) - coeff * val
                    if newval:
                        row[key] = newval
                    else:
                        row.pop(key, None)
        if row:
            pivot = min(row)
            pval = row[pivot]
            echelon.append((pivot, {kk: vv / pval for kk, vv in row.items()}))
            rank += 1
    return rank
