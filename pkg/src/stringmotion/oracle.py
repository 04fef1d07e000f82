"""Independent reconstruction of H^k(PSigma_n; Q) from its presentation.

The cohomology ring is the exterior algebra on generators a*_{i,j}
(i != j) modulo two relation families:

    (1)  a*_{i,j} ^ a*_{j,i} = 0
    (2)  a*_{k,j} ^ a*_{j,i} - a*_{k,j} ^ a*_{k,i} + a*_{i,j} ^ a*_{k,i} = 0

Degree-k relations are the degree-2 relations wedged with all degree-(k-2)
monomials.  The quotient dimension comes out of an exact sparse rank
computation, which also certifies that the forest monomials descend to a
basis and provides normal forms used to certify the action's sign
convention.

Everything here is deliberately independent of the forest-first code
paths: dimensions, basis, and signs are recomputed from the presentation
alone and compared from the outside.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import combinations, permutations
from math import comb

from .errors import ResourceLimitError

DEFAULT_ORACLE_MAX_N = 5
DEFAULT_ORACLE_MAX_K = 3


def generators(n):
    """All ordered pairs (i, j), i != j, in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def monomials(n, k):
    """Degree-k exterior monomials: sorted k-subsets of generators."""
    return list(combinations(generators(n), k))


def _check_caps(n, k, max_n, max_k):
    if n > max_n or k > max_k:
        raise ResourceLimitError(
            f"oracle request (n={n}, k={k}) exceeds caps (n<={max_n}, k<={max_k})"
        )


def _canon2(g1, g2):
    """Sort a 2-generator product, returning (monomial, sign)."""
    if g1 == g2:
        return None, 0
    if g1 < g2:
        return (g1, g2), 1
    return (g2, g1), -1


def degree_two_relations(n):
    """The defining relations as {2-monomial: coefficient} dicts."""
    rels = []
    for i, j in combinations(range(1, n + 1), 2):
        mono, sign = _canon2((i, j), (j, i))
        rels.append({mono: sign})
    for i, j, k in permutations(range(1, n + 1), 3):
        row = {}
        for coeff, g1, g2 in (
            (1, (k, j), (j, i)),
            (-1, (k, j), (k, i)),
            (1, (i, j), (k, i)),
        ):
            mono, sign = _canon2(g1, g2)
            row[mono] = row.get(mono, 0) + coeff * sign
        rels.append({m: c for m, c in row.items() if c})
    return rels


def _merge_sign(pair_mono, mono):
    """Wedge a sorted 2-monomial with a sorted monomial; None if they share
    a generator, else (merged sorted monomial, +-1)."""
    for g in pair_mono:
        if g in mono:
            return None, 0
    merged = tuple(sorted(pair_mono + mono))
    inversions = sum(1 for a in pair_mono for b in mono if b < a)
    return merged, (1 if inversions % 2 == 0 else -1)


class RelationMatrix:
    """Sparse relation rows over the degree-k monomial columns."""

    def __init__(self, n, k, columns, rows):
        self.n = n
        self.k = k
        self.columns = columns  # list of monomials
        self.column_index = {m: i for i, m in enumerate(columns)}
        self.rows = rows  # list of {column index: +-1}

    @property
    def ncols(self):
        return len(self.columns)


def build_relation_matrix(n, k, max_n=DEFAULT_ORACLE_MAX_N, max_k=DEFAULT_ORACLE_MAX_K):
    """All degree-k relations; rows with no surviving term are dropped."""
    if k < 2:
        raise ValueError("relations exist only in degree >= 2")
    _check_caps(n, k, max_n, max_k)
    columns = monomials(n, k)
    col_index = {m: i for i, m in enumerate(columns)}
    rows = []
    gens = generators(n)
    for rel in degree_two_relations(n):
        for mono in combinations(gens, k - 2):
            row = {}
            for pair_mono, coeff in rel.items():
                merged, sign = _merge_sign(pair_mono, mono)
                if merged is None:
                    continue
                idx = col_index[merged]
                row[idx] = row.get(idx, 0) + coeff * sign
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    return RelationMatrix(n, k, columns, rows)


# ---------------------------------------------------------------------------
# exact sparse elimination


def sparse_eliminate(rows, ncols, allowed=None, jordan=False):
    """Exact Gaussian elimination over Q with sparsity-aware pivoting.

    rows: list of {col: value} dicts (consumed as working copies).
    allowed: optional set of columns usable as pivots.
    jordan: also clear pivot columns from previously stored pivot rows,
    leaving a reduced row echelon form.

    Returns (rank, pivot_rows, leftover) where pivot_rows maps pivot column
    -> normalized row dict and leftover lists the nonzero rows that could
    not be pivoted (only possible when allowed is restricted).

    Pivoting is Markowitz-flavoured: always pick the occupied allowed
    column with the fewest live entries, then the sparsest row in it; ties
    break on index so the pivot sequence is reproducible.
    """
    work = [dict((c, Fraction(v)) for c, v in row.items()) for row in rows]
    cols = {}
    for r, row in enumerate(work):
        for c in row:
            cols.setdefault(c, set()).add(r)
    live = set(range(len(work)))
    pivot_rows = {}
    heap = []

    def push(c):
        members = cols.get(c)
        if members:
            heapq.heappush(heap, (len(members), c))

    for c in cols:
        if allowed is None or c in allowed:
            push(c)

    while heap:
        occ, c = heapq.heappop(heap)
        members = cols.get(c)
        if not members or c in pivot_rows:
            continue
        if len(members) != occ:
            push(c)  # stale entry; reinsert with the current occupancy
            continue
        r = min(members, key=lambda rr: (len(work[rr]), rr))
        row = work[r]
        pivot_val = row[c]
        if pivot_val != 1:
            work[r] = row = {cc: vv / pivot_val for cc, vv in row.items()}
        targets = [rr for rr in members if rr != r]
        if jordan:
            targets += [rr for rr in _pivot_rows_touching(pivot_rows, c)]
        for rr in targets:
            other = work[rr] if isinstance(rr, int) else rr
            factor = other.pop(c)
            if isinstance(rr, int):
                cols[c].discard(rr)
            for cc, vv in row.items():
                if cc == c:
                    continue
                newval = other.get(cc, Fraction(0)) - factor * vv
                if newval:
                    if cc not in other and isinstance(rr, int):
                        cols.setdefault(cc, set()).add(rr)
                        if (allowed is None or cc in allowed) and cc not in pivot_rows:
                            push(cc)
                    other[cc] = newval
                else:
                    if cc in other:
                        del other[cc]
                        if isinstance(rr, int):
                            cols[cc].discard(rr)
        live.discard(r)
        for cc in row:
            cols.get(cc, set()).discard(r)
        pivot_rows[c] = row
        cols.pop(c, None)

    leftover = [work[r] for r in sorted(live) if work[r]]
    return len(pivot_rows), pivot_rows, leftover


def _pivot_rows_touching(pivot_rows, c):
    return [row for col, row in pivot_rows.items() if col != c and c in row]


def rank_mod_p(rows, ncols, p):
    """Rank of the same rows over GF(p); independent cross-check of the
    exact elimination (rank mod p <= rank over Q, equal for good primes)."""
    work = [dict((c, v % p) for c, v in row.items() if v % p) for row in rows]
    work = [row for row in work if row]
    pivots = {}
    rank = 0
    for row in work:
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], p - 2, p)
                row = {cc: (vv * inv) % p for cc, vv in row.items()}
                row = {cc: vv for cc, vv in row.items() if vv}
                pivots[c] = row
                rank += 1
                break
            factor = row[c]
            prow = pivots[c]
            for cc, vv in prow.items():
                nv = (row.get(cc, 0) - factor * vv) % p
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        # empty row: dependent
    return rank


# ---------------------------------------------------------------------------
# quotient dimension and basis verification


def quotient_rank(n, k, max_n=DEFAULT_ORACLE_MAX_N, max_k=DEFAULT_ORACLE_MAX_K):
    """dim of degree k of the presented algebra: #monomials - rank(relations)."""
    _check_caps(n, k, max_n, max_k)
    ngens = n * (n - 1)
    if k == 0:
        return 1
    if k == 1:
        return ngens
    matrix = build_relation_matrix(n, k, max_n=max_n, max_k=max_k)
    rank, _, leftover = sparse_eliminate(matrix.rows, matrix.ncols)
    assert not leftover
    return comb(ngens, k) - rank


class ForestBasisReduction:
    """RREF of the relation rows with pivots kept off the forest columns.

    When it exists, every monomial has a unique normal form supported on
    forest monomials; failure to exist would mean the forest monomials are
    dependent in the quotient.
    """

    def __init__(self, n, k, max_n=DEFAULT_ORACLE_MAX_N, max_k=DEFAULT_ORACLE_MAX_K):
        from .forests import enumerate_forests, to_wedge

        _check_caps(n, k, max_n, max_k)
        self.n = n
        self.k = k
        self.forest_monomials = sorted(to_wedge(f) for f in enumerate_forests(n, k))
        if k == 0:
            self.matrix = RelationMatrix(n, 0, [()], [])
            self.rank, self.pivot_rows, self.leftover = 0, {}, []
            self.forest_cols = {0}
            return
        if k == 1:
            self.matrix = RelationMatrix(n, 1, [(g,) for g in generators(n)], [])
            self.rank, self.pivot_rows, self.leftover = 0, {}, []
            self.forest_cols = set(range(self.matrix.ncols))
            return
        self.matrix = build_relation_matrix(n, k, max_n=max_n, max_k=max_k)
        self.forest_cols = {
            self.matrix.column_index[m] for m in self.forest_monomials
        }
        allowed = set(range(self.matrix.ncols)) - self.forest_cols
        self.rank, self.pivot_rows, self.leftover = sparse_eliminate(
            self.matrix.rows, self.matrix.ncols, allowed=allowed, jordan=True
        )

    def forests_form_basis(self):
        """Independence (no leftover row) plus the counting identity."""
        if self.leftover:
            return False
        return len(self.forest_monomials) == self.matrix.ncols - self.rank

    def normal_form(self, vector):
        """Reduce {column: value} modulo the relation row space."""
        out = {c: Fraction(v) for c, v in vector.items() if v}
        for c in list(out):
            prow = self.pivot_rows.get(c)
            if prow is None:
                continue
            factor = out.pop(c)
            for cc, vv in prow.items():
                if cc == c:
                    continue
                nv = out.get(cc, Fraction(0)) - factor * vv
                if nv:
                    out[cc] = nv
                else:
                    out.pop(cc, None)
        return out

    def normal_form_monomial(self, monomial):
        """Normal form of a single monomial, keyed by monomial tuples."""
        idx = self.matrix.column_index[tuple(monomial)]
        nf = self.normal_form({idx: 1})
        return {self.matrix.columns[c]: _as_int(v) for c, v in nf.items()}


def _as_int(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


_reduction_cache = {}


def forest_basis_reduction(n, k, max_n=DEFAULT_ORACLE_MAX_N, max_k=DEFAULT_ORACLE_MAX_K):
    key = (n, k)
    if key not in _reduction_cache:
        _reduction_cache[key] = ForestBasisReduction(n, k, max_n=max_n, max_k=max_k)
    return _reduction_cache[key]


def verify_forest_basis(n, k, max_n=DEFAULT_ORACLE_MAX_N, max_k=DEFAULT_ORACLE_MAX_K):
    """True iff the forest monomials are a basis of the degree-k quotient."""
    return forest_basis_reduction(n, k, max_n=max_n, max_k=max_k).forests_form_basis()


def write_certified_basis(stream, n, k, max_n=DEFAULT_ORACLE_MAX_N,
                          max_k=DEFAULT_ORACLE_MAX_K):
    """Write the certified quotient basis in the forest dump format.

    Raises ConsistencyError when the candidate monomials fail to descend to
    a basis; never writes an uncertified list.
    """
    from .errors import ConsistencyError
    from .forests import from_wedge_at, write_forests

    red = forest_basis_reduction(n, k, max_n=max_n, max_k=max_k)
    if not red.forests_form_basis():
        raise ConsistencyError(f"no certified basis at (n={n}, k={k})")
    forests = sorted(from_wedge_at(m, n) for m in red.forest_monomials)
    return write_forests(stream, n, k, forests)


def verify_basis_dump(stream, max_n=DEFAULT_ORACLE_MAX_N, max_k=DEFAULT_ORACLE_MAX_K):
    """Check a dumped forest list against the presentation.

    The dump must hold one (n, k) block; returns True iff the listed
    monomials are independent modulo the relations and complete (their
    count equals the quotient rank).
    """
    from .forests import read_forests, to_wedge

    rows = read_forests(stream)
    if not rows:
        raise ValueError("empty dump")
    nk = {(n, k) for n, k, _ in rows}
    if len(nk) != 1:
        raise ValueError("dump mixes (n, k) blocks")
    (n, k), = nk
    _check_caps(n, k, max_n, max_k)
    candidates = sorted(to_wedge(f) for _, _, f in rows)
    if len(set(candidates)) != len(candidates):
        return False
    if k == 0:
        return candidates == [()]
    if k == 1:
        return candidates == sorted((g,) for g in generators(n))
    matrix = build_relation_matrix(n, k, max_n=max_n, max_k=max_k)
    try:
        allowed = set(range(matrix.ncols)) - {
            matrix.column_index[m] for m in candidates
        }
    except KeyError:
        return False  # a candidate is not even a monomial
    rank, _, leftover = sparse_eliminate(matrix.rows, matrix.ncols, allowed=allowed)
    if leftover:
        return False  # a relation is supported entirely on the candidates
    return len(candidates) == matrix.ncols - rank


def oracle_action_sign(g, word, max_n=DEFAULT_ORACLE_MAX_N, max_k=DEFAULT_ORACLE_MAX_K):
    """Apply a signed permutation to a wedge word inside the presented algebra.

    Maps each generator (i, j) to (perm(i), perm(j)) with a factor signs[j],
    sorts into the canonical monomial order collecting the exterior sign,
    and reduces modulo the relations.  Returns {monomial: coefficient}.
    """
    word = [tuple(pair) for pair in word]
    n = g.rank
    _check_caps(n, len(word), max_n, max_k)
    coeff = 1
    mapped = []
    for i, j in word:
        if g.signs[j - 1] < 0:
            coeff = -coeff
        mapped.append((g.perm[i - 1], g.perm[j - 1]))
    if len(set(mapped)) != len(mapped):
        return {}
    inversions = sum(
        1
        for a in range(len(mapped))
        for b in range(a + 1, len(mapped))
        if mapped[a] > mapped[b]
    )
    if inversions % 2:
        coeff = -coeff
    monomial = tuple(sorted(mapped))
    reduction = forest_basis_reduction(n, len(word), max_n=max_n, max_k=max_k)
    nf = reduction.normal_form_monomial(monomial)
    return {m: _as_int(coeff * v) for m, v in nf.items()}
