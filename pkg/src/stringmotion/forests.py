"""The rooted-forest basis of H^k(PSigma_n; Q).

A forest on [n] with k edges is encoded as a length-n parent vector: entry
i-1 holds the parent of vertex i, or 0 if i is a root.  Exactly k entries
are nonzero, and following parent pointers always terminates.  Each such
forest corresponds to the wedge word

    [(i_1, j_1), ..., (i_k, j_k)],  i_1 < ... < i_k,

of dual generators a*_{i,j} (child i, parent j); that ascending order is
the +1 orientation of the basis vector.

Lexicographic order on parent vectors is the canonical basis order used
in dump files.  Enumeration streams forests lazily: choose the child set,
then assign parents with incremental cycle rejection via union-find.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .errors import CyclicProductError


def forest_count(n, k):
    """binom(n-1, k) * n^k for 0 <= k <= n-1, else 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > n - 1:
        return 0
    return comb(n - 1, k) * n**k


def check_forest(parent):
    """Validate a parent vector: entries in 0..n, no self-loops, acyclic."""
    parent = tuple(parent)
    n = len(parent)
    for i, p in enumerate(parent, start=1):
        if not 0 <= p <= n:
            raise ValueError(f"parent {p} out of range at vertex {i}")
        if p == i:
            raise ValueError(f"self-loop at vertex {i}")
    for start in range(1, n + 1):
        v, steps = start, 0
        while parent[v - 1] != 0:
            v = parent[v - 1]
            steps += 1
            if steps > n:
                raise ValueError("parent map contains a cycle")
    return parent


def forest_edges(parent):
    """Edges (child, parent), in ascending child order."""
    return [(i, p) for i, p in enumerate(parent, start=1) if p != 0]


def edge_count(parent):
    return sum(1 for p in parent if p != 0)


def enumerate_forests(n, k):
    """Yield every parent vector on [n] with exactly k edges, once each.

    For k >= n the stream is empty (a forest needs at least one root).
    Order: child sets in ascending combination order, then depth-first
    parent assignment; not globally lexicographic.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > n - 1:
        return
    if k == 0:
        yield (0,) * n
        return
    for children in combinations(range(1, n + 1), k):
        yield from _assign_parents(n, children)


def _assign_parents(n, children):
    """DFS over parent choices for a fixed child set, pruning cycles.

    Union-find over the n vertices tracks connected components; since every
    vertex has at most one parent, attaching child c to parent q creates a
    directed cycle exactly when c and q are already connected.  Unions are
    undone on backtrack (no path compression, so undo is a single write).
    """
    root = list(range(n + 1))  # 1-indexed; root[v] = representative

    def find(v):
        while root[v] != v:
            v = root[v]
        return v

    parent = [0] * n
    k = len(children)

    def rec(d):
        if d == k:
            yield tuple(parent)
            return
        c = children[d]
        rc = find(c)
        for q in range(1, n + 1):
            rq = find(q)
            if rq == rc:
                continue  # same component: q is in c's tree (cycle) or c == q
            parent[c - 1] = q
            root[rc] = rq
            yield from rec(d + 1)
            root[rc] = rc
        parent[c - 1] = 0

    yield from rec(0)


def materialize_forests(n, k):
    """All forests for (n, k) in canonical (lexicographic) basis order."""
    return sorted(enumerate_forests(n, k))


def forests_by_child_set(n, k):
    """Group forests by frozenset of children; used for class-filtered scans."""
    groups = {}
    for f in enumerate_forests(n, k):
        key = frozenset(i for i, p in enumerate(f, start=1) if p != 0)
        groups.setdefault(key, []).append(f)
    return groups


# ---------------------------------------------------------------------------
# wedge words


def to_wedge(parent):
    """The ascending wedge word of a forest."""
    return tuple(forest_edges(parent))


def from_wedge(word):
    """Rebuild the parent vector from a wedge word.

    The rank is the largest vertex mentioned unless n is implied by use;
    callers that need a specific rank should pad with stabilize().  Raises
    CyclicProductError when the word's index graph contains a directed
    cycle (the element is zero in cohomology), and ValueError on malformed
    words (repeated or decreasing first coordinates, i == j).
    """
    word = [(int(i), int(j)) for i, j in word]
    if not word:
        raise ValueError("empty wedge word has no intrinsic rank; use a k=0 forest")
    n = max(max(i, j) for i, j in word)
    return from_wedge_at(word, n)


def from_wedge_at(word, n):
    word = [(int(i), int(j)) for i, j in word]
    firsts = [i for i, _ in word]
    if any(f1 >= f2 for f1, f2 in zip(firsts, firsts[1:])):
        raise ValueError("first coordinates must be strictly increasing")
    parent = [0] * n
    for i, j in word:
        if i == j:
            raise ValueError(f"generator ({i},{j}) has equal indices")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"generator ({i},{j}) out of range for n={n}")
        parent[i - 1] = j
    for start in range(1, n + 1):
        v, steps = start, 0
        while parent[v - 1] != 0:
            v = parent[v - 1]
            steps += 1
            if steps > n:
                raise CyclicProductError(f"wedge word {word} contains a cyclic product")
    return tuple(parent)


def stabilize(parent):
    """Image under the rank-raising map: same edges, new isolated vertex n+1."""
    return tuple(parent) + (0,)


# ---------------------------------------------------------------------------
# exhaustive counting (the enumeration-based check of the closed formula)


def count_forests_enumerated(n, k, jit=True):
    """Count forests by exhaustive search over child sets and assignments.

    Walks the same tree as enumerate_forests but only counts; the last
    child's choices are counted in one step (everything outside its current
    subtree is a valid parent).  With jit=True the inner search runs as a
    compiled kernel; the pure-Python path is identical in meaning.
    """
    if k > n - 1:
        return 0
    if k == 0:
        return 1
    if jit:
        kernel = _jit_kernel()
        if kernel is not None:
            import numpy as np

            total = 0
            for children in combinations(range(n), k):
                total += kernel(n, np.array(children, dtype=np.int64))
            return int(total)
    total = 0
    for children in combinations(range(n), k):
        total += _count_assignments_py(n, children)
    return total


def _count_assignments_py(n, children):
    """Pure-Python twin of the compiled kernel (0-based children)."""
    k = len(children)
    parent = [-1] * n
    size = [1] * n  # vertices whose parent chain passes through v, incl. v

    def rec(d):
        c = children[d]
        if d == k - 1:
            return n - size[c]
        total = 0
        for q in range(n):
            w, ok = q, True
            while w != -1:
                if w == c:
                    ok = False
                    break
                w = parent[w]
            if not ok:
                continue
            parent[c] = q
            sc = size[c]
            w = q
            while w != -1:
                size[w] += sc
                w = parent[w]
            total += rec(d + 1)
            w = q
            while w != -1:
                size[w] -= sc
                w = parent[w]
            parent[c] = -1
        return total

    return rec(0)


_kernel = None
_kernel_failed = False


def _jit_kernel():
    global _kernel, _kernel_failed
    if _kernel is not None or _kernel_failed:
        return _kernel
    try:
        import numpy as np
        from numba import njit
    except ImportError:
        _kernel_failed = True
        return None

    @njit(cache=True)
    def count_rec(n, children, d, parent, size):
        c = children[d]
        if d == children.shape[0] - 1:
            return n - size[c]
        total = 0
        for q in range(n):
            w = q
            ok = True
            while w != -1:
                if w == c:
                    ok = False
                    break
                w = parent[w]
            if not ok:
                continue
            parent[c] = q
            sc = size[c]
            w = q
            while w != -1:
                size[w] += sc
                w = parent[w]
            total += count_rec(n, children, d + 1, parent, size)
            w = q
            while w != -1:
                size[w] -= sc
                w = parent[w]
            parent[c] = -1
        return total

    @njit(cache=True)
    def entry(n, children):
        parent = np.full(n, -1, dtype=np.int64)
        size = np.ones(n, dtype=np.int64)
        return count_rec(n, children, 0, parent, size)

    _kernel = entry
    return _kernel


# ---------------------------------------------------------------------------
# dump format: one forest per line, "n k p(1) ... p(n)", 0 for roots


def write_forests(stream, n, k, forests=None):
    """Write forests in canonical order; returns how many were written."""
    if forests is None:
        forests = materialize_forests(n, k)
    count = 0
    for f in forests:
        stream.write(f"{n} {k} " + " ".join(str(p) for p in f) + "\n")
        count += 1
    return count


def read_forests(stream):
    """Parse the dump format; returns a list of (n, k, parent_vector)."""
    out = []
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) < 2:
            raise ValueError(f"line {lineno}: too few fields")
        n, k = int(fields[0]), int(fields[1])
        parent = tuple(int(x) for x in fields[2:])
        if len(parent) != n:
            raise ValueError(f"line {lineno}: expected {n} parent entries")
        check_forest(parent)
        if edge_count(parent) != k:
            raise ValueError(f"line {lineno}: edge count is not {k}")
        out.append((n, k, parent))
    return out
