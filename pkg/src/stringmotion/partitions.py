"""Partitions, double partitions, and stable (padded) naming.

A partition is a tuple of weakly decreasing positive integers; () is the
unique partition of 0.  A double partition is a pair (plus, minus) of
partitions; they label both conjugacy classes (signed cycle types) and
irreducible representations of the signed permutation group W_n.

Stable names drop the first row of the (plus) partition so that a family
of irreducibles V(lambda)_n can be named independently of n.  Padding a
stable body back at rank n is valid only when the restored first row is
at least as long as the second, i.e. n - |body| >= body_1.
"""

from __future__ import annotations

from math import comb, factorial

SYMMETRIC = "Sn"
HYPEROCTAHEDRAL = "Wn"

_KIND_ALIASES = {
    "sn": SYMMETRIC,
    "symmetric": SYMMETRIC,
    "wn": HYPEROCTAHEDRAL,
    "hyperoctahedral": HYPEROCTAHEDRAL,
}


def normalize_kind(kind):
    """Map accepted spellings ('Sn', 'symmetric', ...) to the canonical kind."""
    canon = _KIND_ALIASES.get(str(kind).lower())
    if canon is None:
        raise ValueError(f"unknown group kind {kind!r}; expected 'Sn' or 'Wn'")
    return canon


def is_partition(parts):
    """True iff parts is a weakly decreasing tuple of positive integers."""
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts):
    """Validate and return parts as a canonical tuple."""
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def check_double_partition(pair):
    plus, minus = pair
    return (check_partition(plus), check_partition(minus))


def partition_size(parts):
    return sum(parts)


def double_size(pair):
    return sum(pair[0]) + sum(pair[1])


def enumerate_partitions(n):
    """All partitions of n in reverse-lexicographic order, (n) first.

    The order is total and documented: compare part tuples left to right,
    larger first parts come earlier.  p(0) = 1 via the empty partition.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_partitions_below(n, n))


def _partitions_below(n, maxpart):
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions_below(n - first, first):
            yield (first,) + rest


def enumerate_double_partitions(n):
    """All (alpha, beta) with |alpha| + |beta| = n.

    Ordered by |alpha| descending, then reverse-lexicographically on alpha,
    then on beta; this is the class and irreducible order used for W_n.
    """
    out = []
    for a in range(n, -1, -1):
        for alpha in enumerate_partitions(a):
            for beta in enumerate_partitions(n - a):
                out.append((alpha, beta))
    return out


def multiplicities(parts):
    """Map part length -> multiplicity."""
    mult = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    return mult


def centralizer_order_sn(parts):
    """z_lambda = prod_l l^{m_l} m_l! for the S_n class of cycle type lambda."""
    z = 1
    for length, m in multiplicities(parts).items():
        z *= length**m * factorial(m)
    return z


def centralizer_order_wn(pair):
    """z_(alpha,beta) = prod over both components of (2l)^{m_l} m_l!."""
    z = 1
    for component in pair:
        for length, m in multiplicities(component).items():
            z *= (2 * length) ** m * factorial(m)
    return z


def conjugate_partition(parts):
    """Transpose of the Young diagram."""
    if not parts:
        return ()
    cols = [0] * parts[0]
    for p in parts:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


def hook_dimension(parts):
    """Dimension of the irreducible S_n representation of shape parts.

    Hook length formula; independent of the character-table machinery and
    used to cross-check it.
    """
    parts = tuple(parts)
    if not parts:
        return 1
    conj = conjugate_partition(parts)
    num = factorial(sum(parts))
    den = 1
    for i, row in enumerate(parts):
        for j in range(row):
            den *= row - j + conj[j] - i - 1
    assert num % den == 0
    return num // den


def wn_dimension(pair, n):
    """Dimension of V(plus, minus): binom(n, |plus|) * dim(plus) * dim(minus)."""
    plus, minus = pair
    if sum(plus) + sum(minus) != n:
        raise ValueError(f"{pair!r} is not a double partition of {n}")
    return comb(n, sum(plus)) * hook_dimension(plus) * hook_dimension(minus)


def irreducible_dimension(kind, label, n):
    kind = normalize_kind(kind)
    if kind == SYMMETRIC:
        if sum(label) != n:
            raise ValueError(f"{label!r} is not a partition of {n}")
        return hook_dimension(label)
    return wn_dimension(label, n)


# ---------------------------------------------------------------------------
# stable names


def stable_name(kind, label):
    """Strip the first row of the (plus) partition, giving the n-independent body."""
    kind = normalize_kind(kind)
    if kind == SYMMETRIC:
        return tuple(label[1:])
    plus, minus = label
    return (tuple(plus[1:]), tuple(minus))


def pad_stable(kind, body, n):
    """Restore the first row so the body becomes a (double) partition of n.

    Raises ValueError when the padding is invalid, i.e. the new first row
    n - |body| would be shorter than the first part of the plus body.
    """
    kind = normalize_kind(kind)
    if kind == SYMMETRIC:
        body = check_partition(body)
        first = n - sum(body)
        if first < (body[0] if body else 0):
            raise ValueError(f"body {body!r} cannot be padded at n={n}")
        return ((first,) + body) if first > 0 else _require_empty(body, n)
    plus_body, minus = check_double_partition(body)
    first = n - sum(plus_body) - sum(minus)
    if first < (plus_body[0] if plus_body else 0):
        raise ValueError(f"body {body!r} cannot be padded at n={n}")
    plus = ((first,) + plus_body) if first > 0 else _require_empty(plus_body, None)
    return (plus, minus)


def _require_empty(body, n):
    # A zero-length first row is only allowed when there is nothing below it.
    if body:
        raise ValueError(f"body {body!r} cannot be padded with an empty first row")
    return ()


def padding_valid(kind, body, n):
    try:
        pad_stable(kind, body, n)
        return True
    except ValueError:
        return False


def format_partition(parts):
    return "(" + ",".join(str(p) for p in parts) + ")" if parts else "(0)"


def format_stable(kind, body):
    """Human-readable V(...) name for a stable body."""
    kind = normalize_kind(kind)
    if kind == SYMMETRIC:
        return f"V{format_partition(body)}"
    plus_body, minus = body
    return f"V({format_partition(plus_body)},{format_partition(minus)})"


def format_label(kind, label):
    kind = normalize_kind(kind)
    if kind == SYMMETRIC:
        return format_partition(label)
    return f"({format_partition(label[0])},{format_partition(label[1])})"
