"""Conjugacy class data for S_n and W_n.

Classes of S_n are labelled by partitions of n (cycle types), classes of
W_n by double partitions (signed cycle types).  Each table row carries the
label, the centralizer order z, the class size |G|/z, and a canonical
representative whose computed type equals the label.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import factorial

from .errors import ConsistencyError, ResourceLimitError
from .partitions import (
    HYPEROCTAHEDRAL,
    SYMMETRIC,
    centralizer_order_sn,
    centralizer_order_wn,
    enumerate_double_partitions,
    enumerate_partitions,
    normalize_kind,
)
from .signedperm import SignedPermutation, signed_cycle_type

DEFAULT_MAX_N = 10


@dataclass(frozen=True)
class ConjClass:
    label: object
    z: int
    size: int
    rep: SignedPermutation


class ConjClassTable:
    """Ordered list of conjugacy classes of S_n or W_n."""

    def __init__(self, kind, n, classes):
        self.kind = kind
        self.n = n
        self.classes = classes
        self._index = {c.label: i for i, c in enumerate(classes)}
        if len(self._index) != len(classes):
            raise ConsistencyError("duplicate class labels")

    @property
    def group_order(self):
        return factorial(self.n) if self.kind == SYMMETRIC else 2**self.n * factorial(self.n)

    def __len__(self):
        return len(self.classes)

    def labels(self):
        return [c.label for c in self.classes]

    def index(self, label):
        return self._index[label]

    def __iter__(self):
        return iter(self.classes)


def group_order(kind, n):
    kind = normalize_kind(kind)
    return factorial(n) if kind == SYMMETRIC else 2**n * factorial(n)


def _sn_representative(parts, n):
    """Disjoint cycles on consecutive blocks, largest part first."""
    cycles, start = [], 1
    for length in parts:
        cycles.append(list(range(start, start + length)))
        start += length
    return SignedPermutation.from_cycles(n, cycles)


def _wn_representative(pair, n):
    """Positive cycles all +; each negative cycle flips its smallest element."""
    alpha, beta = pair
    cycles, flips, start = [], [], 1
    for length in alpha:
        cycles.append(list(range(start, start + length)))
        start += length
    for length in beta:
        cycles.append(list(range(start, start + length)))
        flips.append(start)
        start += length
    return SignedPermutation.from_cycles(n, cycles, flips)


_cache = {}
_cache_lock = threading.Lock()


def class_table(kind, n, max_n=DEFAULT_MAX_N):
    """The full conjugacy class table, memoized per (kind, n).

    Raises ResourceLimitError when n exceeds max_n, and ConsistencyError
    if the class sizes fail to sum to |G| or a representative's computed
    type differs from its label.
    """
    kind = normalize_kind(kind)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n:
        raise ResourceLimitError(f"class table for n={n} exceeds cap {max_n}")
    with _cache_lock:
        cached = _cache.get((kind, n))
    if cached is not None:
        return cached

    order = group_order(kind, n)
    classes = []
    if kind == SYMMETRIC:
        for parts in enumerate_partitions(n):
            z = centralizer_order_sn(parts)
            rep = _sn_representative(parts, n)
            got = signed_cycle_type(rep)[0]
            if got != parts:
                raise ConsistencyError(f"representative of {parts} has type {got}")
            classes.append(ConjClass(parts, z, order // z, rep))
    else:
        for pair in enumerate_double_partitions(n):
            z = centralizer_order_wn(pair)
            rep = _wn_representative(pair, n)
            got = signed_cycle_type(rep)
            if got != pair:
                raise ConsistencyError(f"representative of {pair} has type {got}")
            classes.append(ConjClass(pair, z, order // z, rep))

    if sum(c.size for c in classes) != order:
        raise ConsistencyError(f"class sizes do not sum to |G| for {kind} n={n}")

    table = ConjClassTable(kind, n, classes)
    with _cache_lock:
        _cache.setdefault((kind, n), table)
    return table
