"""Irreducible character tables of S_n and W_n, exactly.

S_n characters come from the Murnaghan-Nakayama border-strip recursion.
W_n irreducibles V(plus, minus) are built the way the representations are:
pull V(plus) back along W_a ->> S_a, twist V(minus) by the sign character
epsilon, induce the external tensor product from W_a x W_b up to W_n.  At
the character level the induction is the class-fusion sum over multiset
splittings of the signed cycle type, with coefficient z_c / (z_c1 * z_c2).
"""

from __future__ import annotations

import hashlib
import json
import threading
from fractions import Fraction
from math import comb, factorial

from .classtables import DEFAULT_MAX_N, class_table, group_order
from .errors import ConsistencyError
from .partitions import (
    HYPEROCTAHEDRAL,
    SYMMETRIC,
    centralizer_order_sn,
    centralizer_order_wn,
    multiplicities,
    normalize_kind,
)

FORMAT_VERSION = 1

_mn_memo = {}


def mn_character(lam, mu):
    """Value of the irreducible S_n character chi_lam at cycle type mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    return _mn(lam, mu)


def _mn(lam, mu):
    if not mu:
        return 1 if not lam else 0
    key = (lam, mu)
    val = _mn_memo.get(key)
    if val is not None:
        return val
    t, rest = mu[0], mu[1:]
    total = 0
    # Border strips of size t via first-column hook lengths: remove t from
    # one hook length, keeping all distinct.
    r = len(lam)
    hooks = [lam[i] + r - 1 - i for i in range(r)]
    hookset = set(hooks)
    for i, h in enumerate(hooks):
        nh = h - t
        if nh < 0 or nh in hookset:
            continue
        height = sum(1 for other in hooks if nh < other < h)
        new = sorted((x for x in hooks if x != h), reverse=True)
        new.append(nh)
        new.sort(reverse=True)
        newlam = tuple(v - (r - 1 - j) for j, v in enumerate(new))
        while newlam and newlam[-1] == 0:
            newlam = newlam[:-1]
        total += (-1) ** height * _mn(newlam, rest)
    _mn_memo[key] = total
    return total


def epsilon_value(pair):
    """Sign character of W_n at the class (alpha, beta): (-1)^(#negative cycles)."""
    return -1 if len(pair[1]) % 2 else 1


def _submultisets(parts):
    """All sub-multisets of a partition, as (subset, complement) pairs.

    Enumerated by choosing, for each distinct part length, how many copies
    go into the subset; every multiset splitting appears exactly once.
    """
    items = sorted(multiplicities(parts).items(), reverse=True)
    results = [((), ())]
    for length, m in items:
        extended = []
        for sub, rest in results:
            for take in range(m + 1):
                extended.append(
                    (sub + (length,) * take, rest + (length,) * (m - take))
                )
        results = extended
    # Components were built largest-length-first, so they are sorted already.
    return results


_splittings_memo = {}


def _class_splittings(pair):
    """Fusion data for a W_n class c = (alpha, beta).

    Returns a dict mapping a size a to the list of splittings
    (coeff, merged1, minus_type2, eps2) where merged1 is the plain cycle
    type alpha1 u beta1 of total size a, minus_type2 = alpha2 u beta2, and
    eps2 = (-1)^(number of parts of beta2).  coeff = z_c/(z_c1 * z_c2) is
    an exact integer (a product of per-length binomials).
    """
    cached = _splittings_memo.get(pair)
    if cached is not None:
        return cached
    alpha, beta = pair
    z_c = centralizer_order_wn(pair)
    by_size = {}
    for a1, a2 in _submultisets(alpha):
        for b1, b2 in _submultisets(beta):
            size = sum(a1) + sum(b1)
            coeff, rem = divmod(
                z_c, centralizer_order_wn((a1, b1)) * centralizer_order_wn((a2, b2))
            )
            assert rem == 0
            merged1 = tuple(sorted(a1 + b1, reverse=True))
            merged2 = tuple(sorted(a2 + b2, reverse=True))
            eps2 = -1 if len(b2) % 2 else 1
            by_size.setdefault(size, []).append((coeff, merged1, merged2, eps2))
    _splittings_memo[pair] = by_size
    return by_size


def wn_character(label, cls):
    """Value of the irreducible W_n character V(plus, minus) at class (alpha, beta)."""
    plus, minus = label
    if sum(plus) + sum(minus) != sum(cls[0]) + sum(cls[1]):
        raise ValueError(f"|{label}| != |{cls}|")
    total = 0
    for coeff, merged1, merged2, eps2 in _class_splittings(cls).get(sum(plus), ()):
        total += coeff * _mn(tuple(plus), merged1) * _mn(tuple(minus), merged2) * eps2
    return total


class ClassFunction:
    """Exact-rational vector indexed by the classes of S_n or W_n."""

    __slots__ = ("kind", "n", "values")

    def __init__(self, kind, n, values):
        self.kind = normalize_kind(kind)
        self.n = n
        self.values = list(values)
        if len(self.values) != len(class_table(self.kind, n)):
            raise ValueError("value count does not match the number of classes")

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and (self.kind, self.n) == (other.kind, other.n)
            and self.values == other.values
        )

    def inner(self, other):
        """<f, g> = sum_c f(c) g(c) / z_c, exact."""
        if (self.kind, self.n) != (other.kind, other.n):
            raise ValueError("class functions on different groups")
        table = class_table(self.kind, self.n)
        total = Fraction(0)
        for c, x, y in zip(table, self.values, other.values):
            total += Fraction(x * y, c.z)
        return total

    def __repr__(self):
        return f"ClassFunction({self.kind}, n={self.n}, {self.values})"


class CharacterTable:
    """All irreducible characters of S_n or W_n, rows keyed by label."""

    def __init__(self, kind, n, labels, matrix):
        self.kind = normalize_kind(kind)
        self.n = n
        self.labels = list(labels)
        self.matrix = [list(row) for row in matrix]
        self.classes = class_table(self.kind, n)
        self._row_index = {lab: i for i, lab in enumerate(self.labels)}

    def row(self, label):
        return ClassFunction(self.kind, self.n, self.matrix[self._row_index[label]])

    def value(self, label, cls_label):
        return self.matrix[self._row_index[label]][self.classes.index(cls_label)]

    def dimension(self, label):
        return self.matrix[self._row_index[label]][self._identity_index()]

    def _identity_index(self):
        ident = (
            ((1,) * self.n)
            if self.kind == SYMMETRIC
            else (((1,) * self.n), ())
        )
        return self.classes.index(ident)

    def verify_orthonormality(self):
        """Row orthonormality in exact integer arithmetic.

        sum_c |class c| chi_i(c) chi_j(c) must equal |G| delta_ij.
        """
        order = self.classes.group_order
        sizes = [c.size for c in self.classes]
        for i, row_i in enumerate(self.matrix):
            for j in range(i, len(self.matrix)):
                row_j = self.matrix[j]
                total = sum(s * x * y for s, x, y in zip(sizes, row_i, row_j))
                expected = order if i == j else 0
                if total != expected:
                    raise ConsistencyError(
                        f"rows {self.labels[i]} and {self.labels[j]} are not "
                        f"orthonormal for {self.kind} n={self.n}"
                    )

    def verify_column_orthogonality(self):
        """sum_lam chi_lam(c) chi_lam(c') = delta_cc' z_c, exactly."""
        ncls = len(self.classes)
        for a in range(ncls):
            for b in range(a, ncls):
                total = sum(row[a] * row[b] for row in self.matrix)
                expected = self.classes.classes[a].z if a == b else 0
                if total != expected:
                    raise ConsistencyError(
                        f"columns {a} and {b} fail orthogonality for "
                        f"{self.kind} n={self.n}"
                    )


_table_cache = {}
_table_lock = threading.Lock()


def character_table(kind, n, max_n=DEFAULT_MAX_N, cache_dir=None):
    """Build (or load) the verified character table for (kind, n).

    Tables are memoized in-process; when cache_dir is given, they are also
    stored as JSON with a format version and content checksum, and any
    unreadable, corrupted, or mismatching file is ignored and recomputed.
    """
    kind = normalize_kind(kind)
    with _table_lock:
        cached = _table_cache.get((kind, n))
    if cached is not None:
        return cached

    table = None
    if cache_dir is not None:
        table = _load_cached_table(kind, n, cache_dir, max_n)
    if table is None:
        table = _build_table(kind, n, max_n)
        table.verify_orthonormality()
        if cache_dir is not None:
            save_table(table, cache_dir)

    with _table_lock:
        _table_cache.setdefault((kind, n), table)
    return table


def _build_table(kind, n, max_n):
    classes = class_table(kind, n, max_n=max_n)
    labels = [c.label for c in classes]
    matrix = []
    if kind == SYMMETRIC:
        for lam in labels:
            matrix.append([mn_character(lam, mu) for mu in labels])
    else:
        for lab in labels:
            matrix.append([wn_character(lab, cls) for cls in labels])
    return CharacterTable(kind, n, labels, matrix)


# ---------------------------------------------------------------------------
# disk cache


def _cache_path(kind, n, cache_dir):
    from pathlib import Path

    return Path(cache_dir) / f"chartable-v{FORMAT_VERSION}-{kind}-{n}.json"


def _label_to_json(kind, label):
    if kind == SYMMETRIC:
        return list(label)
    return [list(label[0]), list(label[1])]


def _label_from_json(kind, data):
    if kind == SYMMETRIC:
        return tuple(int(x) for x in data)
    return (tuple(int(x) for x in data[0]), tuple(int(x) for x in data[1]))


def _matrix_checksum(matrix):
    blob = json.dumps(matrix, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def table_to_document(table):
    return {
        "format_version": FORMAT_VERSION,
        "kind": table.kind,
        "n": table.n,
        "classes": [_label_to_json(table.kind, c.label) for c in table.classes],
        "irreducibles": [_label_to_json(table.kind, lab) for lab in table.labels],
        "matrix": [list(row) for row in table.matrix],
        "checksum": _matrix_checksum(table.matrix),
    }


def save_table(table, cache_dir):
    from pathlib import Path

    path = _cache_path(table.kind, table.n, cache_dir)
    Path(cache_dir).mkdir(parents=True, exist_ok=True)
    blob = json.dumps(table_to_document(table), sort_keys=True, separators=(",", ":"))
    path.write_text(blob + "\n")
    return path


def _load_cached_table(kind, n, cache_dir, max_n):
    path = _cache_path(kind, n, cache_dir)
    if not path.exists():
        return None
    try:
        doc = json.loads(path.read_text())
        if doc["format_version"] != FORMAT_VERSION:
            return None
        if doc["kind"] != kind or doc["n"] != n:
            return None
        matrix = [[int(v) for v in row] for row in doc["matrix"]]
        if doc["checksum"] != _matrix_checksum(matrix):
            return None
        classes = class_table(kind, n, max_n=max_n)
        want = [_label_to_json(kind, c.label) for c in classes]
        if doc["classes"] != want:
            return None
        labels = [_label_from_json(kind, lab) for lab in doc["irreducibles"]]
        if labels != [c.label for c in classes]:
            return None
        if len(matrix) != len(labels) or any(len(r) != len(classes) for r in matrix):
            return None
        table = CharacterTable(kind, n, labels, matrix)
        table.verify_orthonormality()  # never serve a bad table from disk
        return table
    except (ValueError, KeyError, TypeError, json.JSONDecodeError, ConsistencyError):
        return None


# ---------------------------------------------------------------------------
# induction from W_r x W_{n-r}


def induced_character(label, r, n, max_n=DEFAULT_MAX_N):
    """Character of Ind_{W_r x W_{n-r}}^{W_n} (V(label) boxtimes trivial).

    Class-fusion formula: sum over splittings of the signed cycle type into
    a rank-r and a rank-(n-r) part, weighted by z_c/(z_c1*z_c2).
    """
    plus, minus = label
    if sum(plus) + sum(minus) != r:
        raise ValueError(f"{label!r} is not a double partition of {r}")
    if not 0 <= r <= n:
        raise ValueError("need 0 <= r <= n")
    classes = class_table(HYPEROCTAHEDRAL, n, max_n=max_n)
    values = []
    for c in classes:
        alpha, beta = c.label
        total = 0
        for a1, a2 in _submultisets(alpha):
            for b1, b2 in _submultisets(beta):
                if sum(a1) + sum(b1) != r:
                    continue
                coeff, rem = divmod(
                    c.z,
                    centralizer_order_wn((a1, b1)) * centralizer_order_wn((a2, b2)),
                )
                assert rem == 0
                total += coeff * wn_character(label, (a1, b1))
        values.append(total)
    return ClassFunction(HYPEROCTAHEDRAL, n, values)


def wn_restriction_to_sn(label, n, max_n=DEFAULT_MAX_N):
    """Character of V(label) restricted to S_n inside W_n.

    The S_n class of cycle type alpha sits in the W_n class (alpha, ()).
    """
    classes = class_table(SYMMETRIC, n, max_n=max_n)
    return ClassFunction(
        SYMMETRIC, n, [wn_character(label, (c.label, ())) for c in classes]
    )
