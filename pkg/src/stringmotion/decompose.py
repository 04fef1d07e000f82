"""Decomposition of H^k(PSigma_n; Q) into irreducibles, and stability scans.

Multiplicities are exact inner products of the cohomology character with
the irreducible characters.  Summands are named stably by stripping the
first row of the (plus) partition; a stability scan decomposes a fixed
degree across a range of n and looks for the onset of a constant
stable-named multiplicity vector.

The one-row branching rule (add m boxes, no two in a column) describes the
induction of V(plus, minus) boxtimes trivial from W_r x W_{n-r} to W_n; it
is cross-checked against the class-fusion induced character.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .action import cohomology_character
from .characters import character_table, induced_character, wn_restriction_to_sn
from .classtables import DEFAULT_MAX_N, class_table
from .errors import ConsistencyError, ResourceLimitError
from .forests import forest_count
from .partitions import (
    HYPEROCTAHEDRAL,
    SYMMETRIC,
    format_stable,
    irreducible_dimension,
    normalize_kind,
    pad_stable,
    padding_valid,
    stable_name,
)

DEFAULT_MAX_N_WN = 8
DEFAULT_MAX_N_SN = 9


def default_cap(kind):
    return DEFAULT_MAX_N_SN if normalize_kind(kind) == SYMMETRIC else DEFAULT_MAX_N_WN


class MultiplicityVector:
    """Map from irreducible labels (at rank n) to positive multiplicities."""

    def __init__(self, kind, n, entries, degree=None):
        self.kind = normalize_kind(kind)
        self.n = n
        self.degree = degree
        self.entries = {lab: int(m) for lab, m in entries.items() if m != 0}
        for lab, m in self.entries.items():
            if m < 0:
                raise ConsistencyError(f"negative multiplicity for {lab}")

    def dimension(self):
        return sum(
            m * irreducible_dimension(self.kind, lab, self.n)
            for lab, m in self.entries.items()
        )

    def stable(self):
        """Multiplicities keyed by stable (unpadded) names.

        Every label of a partition-valid summand strips cleanly; the guard
        reports any label whose padding would not reconstruct it.
        """
        out = {}
        for lab, m in self.entries.items():
            body = stable_name(self.kind, lab)
            if not padding_valid(self.kind, body, self.n) or pad_stable(
                self.kind, body, self.n
            ) != lab:
                raise ConsistencyError(f"label {lab} has no valid stable name at n={self.n}")
            out[body] = m
        return out

    def sorted_items(self):
        return sorted(self.entries.items(), key=lambda kv: _label_sort_key(kv[0]))

    def __eq__(self, other):
        return (
            isinstance(other, MultiplicityVector)
            and (self.kind, self.n, self.entries) == (other.kind, other.n, other.entries)
        )

    def __repr__(self):
        return f"MultiplicityVector({self.kind}, n={self.n}, {self.entries})"

    def to_json(self):
        entries = []
        for lab, m in self.sorted_items():
            body = stable_name(self.kind, lab)
            entries.append(
                {
                    "name": _name_to_json(self.kind, body),
                    "multiplicity": m,
                    "padded_dim": irreducible_dimension(self.kind, lab, self.n),
                }
            )
        return {
            "kind": self.kind,
            "n": self.n,
            "k": self.degree,
            "entries": entries,
        }

    @classmethod
    def from_json(cls, doc):
        kind = normalize_kind(doc["kind"])
        n = doc["n"]
        entries = {}
        for item in doc["entries"]:
            body = _name_from_json(kind, item["name"])
            entries[pad_stable(kind, body, n)] = item["multiplicity"]
        return cls(kind, n, entries, degree=doc.get("k"))

    def text_lines(self):
        lines = []
        for lab, m in self.sorted_items():
            body = stable_name(self.kind, lab)
            dim = irreducible_dimension(self.kind, lab, self.n)
            lines.append(
                f"  {format_stable(self.kind, body)}_{self.n}  x{m}   (dim {dim})"
            )
        if not lines:
            lines.append("  (zero representation)")
        return lines


def _label_sort_key(label):
    if label and isinstance(label[0], tuple):
        plus, minus = label
        return (-sum(plus), tuple(-p for p in plus), tuple(-p for p in minus))
    return (-sum(label), tuple(-p for p in label))


def _name_to_json(kind, body):
    if kind == SYMMETRIC:
        return list(body)
    return [list(body[0]), list(body[1])]


def _name_from_json(kind, data):
    if kind == SYMMETRIC:
        return tuple(int(x) for x in data)
    return (tuple(int(x) for x in data[0]), tuple(int(x) for x in data[1]))


def decompose_class_function(cf, degree=None, max_n=None, cache_dir=None):
    """Decompose an arbitrary character into irreducible multiplicities."""
    cap = max_n if max_n is not None else default_cap(cf.kind)
    table = character_table(cf.kind, cf.n, max_n=cap, cache_dir=cache_dir)
    classes = class_table(cf.kind, cf.n, max_n=cap)
    order = classes.group_order
    entries = {}
    for lab, row in zip(table.labels, table.matrix):
        total = sum(s.size * x * y for s, x, y in zip(classes, cf.values, row))
        mult, rem = divmod(total, order)
        if rem != 0:
            raise ConsistencyError(f"non-integral multiplicity for {lab}")
        if mult < 0:
            raise ConsistencyError(f"negative multiplicity for {lab}")
        if mult:
            entries[lab] = mult
    return MultiplicityVector(cf.kind, cf.n, entries, degree=degree)


def decompose(n, k, kind, max_n=None, threads=1, cache_dir=None):
    """Irreducible multiplicities of H^k(PSigma_n; Q) for S_n or W_n.

    Verifies the dimension identity sum(mult * dim) = binom(n-1,k) n^k.
    """
    kind = normalize_kind(kind)
    cap = max_n if max_n is not None else default_cap(kind)
    cf = cohomology_character(n, k, kind=kind, max_n=cap, threads=threads)
    mv = decompose_class_function(cf, degree=k, max_n=cap, cache_dir=cache_dir)
    if mv.dimension() != forest_count(n, k):
        raise ConsistencyError(f"dimension identity fails for n={n}, k={k}, {kind}")
    return mv


@dataclass
class StabilityReport:
    kind: str
    k: int
    n_min: int
    n_max: int
    vectors: dict = field(default_factory=dict)  # n -> MultiplicityVector
    stable_from: int | None = None
    provisional: bool = False
    bound: int = 0
    bound_satisfied: bool | None = None

    def stable_vector(self):
        if self.stable_from is None:
            return None
        return self.vectors[self.n_max].stable()

    def to_json(self):
        return {
            "kind": self.kind,
            "k": self.k,
            "n_range": [self.n_min, self.n_max],
            "per_n": [self.vectors[n].to_json() for n in sorted(self.vectors)],
            "stable_from": self.stable_from,
            "provisional": self.provisional,
            "bound": self.bound,
            "bound_satisfied": self.bound_satisfied,
        }

    @classmethod
    def from_json(cls, doc):
        vectors = {}
        for item in doc["per_n"]:
            mv = MultiplicityVector.from_json(item)
            vectors[mv.n] = mv
        return cls(
            kind=normalize_kind(doc["kind"]),
            k=doc["k"],
            n_min=doc["n_range"][0],
            n_max=doc["n_range"][1],
            vectors=vectors,
            stable_from=doc["stable_from"],
            provisional=doc["provisional"],
            bound=doc["bound"],
            bound_satisfied=doc["bound_satisfied"],
        )

    def __eq__(self, other):
        return isinstance(other, StabilityReport) and self.to_json() == other.to_json()


def stability_scan(k, kind, n_max=None, max_n=None, threads=1, cache_dir=None):
    """Decompose H^k for n up to n_max and detect the stabilization onset.

    The detected point is the smallest N such that the stable-named vectors
    agree for all N <= n <= n_max; it requires at least two consecutive
    equal vectors at the top of the range, and the report is flagged
    provisional when the scan is shorter than the 4k bound.
    """
    kind = normalize_kind(kind)
    cap = max_n if max_n is not None else default_cap(kind)
    if n_max is None:
        n_max = cap
    if n_max > cap:
        raise ResourceLimitError(f"n_max {n_max} exceeds cap {cap}")
    n_min = max(1, k + 1)
    report = StabilityReport(kind=kind, k=k, n_min=n_min, n_max=n_max, bound=4 * k)
    if n_max < n_min:
        report.provisional = True
        return report
    stables = {}
    for n in range(n_min, n_max + 1):
        mv = decompose(n, k, kind, max_n=cap, threads=threads, cache_dir=cache_dir)
        report.vectors[n] = mv
        stables[n] = mv.stable()
    report.provisional = n_max < 4 * k
    if n_max > n_min and stables[n_max] == stables[n_max - 1]:
        onset = n_max - 1
        while onset > n_min and stables[onset - 1] == stables[n_max]:
            onset -= 1
        report.stable_from = onset
    if n_max >= report.bound and report.bound >= n_min:
        report.bound_satisfied = (
            report.stable_from is not None and report.stable_from <= report.bound
        )
    return report


# ---------------------------------------------------------------------------
# one-row branching (the Pieri-type induction)


def horizontal_strip_additions(parts, m):
    """All partitions obtained from parts by adding m boxes, no two in a column.

    Equivalently all nu >= parts with |nu| = |parts| + m interleaving as
    nu_1 >= parts_1 >= nu_2 >= parts_2 >= ...
    """
    parts = tuple(parts)
    rows = len(parts) + 1
    results = []

    def rec(i, remaining, prefix):
        if i == rows:
            if remaining == 0:
                nu = tuple(p for p in prefix if p > 0)
                results.append(nu)
            return
        old = parts[i] if i < len(parts) else 0
        upper = old + remaining
        if i > 0:
            # no two added boxes in one column: nu_i <= parts_{i-1}
            upper = min(upper, parts[i - 1])
            upper = min(upper, prefix[-1])
        lower = old
        for nu_i in range(upper, lower - 1, -1):
            rec(i + 1, remaining - (nu_i - old), prefix + (nu_i,))

    rec(0, m, ())
    return results


def pieri_induce(label, n, max_n=None):
    """Decompose Ind_{W_r x W_{n-r}}^{W_n} (V(label) boxtimes trivial) by box addition.

    label = (plus, minus) is a double partition of r; every valid addition
    of (n - r) boxes to plus (no two in a column) contributes (nu, minus)
    with multiplicity one, and minus passes through unchanged (the one-row
    Littlewood-Richardson coefficient on the minus side is delta).
    """
    from .partitions import check_double_partition

    plus, minus = check_double_partition(label)
    r = sum(plus) + sum(minus)
    if n < r:
        raise ValueError(f"need n >= r = {r}")
    entries = {}
    for nu in horizontal_strip_additions(plus, n - r):
        entries[(nu, tuple(minus))] = 1
    return MultiplicityVector(HYPEROCTAHEDRAL, n, entries)


def induction_character_check(label, n, max_n=None):
    """True iff box-addition branching matches class-fusion induction at rank n.

    Additionally, whenever n >= 2r the stable-named branching output must
    agree with the output at n+1 (the induced sequence is constant from 2r
    on); box addition is cheap at any rank, so that check is unconditional.
    """
    plus, minus = label
    r = sum(plus) + sum(minus)
    cap = max_n if max_n is not None else DEFAULT_MAX_N_WN
    cf = induced_character(label, r, n, max_n=cap)
    from_fusion = decompose_class_function(cf, max_n=cap)
    from_boxes = pieri_induce(label, n)
    if from_fusion != from_boxes:
        return False
    if n >= 2 * r:
        here = pieri_induce(label, n).stable()
        there = pieri_induce(label, n + 1).stable()
        if here != there:
            return False
    return True


# ---------------------------------------------------------------------------
# W_n -> S_n consistency


def restrict_to_sn(mv, max_n=None):
    """Restriction of a W_n multiplicity vector to S_n, computed characterwise."""
    if mv.kind != HYPEROCTAHEDRAL:
        raise ValueError("restriction applies to W_n vectors")
    cap = max_n if max_n is not None else DEFAULT_MAX_N_WN
    classes = class_table(SYMMETRIC, mv.n, max_n=max(cap, mv.n))
    values = [0] * len(classes)
    for lab, m in mv.entries.items():
        row = wn_restriction_to_sn(lab, mv.n, max_n=max(cap, mv.n))
        for i, v in enumerate(row.values):
            values[i] += m * v
    from .characters import ClassFunction

    cf = ClassFunction(SYMMETRIC, mv.n, values)
    return decompose_class_function(cf, degree=mv.degree, max_n=max(cap, mv.n))
