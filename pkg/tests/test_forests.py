"""Forest enumeration, wedge words, stabilization, dump format."""

import io
from itertools import product
from math import comb

import pytest

from stringmotion.errors import CyclicProductError
from stringmotion.forests import (
    check_forest,
    count_forests_enumerated,
    enumerate_forests,
    forest_count,
    forests_by_child_set,
    from_wedge,
    from_wedge_at,
    materialize_forests,
    read_forests,
    stabilize,
    to_wedge,
    write_forests,
)


def brute_force_forests(n, k):
    """Oracle: every parent vector with k nonzero entries, cycle-rejected."""
    out = []
    for vec in product(range(0, n + 1), repeat=n):
        if sum(1 for p in vec if p) != k:
            continue
        if any(p == i for i, p in enumerate(vec, start=1)):
            continue
        ok = True
        for start in range(1, n + 1):
            v, steps = start, 0
            while vec[v - 1] != 0:
                v = vec[v - 1]
                steps += 1
                if steps > n:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(vec)
    return out


def test_count_formula_examples():
    assert forest_count(6, 4) == 6480
    assert forest_count(3, 2) == 9
    assert forest_count(4, 5) == 0
    for n in range(1, 7):
        assert forest_count(n, n - 1) == n ** (n - 1)


def test_rank_two_forests():
    assert sorted(enumerate_forests(2, 1)) == [(0, 1), (2, 0)]


def test_zero_edges_single_forest():
    for n in range(1, 7):
        assert list(enumerate_forests(n, 0)) == [(0,) * n]


def test_enumeration_matches_brute_force():
    for n in range(1, 6):
        for k in range(0, n + 1):
            got = sorted(enumerate_forests(n, k))
            want = sorted(brute_force_forests(n, k))
            assert got == want, (n, k)


def test_48_forests_at_four_two():
    assert len(list(enumerate_forests(4, 2))) == 48 == forest_count(4, 2)


def test_enumeration_matches_formula_through_seven():
    for n in range(1, 8):
        for k in range(0, n):
            assert sum(1 for _ in enumerate_forests(n, k)) == forest_count(n, k)


def test_counting_kernel_agrees_with_streaming():
    for n in range(1, 8):
        for k in range(0, n):
            want = forest_count(n, k)
            assert count_forests_enumerated(n, k, jit=False) == want
            assert count_forests_enumerated(n, k, jit=True) == want
    # spot checks higher up (streaming there is covered by the acceptance run)
    assert count_forests_enumerated(8, 5, jit=True) == forest_count(8, 5)
    assert count_forests_enumerated(9, 2, jit=True) == forest_count(9, 2)


def test_rooted_trees_count():
    # k = n-1 gives all rooted labelled trees: n^(n-1) of them.
    for n in range(1, 7):
        assert sum(1 for _ in enumerate_forests(n, n - 1)) == n ** (n - 1)


def test_wedge_round_trip():
    for n in range(1, 6):
        for k in range(0, n):
            for f in enumerate_forests(n, k):
                w = to_wedge(f)
                assert [i for i, _ in w] == sorted(i for i, _ in w)
                assert from_wedge_at(w, n) == f


def test_wedge_examples():
    assert to_wedge((2, 0)) == ((1, 2),)
    assert from_wedge([(1, 2)]) == (2, 0)
    assert from_wedge([(1, 2), (2, 3)]) == (2, 3, 0)


def test_cyclic_wedge_rejected():
    with pytest.raises(CyclicProductError):
        from_wedge([(1, 2), (2, 1)])
    with pytest.raises(CyclicProductError):
        from_wedge([(1, 2), (2, 3), (3, 1)])


def test_malformed_wedge_rejected():
    with pytest.raises(ValueError):
        from_wedge([(2, 3), (1, 2)])  # decreasing first coordinates
    with pytest.raises(ValueError):
        from_wedge([(1, 1)])
    with pytest.raises(ValueError):
        from_wedge_at([(1, 5)], 3)


def test_stabilize():
    assert stabilize((2, 0)) == (2, 0, 0)
    f0 = (0, 0, 0)
    assert stabilize(f0) == (0, 0, 0, 0)


def test_stabilize_image_is_exactly_isolated_last_vertex():
    for n in range(1, 6):
        for k in range(0, n):
            image = {stabilize(f) for f in enumerate_forests(n, k)}
            filtered = {
                f
                for f in enumerate_forests(n + 1, k)
                if f[n] == 0 and all(p != n + 1 for p in f)
            }
            assert image == filtered, (n, k)
            assert len(image) == forest_count(n, k)  # injectivity


def test_forests_by_child_set_partitions_everything():
    for n in range(2, 6):
        for k in range(0, n):
            groups = forests_by_child_set(n, k)
            assert sum(len(v) for v in groups.values()) == forest_count(n, k)
            for child_set, bucket in groups.items():
                assert all(
                    {i for i, p in enumerate(f, 1) if p} == set(child_set)
                    for f in bucket
                )
                # by symmetry every child set carries (n-k) n^(k-1) forests
                expected = (n - k) * n ** (k - 1) if k else 1
                assert len(bucket) == expected


def test_check_forest_rejects_bad_vectors():
    with pytest.raises(ValueError):
        check_forest((1, 0))  # self-loop
    with pytest.raises(ValueError):
        check_forest((2, 1))  # 2-cycle
    with pytest.raises(ValueError):
        check_forest((5, 0))  # out of range


def test_dump_format_round_trip():
    buf = io.StringIO()
    count = write_forests(buf, 4, 2)
    assert count == forest_count(4, 2)
    buf.seek(0)
    rows = read_forests(buf)
    assert [f for _, _, f in rows] == materialize_forests(4, 2)
    assert all(n == 4 and k == 2 for n, k, _ in rows)


def test_dump_format_rejects_corrupt_lines():
    with pytest.raises(ValueError):
        read_forests(io.StringIO("3 1 0 0\n"))  # wrong arity
    with pytest.raises(ValueError):
        read_forests(io.StringIO("3 1 2 3 0\n"))  # k does not match edge count
    with pytest.raises(ValueError):
        read_forests(io.StringIO("2 1 2 1\n"))  # cycle


def test_materialized_order_is_lexicographic():
    forests = materialize_forests(4, 2)
    assert forests == sorted(forests)
