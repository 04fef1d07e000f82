"""Irreducible decompositions, stability scans, and the branching rule."""

import pytest

from stringmotion.action import cohomology_character
from stringmotion.decompose import (
    MultiplicityVector,
    StabilityReport,
    decompose,
    decompose_class_function,
    horizontal_strip_additions,
    induction_character_check,
    pieri_induce,
    restrict_to_sn,
    stability_scan,
)
from stringmotion.errors import ConsistencyError
from stringmotion.forests import forest_count
from stringmotion.partitions import (
    HYPEROCTAHEDRAL,
    SYMMETRIC,
    enumerate_double_partitions,
)
from stringmotion import reference_tables as ref


def test_degree_one_wn_published_rows():
    assert decompose(3, 1, HYPEROCTAHEDRAL).stable() == {
        ((), (1,)): 1,
        ((1,), (1,)): 1,
    }
    assert decompose(2, 1, HYPEROCTAHEDRAL).stable() == {((), (1,)): 1}


def test_degree_two_s5_published_row():
    assert decompose(5, 2, SYMMETRIC).stable() == {
        (1, 1, 1): 4,
        (2, 1): 5,
        (1, 1): 9,
        (2,): 6,
        (1,): 6,
        (): 1,
    }


def test_degree_zero_is_trivial():
    mv = decompose(4, 0, SYMMETRIC)
    assert mv.stable() == {(): 1}
    mv = decompose(3, 0, HYPEROCTAHEDRAL)
    assert mv.stable() == {((), ()): 1}


def test_vanishing_degree_gives_empty_vector():
    assert decompose(2, 2, SYMMETRIC).entries == {}


def test_dimension_identity():
    for n in range(2, 7):
        for k in range(0, n):
            for kind in (SYMMETRIC, HYPEROCTAHEDRAL):
                mv = decompose(n, k, kind)
                assert mv.dimension() == forest_count(n, k), (n, k, kind)


def test_norm_equals_sum_of_squared_multiplicities():
    for n, k, kind in ((4, 2, SYMMETRIC), (5, 2, HYPEROCTAHEDRAL), (6, 3, SYMMETRIC)):
        cf = cohomology_character(n, k, kind=kind)
        mv = decompose(n, k, kind)
        assert cf.inner(cf) == sum(m * m for m in mv.entries.values())


def test_wn_to_sn_restriction_consistency():
    for n in range(2, 8):
        for k in (1, 2):
            if k > n - 1:
                continue
            wmv = decompose(n, k, HYPEROCTAHEDRAL)
            smv = decompose(n, k, SYMMETRIC)
            assert restrict_to_sn(wmv).entries == smv.entries, (n, k)


def test_multiplicity_vector_json_round_trip():
    for mv in (decompose(5, 2, SYMMETRIC), decompose(4, 1, HYPEROCTAHEDRAL)):
        doc = mv.to_json()
        back = MultiplicityVector.from_json(doc)
        assert back == mv
        assert back.to_json() == doc


def test_stability_scan_published_onsets():
    assert stability_scan(1, HYPEROCTAHEDRAL, 8).stable_from == 3
    assert stability_scan(1, SYMMETRIC, 9).stable_from == 4
    assert stability_scan(2, SYMMETRIC, 9).stable_from == 7


def test_stability_bound_flag():
    report = stability_scan(1, SYMMETRIC, 9)
    assert report.bound == 4
    assert report.bound_satisfied is True
    assert report.provisional is False


def test_stability_provisional_when_scan_short():
    report = stability_scan(3, SYMMETRIC, 9)
    assert report.provisional is True  # 4k = 12 > 9
    assert report.bound_satisfied is None
    # the rows at n = 8 and n = 9 still differ, so no onset may be claimed
    assert report.stable_from is None


def test_stability_report_json_round_trip():
    report = stability_scan(1, HYPEROCTAHEDRAL, 6)
    doc = report.to_json()
    back = StabilityReport.from_json(doc)
    assert back == report
    assert back.to_json() == doc


def test_stability_requires_two_equal_vectors_at_top():
    # Scanning H^2 over S_n only up to n = 5 shows no repeat (rows 3, 4, 5
    # all differ), so no onset may be reported.
    report = stability_scan(2, SYMMETRIC, 5)
    assert report.stable_from is None
    assert report.provisional is True


# ---------------------------------------------------------------------------
# branching rule


def test_horizontal_strip_additions():
    assert set(horizontal_strip_additions((1,), 2)) == {(3,), (2, 1)}
    assert horizontal_strip_additions((), 3) == [(3,)]
    assert set(horizontal_strip_additions((2, 1), 2)) == {
        (4, 1),
        (3, 2),
        (3, 1, 1),
        (2, 2, 1),
    }
    # no two boxes in one column: (1,1) on () is forbidden
    assert (1, 1) not in horizontal_strip_additions((), 2)


def test_pieri_trivial_input():
    mv = pieri_induce(((), ()), 5)
    assert mv.entries == {((5,), ()): 1}


def test_pieri_one_box_example():
    mv = pieri_induce(((1,), ()), 3)
    assert mv.entries == {((3,), ()): 1, ((2, 1), ()): 1}


def test_pieri_minus_part_passes_through():
    for n in range(2, 7):
        mv = pieri_induce(((), (1,)), n)
        assert mv.entries == {((n - 1,), (1,)): 1}
        assert mv.stable() == {((), (1,)): 1}


def test_pieri_requires_n_at_least_r():
    with pytest.raises(ValueError):
        pieri_induce(((2,), (1,)), 2)


def test_induction_character_check_small():
    for r in range(0, 3):
        for label in enumerate_double_partitions(r):
            for n in range(max(r, 1), 6):
                assert induction_character_check(label, n), (label, n)


def test_induction_stabilizes_from_two_r():
    # V((1),(0))_1: box addition output under stable naming is constant from n=2.
    names = {}
    for n in range(1, 7):
        names[n] = pieri_induce(((1,), ()), n).stable()
    assert names[2] == names[3] == names[4] == names[5] == names[6]
    assert names[1] != names[2]  # at n=1 there is no room for V(1)


def test_decompose_class_function_rejects_bad_input():
    from stringmotion.characters import ClassFunction
    from stringmotion.classtables import class_table

    n = 3
    table = class_table(SYMMETRIC, n)
    # one lonely value at the identity is not a character of anything real
    values = [0] * len(table)
    values[table.index((1, 1, 1))] = 1
    with pytest.raises(ConsistencyError):
        decompose_class_function(ClassFunction(SYMMETRIC, n, values))
