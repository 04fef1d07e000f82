"""Acceptance suite: every criterion at its stated (exact) tolerance.

Each test prints one PASS/FAIL line; run `pytest -s tests/test_acceptance.py`
to watch them, or `stringmotion verify-paper` for the same battery outside
pytest.  All comparisons are exact integer/rational equalities; there are
no tolerances to tune.
"""

import pytest

from stringmotion.verify import CRITERIA, VerifyCaps

CAPS = VerifyCaps()

_BY_NAME = dict(CRITERIA)


def _run(name):
    ok, detail = _BY_NAME[name](CAPS)
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, detail


def test_criterion_01_dimension_formula():
    """Enumerated forest counts equal binom(n-1,k) n^k for all n <= 9."""
    _run("dimension-formula")


def test_criterion_02_h1_wn_decomposition():
    """H^1 W_n rows: V((0),(1))_2, then V((0),(1)) + V((1),(1)) for 3..8."""
    _run("h1-wn-decomposition")


def test_criterion_03_h1_sn_decomposition():
    """H^1 S_n rows for n = 2, 3 and the stable row for 4 <= n <= 9."""
    _run("h1-sn-decomposition")


def test_criterion_04_h2_sn_decomposition():
    """H^2 S_n rows for n = 2..6 and the stable row at n = 7, 8."""
    _run("h2-sn-decomposition")


def test_criterion_05_wn_invariants_vanish():
    """Trivial W_n multiplicity 0 for k <= 4, n <= 8; negating involution
    verified on every basis forest for n <= 7."""
    _run("wn-invariants-vanish")


def test_criterion_06_sn_invariant_dimensions():
    """Invariant dimensions 1 (k=1), 1 (k=2), 3 (k=3) over the scanned
    ranks, and the three symmetrized forests span degree 3 for n = 5..7."""
    _run("sn-invariant-dimensions")


def test_criterion_07_presentation_oracle():
    """Presentation ranks equal the formula and forests form a basis for
    n <= 5, k <= 3; cyclic monomials reduce to zero."""
    _run("presentation-oracle")


def test_criterion_08_branching_rule():
    """Box addition matches class-fusion induction for r <= 3, n <= 7,
    stabilizing from n = 2r."""
    _run("branching-rule")


def test_criterion_09_stability_points():
    """Detected onsets 3 (k=1 W), 4 (k=1 S), 7 (k=2 S), all <= 4k; the
    k=2 W scan settles by n = 8."""
    _run("stability-points")


def test_criterion_10_character_table_health():
    """Orthonormality, column orthogonality, Burnside sums: S_n <= 9, W_n <= 8."""
    _run("character-table-health")


def test_criterion_11_stabilization_surjectivity():
    """Every rank-(n+1) forest is a relabelling of a stabilized one when
    n >= 2k; exhaustive for n <= 7."""
    _run("stabilization-surjectivity")
