"""Character tables: Murnaghan-Nakayama values, the W_n construction, caches."""

from fractions import Fraction
from math import comb, factorial

import pytest

from stringmotion.characters import (
    CharacterTable,
    ClassFunction,
    character_table,
    epsilon_value,
    induced_character,
    mn_character,
    save_table,
    wn_character,
    wn_restriction_to_sn,
)
from stringmotion.classtables import class_table, group_order
from stringmotion.errors import ConsistencyError
from stringmotion.partitions import (
    HYPEROCTAHEDRAL,
    SYMMETRIC,
    enumerate_double_partitions,
    enumerate_partitions,
    hook_dimension,
    wn_dimension,
)


def test_mn_trivial_character():
    for n in range(1, 8):
        for mu in enumerate_partitions(n):
            assert mn_character((n,), mu) == 1


def test_mn_sign_character():
    # chi_(1^n)(mu) = sign of the permutation = (-1)^(n - #cycles).
    for n in range(1, 8):
        for mu in enumerate_partitions(n):
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))
    assert mn_character((1, 1, 1), (2, 1)) == -1


def test_mn_dimension_equals_hook_formula():
    for n in range(1, 9):
        ident = (1,) * n
        for lam in enumerate_partitions(n):
            assert mn_character(lam, ident) == hook_dimension(lam), lam
    assert mn_character((2, 1), (1, 1, 1)) == 2


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2, 1), (2, 2))


def test_epsilon_values():
    assert epsilon_value(((4,), ())) == 1
    assert epsilon_value(((1,), (1,))) == -1
    assert epsilon_value(((), (2, 2))) == 1


def test_epsilon_matches_sign_product_of_representatives():
    # epsilon(g) = product of all sign entries of g, for every class rep.
    for n in range(1, 7):
        for c in class_table(HYPEROCTAHEDRAL, n):
            prod = 1
            for s in c.rep.signs:
                prod *= s
            assert epsilon_value(c.label) == prod, c.label


def test_wn_trivial_character():
    for n in range(1, 6):
        for cls in enumerate_double_partitions(n):
            assert wn_character(((n,), ()), cls) == 1


def test_wn_two_dimensional_at_rank_two():
    assert wn_character(((1,), (1,)), ((1, 1), ())) == 2


def test_wn_character_size_mismatch():
    with pytest.raises(ValueError):
        wn_character(((1,), (1,)), ((1, 1, 1), ()))


def test_burnside_identity():
    for n in range(1, 7):
        table = character_table(HYPEROCTAHEDRAL, n)
        ident = ((1,) * n, ())
        assert sum(table.value(lab, ident) ** 2 for lab in table.labels) == group_order(
            HYPEROCTAHEDRAL, n
        )


def test_wn_dimensions_match_induced_dimension_formula():
    for n in range(1, 7):
        table = character_table(HYPEROCTAHEDRAL, n)
        for lab in table.labels:
            assert table.dimension(lab) == wn_dimension(lab, n)


def test_table_shapes_and_orthogonality():
    # Classes in reverse-lex order put the 2-cycle class before the identity.
    t = character_table(SYMMETRIC, 2)
    assert t.classes.labels() == [(2,), (1, 1)]
    assert t.matrix == [[1, 1], [-1, 1]]
    assert t.value((1, 1), (2,)) == -1 and t.value((1, 1), (1, 1)) == 1
    t1 = character_table(HYPEROCTAHEDRAL, 1)
    assert len(t1.labels) == 2
    t3 = character_table(HYPEROCTAHEDRAL, 3)
    assert len(t3.labels) == len(t3.classes.classes) == 10
    t3.verify_orthonormality()
    t3.verify_column_orthogonality()


def test_all_character_values_are_integers():
    for kind, top in ((SYMMETRIC, 7), (HYPEROCTAHEDRAL, 6)):
        for n in range(1, top + 1):
            table = character_table(kind, n)
            for row in table.matrix:
                assert all(isinstance(v, int) for v in row)


def test_restriction_consistency_pullback():
    # V(lam, (0)) evaluated at all-positive classes equals the S character.
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            for alpha in enumerate_partitions(n):
                assert wn_character((lam, ()), (alpha, ())) == mn_character(lam, alpha)


def test_class_function_inner_product():
    table = character_table(SYMMETRIC, 4)
    rows = [table.row(lab) for lab in table.labels]
    for i, ri in enumerate(rows):
        for j, rj in enumerate(rows):
            assert ri.inner(rj) == (1 if i == j else 0)


def test_induced_character_dimension():
    # With the trivial second factor, dim Ind = binom(n, r) * dim V(label).
    for r in range(0, 4):
        for label in enumerate_double_partitions(r):
            for n in range(max(r, 1), 6):
                cf = induced_character(label, r, n)
                ident_idx = class_table(HYPEROCTAHEDRAL, n).index(((1,) * n, ()))
                want = comb(n, r) * (wn_dimension(label, r) if r else 1)
                assert cf[ident_idx] == want, (label, n)


def test_wn_restriction_to_sn_dimension_preserved():
    for n in range(1, 6):
        for label in enumerate_double_partitions(n):
            row = wn_restriction_to_sn(label, n)
            ident_idx = class_table(SYMMETRIC, n).index((1,) * n)
            assert row[ident_idx] == wn_dimension(label, n)


def test_orthonormality_guard_raises_on_bad_table():
    table = character_table(SYMMETRIC, 3)
    broken = CharacterTable(
        SYMMETRIC, 3, table.labels, [list(r) for r in table.matrix]
    )
    broken.matrix[0][0] += 1
    with pytest.raises(ConsistencyError):
        broken.verify_orthonormality()


def test_fusion_coefficient_is_a_product_of_binomials():
    """z_c / (z_c1 z_c2) must equal prod over part lengths of
    binom(m_l(c), m_l(c1)), per component; locks the splitting count."""
    from math import comb as binom

    from stringmotion.characters import _class_splittings, _submultisets
    from stringmotion.partitions import centralizer_order_wn, multiplicities

    for pair in enumerate_double_partitions(6):
        alpha, beta = pair
        z_c = centralizer_order_wn(pair)
        for a1, a2 in _submultisets(alpha):
            for b1, b2 in _submultisets(beta):
                ratio, rem = divmod(
                    z_c,
                    centralizer_order_wn((a1, b1)) * centralizer_order_wn((a2, b2)),
                )
                assert rem == 0
                want = 1
                for length, m in multiplicities(alpha).items():
                    want *= binom(m, multiplicities(a1).get(length, 0))
                for length, m in multiplicities(beta).items():
                    want *= binom(m, multiplicities(b1).get(length, 0))
                assert ratio == want, (pair, a1, b1)


def test_submultiset_splittings_are_exhaustive_and_distinct():
    from stringmotion.characters import _submultisets

    for parts in ((), (1,), (2, 1, 1), (3, 3, 2, 1, 1, 1)):
        splits = _submultisets(parts)
        # one choice per (length, count) combination
        from stringmotion.partitions import multiplicities

        want = 1
        for _, m in multiplicities(parts).items():
            want *= m + 1
        assert len(splits) == want
        assert len(set(splits)) == len(splits)
        for sub, rest in splits:
            merged = tuple(sorted(sub + rest, reverse=True))
            assert merged == tuple(sorted(parts, reverse=True))


def test_character_table_concurrent_construction_is_consistent():
    """The memo store behaves as an atomic get-or-insert: concurrent
    builders all end up with the same table object."""
    import threading

    from stringmotion import characters as chars

    chars._table_cache.pop((HYPEROCTAHEDRAL, 5), None)
    results = []

    def build():
        results.append(character_table(HYPEROCTAHEDRAL, 5))

    threads = [threading.Thread(target=build) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(results) == 4
    final = character_table(HYPEROCTAHEDRAL, 5)
    assert all(r.matrix == final.matrix for r in results)


# ---------------------------------------------------------------------------
# disk cache


def test_cache_round_trip_bit_exact(tmp_path):
    from stringmotion import characters as chars

    table = character_table(HYPEROCTAHEDRAL, 3, cache_dir=tmp_path)
    path = save_table(table, tmp_path)
    first = path.read_bytes()
    chars._table_cache.pop((HYPEROCTAHEDRAL, 3), None)
    reloaded = character_table(HYPEROCTAHEDRAL, 3, cache_dir=tmp_path)
    assert reloaded.matrix == table.matrix
    again = save_table(reloaded, tmp_path).read_bytes()
    assert again == first


def test_cache_corruption_self_heals(tmp_path):
    from stringmotion import characters as chars

    table = character_table(SYMMETRIC, 4, cache_dir=tmp_path)
    path = save_table(table, tmp_path)
    path.write_text("{not json at all")
    chars._table_cache.pop((SYMMETRIC, 4), None)
    recovered = character_table(SYMMETRIC, 4, cache_dir=tmp_path)
    assert recovered.matrix == table.matrix

    # tampered matrix fails the checksum and is recomputed too
    import json

    doc = chars.table_to_document(table)
    doc["matrix"][0][0] += 1
    path.write_text(json.dumps(doc))
    chars._table_cache.pop((SYMMETRIC, 4), None)
    recovered = character_table(SYMMETRIC, 4, cache_dir=tmp_path)
    assert recovered.matrix == table.matrix
