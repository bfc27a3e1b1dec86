import pytest

from circdeg.circulant import algebraic_degree, is_connected
from circdeg.cyclotomic import splitting_field_degree
from circdeg.golden import GOLDEN_TABLE, golden_rows
from circdeg.mintable import degree_table, min_order_for_degree, strict_rows
from circdeg.numtheory import euler_phi, is_prime, smallest_prime_1_mod_2d


def test_min_order_examples():
    assert min_order_for_degree(1) == 1
    assert min_order_for_degree(4) == 15
    assert min_order_for_degree(94) == 849
    with pytest.raises(ValueError):
        min_order_for_degree(0)


def test_min_order_is_minimal():
    for d in range(2, 101):
        c = min_order_for_degree(d)
        assert euler_phi(c) % (2 * d) == 0
        for n in range(1, c):
            assert euler_phi(n) % (2 * d) != 0
        assert c <= smallest_prime_1_mod_2d(d)


def test_degree_table_small_rows():
    rows = degree_table(3)
    assert [(r.d, r.c_of_d, r.p_d, r.strict) for r in rows] == [
        (1, 1, 3, True),
        (2, 5, 5, False),
        (3, 7, 7, False),
    ]
    assert rows[0].witness.n == 1 and rows[0].witness.elements == ()
    assert rows[1].witness.elements == (1, 4)
    with pytest.raises(ValueError):
        degree_table(0)


def test_degree_table_row_27():
    row = degree_table(27)[26]
    assert (row.c_of_d, row.p_d, row.strict) == (81, 109, True)
    assert row.witness.n == 81
    assert algebraic_degree(row.witness) == 27


def test_table_matches_golden_data():
    rows = degree_table(100)
    assert [(r.d, r.c_of_d, r.p_d, r.strict) for r in rows] == list(golden_rows(100))


def test_table_witnesses_verified_both_routes():
    for row in degree_table(100):
        assert algebraic_degree(row.witness) == row.d
        assert splitting_field_degree(row.witness) == row.d
        if row.d > 1:
            assert row.witness.valency() == euler_phi(row.c_of_d) // row.d
            assert is_connected(row.witness)


def test_prime_bound_column():
    for d, _, p in GOLDEN_TABLE:
        assert is_prime(p) and p % (2 * d) == 1


def test_strict_rows():
    assert strict_rows(12) == (1, 4, 10, 12)
    assert strict_rows(2) == (1,)
    expected = tuple(d for d, c, p in GOLDEN_TABLE if c < p)
    assert strict_rows(100) == expected
    assert len(expected) == 28
