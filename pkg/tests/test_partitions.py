from itertools import combinations_with_replacement

import pytest

from qcong.partitions import PartitionTable, dp_oracle, generating_series, progression_values


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def brute_force(d, n):
    """Count by listing partitions and coloring each multiset of equal even parts."""
    total = 0
    for p in _partitions(n):
        ways = 1
        for part in set(p):
            if part % 2 == 0:
                mult = p.count(part)
                ways *= sum(1 for _ in combinations_with_replacement(range(d), mult))
        total += ways
    return total


@pytest.mark.parametrize("d", [1, 2, 3, 5])
def test_dp_matches_brute_force(d):
    table = dp_oracle(d, 16)
    assert list(table.values) == [brute_force(d, n) for n in range(17)]


def test_small_values():
    assert generating_series(1, 10)[4] == 5
    assert generating_series(3, 10)[2] == 4
    t = dp_oracle(3, 4)
    assert t[0] == 1 and t[1] == 1
    # 1111, 31, 4 (3 colors), 211 (3 colors), 22 (6 colored multisets)
    assert t[4] == 14 == brute_force(3, 4)


@pytest.mark.parametrize("d", [1, 2, 3, 5, 9])
def test_series_matches_dp(d):
    N = 2000
    assert generating_series(d, N + 1).int_coeffs() == list(dp_oracle(d, N).values)


def test_nondecreasing_in_colors():
    tables = {d: dp_oracle(d, 300) for d in range(1, 10)}
    for d in range(1, 9):
        assert all(tables[d][n] <= tables[d + 1][n] for n in range(2, 301))


def test_progression_examples():
    t3 = dp_oracle(3, 600)
    assert progression_values(t3, 25, 20, 1)[0] % 5 == 0
    t5 = PartitionTable.from_series(5, generating_series(5, 200))
    assert progression_values(t5, 49, 31, 1)[0] % 7 == 0
    t9 = PartitionTable.from_series(9, generating_series(9, 200))
    assert progression_values(t9, 121, 36, 1)[0] % 11 == 0
    assert progression_values(t3, 25, 20, 3) == [t3[20], t3[45], t3[70]]
    with pytest.raises(IndexError):
        progression_values(t3, 25, 20, 30)


def test_table_json_round_trip():
    t = dp_oracle(2, 30)
    assert PartitionTable.from_json(2, t.to_json()) == t
    with pytest.raises(ValueError):
        PartitionTable(3, (2, 1))


def test_cache_serves_truncations():
    long = generating_series(3, 500)
    assert generating_series(3, 100) == long.truncate(100)
