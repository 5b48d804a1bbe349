"""Generalized cubic partitions a_d(n).

``a_d(n)`` counts partitions of ``n`` whose odd parts are unrestricted
and whose even parts each carry one of ``d`` colors.  Two independent
routes are provided:

* :func:`generating_series` expands ``1/(f_1 f_2^(d-1))`` with series
  arithmetic (odd parts give ``f_2/f_1``, colored evens give ``f_2^-d``);
* :func:`dp_oracle` counts directly with a coin-change table and never
  touches the series code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from qcong._convolve import mul_trunc
from qcong.qseries import QSeries, f_series, invert, power

__all__ = ["PartitionTable", "generating_series", "dp_oracle", "progression_values", "partition_numbers"]


@dataclass(frozen=True)
class PartitionTable:
    d: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("number of colors must be positive")
        if not self.values or self.values[0] != 1:
            raise ValueError("a_d(0) must be 1")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    @classmethod
    def from_series(cls, d: int, series: QSeries) -> "PartitionTable":
        return cls(d, tuple(series.int_coeffs(0, series.trunc)))

    def to_json(self) -> str:
        return json.dumps([str(v) for v in self.values])

    @classmethod
    def from_json(cls, d: int, text: str) -> "PartitionTable":
        return cls(d, tuple(int(v) for v in json.loads(text)))


# longest series computed so far, per key; shorter requests are truncations
_longest: dict[object, QSeries] = {}


def _cached(key, T: int, build) -> QSeries:
    s = _longest.get(key)
    if s is None or s.trunc < T:
        s = build(T)
        _longest[key] = s
    return s.truncate(T)


def partition_numbers(T: int) -> QSeries:
    """``1/f_1 = sum p(n) q^n`` to ``O(q^T)``."""
    return _cached("p", T, lambda n: invert(f_series(1, n)))


def generating_series(d: int, T: int) -> QSeries:
    """``sum a_d(n) q^n = 1/(f_1 f_2^(d-1))`` to ``O(q^T)``."""
    if d < 1 or T < 1:
        raise ValueError("need d >= 1 and T >= 1")

    def build(n: int) -> QSeries:
        p = partition_numbers(n)
        if d == 1:
            return p
        # P(q) C(q^2) with C = P^(d-1); splitting P by parity keeps both
        # factors at half length: E(q^2) C(q^2) + q O(q^2) C(q^2)
        h = (n + 1) // 2
        c = power(p.truncate(h), d - 1).int_coeffs(0, h)
        nums = p.numerators
        even = mul_trunc(nums[0::2], c, h)
        odd = mul_trunc(nums[1::2], c, n // 2)
        out = [0] * n
        out[0::2] = even
        out[1::2] = odd
        return QSeries(0, n, out)

    return _cached(("a", d), T, build)


def dp_oracle(d: int, N: int) -> PartitionTable:
    """Tabulate ``a_d(0..N)`` by counting: each even part size is ``d`` item types."""
    if d < 1 or N < 0:
        raise ValueError("need d >= 1 and N >= 0")
    t = [0] * (N + 1)
    t[0] = 1
    for k in range(1, N + 1):
        for _ in range(d if k % 2 == 0 else 1):
            for n in range(k, N + 1):
                t[n] += t[n - k]
    return PartitionTable(d, tuple(t))


def progression_values(table: PartitionTable, m: int, t: int, count: int) -> list[int]:
    """``[a_d(t), a_d(m + t), ..., a_d(m(count-1) + t)]``."""
    if m < 1 or count < 0 or t < 0:
        raise ValueError("need m >= 1, t >= 0, count >= 0")
    last = m * (count - 1) + t
    if count and last >= len(table):
        raise IndexError(f"a_{table.d}({last}) is beyond the table (length {len(table)})")
    return [table.values[m * k + t] for k in range(count)]
