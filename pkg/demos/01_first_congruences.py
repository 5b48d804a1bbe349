"""
Cubic partitions in three colours and the first rung of the ladder
===================================================================

"""

# exact coefficient tables from a dynamic program
from qcong import dp_oracle, generating_series
table = dp_oracle(3, 200)
print("a_3(0..9):", [table[n] for n in range(10)])

# the same numbers from the product formula
series = generating_series(3, 200)
assert series.int_coeffs(0, 200) == [table[n] for n in range(200)]

# every a_3(25n + 20) is divisible by 5
print("a_3(25n+20) mod 5:", [table[25 * n + 20] % 5 for n in range(8)])

# the ladder reproduces this progression as a q-series
from qcong import build_L, extract_progression
print("L_1 =", build_L(1, 8).series)

# the second rung carries a_3(25n + 20) itself
L2 = build_L(2, 8)
print("from L_2:", extract_progression(L2).int_coeffs(0, 8))
print("direct:  ", [table[25 * n + 20] for n in range(8)])

# and checks it for many n at once
from qcong import check_family
print(check_family(1, 400).to_json())
