"""
Row-shifted power lattices
==========================

Entries (j + (i-1)d)^r.  Squares delay the first appearance to T_{n-1};
the linear lattice has a constant trace and never produces a nonzero sum.
"""

from apd import first_appearance, signed_value_histogram
from apd.formulas import predict_shifted2
from apd.matrices import shifted_power_lattice

# The magic-square layout (d = n) squared.  n = 4 gives 2264924160 at m = 6.
m = shifted_power_lattice(4, 4, 2)
print(m.to_strings())
r = first_appearance(signed_value_histogram(m))
print(r.m1, r.value, predict_shifted2(4, 4).value)

# Compare d = 1 and d = n side by side up to n = 6.
for n in range(2, 7):
    for d in (1, n):
        r = first_appearance(signed_value_histogram(shifted_power_lattice(n, d, 2)))
        print(f"n={n} d={d}: m1={r.m1} value={r.value}")

# With r = 1 every permutation gives the same sum T_n + d*T_{n-1}.
h = signed_value_histogram(shifted_power_lattice(5, 2, 1))
print({str(v): c for v, c in h.buckets.items()})
print(first_appearance(h))
