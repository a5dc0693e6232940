"""
Fixed points and the identity matrix
====================================

For the identity matrix the trace function counts fixed points.  The
alternating power sums vanish for m < n-1 and the first surviving one is n!.
"""

from apd import first_appearance, signed_value_histogram
from apd.core import apd_sequence
from apd.matrices import circulant, identity

# The histogram maps each value of f to (even count, odd count).  It is all
# we need for every power m.
h = signed_value_histogram(identity(4))
for value, (even, odd) in h.buckets.items():
    print(f"f = {value}: {even} even, {odd} odd")

# APD_1 .. APD_4 for n = 4: two zeros, then 4! = 24.
print(apd_sequence(h, 4))

# The whole table for n = 2..9.
for n in range(2, 10):
    r = first_appearance(signed_value_histogram(identity(n)))
    print(n, r.m1, r.value)

# The circulant (Latin square) matrix has the same m1 with a signed value
# n^(n-2) times larger.
for n in range(2, 9):
    r = first_appearance(signed_value_histogram(circulant(n)))
    print(n, r.m1, r.value)
