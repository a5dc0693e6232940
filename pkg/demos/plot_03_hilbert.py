"""
Hilbert matrix and its determinant
==================================

The Hilbert matrix has rational entries 1/(i+j-1).  Its first surviving
power sum equals det(H_n) * n * n!, which lets enumeration arbitrate between
two routes to the determinant.
"""

from apd import first_appearance, signed_value_histogram
from apd.formulas import hilbert_det
from apd.verify import determinant_crosscheck, hilbert_determinant_audit
from apd.matrices import hilbert

for n in range(2, 8):
    r = first_appearance(signed_value_histogram(hilbert(n)))
    print(n, r.m1, r.value)

# Closed form against fraction-free elimination.
for n in range(1, 8):
    assert hilbert_det(n) == determinant_crosscheck(hilbert(n))

# The audit lines up closed form, elimination, the published table and the
# determinant implied by enumeration.  From n = 5 the published table is off.
r = first_appearance(signed_value_histogram(hilbert(5)))
for key, value in hilbert_determinant_audit(5, r.value).items():
    print(f"{key:32} {value}")
