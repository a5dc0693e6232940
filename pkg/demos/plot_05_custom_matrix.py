"""
Your own matrix
===============

Any square matrix with integer or rational entries can be loaded from JSON
or CSV and run through the same pipeline.
"""

import tempfile
from fractions import Fraction
from pathlib import Path

from apd import first_appearance, signed_value_histogram
from apd.core import apd_m
from apd.matrices import SquareMatrix, load_matrix, save_matrix

m = SquareMatrix(((2, 0, 1), (Fraction(1, 2), 3, 0), (1, 1, Fraction(-2, 3))))
path = Path(tempfile.mkdtemp()) / "mine.json"
save_matrix(m, path)
print(path.read_text())

m = load_matrix(path)
h = signed_value_histogram(m)
print(first_appearance(h))

# The first few power sums.
for k in range(1, 5):
    print(k, apd_m(h, k))

# Swapping two rows flips the parity of every permutation and negates the sums.
print(first_appearance(signed_value_histogram(m.swap_rows(1, 2))))
