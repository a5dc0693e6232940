"""
Equal power sums between even and odd permutations
===================================================

The values of f on even and on odd permutations form two multisets with
equal power sums up to degree m1 - 1, a Prouhet-Tarry-Escott pair.
"""

import json

from apd import first_appearance, signed_value_histogram
from apd.matrices import multiplication_table, vandermonde
from apd.pte import extract_multisets, pte_degree, pte_to_json

h = signed_value_histogram(multiplication_table(4, 1))
pair = extract_multisets(h)
print("even:", {str(v): c for v, c in pair.even.items()})
print("odd: ", {str(v): c for v, c in pair.odd.items()})

# Equal power sums for k = 1..5, differing at k = 6.
print(pte_degree(pair, 20), first_appearance(h).m1)

# The same for the Vandermonde matrix, exported as JSON.
pair = extract_multisets(signed_value_histogram(vandermonde(4)))
doc = pte_to_json(pair, pte_degree(pair, 10))
print(doc["pte_degree"], len(doc["even"]), len(doc["odd"]))
print(json.dumps(doc["even"][:3]))
