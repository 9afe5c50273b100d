"""
The long cycle on the Temperley-Lieb basis
==========================================

Transpositions act on diagrams by resolving a crossing: the identity and
the cup-cap, both with sign -1, and a closed loop is worth -2.  The long
cycle s_1 s_2 ... s_(2r-1) then acts as a plain permutation matrix.
"""

import numpy as np

from csp_lab import diagrams

for r in range(1, 5):
    L = diagrams.tl_long_cycle_matrix(r)
    R = diagrams.rotation_matrix(r)
    print(f"r={r}: {L.shape[0]} diagrams, long cycle == rotation: {np.array_equal(L, R)}")

# a single transposition is not a permutation matrix
print(diagrams.tl_skein_matrix(2, [1]))
