"""
Means, mean differences and the divergences built from them
===========================================================

Two positive numbers have four classical means, H <= G <= A <= S.  Summing
a gap between two of them over the cells of a pair of distributions gives a
symmetric divergence.  Two of these are old friends: A - G is the Hellinger
discrimination and A - H is half the triangular discrimination.
"""

import numpy as np

from meandiv import MeasureId, binary_symmetric_pair, divergence, mean_difference, power_mean, random_pair
from meandiv.means import MeanPair

# power means interpolate between min and max; order 0 is the geometric mean
a, b = 1.0, 4.0
for t in (-np.inf, -1, 0, 1, 2, np.inf):
    print(f"M_{t}({a}, {b}) = {power_mean(t, a, b):.6f}")

# the gaps are computed without subtracting nearly equal numbers, so they stay
# accurate (and exactly zero on the diagonal)
for pair in MeanPair:
    print(pair.name, mean_difference(pair, 1.0, 1.0 + 1e-9))

# the binary family P = (t, 1-t), Q = (1-t, t) used in the comparison table
P, Q = binary_symmetric_pair(0.1)
for mid in (MeasureId.SA, MeasureId.SH, MeasureId.TRIANGULAR, MeasureId.SG, MeasureId.JENSEN_SHANNON, MeasureId.HELLINGER):
    print(f"{mid.value:>5}: {divergence(mid, P, Q):.6f}")

# identities tying the catalog together
P, Q = random_pair(7)
print("h - (1 - B)       =", divergence("h", P, Q) - (1 - divergence("B", P, Q)))
print("Delta/2 - (1 - W) =", divergence("Delta", P, Q) / 2 - (1 - divergence("W", P, Q)))
print("(I + T) / J       =", (divergence("I", P, Q) + divergence("T", P, Q)) / divergence("J", P, Q))
