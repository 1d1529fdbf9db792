"""
Why SG/2 and I cannot be ordered
================================

The ratio f''_SG / f''_I has derivative proportional to (x - 1) sigma(x),
and sigma changes sign, so no constant sandwich exists.  Scanning the
generator sections and the binary family shows the two measures swapping
order in both views.
"""

from meandiv import crossing_scan, sigma_sg_i, table1, table2
from meandiv.inequalities import binary_family_sections, generator_sections

print("sigma(1) =", sigma_sg_i(1.0), " sigma(4.25) =", round(sigma_sg_i(4.25), 4))
print("sigma root bracket:", crossing_scan(sigma_sg_i, lambda x: 0 * x, 1.0, 4.25, 10_000))

g = generator_sections()
print("d(x) - e(x) changes sign in", crossing_scan(g["d"], g["e"], 0.1, 3900.0, 10_000))

b = binary_family_sections()
print("d(t) - e(t) changes sign in", crossing_scan(b["d"], b["e"], 1e-5, 0.4999, 10_000))

print(table1().to_csv())
print(table2().to_csv())
