"""
Curvature ratios and inequality chains
======================================

If alpha <= f1''/f2'' <= beta everywhere, the divergences (and their gaps)
inherit alpha C_f2 <= C_f1 <= beta C_f2.  The extremes below are located
blind, by a log grid scan refined with golden-section search.
"""

from meandiv import builtin_chains, generator_of, ratio_extremum, sweep_chains
from meandiv.chains import EXPECTED_VIOLATIONS, parse_chain
from meandiv.inequalities import PROPOSITION_PAIRS

for a, b, which in PROPOSITION_PAIRS:
    rep = ratio_extremum(generator_of(a), generator_of(b), 1e-4, 1e4)
    v, x = (rep.sup_value, rep.sup_arg) if which == "sup" else (rep.inf_value, rep.inf_arg)
    print(f"{which} f''_{a.value} / f''_{b.value} = {v:.12f} at x = {x:.8f}")

# every registered chain over a modest random sweep
for rep in sweep_chains(builtin_chains(), 5000):
    tag = " (expected)" if rep.name in EXPECTED_VIOLATIONS else ""
    print(f"{rep.name:>15}: {'holds' if rep.holds else 'violated' + tag}, worst slack {rep.worst_slack:.3e}")
    for link in rep.violations():
        print(f"{'':>17}{link.lhs} <= {link.rhs} fails by {-link.slack:.4g} (seed {link.witness})")

# custom chains use the same text grammar as the command line; I and SG/2
# are not comparable (see 04_sg_versus_i.py), so this one fails
mine = parse_chain("mine : 1/4*Delta <= I <= 1/2*SG")
rep = sweep_chains([mine], 5000)[0]
print(rep.holds, [(v.index, v.slack, v.witness) for v in rep.violations()])
