"""Affine mass formulas: ratio products equal rescaled comarks.

The vector of reflection-ratio products over all r+1 affine nodes equals
k**(-1/h) times the comarks, where k is the product of comark**mark over
the finite nodes.  The rank-8 exceptional system lands on a clean power
form in 2, 3, 5.
"""

from fractions import Fraction as Q

from mpmath import mp

from cartan_gamma import (PrecisionContext, RootSystemLabel, affine_gamma_vector,
                          build_root_system, mark_power_product, pow_rat)

ctx = PrecisionContext(50)

for text in ("A2", "B3", "G2", "E8"):
    rs = build_root_system(RootSystemLabel.parse(text))
    with ctx.working():
        vec = affine_gamma_vector(rs, ctx)
        k = mark_power_product(rs)
        scale = pow_rat(k, Q(-1, rs.h), ctx)
        worst = max(abs(v - scale * c) for v, c in zip(vec, rs.comarks))
        print(f"{rs.label}: k = {k}, k**(-1/{rs.h}) = {mp.nstr(scale, 20)}")
        print(f"   ratio vector / comarks residual: {mp.nstr(worst, 3)}")
        print(f"   entries: {[mp.nstr(v, 12) for v in vec]}")
    print()

rs = build_root_system(RootSystemLabel.parse("E8"))
with ctx.working():
    vec = affine_gamma_vector(rs, ctx)
    unit = (pow_rat(2, Q(-13, 15), ctx) * pow_rat(3, Q(-2, 5), ctx)
            * pow_rat(5, Q(-1, 6), ctx))
    print("E8 entries as multiples of 2**(-13/15) 3**(-2/5) 5**(-1/6):")
    print("  ", [mp.nstr(v / unit, 12) for v in vec])
