"""Finite-field shadows of the Gamma products.

At a prime p = 1 (mod h), each exponent word turns into a product of
character sums.  For the words coming from root systems the normalized
value has unit modulus, does not depend on the additive character, and is
recognized as an actual root of unity in the h-th cyclotomic field.
"""

from mpmath import mp, mpf

from cartan_gamma import (PrecisionContext, RootSystemLabel, build_root_system,
                          find_site, gauss_sum, hecke_value, jacobi_sum,
                          psi_order, recognize_cyclotomic, word_of_root_system)

ctx = PrecisionContext(50)
e6 = build_root_system(RootSystemLabel.parse("E6"))
site = find_site(e6.h)
print(f"site: N = {site.modulus}, p = {site.p}, primitive root {site.generator}")

with ctx.working():
    print("single character sums have magnitude sqrt(p):")
    for j in (1, 5, 7):
        g = gauss_sum(j, site, ctx).value
        print(f"   |g({j}/12)|^2 - 13 = {mp.nstr(abs(g)**2 - 13, 3)}")

    print()
    print("normalized word sums at the words of E6:")
    for i in range(1, 7):
        w = word_of_root_system(e6, i)
        j = jacobi_sum(w, site, ctx).value
        psi = hecke_value(w, site, ctx)
        coeffs = recognize_cyclotomic(psi, 12, max_coeff=4, tol=mpf(10) ** -20, ctx=ctx)
        order = psi_order(w, site, ctx)
        print(f"   f(E6,{i}): |J| = {mp.nstr(abs(j), 10)} (= 1/p), "
              f"psi = {mp.nstr(psi, 8)}")
        print(f"      root of unity of order {order}; "
              f"coordinates over the power basis: {list(coeffs)}")

    print()
    w = word_of_root_system(e6, 4)
    a = hecke_value(w, site, ctx)
    b = hecke_value(w, site, ctx, additive_scale=3)
    print(f"changing the additive character moves psi by {mp.nstr(abs(a - b), 3)}")
