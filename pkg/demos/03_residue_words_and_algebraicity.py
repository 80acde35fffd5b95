"""Exponent words on residues mod h and the algebraicity test.

Every simple index of a root system yields an integer word on the nonzero
residues mod h.  Its weighted sum is -1 and stays -1 under the unit-group
action, which is exactly the criterion for pi * (Gamma product) to be an
algebraic number; the antisymmetrized word sits in the class with sum 0.
"""

from mpmath import mp

from cartan_gamma import (PrecisionContext, RootSystemLabel, build_root_system,
                          classify, evaluate, n_of, tilde, u_act, units,
                          word_of_root_system)

ctx = PrecisionContext(50)
e6 = build_root_system(RootSystemLabel.parse("E6"))

print(f"E6 words over modulus {e6.h} (unit group {list(units(e6.h))}):")
for i in range(1, 7):
    f = word_of_root_system(e6, i)
    verdict = classify(f)
    print(f"   f(E6,{i}) = {f}")
    print(f"      weighted sum {n_of(f)}; orbit sums "
          f"{[n_of(u_act(u, f)) for u in units(12)]}; "
          f"class k = {verdict.k}, tilde class k = {classify(tilde(f)).k}")

print()
print("The diagram flip fixes the word set: f(E6,1) == f(E6,6) is",
      word_of_root_system(e6, 1) == word_of_root_system(e6, 6))

print()
with ctx.working():
    f1 = word_of_root_system(e6, 1)
    value = evaluate(f1, ctx)
    print(f"Gamma product of f(E6,1) = {mp.nstr(value, 25)}")
    print(f"pi * that value          = {mp.nstr(mp.pi * value, 25)}")
    target = (2 ** mp.mpf("-1.25") * 3 ** (mp.mpf(1) / 8)
              * (mp.sqrt(3) - 1) ** mp.mpf("0.5"))
    print(f"closed algebraic form    = {mp.nstr(target, 25)}")
    print(f"difference               = {mp.nstr(abs(mp.pi * value - target), 3)}")
