"""Reading off the parity of the factor count without factoring.

For a nontrivial a-srm polynomial f of degree 2n, the single field
element (-1)^n a^(n(n-2)) f(sqrt(a)) f(-sqrt(a)) -- computable inside
F_q as A^2 - a B^2 -- is a nonzero square exactly when the number of
irreducible factors (with multiplicity) is even.  The factorization
oracle referees every verdict here.
"""

from gfrecip import (
    Field,
    Parity,
    Poly,
    discriminant_identity_check,
    enumerate_srm,
    eval_at_sqrt_pair,
    factor_count,
    factorize,
    parity_indicator,
)

F5 = Field(5)

# Two quadratics with a = 1: one irreducible (odd count), one split (even).
for coeffs in ([1, 1, 1], [1, 0, 1]):
    f = Poly(F5, coeffs)
    verdict = parity_indicator(f, F5.element(1))
    r = factor_count(f, with_multiplicity=True)
    print(f"{f.pretty():<10} indicator = {verdict.indicator}  ->  {verdict.verdict.value:<5}"
          f"  oracle count = {r}")

# The indicator comes from an F_q-internal evaluation of
# f(sqrt(a)) f(-sqrt(a)), no field extension needed even for non-square a.
f = Poly(F5, [1, 0, 1])
value, A, B = eval_at_sqrt_pair(f, F5.element(2))
print(f"\nf(sqrt 2) f(-sqrt 2) for x^2+1: A = {A}, B = {B}, value = {value}")

# When f vanishes at +-sqrt(a) the criterion abstains: strip those even
# powers first (they never change the parity).
sextic = Poly.from_string(F5, "4,1,2,4,3,1,1")
verdict = parity_indicator(sextic, F5.element(4))
print("\nsextic verdict:", verdict.verdict.value, "-", verdict.reason)

# Exhaustive agreement with the oracle over every degree-4 nontrivial
# 2-srm polynomial (a = 2 is a non-square; no abstentions occur).
a = F5.element(2)
agreements = abstained = 0
for f in enumerate_srm(F5, a, 2, "nontrivial"):
    verdict = parity_indicator(f, a)
    if verdict.verdict is Parity.NOT_APPLICABLE:
        abstained += 1
        continue
    r = factor_count(f, with_multiplicity=True)
    assert (verdict.verdict is Parity.EVEN) == (r % 2 == 0), f.pretty()
    agreements += 1
print(f"\ndegree-4 sweep at a = 2: {agreements} verdicts, all match the oracle"
      f" ({abstained} abstained)")

# The identity underneath: D(f) equals the indicator times D(g)^2 for
# the inverse-transform g.
print("discriminant identity on the sweep:",
      all(discriminant_identity_check(f, a)
          for f in enumerate_srm(F5, a, 2, "nontrivial")))

# And the oracle itself is an ordinary factorization routine.
fz = factorize(Poly(F5, [4, 0, 3, 0, 1]))
print("\nfactorization of x^4+3x^2+4:",
      " * ".join(f"({g.pretty()})^{m}" if m > 1 else f"({g.pretty()})"
                 for g, m in fz.factors))
