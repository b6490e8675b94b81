"""Counting the irreducible fixed points.

The master polynomial x^(q^n + 1) - a collects every nontrivial a-srim
polynomial of degree 2d for d | n with n/d odd.  Moebius inversion over
odd divisors turns that into closed-form counts, which the census
checks against exhaustive enumeration, row by row.
"""

from gfrecip import (
    Field,
    census_csv,
    census_sweep,
    delta,
    enumerate_srm,
    h_poly,
    is_irreducible,
    m_poly,
    si_enumerated,
    si_formula,
    si_product,
)

F5 = Field(5)
a = F5.element(4)

# The master polynomial and its delta case split.
print("delta(q=5, a=4, n=1) =", delta(F5, a, 1), " (a is a square)")
print("H =", h_poly(F5, a, 1).pretty())
print("M =", m_poly(F5, a, 1).pretty(), " (x^2 - 4 removed once)")

# Enumeration is the oracle: all nontrivial degree-2 fixed points are
# x^2 + bx + 4, and exactly the non-split ones are counted.
stream = list(enumerate_srm(F5, a, 1, "nontrivial"))
print("\ndegree-2 nontrivial 4-srm:", [f.pretty() for f in stream])
print("irreducible among them:", [f.pretty() for f in stream if is_irreducible(f)])
print("si_formula:", si_formula(F5, True, 1), " si_enumerated:", si_enumerated(F5, a, 1))

# Their product is the Moebius quotient of master polynomials, with
# every division exact; a mismatch would raise.
print("product of the two:", si_product(F5, a, 1).pretty())

# A census sweep is one row per (field, a, n); the CSV is the file
# format the command line writes.
rows = census_sweep([Field(3), Field(5)], 2)
print("\n" + census_csv(rows))
print("all rows agree:", all(row.agreement for row in rows))
