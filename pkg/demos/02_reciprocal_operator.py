"""The scaled reciprocal operator and its fixed-point structure.

The a-reciprocal of a monic f with f(0) != 0 sends each root alpha to
a/alpha.  Its fixed points (a-srm polynomials) have forced constant
terms and forced factors, which this script strips exactly.
"""

from gfrecip import (
    Field,
    Poly,
    a_reciprocal,
    classify,
    dickson,
    inverse_quadratic_transform,
    is_a_self_reciprocal,
    quadratic_transform,
    strip_linear_sqrt,
    strip_x2_minus_a,
)

F5 = Field(5)
a = F5.element(4)  # a square: sqrt(4) = 2

# The operator itself.  Distinct parameters can collide: over F_5 both
# a = 2 and a = 3 send x^2 + 1 to x^2 + 4.
f = Poly(F5, [1, 0, 1])
print("x^2+1  --2-->", a_reciprocal(f, 2).pretty(), "  --3-->", a_reciprocal(f, 3).pretty())

# A sextic fixed point: every coefficient satisfies b_{n-i} b_0 = b_i a^i.
sextic = Poly.from_string(F5, "4,1,2,4,3,1,1")
print("\nf =", sextic.pretty())
print("4-self-reciprocal?", is_a_self_reciprocal(sextic, a))
print("classification:", classify(sextic, a).verdict.value,
      "(half degree", classify(sextic, a).half_degree, ")")

# Even-degree fixed points with constant term -a^m are 'trivial' and
# carry x^2 - a; the exponent parity encodes the kind.
quad = Poly(F5, [-4, 0, 1])
for g in (quad, quad ** 2, sextic):
    k, rest = strip_x2_minus_a(g, a)
    print(f"strip x^2-4 from {g.pretty():<28} -> k = {k}, rest = {rest.pretty()}")

# This sextic is nonzero at -2 but vanishes at +2; the forced factor
# (x - 2)^k comes off with k even, leaving another nontrivial fixed point.
k, rest = strip_linear_sqrt(sextic, a, +1)
print(f"\nstrip (x-2)^k: k = {k}, rest = {rest.pretty()}, rest(2) = {rest(2)}")

# Dickson polynomials convert between a degree-n g and the degree-2n
# fixed point x^n g(x + a/x); the transform doubles, its inverse halves.
print("\nD_3 with a = 1 over F_5:", dickson(3, F5.element(1)).pretty())
g = inverse_quadratic_transform(sextic, a)
print("g with x^3 g(x + 4/x) = f:", g.pretty())
print("round trip ok:", quadratic_transform(g, a) == sextic)
