"""Factorization oracle over F_q, odd characteristic.

This module is the independent referee for every structural claim in the
package: a Rabin irreducibility test and a complete factorization built
from squarefree decomposition (including the zero-derivative p-th-power
reduction), distinct-degree splitting, and Cantor-Zassenhaus equal-degree
splitting with the odd-q exponent (q^d - 1)/2.

Randomness in the equal-degree stage comes from a per-call generator
seeded by an explicit parameter (default DEFAULT_SEED), so two runs with
the same seed produce identical results and the factor list is globally
sorted by (degree, coefficient sequence), making output canonical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError
from .field import Field, FieldElement
from .poly import Poly, gcd, pow_mod

DEFAULT_SEED = 1729


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: Poly) -> bool:
    """Rabin test: f of degree n is irreducible over F_q iff
    x^(q^n) == x (mod f) and gcd(x^(q^(n/l)) - x, f) = 1 for every prime
    l dividing n.  The q-power ladder is walked once, checking each
    divisor condition on the way up so reducible inputs exit early.
    """
    n = f.degree
    if n < 1:
        raise DomainError("irreducibility is undefined for constants")
    f = f.monic()
    if n == 1:
        return True
    fld = f.field
    x = Poly.x(fld)
    checkpoints = {n // l for l in _prime_divisors(n)}
    h = x % f
    for k in range(1, n + 1):
        h = pow_mod(h, fld.q, f)
        if k in checkpoints and gcd(h - x, f).degree != 0:
            return False
    return h == x % f


@dataclass(frozen=True)
class Factorization:
    """unit * product(poly^multiplicity) == the factorized input.

    Factors are monic irreducible, sorted by (degree, coefficient
    sequence) so equal inputs yield identical objects.
    """

    unit: FieldElement
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly.constant(self.unit.field, self.unit)
        for poly, mult in self.factors:
            out = out * poly ** mult
        return out

    def count(self, with_multiplicity: bool = True) -> int:
        if with_multiplicity:
            return sum(m for _, m in self.factors)
        return len(self.factors)


def _sort_key(poly: Poly):
    return (poly.degree, tuple(c.coords for c in poly.coeffs))


def _pth_root(f: Poly) -> Poly:
    # f has zero derivative, i.e. f(x) = u(x^p) with coefficients in the
    # image of Frobenius; recover u by inverse Frobenius on each stride.
    fld = f.field
    p = fld.p
    coeffs = [f[i].frobenius(fld.e - 1) for i in range(0, f.degree + 1, p)]
    return Poly(fld, coeffs)


def _squarefree_parts(f: Poly) -> dict[int, Poly]:
    """Multiplicity -> squarefree monic part; the parts are pairwise
    coprime and product(part^mult) == f (monic input)."""
    fld = f.field
    out: dict[int, Poly] = {}

    def accumulate(g: Poly, scale: int):
        if g.degree < 1:
            return
        gp = g.derivative()
        if not gp:
            accumulate(_pth_root(g), scale * fld.p)
            return
        c = gcd(g, gp)
        w = g // c
        i = 1
        while w.degree > 0:
            y = gcd(w, c)
            z = w // y
            if z.degree > 0:
                key = i * scale
                out[key] = out[key] * z if key in out else z
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            accumulate(_pth_root(c), scale * fld.p)

    accumulate(f, 1)
    return out


def _distinct_degree(f: Poly):
    """Split a squarefree monic f into (d, product of its degree-d
    irreducible factors) pairs."""
    fld = f.field
    x = Poly.x(fld)
    out = []
    h = x % f
    d = 0
    while f.degree > 2 * d:
        d += 1
        h = pow_mod(h, fld.q, f)
        g = gcd(h - x, f)
        if g.degree > 0:
            out.append((d, g))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.degree, f))
    return out


def _random_poly(fld: Field, max_degree: int, rng: random.Random) -> Poly:
    coords = [rng.randrange(fld.q) for _ in range(max_degree + 1)]
    elems = []
    for v in coords:
        digits = []
        for _ in range(fld.e):
            v, r = divmod(v, fld.p)
            digits.append(r)
        elems.append(fld.element(digits))
    return Poly(fld, elems)


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus split of a monic squarefree product of degree-d
    irreducibles; valid only for odd q."""
    if f.degree == d:
        return [f]
    fld = f.field
    exponent = (fld.q ** d - 1) // 2
    one = Poly.one(fld)
    while True:
        r = _random_poly(fld, f.degree - 1, rng)
        if r.degree < 1:
            continue
        g = gcd(r, f)
        if g.degree == 0:
            g = gcd(pow_mod(r, exponent, f) - one, f)
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factorize(f: Poly, seed: int = DEFAULT_SEED) -> Factorization:
    """Complete factorization of a nonzero polynomial into monic
    irreducibles with multiplicities, deterministic for a fixed seed."""
    if not f:
        raise DomainError("cannot factor the zero polynomial")
    unit = f.lc()
    if f.degree == 0:
        return Factorization(unit, ())
    rng = random.Random(seed)
    found: list[tuple[Poly, int]] = []
    for mult, part in sorted(_squarefree_parts(f.monic()).items()):
        for d, block in _distinct_degree(part):
            for irr in _equal_degree(block, d, rng):
                found.append((irr, mult))
    found.sort(key=lambda item: _sort_key(item[0]))
    return Factorization(unit, tuple(found))


def factor_count(f: Poly, with_multiplicity: bool = True, seed: int = DEFAULT_SEED) -> int:
    """Number of irreducible factors of a nonconstant polynomial."""
    if f.degree < 1:
        raise DomainError("factor counts are defined for nonconstant polynomials")
    return factorize(f, seed).count(with_multiplicity)
