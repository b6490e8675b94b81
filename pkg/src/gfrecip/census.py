"""Counting self-reciprocal irreducible polynomials over F_q.

The machinery revolves around the master divisor polynomial
h_poly(n) = x^(q^n + 1) - a, whose irreducible factors of degree >= 2
other than x^2 - a are exactly the nontrivial a-srim polynomials of
degree 2d for divisors d of n with n/d odd.  m_poly strips the x^2 - a
factor when it is present (delta = -1: a is a square, or a is a
non-square and n is even).  Moebius inversion over the odd divisors then
gives both the product formula (si_product) and the closed-form count
(si_formula), and enumerate_srm provides the exhaustive stream the
formulas are checked against.

si counts NONTRIVIAL a-srim polynomials of degree 2n; the trivial
quadratic x^2 - a is excluded from the master polynomial by
construction, which is what makes the n = 1 branch (q -+ 1)/2 and the
divisor-sum identity internally consistent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, ResourceError, VerificationError
from .factor import DEFAULT_SEED, factorize, is_irreducible
from .field import Field, FieldElement
from .poly import Poly
from .recip import SrmVerdict, classify

# h_poly degree guard: q^n + 1 may explode; the CLI exposes the knob.
DEGREE_BUDGET = 100_000

CSV_HEADER = "q,a,n,delta,si_formula,si_enumerated,agreement"


def mobius(d: int) -> int:
    """Moebius function by trial factorization: 0 on square divisors,
    else (-1)^(number of prime factors)."""
    if d < 1:
        raise DomainError("mobius is defined on positive integers")
    out = 1
    k = 2
    while k * k <= d:
        if d % k == 0:
            d //= k
            if d % k == 0:
                return 0
            out = -out
        k += 1
    if d > 1:
        out = -out
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def delta(field: Field, a: FieldElement, n: int) -> int:
    """-1 when x^2 - a divides h_poly(n): a is a square, or a is a
    non-square and n is even.  +1 otherwise."""
    a = field.element(a)
    if n < 1:
        raise DomainError("n must be >= 1")
    if a.is_square() or n % 2 == 0:
        return -1
    return 1


def h_poly(field: Field, a: FieldElement, n: int, budget: int = DEGREE_BUDGET) -> Poly:
    """The two-term master polynomial x^(q^n + 1) - a."""
    a = field.element(a)
    if not a:
        raise DomainError("the parameter must be nonzero")
    if n < 1:
        raise DomainError("n must be >= 1")
    deg = field.q ** n + 1
    if deg > budget:
        raise ResourceError(
            f"degree {deg} exceeds the budget {budget}; raise the budget to proceed")
    coeffs = [-a] + [field.zero] * (deg - 1) + [field.one]
    return Poly._raw(field, tuple(coeffs))


def m_poly(field: Field, a: FieldElement, n: int, budget: int = DEGREE_BUDGET) -> Poly:
    """h_poly with the x^2 - a factor removed when delta = -1.

    The division must be exact; a nonzero remainder would contradict the
    divisibility law the delta case split encodes."""
    a = field.element(a)
    h = h_poly(field, a, n, budget)
    if delta(field, a, n) == 1:
        return h
    quadratic = Poly(field, (-a, field.zero, field.one))
    quo, rem = divmod(h, quadratic)
    if rem:
        raise VerificationError("x^2 - a failed to divide the master polynomial")
    return quo


def si_formula(field: Field, a_is_square: bool, n: int) -> int:
    """Closed-form count of nontrivial a-srim polynomials of degree 2n.

    n = 1: (q - 1)/2 when a is a square, else (q + 1)/2.  n > 1 depends
    only on q: (q^n - 1)/(2n) when n is a power of two, otherwise the
    Moebius sum over odd divisors of n of mu(d) q^(n/d), divided by 2n.
    The result is checked to be a nonnegative integer."""
    q = field.q
    if n < 1:
        raise DomainError("n must be >= 1")
    if n == 1:
        return (q - 1) // 2 if a_is_square else (q + 1) // 2
    if n & (n - 1) == 0:
        total = q ** n - 1
    else:
        total = sum(mobius(d) * q ** (n // d) for d in _divisors(n) if d % 2 == 1)
    if total % (2 * n) != 0 or total < 0:
        raise VerificationError(f"count formula gave a non-integral value {total}/{2 * n}")
    return total // (2 * n)


def carlitz_count(q: int, n: int) -> int:
    """Classical count of self-reciprocal irreducible monic polynomials
    of degree 2n over F_q (odd q): (q^n - 1)/(2n) when n is a power of
    two, else the odd-divisor Moebius sum."""
    if n < 1 or q < 3 or q % 2 == 0:
        raise DomainError("odd q and n >= 1 required")
    if n & (n - 1) == 0:
        total = q ** n - 1
    else:
        total = sum(mobius(d) * q ** (n // d) for d in _divisors(n) if d % 2 == 1)
    if total % (2 * n) != 0:
        raise VerificationError("classical count is not integral")
    return total // (2 * n)


def enumerate_srm(field: Field, a: FieldElement, n: int, kind: str) -> Iterator[Poly]:
    """All monic a-srm polynomials of degree 2n of the given kind
    ("trivial" or "nontrivial"), each exactly once.

    The upper-half coefficients b_n..b_{2n-1} are free (b_n = 0 forced
    for the trivial kind) and determine the rest via b_i = +-b_{2n-i}
    a^(n-i); the stream walks them lexicographically in the canonical
    element order, b_n most significant.  Lengths: q^n nontrivial,
    q^(n-1) trivial."""
    a = field.element(a)
    if not a:
        raise DomainError("the parameter must be nonzero")
    if n < 1:
        raise DomainError("n must be >= 1")
    if kind not in ("trivial", "nontrivial"):
        raise DomainError(f"kind must be 'trivial' or 'nontrivial', got {kind!r}")
    trivial = kind == "trivial"
    one = field.one
    a_powers = [one]
    for _ in range(n):
        a_powers.append(a_powers[-1] * a)
    free = n - 1 if trivial else n
    pool = list(field.elements())
    for upper in itertools.product(pool, repeat=free):
        # coefficient vector b_0..b_2n, top first: b_2n = 1, then upper half
        b = [field.zero] * (2 * n + 1)
        b[2 * n] = one
        if trivial:
            b[n] = field.zero
            for offset, c in enumerate(upper):
                b[n + 1 + offset] = c
        else:
            for offset, c in enumerate(upper):
                b[n + offset] = c
        for i in range(n):
            mirrored = b[2 * n - i] * a_powers[n - i]
            b[i] = -mirrored if trivial else mirrored
        yield Poly._raw(field, tuple(b))


def enumerate_odd_srm(field: Field, a: FieldElement, n: int) -> Iterator[Poly]:
    """All monic a-srm polynomials of odd degree n (empty unless a is a
    square).  For each sign choice b_0 = +-sqrt(a)^n the upper-half
    coefficients are free and mirror down via b_i = b_{n-i} b_0 / a^i."""
    a = field.element(a)
    if not a:
        raise DomainError("the parameter must be nonzero")
    if n < 1 or n % 2 == 0:
        raise DomainError("odd n >= 1 required")
    root = a.sqrt()
    if root is None:
        return
    one = field.one
    a_inv_powers = [one]
    inv_a = a.inverse()
    for _ in range(n):
        a_inv_powers.append(a_inv_powers[-1] * inv_a)
    pool = list(field.elements())
    half = (n - 1) // 2
    for b0 in (root ** n, -(root ** n)):
        for upper in itertools.product(pool, repeat=half):
            b = [field.zero] * (n + 1)
            b[n] = one
            b[0] = b0
            for offset, c in enumerate(upper):
                b[n - 1 - offset] = c
            for i in range(1, half + 1):
                b[i] = b[n - i] * b0 * a_inv_powers[i]
            yield Poly._raw(field, tuple(b))


def si_enumerated(field: Field, a: FieldElement, n: int) -> int:
    """Count of nontrivial degree-2n a-srm polynomials that are
    irreducible, straight from the exhaustive stream."""
    return sum(1 for f in enumerate_srm(field, a, n, "nontrivial") if is_irreducible(f))


def si_product(field: Field, a: FieldElement, n: int, budget: int = DEGREE_BUDGET) -> Poly:
    """Product of all nontrivial a-srim polynomials of degree 2n.

    Computed two ways: directly from the enumeration, and as the Moebius
    product over odd divisors d of n of m_poly(n/d)^mu(d) with the
    mu = -1 terms divided out exactly.  Disagreement raises."""
    a = field.element(a)
    direct = Poly.one(field)
    for f in enumerate_srm(field, a, n, "nontrivial"):
        if is_irreducible(f):
            direct = direct * f
    numerator = Poly.one(field)
    denominator = Poly.one(field)
    for d in _divisors(n):
        if d % 2 == 0:
            continue
        mu = mobius(d)
        if mu == 1:
            numerator = numerator * m_poly(field, a, n // d, budget)
        elif mu == -1:
            denominator = denominator * m_poly(field, a, n // d, budget)
    quo, rem = divmod(numerator, denominator)
    if rem:
        raise VerificationError("the Moebius product did not divide exactly")
    if quo != direct:
        raise VerificationError("enumerated product disagrees with the Moebius product")
    return direct


def verify_count_sum_identity(field: Field, a: FieldElement, n: int,
                              budget: int = DEGREE_BUDGET) -> bool:
    """Check q^n + delta == sum over d | n with n/d odd of 2d * si(d),
    with si taken from enumeration, plus the matching degree bookkeeping
    for m_poly."""
    a = field.element(a)
    if n < 1:
        raise DomainError("n must be >= 1")
    total = sum(2 * d * si_enumerated(field, a, d)
                for d in _divisors(n) if (n // d) % 2 == 1)
    lhs = field.q ** n + delta(field, a, n)
    degree_ok = m_poly(field, a, n, budget).degree == total
    return lhs == total and degree_ok


def verify_master_factorization(field: Field, a: FieldElement, n: int,
                                seed: int = DEFAULT_SEED,
                                budget: int = DEGREE_BUDGET) -> bool:
    """Oracle check of the master polynomial structure: every factor of
    m_poly is a nontrivial a-srim of degree 2d with d | n and n/d odd
    (multiplicity one), and every enumerated a-srim of degree 2n divides
    h_poly."""
    a = field.element(a)
    m = m_poly(field, a, n, budget)
    allowed = {2 * d for d in _divisors(n) if (n // d) % 2 == 1}
    for poly, mult in factorize(m, seed).factors:
        if mult != 1 or poly.degree < 2 or poly.degree not in allowed:
            return False
        if classify(poly, a).verdict is not SrmVerdict.NONTRIVIAL:
            return False
    h = h_poly(field, a, n, budget)
    for f in enumerate_srm(field, a, n, "nontrivial"):
        if is_irreducible(f) and h % f:
            return False
    return True


@dataclass(frozen=True)
class CensusRow:
    q: int
    a: FieldElement
    n: int
    delta: int
    si_formula: int
    si_enumerated: int | None

    @property
    def agreement(self) -> bool | None:
        if self.si_enumerated is None:
            return None
        return self.si_formula == self.si_enumerated

    def csv_line(self) -> str:
        enum = "" if self.si_enumerated is None else self.si_enumerated
        agree = "" if self.agreement is None else str(self.agreement).lower()
        return f"{self.q},{self.a},{self.n},{self.delta},{self.si_formula},{enum},{agree}"


def census_row(field: Field, a: FieldElement, n: int, enumerate_too: bool = True) -> CensusRow:
    a = field.element(a)
    return CensusRow(
        q=field.q,
        a=a,
        n=n,
        delta=delta(field, a, n),
        si_formula=si_formula(field, a.is_square(), n),
        si_enumerated=si_enumerated(field, a, n) if enumerate_too else None,
    )


def census_sweep(fields: list[Field], nmax: int) -> list[CensusRow]:
    """One row per (field, nonzero a, n <= nmax), in deterministic order."""
    rows = []
    for field in fields:
        for a in field.units():
            for n in range(1, nmax + 1):
                rows.append(census_row(field, a, n))
    return rows


def census_csv(rows: list[CensusRow]) -> str:
    return "\n".join([CSV_HEADER] + [row.csv_line() for row in rows]) + "\n"
