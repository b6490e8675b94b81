"""Dense univariate polynomials over a finite field.

Coefficients are stored ascending (index = degree); the zero polynomial
is the empty tuple and has degree -1.  Polynomials are immutable values
with overloaded ``+ - * ** // % divmod`` and call-for-evaluation.  The
module-level functions supply the ring utilities the rest of the package
needs: monic gcd, modular powering, resultants, discriminants and a
squarefreeness test that handles the characteristic-p zero-derivative
case.

Text formats: ``to_string`` emits comma-separated ascending coefficients
("4,1,2,4,3,1,1"), the round-trippable form used by the command line;
``pretty`` emits the usual descending human form ("x^6+x^5+3x^4+...").

Prime-field instances route their O(n^2) inner loops through plain int
lists, which keeps the large divisibility sweeps affordable.
"""

from __future__ import annotations

from .errors import DomainError, FieldMismatchError
from .field import Field, FieldElement


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        elems = []
        for c in coeffs:
            elems.append(c if isinstance(c, FieldElement) and c.field is field
                         else field.element(c))
        while elems and not elems[-1]:
            elems.pop()
        self.field = field
        self.coeffs = tuple(elems)

    @classmethod
    def _raw(cls, field, coeffs: tuple):
        # internal: coefficients already reduced elements with nonzero top
        p = object.__new__(cls)
        p.field = field
        p.coeffs = coeffs
        return p

    @classmethod
    def _from_ints(cls, field, ints):
        # internal: reduced residues over a prime field, may need stripping
        n = len(ints)
        while n and ints[n - 1] == 0:
            n -= 1
        e1 = field._elem1
        return cls._raw(field, tuple(e1(v) for v in ints[:n]))

    # -- constructors ---------------------------------------------------------

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls._raw(field, (field.zero, field.one))

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls._raw(field, (field.one,))

    @classmethod
    def constant(cls, field: Field, value) -> "Poly":
        return cls(field, (value,))

    @classmethod
    def from_string(cls, field: Field, text: str) -> "Poly":
        """Parse the comma-separated ascending coefficient form."""
        tokens = [tok.strip() for tok in text.split(",")]
        if not tokens or any(tok == "" for tok in tokens):
            raise DomainError(f"malformed polynomial string {text!r}")
        return cls(field, [field.parse(tok) for tok in tokens])

    # -- basic queries ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def lc(self) -> FieldElement:
        if not self.coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> FieldElement:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # -- ring operations --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatchError("polynomials over different fields")
        if isinstance(other, (int, FieldElement)):
            return Poly(self.field, (other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and not out[-1]:
            out.pop()
        return Poly._raw(self.field, tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            s = self.field.element(other) if isinstance(other, int) else self._scalar(other)
            if not s:
                return Poly._raw(self.field, ())
            return Poly._raw(self.field, tuple(c * s for c in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(f, ())
        if f.e == 1:
            p = f.p
            ai = [c.coords[0] for c in a]
            bi = [c.coords[0] for c in b]
            out = [0] * (len(a) + len(b) - 1)
            for i, av in enumerate(ai):
                if av:
                    for j, bv in enumerate(bi):
                        out[i + j] += av * bv
            return Poly._from_ints(f, [v % p for v in out])
        zero = f.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, av in enumerate(a):
            if av:
                for j, bv in enumerate(b):
                    out[i + j] = out[i + j] + av * bv
        return Poly._raw(f, tuple(out))

    __rmul__ = __mul__

    def _scalar(self, s: FieldElement) -> FieldElement:
        if s.field is not self.field and s.field != self.field:
            raise FieldMismatchError("scalar from a different field")
        return self.field.element(s)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise DomainError("negative polynomial power")
        acc = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.field
        da, db = self.degree, other.degree
        if da < db:
            return Poly._raw(f, ()), self
        if f.e == 1:
            p = f.p
            rem = [c.coords[0] for c in self.coeffs]
            div = [c.coords[0] for c in other.coeffs]
            inv = pow(div[-1], -1, p)
            quo = [0] * (da - db + 1)
            for k in range(da - db, -1, -1):
                c = rem[k + db] * inv % p
                if c:
                    quo[k] = c
                    for j, dv in enumerate(div):
                        rem[k + j] = (rem[k + j] - c * dv) % p
            return Poly._from_ints(f, quo), Poly._from_ints(f, rem[:db])
        inv = other.lc().inverse()
        rem = list(self.coeffs)
        quo = [f.zero] * (da - db + 1)
        dcs = other.coeffs
        for k in range(da - db, -1, -1):
            c = rem[k + db] * inv
            if c:
                quo[k] = c
                for j, dv in enumerate(dcs):
                    rem[k + j] = rem[k + j] - c * dv
        r = rem[:db]
        while r and not r[-1]:
            r.pop()
        while quo and not quo[-1]:
            quo.pop()
        return Poly._raw(f, tuple(quo)), Poly._raw(f, tuple(r))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, point) -> FieldElement:
        """Evaluate by Horner's rule."""
        f = self.field
        x = f.element(point) if isinstance(point, int) else point
        if x.field is not f and x.field != f:
            raise FieldMismatchError("evaluation point from a different field")
        if f.e == 1:
            p = f.p
            v = x.coords[0]
            acc = 0
            for c in reversed(self.coeffs):
                acc = (acc * v + c.coords[0]) % p
            return f._elem1(acc)
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- calculus & normal forms -------------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(self.field,
                    [c * i for i, c in enumerate(self.coeffs) if i > 0])

    def monic(self) -> "Poly":
        if not self:
            raise DomainError("the zero polynomial cannot be made monic")
        if self.is_monic:
            return self
        inv = self.lc().inverse()
        return Poly._raw(self.field, tuple(c * inv for c in self.coeffs))

    # -- text -----------------------------------------------------------------------

    def to_string(self) -> str:
        """Comma-separated ascending coefficients; inverse of from_string."""
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    def pretty(self, var: str = "x") -> str:
        """Human form, descending powers, e.g. "x^6+x^5+3x^4+...+4"."""
        if not self.coeffs:
            return "0"
        parts = []
        one = self.field.one
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            if "+" in cs or "*" in cs:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            else:
                xs = var if i == 1 else f"{var}^{i}"
                parts.append(xs if c == one else f"{cs}{xs}")
        return "+".join(parts)

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"Poly({self.field.spec_string()}: {self.to_string()})"


# -- module-level utilities ------------------------------------------------------


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) is the zero polynomial."""
    if f.field != g.field:
        raise FieldMismatchError("polynomials over different fields")
    while g:
        f, g = g, f % g
    return f.monic() if f else f


def pow_mod(base: Poly, k: int, modulus: Poly) -> Poly:
    """base**k reduced mod modulus, by square and multiply."""
    if modulus.degree < 1:
        raise DomainError("pow_mod modulus must be nonconstant")
    if k < 0:
        raise DomainError("negative exponent in pow_mod")
    acc = Poly.one(base.field) % modulus
    base = base % modulus
    while k:
        if k & 1:
            acc = acc * base % modulus
        base = base * base % modulus
        k >>= 1
    return acc


def resultant(f: Poly, g: Poly) -> FieldElement:
    """The resultant R(f, g) of two nonzero polynomials.

    Computed by the Euclidean remainder sequence with the classical
    correction factors: R(f, g) = lc(g)^(deg f - deg r) * (-1)^(deg f *
    deg g) * R(g, r) for r = f mod g, with R(c, g) = c^deg(g) at the
    base.  Zero exactly when f and g share a root in the closure.
    """
    if not f or not g:
        raise DomainError("resultant of the zero polynomial")
    if f.field != g.field:
        raise FieldMismatchError("polynomials over different fields")
    fld = f.field
    acc = fld.one
    while True:
        if f.degree == 0:
            return acc * f.lc() ** g.degree
        if g.degree == 0:
            return acc * g.lc() ** f.degree
        r = f % g
        if not r:
            return fld.zero
        acc = acc * g.lc() ** (f.degree - r.degree)
        if (f.degree * g.degree) % 2 == 1:
            acc = -acc
        f, g = g, r


def discriminant(f: Poly) -> FieldElement:
    """Discriminant of a monic polynomial of degree >= 1.

    D(f) = (-1)^(N(N-1)/2) R(f, f') for monic f of degree N; zero exactly
    when f has a repeated root (including the zero-derivative p-th-power
    case).
    """
    if not f.is_monic:
        raise DomainError("discriminant requires a monic polynomial")
    n = f.degree
    if n < 1:
        raise DomainError("discriminant requires degree >= 1")
    fp = f.derivative()
    if not fp:
        return f.field.zero
    d = resultant(f, fp)
    return -d if (n * (n - 1) // 2) % 2 == 1 else d


def is_squarefree(f: Poly) -> bool:
    """Whether f has no repeated irreducible factor.

    gcd(f, f') must be constant; a vanishing derivative means f is a p-th
    power (degree >= 1), hence not squarefree.
    """
    if not f:
        raise DomainError("squarefreeness of the zero polynomial")
    if f.degree == 0:
        return True
    fp = f.derivative()
    if not fp:
        return False
    return gcd(f, fp).degree == 0
