"""Finite fields F_q = F_{p^e} of odd characteristic.

A ``Field`` is immutable once constructed.  Elements live in reduced
coordinate form: a tuple of ``e`` residues in ``[0, p)``, ascending by
powers of the generator ``t``, so equality is plain tuple equality.
For ``e == 1`` the modulus is simply ``x`` and elements are residues
mod ``p``.  For ``e > 1`` the modulus defaults to the lexicographically
smallest monic irreducible of degree ``e`` over F_p (coefficients
compared low-degree-first), which makes every construction reproducible.

Small fields (``q <= INTERN_LIMIT``) intern all their elements and
precompute addition/multiplication tables; arithmetic then costs two
list lookups and allocates nothing, which the enumeration sweeps and the
factorization oracle rely on.

The canonical total order on elements — used for square-root tie
breaking, factor sorting and enumeration streams — is lexicographic on
the coordinate tuple.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .errors import DomainError, FieldMismatchError, ResourceError, VerificationError

# sqrt() scans all q elements; plenty at desk scale, guarded beyond it.
SQRT_SEARCH_LIMIT = 10_000

# Fields up to this size intern every element and build op tables.
INTERN_LIMIT = 256

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldElement:
    """An element of F_{p^e} in reduced coordinate form.

    Instances are produced by ``Field.element`` and by arithmetic; the
    constructor trusts its arguments.  Supports ``+ - * / **`` and ``-x``,
    with ints coerced through the prime subfield.  ``bool(x)`` is True for
    nonzero x.
    """

    __slots__ = ("field", "coords", "index")

    def __init__(self, field: "Field", coords: tuple[int, ...], index: int | None = None):
        self.field = field
        self.coords = coords
        self.index = index

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return other
            if other.field == self.field:
                return self.field.element(other.coords)
            raise FieldMismatchError(
                f"elements of {self.field} and {other.field} cannot be combined")
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.field
        if f._add_table is not None:
            return f._add_table[self.index][other.index]
        return FieldElement(f, f._add_coords(self.coords, other.coords))

    __radd__ = __add__

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

    def __neg__(self):
        f = self.field
        if f._neg_table is not None:
            return f._neg_table[self.index]
        return FieldElement(f, tuple(-c % f.p for c in self.coords))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        f = self.field
        if f._mul_table is not None:
            return f._mul_table[self.index][other.index]
        return FieldElement(f, f._mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        f = self.field
        if f._inv_table is not None:
            return f._inv_table[self.index]
        return self ** (f.q - 2)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        f = self.field
        if k < 0:
            return self.inverse() ** (-k)
        if f.e == 1:
            return f._elem1(pow(self.coords[0], k, f.p))
        acc = f.one
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def is_square(self) -> bool:
        """Whether the element has a square root in its own field.

        Euler's criterion: a nonzero a is a square iff a**((q-1)/2) == 1.
        Undefined for zero.
        """
        if not self:
            raise DomainError("quadratic character of zero is undefined")
        return self ** ((self.field.q - 1) // 2) == self.field.one

    def sqrt(self) -> "FieldElement | None":
        """Canonical square root, or None for a nonzero non-square.

        sqrt(0) == 0.  Of the two roots of a nonzero square the one with
        the lexicographically smaller coordinate tuple is returned.
        Exhaustive scan, guarded by SQRT_SEARCH_LIMIT.
        """
        f = self.field
        if not self:
            return f.zero
        if f.q > SQRT_SEARCH_LIMIT:
            raise ResourceError(
                f"square-root search over {f} exceeds the scan limit {SQRT_SEARCH_LIMIT}")
        for r in f.elements():
            if r * r == self:
                return r
        return None

    def frobenius(self, k: int) -> "FieldElement":
        """The k-fold Frobenius image x**(p**k); the identity when e | k."""
        if k < 0:
            raise DomainError("Frobenius exponent must be nonnegative")
        f = self.field
        out = self
        for _ in range(k % f.e):
            out = out ** f.p
        return out

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return (other.field is self.field or other.field == self.field) \
                and self.coords == other.coords
        if isinstance(other, int):
            return self.coords == self.field.element(other).coords
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __str__(self):
        return self.field.format_element(self)

    def __repr__(self):
        return f"{self.field.spec_string()}:{self}"


class Field:
    """The finite field with p**e elements, p an odd prime."""

    __slots__ = ("p", "e", "q", "modulus", "_reduction_rows", "_elements",
                 "_add_table", "_mul_table", "_neg_table", "_inv_table")

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise DomainError(f"field characteristic must be prime, got {p}")
        if p == 2:
            raise DomainError("even characteristic is not supported")
        if not isinstance(e, int) or e < 1:
            raise DomainError(f"extension degree must be >= 1, got {e}")
        self.p = p
        self.e = e
        self.q = p ** e
        if e == 1:
            if modulus is not None and tuple(c % p for c in modulus) != (0, 1):
                raise DomainError("prime fields use the fixed modulus x")
            self.modulus = (0, 1)
            self._reduction_rows = None
        else:
            if modulus is None:
                self.modulus = self._smallest_irreducible()
            else:
                self.modulus = self._checked_modulus(modulus)
            self._reduction_rows = self._build_reduction_rows()
        self._elements = None
        self._add_table = self._mul_table = self._neg_table = self._inv_table = None
        if self.q <= INTERN_LIMIT:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _smallest_irreducible(self) -> tuple[int, ...]:
        # lexicographically first (c0, ..., c_{e-1}) making x^e + ... + c0
        # irreducible over F_p; c0 == 0 is always reducible, skip it.
        from .factor import is_irreducible
        from .poly import Poly

        base = Field(self.p)
        for tail in itertools.product(range(self.p), repeat=self.e):
            if tail[0] == 0:
                continue
            if is_irreducible(Poly(base, tail + (1,))):
                return tail + (1,)
        raise VerificationError(  # pragma: no cover - irreducibles always exist
            f"no irreducible of degree {self.e} over F_{self.p}")

    def _checked_modulus(self, modulus: Sequence[int]) -> tuple[int, ...]:
        from .factor import is_irreducible
        from .poly import Poly

        coeffs = tuple(int(c) % self.p for c in modulus)
        if len(coeffs) != self.e + 1 or coeffs[-1] != 1:
            raise DomainError(f"modulus must be monic of degree {self.e}")
        if not is_irreducible(Poly(Field(self.p), coeffs)):
            raise DomainError("modulus is not irreducible over the prime field")
        return coeffs

    def _build_reduction_rows(self):
        # rows[k - e] holds the coordinates of x^k mod modulus, e <= k <= 2e-2
        p, e = self.p, self.e
        rows = []
        row = tuple(-c % p for c in self.modulus[:e])
        for _ in range(e - 1):
            rows.append(row)
            top = row[-1]
            shifted = (0,) + row[:-1]
            row = tuple((shifted[i] + top * rows[0][i]) % p for i in range(e))
        return rows

    def _build_tables(self):
        elems = [FieldElement(self, coords, i)
                 for i, coords in enumerate(itertools.product(range(self.p), repeat=self.e))]
        self._elements = tuple(elems)
        self._neg_table = tuple(elems[self._rank(tuple(-c % self.p for c in x.coords))]
                                for x in elems)
        self._add_table = tuple(
            tuple(elems[self._rank(self._add_coords(x.coords, y.coords))] for y in elems)
            for x in elems)
        self._mul_table = tuple(
            tuple(elems[self._rank(self._mul_coords(x.coords, y.coords))] for y in elems)
            for x in elems)
        inv = [None] * self.q
        for x in elems[1:]:
            if inv[x.index] is None:
                y = self._pow_coords(x.coords, self.q - 2)
                inv[x.index] = elems[self._rank(y)]
        self._inv_table = tuple(inv)

    def _rank(self, coords: tuple[int, ...]) -> int:
        # position in the lexicographic element order (c0 most significant)
        r = 0
        for c in coords:
            r = r * self.p + c
        return r

    def _lookup(self, coords):
        if self._elements is None:
            return None
        return self._elements[self._rank(coords)]

    # -- coordinate arithmetic (no table) ------------------------------------

    def _add_coords(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _mul_coords(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return (a[0] * b[0] % p,)
        conv = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = conv[:e]
        rows = self._reduction_rows
        for k in range(e, 2 * e - 1):
            ck = conv[k]
            if ck:
                row = rows[k - e]
                for i in range(e):
                    out[i] += ck * row[i]
        return tuple(v % p for v in out)

    def _pow_coords(self, a, k):
        acc = self.one.coords
        base = a
        while k:
            if k & 1:
                acc = self._mul_coords(acc, base)
            base = self._mul_coords(base, base)
            k >>= 1
        return acc

    # -- public surface -------------------------------------------------------

    def element(self, value) -> FieldElement:
        """Coerce an int, coordinate sequence, element or text form."""
        if isinstance(value, FieldElement):
            if value.field is self:
                return value
            if value.field == self:
                return self.element(value.coords)
            raise FieldMismatchError(f"element of {value.field} is not in {self}")
        if isinstance(value, int):
            coords = (value % self.p,) + (0,) * (self.e - 1)
        elif isinstance(value, str):
            return self.parse(value)
        else:
            coords = tuple(int(c) % self.p for c in value)
            if len(coords) != self.e:
                raise DomainError(
                    f"expected {self.e} coordinates for {self}, got {len(coords)}")
        cached = self._lookup(coords)
        if cached is not None:
            return cached
        return FieldElement(self, coords)

    def _elem1(self, residue: int) -> FieldElement:
        # fast path for prime fields: residue already reduced
        if self._elements is not None:
            return self._elements[residue]
        return FieldElement(self, (residue,))

    @property
    def zero(self) -> FieldElement:
        return self._elem1(0) if self.e == 1 else self.element(0)

    @property
    def one(self) -> FieldElement:
        return self._elem1(1) if self.e == 1 else self.element(1)

    def elements(self) -> Iterator[FieldElement]:
        """All q elements in the canonical (coordinate-lexicographic) order."""
        if self._elements is not None:
            return iter(self._elements)
        return (FieldElement(self, coords)
                for coords in itertools.product(range(self.p), repeat=self.e))

    def units(self) -> Iterator[FieldElement]:
        """All nonzero elements, canonical order."""
        return (x for x in self.elements() if x)

    # -- text formats ----------------------------------------------------------

    def format_element(self, x: FieldElement) -> str:
        if self.e == 1:
            return str(x.coords[0])
        terms = []
        for k, c in enumerate(x.coords):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("t" if c == 1 else f"{c}*t")
            else:
                terms.append(f"t^{k}" if c == 1 else f"{c}*t^{k}")
        return "+".join(terms) if terms else "0"

    def parse(self, text: str) -> FieldElement:
        """Inverse of ``format_element``; also accepts plain integers."""
        s = text.replace(" ", "")
        if not s:
            raise DomainError("empty element string")
        try:
            return self.element(int(s))
        except ValueError:
            pass
        coords = [0] * self.e
        for term in s.split("+"):
            if not term:
                raise DomainError(f"malformed element string {text!r}")
            if "t" not in term:
                try:
                    coords[0] += int(term)
                except ValueError:
                    raise DomainError(f"malformed element string {text!r}") from None
                continue
            left, _, right = term.partition("t")
            try:
                c = 1 if left == "" else int(left[:-1]) if left.endswith("*") else int(left)
                k = 1 if right == "" else int(right[1:]) if right.startswith("^") else None
            except ValueError:
                raise DomainError(f"malformed element string {text!r}") from None
            if k is None or not 0 <= k:
                raise DomainError(f"malformed element string {text!r}")
            if k >= self.e:
                raise DomainError(
                    f"term {term!r} exceeds the coordinate range of {self}")
            coords[k] += c
        return self.element(coords)

    def spec_string(self) -> str:
        return str(self.p) if self.e == 1 else f"{self.p}^{self.e}"

    def __eq__(self, other):
        if self is other:
            return True
        if isinstance(other, Field):
            return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"Field({self.p})"
        return f"Field({self.p}, {self.e})"

    def __str__(self):
        return f"F_{self.q}"


def parse_field_spec(spec: str) -> Field:
    """Build a field from a spec string: "p" or "p^e", e.g. "5" or "3^2"."""
    s = spec.strip()
    try:
        if "^" in s:
            p_text, e_text = s.split("^", 1)
            return Field(int(p_text), int(e_text))
        return Field(int(s))
    except ValueError:
        raise DomainError(f"unknown field spec {spec!r}") from None
