"""Exact arithmetic in Q and in simple number-field towers.

Representation:

* A field is either ``QQ`` (the rationals) or ``SimpleExtension(base, minpoly,
  gen)`` where ``minpoly`` is monic and irreducible over ``base``.  Towers are
  nested descriptors; ``absolute_degree`` multiplies up the tower.
* A ``FieldElem`` stores its field and a reduced representative: a ``Fraction``
  over ``QQ``, or a fixed-length tuple of base-field elements (coefficients of
  1, g, g^2, ... below the minimal polynomial degree).
* A ``Poly`` is a dense univariate polynomial over a field, coefficient of
  ``x^i`` at index ``i``, leading coefficient nonzero (the zero polynomial has
  an empty coefficient tuple).

All values are immutable; all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction  # arbitrary-precision rationals, gcd-reduced with positive denominator


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# field descriptors


class FieldDescriptor:
    def is_rationals(self) -> bool:
        raise NotImplementedError

    def absolute_degree(self) -> int:
        raise NotImplementedError

    def tower(self) -> list["FieldDescriptor"]:
        """Descriptors from QQ up to self, inclusive."""
        raise NotImplementedError

    # element constructors -------------------------------------------------
    def zero(self) -> "FieldElem":
        return self.coerce(0)

    def one(self) -> "FieldElem":
        return self.coerce(1)

    def coerce(self, x) -> "FieldElem":
        """Coerce an int, Fraction, or element of a subtower into this field."""
        raise NotImplementedError

    def generator(self) -> "FieldElem":
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(FieldDescriptor):
    def is_rationals(self) -> bool:
        return True

    def absolute_degree(self) -> int:
        return 1

    def tower(self) -> list[FieldDescriptor]:
        return [self]

    def coerce(self, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            if x.field == self:
                return x
            raise FieldError(f"cannot coerce element of {x.field} into Q")
        return FieldElem(self, Fraction(x))

    def generator(self) -> "FieldElem":
        raise FieldError("Q has no generator")

    def __str__(self) -> str:
        return "Q"


QQ = Rationals()


@dataclass(frozen=True)
class SimpleExtension(FieldDescriptor):
    base: FieldDescriptor
    minpoly: "Poly"  # monic, irreducible over base, degree >= 2
    gen: str

    def is_rationals(self) -> bool:
        return False

    def degree(self) -> int:
        return self.minpoly.degree()

    def absolute_degree(self) -> int:
        return self.degree() * self.base.absolute_degree()

    def tower(self) -> list[FieldDescriptor]:
        return self.base.tower() + [self]

    def coerce(self, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            if x.field == self:
                return x
            # elements of any field lower in the tower embed as constants
            if x.field in self.base.tower():
                lifted = self.base.coerce(x)
                return self._from_coeffs([lifted] + [self.base.zero()] * (self.degree() - 1))
            raise FieldError(f"cannot coerce element of {x.field} into {self}")
        c = self.base.coerce(x)
        return self._from_coeffs([c] + [self.base.zero()] * (self.degree() - 1))

    def _from_coeffs(self, coeffs: Sequence["FieldElem"]) -> "FieldElem":
        n = self.degree()
        cs = list(coeffs) + [self.base.zero()] * (n - len(coeffs))
        return FieldElem(self, tuple(cs[:n]))

    def generator(self) -> "FieldElem":
        n = self.degree()
        coeffs = [self.base.zero()] * n
        coeffs[1] = self.base.one()
        return FieldElem(self, tuple(coeffs))

    def __str__(self) -> str:
        return f"{self.base}({self.gen} | {self.minpoly.to_str(self.gen)})"


def extend(base: FieldDescriptor, gen: str, coeffs: Iterable) -> SimpleExtension:
    """Build base(gen) from minimal-polynomial coefficients (low degree first).

    The polynomial must be monic of degree >= 2 and is checked for
    irreducibility over the base; extensions of reducible polynomials are
    rejected rather than trusted.
    """
    p = Poly.from_coeffs(base, coeffs)
    if p.degree() < 2:
        raise FieldError("minimal polynomial must have degree >= 2")
    if not p.lead().is_one():
        raise FieldError("minimal polynomial must be monic")
    used = {f.gen for f in base.tower() if isinstance(f, SimpleExtension)}
    if gen in used:
        raise FieldError(f"generator name {gen!r} already used in the tower")
    from .factoring import is_irreducible

    if not is_irreducible(p):
        raise FieldError(f"{p.to_str(gen)} is reducible over {base}")
    return SimpleExtension(base, p, gen)


# ---------------------------------------------------------------------------
# field elements

_Tuple = tuple


@dataclass(frozen=True)
class FieldElem:
    field: FieldDescriptor
    rep: Union[Fraction, _Tuple]

    # predicates ------------------------------------------------------------
    def is_zero(self) -> bool:
        if isinstance(self.rep, Fraction):
            return self.rep == 0
        return all(c.is_zero() for c in self.rep)

    def is_one(self) -> bool:
        return (self - self.field.one()).is_zero()

    def is_rational(self) -> bool:
        """True if the element lies in the prime field Q."""
        if isinstance(self.rep, Fraction):
            return True
        return all(c.is_zero() for c in self.rep[1:]) and self.rep[0].is_rational()

    def as_fraction(self) -> Fraction:
        if isinstance(self.rep, Fraction):
            return self.rep
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return self.rep[0].as_fraction()

    # coercion helper -------------------------------------------------------
    def _pair(self, other) -> tuple["FieldElem", "FieldElem"]:
        if isinstance(other, FieldElem):
            if other.field == self.field:
                return self, other
            if self.field in other.field.tower():
                return other.field.coerce(self), other
            if other.field in self.field.tower():
                return self, self.field.coerce(other)
            raise FieldError(f"elements of {self.field} and {other.field} are incompatible")
        return self, self.field.coerce(other)

    # ring operations -------------------------------------------------------
    def __add__(self, other) -> "FieldElem":
        a, b = self._pair(other)
        if isinstance(a.rep, Fraction):
            return FieldElem(a.field, a.rep + b.rep)
        return FieldElem(a.field, tuple(x + y for x, y in zip(a.rep, b.rep)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        if isinstance(self.rep, Fraction):
            return FieldElem(self.field, -self.rep)
        return FieldElem(self.field, tuple(-c for c in self.rep))

    def __sub__(self, other) -> "FieldElem":
        a, b = self._pair(other)
        return a + (-b)

    def __rsub__(self, other) -> "FieldElem":
        a, b = self._pair(other)
        return b + (-a)

    def __mul__(self, other) -> "FieldElem":
        a, b = self._pair(other)
        if isinstance(a.rep, Fraction):
            return FieldElem(a.field, a.rep * b.rep)
        field: SimpleExtension = a.field  # type: ignore[assignment]
        prod = _list_mul(list(a.rep), list(b.rep), field.base)
        return FieldElem(field, tuple(_list_mod_minpoly(prod, field)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("field element is zero")
        if isinstance(self.rep, Fraction):
            return FieldElem(self.field, 1 / self.rep)
        field: SimpleExtension = self.field  # type: ignore[assignment]
        # extended Euclid on (rep, minpoly) over the base field
        r = Poly.from_coeffs(field.base, self.rep)
        inv = _poly_invert_mod(r, field.minpoly)
        return field._from_coeffs(list(inv.coeffs))

    def __truediv__(self, other) -> "FieldElem":
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other) -> "FieldElem":
        a, b = self._pair(other)
        return b * a.inverse()

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElem):
            try:
                other = self.field.coerce(other)
            except (FieldError, TypeError, ValueError):
                return NotImplemented
        if self.field != other.field:
            try:
                a, b = self._pair(other)
            except FieldError:
                return False
            return a.rep == b.rep
        return self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.field, self.rep))

    def __str__(self) -> str:
        if isinstance(self.rep, Fraction):
            return str(self.rep)
        field: SimpleExtension = self.field  # type: ignore[assignment]
        return _coeffs_to_str(self.rep, field.gen)

    __repr__ = __str__


def _coeffs_to_str(coeffs: Sequence[FieldElem], var: str) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        cs = str(c)
        if i == 0:
            parts.append(cs)
            continue
        mon = var if i == 1 else f"{var}^{i}"
        if cs == "1":
            parts.append(mon)
        elif cs == "-1":
            parts.append(f"-{mon}")
        elif ("+" in cs[1:]) or ("-" in cs[1:]) or ("/" in cs):
            parts.append(f"({cs})*{mon}")
        else:
            parts.append(f"{cs}*{mon}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f"-{p[1:]}" if p.startswith("-") else f"+{p}"
    return out


# low-level dense coefficient helpers (lists of base-field elements)


def _list_mul(a: list, b: list, base: FieldDescriptor) -> list:
    out = [base.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _list_mod_minpoly(coeffs: list, field: SimpleExtension) -> list:
    n = field.degree()
    p = field.minpoly.coeffs  # monic
    work = list(coeffs)
    for i in range(len(work) - 1, n - 1, -1):
        c = work[i]
        if c.is_zero():
            continue
        work[i] = field.base.zero()
        for j in range(n):
            work[i - n + j] = work[i - n + j] - c * p[j]
    work = work[:n] + [field.base.zero()] * max(0, n - len(work))
    return work[:n]


# ---------------------------------------------------------------------------
# univariate polynomials


@dataclass(frozen=True)
class Poly:
    field: FieldDescriptor
    coeffs: tuple  # coeffs[i] is the coefficient of x^i; leading nonzero

    @staticmethod
    def from_coeffs(field: FieldDescriptor, coeffs: Iterable) -> "Poly":
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def zero(field: FieldDescriptor) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def const(field: FieldDescriptor, c) -> "Poly":
        return Poly.from_coeffs(field, [c])

    @staticmethod
    def x(field: FieldDescriptor) -> "Poly":
        return Poly.from_coeffs(field, [0, 1])

    @staticmethod
    def linear(field: FieldDescriptor, root) -> "Poly":
        """The monic polynomial x - root."""
        return Poly.from_coeffs(field, [-field.coerce(root), 1])

    # inspectors ------------------------------------------------------------
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lead(self) -> FieldElem:
        if self.is_zero():
            raise FieldError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self) -> FieldElem:
        return self.coeffs[0] if self.coeffs else self.field.zero()

    def coeff(self, i: int) -> FieldElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    # arithmetic ------------------------------------------------------------
    def _coerce_other(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldError("polynomials over different fields")
            return other
        return Poly.const(self.field, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce_other(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.from_coeffs(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce_other(other))

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction, FieldElem)):
            c = self.field.coerce(other)
            if c.is_zero():
                return Poly.zero(self.field)
            return Poly(self.field, tuple(x * c for x in self.coeffs))
        other = self._coerce_other(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        out = _list_mul(list(self.coeffs), list(other.coeffs), self.field)
        return Poly.from_coeffs(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(self.field, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Quotient and remainder; other must be nonzero."""
        other = self._coerce_other(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db, lb = other.degree(), other.lead()
        if self.degree() < db:
            return Poly.zero(self.field), self
        quo = [self.field.zero()] * (self.degree() - db + 1)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            q = c / lb
            quo[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] = rem[i - db + j] - q * other.coeffs[j]
        return Poly.from_coeffs(self.field, quo), Poly.from_coeffs(self.field, rem)

    def __floordiv__(self, other) -> "Poly":
        return self.divmod(self._coerce_other(other))[0]

    def __mod__(self, other) -> "Poly":
        return self.divmod(self._coerce_other(other))[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * self.lead().inverse()

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor."""
        a, b = self, self._coerce_other(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "Poly":
        if self.degree() < 1:
            return Poly.zero(self.field)
        return Poly.from_coeffs(
            self.field, [self.coeffs[i] * i for i in range(1, len(self.coeffs))]
        )

    def eval(self, x) -> FieldElem:
        x = self.field.coerce(x) if not isinstance(x, FieldElem) else x
        out = x.field.zero()
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x))."""
        out = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            out = out * inner + Poly.const(self.field, c)
        return out

    def squarefree_part(self) -> "Poly":
        if self.degree() < 1:
            return self.monic()
        return (self // self.gcd(self.derivative())).monic()

    def resultant(self, other: "Poly") -> FieldElem:
        """Res(self, other) over the coefficient field."""
        a, b = self, self._coerce_other(other)
        if a.is_zero() or b.is_zero():
            return self.field.zero()
        res = self.field.one()
        while b.degree() > 0:
            da, db = a.degree(), b.degree()
            r = a % b
            if r.is_zero():
                return self.field.zero()
            sign = -self.field.one() if (da * db) % 2 else self.field.one()
            res = res * sign * b.lead() ** (da - r.degree())
            a, b = b, r
        return res * b.lead() ** a.degree()

    def map_coeffs(self, func, field: FieldDescriptor) -> "Poly":
        return Poly.from_coeffs(field, [func(c) for c in self.coeffs])

    def to_str(self, var: str = "x") -> str:
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
                continue
            mon = var if i == 1 else f"{var}^{i}"
            if cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append(f"-{mon}")
            elif ("+" in cs[1:]) or ("-" in cs[1:]) or ("/" in cs) or ("*" in cs):
                parts.append(f"({cs})*{mon}")
            else:
                parts.append(f"{cs}*{mon}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f"-{p[1:]}" if p.startswith("-") else f"+{p}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    __repr__ = __str__


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Exact division with remainder: a = q*b + r with deg r < deg b."""
    return a.divmod(b)


def _poly_invert_mod(r: Poly, m: Poly) -> Poly:
    """Inverse of r modulo the monic polynomial m (gcd must be 1)."""
    f = r.field
    r0, r1 = m, r % m
    s0, s1 = Poly.zero(f), Poly.const(f, 1)
    while r1.degree() > 0:
        q, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - q * s1
    if r1.is_zero():
        raise FieldError("element is not invertible modulo the minimal polynomial")
    return (s1 * r1.lead().inverse()) % m


# ---------------------------------------------------------------------------
# norms, traces, squares


def nf_norm(e: FieldElem) -> FieldElem:
    """Norm down one step of the tower: N_{base(g)/base}(e)."""
    if e.field.is_rationals():
        raise FieldError("element of Q has no relative norm")
    field: SimpleExtension = e.field  # type: ignore[assignment]
    r = Poly.from_coeffs(field.base, e.rep)
    return field.minpoly.resultant(r)


def nf_norm_to(e: FieldElem, down: FieldDescriptor) -> FieldElem:
    """Norm down the tower to the subfield ``down``."""
    while e.field != down:
        if e.field.is_rationals():
            raise FieldError(f"{down} is not below {e.field}")
        e = nf_norm(e)
    return e


def nf_trace(e: FieldElem) -> FieldElem:
    """Trace down one step of the tower."""
    if e.field.is_rationals():
        raise FieldError("element of Q has no relative trace")
    field: SimpleExtension = e.field  # type: ignore[assignment]
    n = field.degree()
    # trace of the multiplication-by-e matrix in the power basis
    tr = field.base.zero()
    for i in range(n):
        basis_vec = [field.base.zero()] * n
        basis_vec[i] = field.base.one()
        col = _list_mod_minpoly(_list_mul(list(e.rep), basis_vec, field.base), field)
        tr = tr + col[i]
    return tr


def nf_trace_to(e: FieldElem, down: FieldDescriptor) -> FieldElem:
    while e.field != down:
        if e.field.is_rationals():
            raise FieldError(f"{down} is not below {e.field}")
        e = nf_trace(e)
    return e


def rep_poly(e: FieldElem) -> Poly:
    """The representative of e as a polynomial in the top generator over the base."""
    if e.field.is_rationals():
        return Poly.const(QQ, e.rep)
    field: SimpleExtension = e.field  # type: ignore[assignment]
    return Poly.from_coeffs(field.base, e.rep)


def nf_is_square(e: FieldElem) -> bool:
    """Exact square test: does x^2 - e have a root in e's field?"""
    if e.is_zero():
        raise FieldError("zero is excluded from square-class tests")
    return nf_sqrt(e) is not None


def nf_sqrt(e: FieldElem):
    """A square root of e in its own field, or None."""
    if e.field.is_rationals():
        from .arith import is_rational_square
        import math

        q = e.as_fraction()
        if q < 0 or not is_rational_square(q):
            return None
        return FieldElem(QQ, Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator)))
    from .factoring import roots_in_field

    f = Poly.from_coeffs(e.field, [-e, e.field.zero(), e.field.one()])
    rts = roots_in_field(f)
    return rts[0] if rts else None


# ---------------------------------------------------------------------------
# absolute model of a tower (primitive element), via linear algebra over Q


@dataclass(frozen=True)
class AbsoluteModel:
    """A tower L presented as a simple extension Q(delta), with maps both ways."""

    tower_field: FieldDescriptor
    simple_field: FieldDescriptor  # QQ or a one-step SimpleExtension over QQ
    delta: FieldElem  # the primitive element, as an element of the tower
    _pows: tuple  # coordinate vectors of 1, delta, ..., delta^(d-1) in the tower basis

    def to_simple(self, e: FieldElem) -> FieldElem:
        """Rewrite an element of the tower in terms of the primitive element."""
        if self.tower_field == self.simple_field:
            return e
        vec = _abs_coords(e)
        sol = _solve_linear([list(p) for p in self._pows], vec)
        if sol is None:
            raise FieldError("internal: element outside the primitive-element span")
        return self.simple_field._from_coeffs([QQ.coerce(c) for c in sol])  # type: ignore[attr-defined]

    def from_simple(self, e: FieldElem) -> FieldElem:
        if self.tower_field == self.simple_field:
            return e
        out = self.tower_field.zero()
        for c in reversed(list(rep_poly(e).coeffs) or [QQ.zero()]):
            out = out * self.delta + self.tower_field.coerce(c.as_fraction())
        return out


def _abs_basis_size(field: FieldDescriptor) -> int:
    return field.absolute_degree()


def _abs_coords(e: FieldElem) -> list[Fraction]:
    """Coordinates of e in the product basis of its tower over Q."""
    if isinstance(e.rep, Fraction):
        return [e.rep]
    out: list[Fraction] = []
    for c in e.rep:
        out.extend(_abs_coords(c))
    return out


def _solve_linear(cols: list[list[Fraction]], target: list[Fraction]):
    """Solve sum_j x_j * cols[j] = target over Q; None if inconsistent."""
    m = len(target)
    n = len(cols)
    a = [[cols[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    piv_cols = []
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, m) if a[r][col] != 0), None)
        if sel is None:
            continue
        a[row], a[sel] = a[sel], a[row]
        pv = a[row][col]
        a[row] = [x / pv for x in a[row]]
        for r in range(m):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        piv_cols.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if a[r][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for r, col in enumerate(piv_cols):
        sol[col] = a[r][n]
    return sol


def _tower_delta(field: FieldDescriptor) -> FieldElem:
    """A primitive element of the tower: integer combination of the generators."""
    gens = [f for f in field.tower() if isinstance(f, SimpleExtension)]
    if not gens:
        return QQ.zero()
    if len(gens) == 1:
        return field.generator()
    for w in range(1, 64):
        delta = field.zero()
        for i, g in enumerate(gens):
            delta = delta + field.coerce(g.generator()) * (w**i)
        if element_degree(delta) == field.absolute_degree():
            return delta
    raise FieldError("no primitive element found (tower too degenerate)")


def element_degree(e: FieldElem) -> int:
    return len(min_poly_over_Q(e)) - 1


def min_poly_over_Q(e: FieldElem) -> list[Fraction]:
    """Coefficients (low first, monic) of the minimal polynomial of e over Q.

    Found as the first linear dependence among 1, e, e^2, ... in the tower's
    Q-basis; a dependence exists at the latest at the absolute degree.
    """
    d = _abs_basis_size(e.field)
    pows: list[list[Fraction]] = []
    cur = e.field.one()
    for _ in range(d + 1):
        vec = _abs_coords(cur)
        if pows:
            sol = _solve_linear(pows, vec)
            if sol is not None:
                return [-c for c in sol] + [Fraction(1)]
        pows.append(vec)
        cur = cur * e
    raise FieldError("internal: minimal polynomial search failed")


def absolutize(field: FieldDescriptor) -> AbsoluteModel:
    """Present a tower as a simple extension of Q with conversion maps."""
    exts = [f for f in field.tower() if isinstance(f, SimpleExtension)]
    if len(exts) <= 1:
        return AbsoluteModel(field, field, field.zero(), ())
    delta = _tower_delta(field)
    mp = min_poly_over_Q(delta)
    simple = extend(QQ, "_w", mp)
    d = len(mp) - 1
    pows = []
    cur = field.one()
    for _ in range(d):
        pows.append(tuple(_abs_coords(cur)))
        cur = cur * delta
    return AbsoluteModel(field, simple, delta, tuple(pows))
