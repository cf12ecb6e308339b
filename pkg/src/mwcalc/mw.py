"""Milnor-Witt K-theory of Q and of simple number fields.

An element of degree n is a sum of terms (coefficient, symbol, eta_extra):

* n >= 1: the symbol has length n, eta_extra = 0, and the coefficient is a
  Grothendieck-Witt element (every eta has been folded through <a> = 1 + eta[a]);
* n = 0: empty symbol, a plain GW coefficient;
* n < 0: empty symbol, eta_extra = -n, and the coefficient matters only
  through its Witt class (eta kills hyperbolic forms).

Equality is decided through the two projections of Morel's fiber-product
description: the Milnor part (eta -> 0) and the Witt part ([a] -> <a> - 1,
eta -> 1).  Over Q both projections are decidable, so the oracle is complete;
over extensions it degrades honestly to Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import factor_int
from .fields import FieldDescriptor, FieldElem, FieldError, QQ
from .gw import GWElem, gw_equal, gw_one_form, gw_to_witt_form, hyperbolic, n_epsilon
from .quadform import DiagForm, Place, REAL_PLACE, Tri, hilbert_symbol, witt_equal


@dataclass(frozen=True)
class MWTerm:
    coeff: GWElem
    symbol: tuple  # FieldElems, all nonzero, none equal to 1
    eta_extra: int = 0


@dataclass(frozen=True)
class MWElem:
    field: FieldDescriptor
    degree: int
    terms: tuple  # MWTerms, merged by (symbol, eta_extra)

    # constructors ----------------------------------------------------------
    @staticmethod
    def zero(field: FieldDescriptor, degree: int) -> "MWElem":
        return MWElem(field, degree, ())

    @staticmethod
    def from_gw(c: GWElem) -> "MWElem":
        return _build(c.field, 0, [MWTerm(c, ())])

    def is_syntactic_zero(self) -> bool:
        return not self.terms

    # group structure ---------------------------------------------------------
    def __add__(self, other: "MWElem") -> "MWElem":
        if isinstance(other, int) and other == 0:
            return self
        if self.field != other.field or self.degree != other.degree:
            raise FieldError("degree/field mismatch in addition")
        return _build(self.field, self.degree, list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self) -> "MWElem":
        return MWElem(
            self.field, self.degree, tuple(MWTerm(-t.coeff, t.symbol, t.eta_extra) for t in self.terms)
        )

    def __sub__(self, other: "MWElem") -> "MWElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = MWElem.zero(self.field, self.degree)
            for _ in range(abs(other)):
                out = out + self
            return out if other >= 0 else -out
        if isinstance(other, GWElem):
            other = MWElem.from_gw(other)
        if self.field != other.field:
            raise FieldError("field mismatch in multiplication")
        return mw_mul(self, other)

    __rmul__ = __mul__

    def scaled(self, c: GWElem) -> "MWElem":
        return MWElem(
            self.field, self.degree, tuple(MWTerm(c * t.coeff, t.symbol, t.eta_extra) for t in self.terms)
        )

    def __str__(self) -> str:
        if not self.terms:
            return f"0 (degree {self.degree})"
        bits = []
        for t in self.terms:
            sym = "".join(f"[{e}]" for e in t.symbol)
            eta = f"eta^{t.eta_extra}*" if t.eta_extra else ""
            bits.append(f"({t.coeff})*{eta}{sym or '1'}")
        return " + ".join(bits)

    __repr__ = __str__


def _build(field: FieldDescriptor, degree: int, terms: list[MWTerm]) -> MWElem:
    merged: dict[tuple, GWElem] = {}
    order: list[tuple] = []
    for t in terms:
        if any(e.is_zero() for e in t.symbol):
            raise FieldError("symbol entries must be nonzero")
        if any(e.is_one() for e in t.symbol):
            continue  # [1] = 0
        key = (t.symbol, t.eta_extra)
        if key in merged:
            merged[key] = merged[key] + t.coeff
        else:
            merged[key] = t.coeff
            order.append(key)
    out = []
    for key in order:
        c = merged[key]
        if c.is_syntactic_zero():
            continue
        out.append(MWTerm(c, key[0], key[1]))
    return MWElem(field, degree, tuple(out))


# ---------------------------------------------------------------------------
# generators


def mw_symbol(field: FieldDescriptor, units) -> MWElem:
    """[u1, ..., un] with coefficient <1>."""
    us = tuple(field.coerce(u) for u in units)
    if any(u.is_zero() for u in us):
        raise FieldError("symbol entries must be nonzero")
    return _build(field, len(us), [MWTerm(GWElem.one(field), us)])


def eta(field: FieldDescriptor) -> MWElem:
    return MWElem(field, -1, (MWTerm(GWElem.one(field), (), 1),))


def mw_gw(field: FieldDescriptor, c: GWElem) -> MWElem:
    return MWElem.from_gw(c)


# ---------------------------------------------------------------------------
# multiplication with eta folding


def _fold_term(field: FieldDescriptor, coeff: GWElem, symbol: tuple, eta_extra: int) -> MWTerm:
    """Push eta factors into the GW coefficient while symbol slots remain."""
    sym = list(symbol)
    while eta_extra > 0 and sym:
        a = sym.pop(0)
        coeff = coeff * (gw_one_form(a) - GWElem.one(field))
        eta_extra -= 1
    return MWTerm(coeff, tuple(sym), eta_extra)


def mw_mul(x: MWElem, y: MWElem) -> MWElem:
    degree = x.degree + y.degree
    terms = []
    for s in x.terms:
        for t in y.terms:
            folded = _fold_term(
                x.field, s.coeff * t.coeff, s.symbol + t.symbol, s.eta_extra + t.eta_extra
            )
            terms.append(folded)
    return _build(x.field, degree, terms)


# ---------------------------------------------------------------------------
# the two projections


@dataclass(frozen=True)
class MilnorElem:
    field: FieldDescriptor
    degree: int
    terms: tuple  # pairs (int coefficient, tuple of FieldElems)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{{{','.join(str(e) for e in s)}}}" for c, s in self.terms)


def _milnor_build(field, degree, raw) -> MilnorElem:
    merged: dict[tuple, int] = {}
    order = []
    for c, s in raw:
        if any(e.is_one() for e in s):
            continue
        if s not in merged:
            merged[s] = 0
            order.append(s)
        merged[s] += c
    return MilnorElem(
        field, degree, tuple((merged[s], s) for s in order if merged[s] != 0)
    )


def to_milnor(x: MWElem) -> MilnorElem:
    """Quotient by eta: <a> -> 1, [a] -> {a}."""
    if x.degree < 0:
        raise FieldError("negative degree has no Milnor image")
    raw = []
    for t in x.terms:
        if t.eta_extra:
            continue
        raw.append((t.coeff.rank(), t.symbol))
    return _milnor_build(x.field, x.degree, raw)


def to_witt(x: MWElem) -> GWElem:
    """Image in the Witt ring: [a] -> <a> - 1, eta -> 1 (value matters mod h)."""
    out = GWElem.zero(x.field)
    one = GWElem.one(x.field)
    for t in x.terms:
        v = t.coeff
        for a in t.symbol:
            v = v * (gw_one_form(a) - one)
        out = out + v
    return out


# ---------------------------------------------------------------------------
# Milnor K-theory equality over Q


def _vp(q: Fraction, p: int) -> int:
    v = 0
    n = q.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = q.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _unit_part(q: Fraction, p: int) -> Fraction:
    return q / Fraction(p) ** _vp(q, p)


def _tame_symbol(a: Fraction, b: Fraction, p: int) -> int:
    """The residue of {a, b} at an odd prime p, as a unit of F_p."""
    va, vb = _vp(a, p), _vp(b, p)
    u = Fraction(-1) ** (va * vb) * _unit_part(a, p) ** vb / _unit_part(b, p) ** va
    num = u.numerator % p
    den = u.denominator % p
    return num * pow(den, -1, p) % p


def milnor_is_zero_Q(x: MilnorElem) -> bool:
    """Complete zero test in K^M_*(Q).

    Degree 0: integer sum.  Degree 1: the product in Q*.  Degree 2: tame
    residues at every relevant odd prime together with the 2-adic and real
    Hilbert components (Milnor's computation of K_2(Q)).  Degree >= 3: the
    real place alone.
    """
    if not x.field.is_rationals():
        raise FieldError("milnor_is_zero_Q expects Q coefficients")
    if x.degree == 0:
        return sum(c for c, _s in x.terms) == 0
    entries = [[e.as_fraction() for e in s] for _c, s in x.terms]
    coeffs = [c for c, _s in x.terms]
    if x.degree == 1:
        prod = Fraction(1)
        for c, (a,) in zip(coeffs, entries):
            prod *= a**c
        return prod == 1
    if x.degree == 2:
        primes: set[int] = set()
        for a, b in entries:
            primes |= {p for p in factor_int(a.numerator * a.denominator) if p != 2}
            primes |= {p for p in factor_int(b.numerator * b.denominator) if p != 2}
        for p in primes:
            acc = 1
            for c, (a, b) in zip(coeffs, entries):
                acc = acc * pow(_tame_symbol(a, b, p), c, p) % p
            if acc % p != 1:
                return False
        for v in (Place(2), REAL_PLACE):
            acc = 1
            for c, (a, b) in zip(coeffs, entries):
                if c % 2:
                    acc *= hilbert_symbol(a, b, v)
            if acc != 1:
                return False
        return True
    # degree >= 3: K^M_n(Q) = Z/2 detected by all-negative entries
    total = 0
    for c, s in zip(coeffs, entries):
        if all(a < 0 for a in s):
            total += c
    return total % 2 == 0


def milnor_equal_Q(x: MilnorElem, y: MilnorElem) -> bool:
    if x.degree != y.degree:
        raise FieldError("degree mismatch")
    diff = _milnor_build(x.field, x.degree, list(x.terms) + [(-c, s) for c, s in y.terms])
    return milnor_is_zero_Q(diff)


def _milnor_zero_tri(x: MilnorElem) -> Tri:
    if x.field.is_rationals():
        return Tri.EQUAL if milnor_is_zero_Q(x) else Tri.NOT_EQUAL
    if not x.terms:
        return Tri.EQUAL
    if x.degree == 0:
        return Tri.EQUAL if sum(c for c, _s in x.terms) == 0 else Tri.NOT_EQUAL
    if x.degree == 1:
        prod = x.field.one()
        for c, (a,) in x.terms:
            prod = prod * a**c
        return Tri.EQUAL if prod.is_one() else Tri.NOT_EQUAL
    return Tri.UNKNOWN


# ---------------------------------------------------------------------------
# the equality oracle


def mw_equal(x: MWElem, y: MWElem) -> Tri:
    """Equality through the (Milnor, Witt) pair; complete over Q."""
    if x.field != y.field or x.degree != y.degree:
        raise FieldError("degree/field mismatch")
    d = x - y
    if d.is_syntactic_zero():
        return Tri.EQUAL
    witt_d = to_witt(d)
    witt_res = witt_equal(gw_to_witt_form(witt_d), DiagForm(d.field, ()))
    if d.degree < 0:
        return witt_res
    milnor_res = _milnor_zero_tri(to_milnor(d))
    if milnor_res == Tri.NOT_EQUAL or witt_res == Tri.NOT_EQUAL:
        return Tri.NOT_EQUAL
    if milnor_res == Tri.EQUAL and witt_res == Tri.EQUAL:
        return Tri.EQUAL
    return Tri.UNKNOWN


def mw_is_zero(x: MWElem) -> Tri:
    return mw_equal(x, MWElem.zero(x.field, x.degree))
