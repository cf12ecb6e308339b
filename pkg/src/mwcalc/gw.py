"""The Grothendieck-Witt ring of Q and of simple number fields.

Elements are virtual diagonal forms (plus minus minus).  There is no normal
form; equality always goes through the invariant oracle (rank plus Witt
class).  Over Q entries are canonicalized to sign times a square-free
positive integer, which makes syntactic cancellation effective before the
oracle runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import squarefree_part
from .fields import FieldDescriptor, FieldElem, FieldError, QQ
from .quadform import DiagForm, Tri, witt_equal


def _canon_entry(field: FieldDescriptor, a: FieldElem) -> FieldElem:
    if field.is_rationals():
        return field.coerce(squarefree_part(a.as_fraction()))
    return a


@dataclass(frozen=True)
class GWElem:
    field: FieldDescriptor
    plus: tuple  # FieldElems
    minus: tuple

    @staticmethod
    def make(field: FieldDescriptor, plus=(), minus=()) -> "GWElem":
        ps = [_canon_entry(field, field.coerce(a)) for a in plus]
        ms = [_canon_entry(field, field.coerce(a)) for a in minus]
        if any(a.is_zero() for a in ps + ms):
            raise FieldError("<0> is not a form")
        # syntactic cancellation of identical entries across the difference
        for a in list(ps):
            if a in ms and a in ps:
                ps.remove(a)
                ms.remove(a)
        return GWElem(field, tuple(ps), tuple(ms))

    @staticmethod
    def zero(field: FieldDescriptor) -> "GWElem":
        return GWElem(field, (), ())

    @staticmethod
    def one(field: FieldDescriptor) -> "GWElem":
        return gw_one_form(field.one())

    def rank(self) -> int:
        return len(self.plus) - len(self.minus)

    def is_syntactic_zero(self) -> bool:
        return not self.plus and not self.minus

    def __add__(self, other: "GWElem") -> "GWElem":
        if isinstance(other, int):
            if other == 0:
                return self
            return NotImplemented
        if self.field != other.field:
            raise FieldError("field mismatch")
        return GWElem.make(self.field, self.plus + other.plus, self.minus + other.minus)

    __radd__ = __add__

    def __neg__(self) -> "GWElem":
        return GWElem(self.field, self.minus, self.plus)

    def __sub__(self, other: "GWElem") -> "GWElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other >= 0:
                out = GWElem.zero(self.field)
                for _ in range(other):
                    out = out + self
                return out
            return -(self * (-other))
        if self.field != other.field:
            raise FieldError("field mismatch")
        plus, minus = [], []
        for a in self.plus:
            for b in other.plus:
                plus.append(a * b)
            for b in other.minus:
                minus.append(a * b)
        for a in self.minus:
            for b in other.plus:
                minus.append(a * b)
            for b in other.minus:
                plus.append(a * b)
        return GWElem.make(self.field, plus, minus)

    __rmul__ = __mul__

    def scaled(self, c) -> "GWElem":
        c = self.field.coerce(c)
        return GWElem.make(
            self.field, [c * a for a in self.plus], [c * a for a in self.minus]
        )

    def __str__(self) -> str:
        terms = [f"<{a}>" for a in self.plus] + [f"-<{a}>" for a in self.minus]
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    __repr__ = __str__


def gw_one_form(a: FieldElem) -> GWElem:
    """The rank-one form <a>."""
    if a.is_zero():
        raise FieldError("<0> is not a form")
    return GWElem.make(a.field, [a])


def gw_mul(x: GWElem, y: GWElem) -> GWElem:
    return x * y


def n_epsilon(field: FieldDescriptor, n: int) -> GWElem:
    """n_eps = <1> + <-1> + <1> + ...; for n < 0 it is -<-1> * (-n)_eps."""
    if n < 0:
        return -(n_epsilon(field, -n).scaled(-1))
    entries = [(-1) ** i for i in range(n)]
    return GWElem.make(field, entries)


def hyperbolic(field: FieldDescriptor) -> GWElem:
    return GWElem.make(field, [1, -1])


def gw_equal(x: GWElem, y: GWElem) -> Tri:
    """Equality in GW = (rank, Witt class); complete over Q."""
    if x.field != y.field:
        raise FieldError("field mismatch")
    if x.rank() != y.rank():
        return Tri.NOT_EQUAL
    f = DiagForm.make(x.field, x.plus + y.minus) if (x.plus or y.minus) else DiagForm(x.field, ())
    g = DiagForm.make(x.field, y.plus + x.minus) if (y.plus or x.minus) else DiagForm(x.field, ())
    return witt_equal(f, g)


def gw_signatures(x: GWElem) -> list[int]:
    from .quadform import signature

    pos = signature(DiagForm(x.field, x.plus))
    neg = signature(DiagForm(x.field, x.minus))
    return [p - n for p, n in zip(pos, neg)]


def gw_to_witt_form(x: GWElem) -> DiagForm:
    """A representative diagonal form of the Witt class of x (<a> - <b> ~ <a> + <-b>)."""
    return DiagForm.make(x.field, x.plus + tuple(-a for a in x.minus)) if (
        x.plus or x.minus
    ) else DiagForm(x.field, ())
