"""Exact real-root isolation via Sturm sequences, and real embedding signs.

Polynomials enter as lists of Fractions (low degree first).  Intervals carry
rational endpoints; refinement is plain bisection steered by Sturm counts, so
every answer is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import FieldElem, FieldError, Poly, QQ, absolutize, rep_poly


def _fr(f: Poly) -> list[Fraction]:
    return [c.as_fraction() for c in f.coeffs]


def _eval(cs: list[Fraction], x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(cs):
        out = out * x + c
    return out


def _deriv(cs: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(cs)][1:]


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    rem = list(a)
    while len(rem) >= len(b) and rem:
        q = rem[-1] / b[-1]
        shift = len(rem) - len(b)
        for j in range(len(b)):
            rem[shift + j] -= q * b[j]
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def sturm_sequence(cs: list[Fraction]) -> list[list[Fraction]]:
    seq = [list(cs), _deriv(cs)]
    while seq[-1]:
        r = _rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _variations(values: list[Fraction]) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_real_roots(cs: list[Fraction], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b]; cs must be square-free for exact counts."""
    seq = sturm_sequence(cs)
    va = _variations([_eval(s, a) for s in seq])
    vb = _variations([_eval(s, b) for s in seq])
    return va - vb


def root_bound(cs: list[Fraction]) -> Fraction:
    lead = cs[-1]
    return 1 + max((abs(c / lead) for c in cs[:-1]), default=Fraction(0))


def isolate_real_roots(f: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open-ish intervals (a, b], one per distinct real root, ascending."""
    cs = _fr(f.squarefree_part())
    if len(cs) <= 1:
        return []
    bound = root_bound(cs)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound - 1, bound)]
    while stack:
        a, b = stack.pop()
        n = count_real_roots(cs, a, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        while _eval(cs, m) == 0:
            m = (a + m) / 2  # move off an exact rational root
        stack.append((a, m))
        stack.append((m, b))
    return sorted(out)


def refine_to_avoid(cs: list[Fraction], interval, avoid: list[Fraction]):
    """Shrink an isolating interval of cs until it excludes all roots of avoid."""
    a, b = interval
    savoid = sturm_sequence(avoid) if len(avoid) > 1 else None

    def avoid_clear(a, b):
        if _eval(avoid, a) == 0 or _eval(avoid, b) == 0:
            return False
        if savoid is None:
            return True
        va = _variations([_eval(s, a) for s in savoid])
        vb = _variations([_eval(s, b) for s in savoid])
        return va == vb

    while not avoid_clear(a, b):
        m = (a + b) / 2
        while _eval(cs, m) == 0 or _eval(avoid, m) == 0:
            m = (a + m) / 2
        if count_real_roots(cs, a, m) == 1:
            b = m
        else:
            a = m
    return a, b


def real_embedding_signs(e: FieldElem) -> list[int]:
    """Sign of e under each real embedding, ordered by the embedded generator value.

    Over Q there is one embedding.  Over a tower the field is rewritten through
    a primitive element; the signs are evaluated exactly by isolating the real
    roots of its minimal polynomial and refining until the representative
    polynomial has constant sign on each isolating interval.
    """
    if e.is_zero():
        raise FieldError("zero has no sign")
    field = e.field
    if field.is_rationals():
        return [1 if e.as_fraction() > 0 else -1]
    model = absolutize(field)
    x = model.to_simple(e)
    simple = model.simple_field
    p = _fr(simple.minpoly.map_coeffs(lambda c: c, QQ))  # type: ignore[attr-defined]
    gp = rep_poly(x)
    g = _fr(gp)
    gsq = _fr(gp.squarefree_part()) if gp.degree() >= 1 else g
    signs = []
    for interval in isolate_real_roots(Poly.from_coeffs(QQ, p)):
        a, b = refine_to_avoid(p, interval, gsq)
        # g now has constant nonzero sign on [a, b], which contains the root
        val = _eval(g, (a + b) / 2)
        signs.append(1 if val > 0 else -1)
    return signs


def number_of_real_embeddings(field) -> int:
    if field.is_rationals():
        return 1
    model = absolutize(field)
    p = model.simple_field.minpoly  # type: ignore[attr-defined]
    return len(isolate_real_roots(p))
