"""Diagonal quadratic forms: Hilbert symbols, Hasse invariants, Witt equality.

Over Q the Witt-class decision is complete (rank parity, signature,
discriminant, Hasse invariants at the real place, 2, and the primes dividing
any entry -- Hasse-Minkowski).  Over extensions the oracle is three-valued and
honest: Equal only when a square-class cancellation chain exhibits it,
NotEqual when an invariant separates, Unknown otherwise.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .arith import factor_int, primes_dividing, squarefree_part
from .fields import FieldDescriptor, FieldElem, FieldError, QQ, nf_is_square
from .realroots import real_embedding_signs


class Tri(enum.Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not_equal"
    UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# places and Hilbert symbols over Q


@dataclass(frozen=True)
class Place:
    p: int | None = None  # None marks the real place

    def is_real(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "real" if self.p is None else str(self.p)


REAL_PLACE = Place(None)


def _square_class_pair(a: Fraction) -> int:
    """Integer in the square class of a (numerator times denominator)."""
    if a == 0:
        raise ValueError("zero argument to a Hilbert symbol")
    return a.numerator * a.denominator


def _legendre(u: int, p: int) -> int:
    ls = pow(u % p, (p - 1) // 2, p)
    return -1 if ls == p - 1 else 1


def hilbert_symbol(a, b, v: Place) -> int:
    """The Hilbert symbol (a, b)_v for nonzero rationals, valued in {+1, -1}."""
    a, b = Fraction(a), Fraction(b)
    ai, bi = _square_class_pair(a), _square_class_pair(b)
    if v.is_real():
        return -1 if (ai < 0 and bi < 0) else 1
    p = v.p
    alpha, beta = 0, 0
    while ai % p == 0:
        ai //= p
        alpha += 1
    while bi % p == 0:
        bi //= p
        beta += 1
    alpha, beta = alpha % 2, beta % 2
    if p != 2:
        out = 1
        if alpha and beta:
            out *= -1 if (p % 4 == 3) else 1
        if beta:
            out *= _legendre(ai, p)
        if alpha:
            out *= _legendre(bi, p)
        return out
    eps_a, eps_b = ((ai - 1) // 2) % 2, ((bi - 1) // 2) % 2
    omega_a, omega_b = ((ai * ai - 1) // 8) % 2, ((bi * bi - 1) // 8) % 2
    exp = eps_a * eps_b + alpha * omega_b + beta * omega_a
    return -1 if exp % 2 else 1


def hilbert_symbol_bruteforce(a, b, v: Place) -> int:
    """Congruence-search oracle for (a, b)_v, independent of the formulas.

    For finite p it searches primitive solutions of a x^2 + b y^2 = z^2 over
    Z/p^k (k = 4 for odd p, 8 for p = 2), after square-class reduction of the
    arguments; absence of a primitive solution certifies -1.
    """
    a, b = Fraction(a), Fraction(b)
    ai, bi = _square_class_pair(a), _square_class_pair(b)
    if v.is_real():
        return -1 if (ai < 0 and bi < 0) else 1
    p = v.p
    # reduce square classes so the valuations are 0 or 1
    for _ in range(2):
        while ai % (p * p) == 0:
            ai //= p * p
        while bi % (p * p) == 0:
            bi //= p * p
    k = 8 if p == 2 else 4
    m = p**k
    squares: dict[int, int] = {}
    for z in range(m):
        w = z * z % m
        unit = 2 if z % p else 1  # 2 marks a representative with z a unit
        squares[w] = max(squares.get(w, 0), unit)
    for x in range(m):
        ax2 = ai * x * x % m
        x_unit = x % p != 0
        for y in range(m):
            w = (ax2 + bi * y * y) % m
            tag = squares.get(w)
            if tag is None:
                continue
            if x_unit or (y % p != 0) or tag == 2:
                return 1
    return -1


# ---------------------------------------------------------------------------
# diagonal forms


@dataclass(frozen=True)
class DiagForm:
    field: FieldDescriptor
    entries: tuple  # nonzero FieldElems; order is irrelevant to every consumer

    @staticmethod
    def make(field: FieldDescriptor, entries) -> "DiagForm":
        es = tuple(field.coerce(e) for e in entries)
        if any(e.is_zero() for e in es):
            raise FieldError("diagonal entries must be nonzero")
        return DiagForm(field, es)

    def rank(self) -> int:
        return len(self.entries)

    def perp(self, other: "DiagForm") -> "DiagForm":
        if other.field != self.field:
            raise FieldError("field mismatch")
        return DiagForm(self.field, self.entries + other.entries)

    def scaled(self, c) -> "DiagForm":
        c = self.field.coerce(c)
        return DiagForm.make(self.field, [c * e for e in self.entries])

    def neg(self) -> "DiagForm":
        return DiagForm(self.field, tuple(-e for e in self.entries))

    def __str__(self) -> str:
        return "<" + ",".join(str(e) for e in self.entries) + ">"


def signature(f: DiagForm) -> list[int]:
    """count(+) - count(-) of the entries under each real embedding."""
    if not f.entries:
        from .realroots import number_of_real_embeddings

        return [0] * number_of_real_embeddings(f.field)
    sign_rows = [real_embedding_signs(e) for e in f.entries]
    width = len(sign_rows[0])
    return [sum(row[i] for row in sign_rows) for i in range(width)]


def discriminant(f: DiagForm) -> FieldElem:
    out = f.field.one()
    for e in f.entries:
        out = out * e
    return out


def hasse_invariant(f: DiagForm, v: Place) -> int:
    """prod_{i<j} (a_i, a_j)_v for a rational diagonal form."""
    if not f.field.is_rationals():
        raise FieldError("Hasse invariants are computed over Q only")
    vals = [e.as_fraction() for e in f.entries]
    out = 1
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            out *= hilbert_symbol(vals[i], vals[j], v)
    return out


def relevant_places(entries) -> list[Place]:
    primes = {2}
    for e in entries:
        primes |= primes_dividing(e)
    return [REAL_PLACE] + [Place(p) for p in sorted(primes)]


def _witt_trivial_Q(d: DiagForm) -> bool:
    r = d.rank()
    if r % 2:
        return False
    if r == 0:
        return True
    if signature(d)[0] != 0:
        return False
    disc = discriminant(d).as_fraction()
    want_disc = Fraction(-1) ** (r // 2)
    if squarefree_part(disc) != squarefree_part(want_disc):
        return False
    split = DiagForm.make(QQ, [1, -1] * (r // 2))
    for v in relevant_places([e.as_fraction() for e in d.entries]):
        if hasse_invariant(d, v) != hasse_invariant(split, v):
            return False
    return True


def _syntactic_witt_reduce(entries: list[FieldElem]) -> list[FieldElem]:
    """Greedily remove hyperbolic pairs (x, y) with -x*y a square."""
    out = list(entries)
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                if nf_is_square(-(out[i] * out[j])):
                    del out[j], out[i]
                    changed = True
                    break
            if changed:
                break
    return out


def witt_equal(f: DiagForm, g: DiagForm) -> Tri:
    """Witt-class equality; complete over Q, three-valued over extensions."""
    if f.field != g.field:
        raise FieldError("field mismatch")
    d = f.perp(g.neg())
    if f.field.is_rationals():
        return Tri.EQUAL if _witt_trivial_Q(d) else Tri.NOT_EQUAL
    reduced = _syntactic_witt_reduce(list(d.entries))
    if not reduced:
        return Tri.EQUAL
    if len(reduced) % 2:
        return Tri.NOT_EQUAL
    rem = DiagForm(f.field, tuple(reduced))
    if any(s != 0 for s in signature(rem)):
        return Tri.NOT_EQUAL
    disc = discriminant(rem) * f.field.coerce(Fraction(-1) ** (len(reduced) // 2))
    if not nf_is_square(disc):
        return Tri.NOT_EQUAL
    if len(reduced) == 2:
        # a surviving rank-2 piece with square disc*(-1) would have cancelled
        return Tri.NOT_EQUAL
    return Tri.UNKNOWN


# ---------------------------------------------------------------------------
# brute-force chain search over the one-form presentation (Q only)


def _canon_int(a: Fraction) -> int:
    return squarefree_part(a)


def _canon_state(entries) -> tuple[int, ...]:
    return tuple(sorted(_canon_int(Fraction(e)) for e in entries))


def _chain_neighbors(state: tuple[int, ...], pool: list[int], value_bound: int):
    entries = list(state)
    n = len(entries)
    for i in range(n):
        for b in pool:
            new = _canon_int(Fraction(entries[i]) * b * b)
            if new != entries[i]:
                rest = entries[:i] + [new] + entries[i + 1 :]
                yield tuple(sorted(rest)), f"rescale {entries[i]} by {b}^2"
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            a, b = entries[i], entries[j]
            if a + b == 0:
                continue
            c1 = _canon_int(Fraction(a + b))
            c2 = _canon_int(Fraction((a + b) * a * b))
            if abs(c1) > value_bound or abs(c2) > value_bound:
                continue
            rest = [entries[k] for k in range(n) if k not in (i, j)] + [c1, c2]
            yield tuple(sorted(rest)), f"chain ({a},{b}) -> ({c1},{c2})"


def chain_equivalence_search(f: DiagForm, g: DiagForm, budget: int = 2000, value_bound: int = 1000):
    """Bidirectional BFS over the one-form relations; returns (found, path).

    Every edge is an equality in GW(Q), so a meeting point certifies that the
    two forms are equal; exhaustion of the budget is only a NotFound, never a
    disproof.
    """
    if not (f.field.is_rationals() and g.field.is_rationals()):
        raise FieldError("chain search runs over Q")
    if f.rank() != g.rank():
        return False, []
    pool = sorted({abs(_canon_int(e.as_fraction())) for e in f.entries + g.entries} | {1, 2, 3})
    start = _canon_state([e.as_fraction() for e in f.entries])
    goal = _canon_state([e.as_fraction() for e in g.entries])
    if start == goal:
        return True, [str(start)]
    seen = {start: (None, None, "f"), goal: (None, None, "g")}
    frontier = deque([start, goal])
    steps = 0
    meet = None
    while frontier and steps < budget:
        state = frontier.popleft()
        side = seen[state][2]
        for nxt, move in _chain_neighbors(state, pool, value_bound):
            steps += 1
            if nxt not in seen:
                seen[nxt] = (state, move, side)
                frontier.append(nxt)
            elif seen[nxt][2] != side:
                meet = (state, nxt, move)
                break
        if meet:
            break
    if meet is None:
        return False, []
    state, nxt, move = meet

    def unwind(s):
        path = []
        while s is not None:
            prev, mv, _side = seen[s]
            path.append((s, mv))
            s = prev
        return path

    left = unwind(state)[::-1]
    right = unwind(nxt)
    path = [f"{st} via {mv}" if mv else f"{st}" for st, mv in left]
    path.append(f"-- {move} --")
    path += [f"{st} via {mv}" if mv else f"{st}" for st, mv in right]
    return True, path


# ---------------------------------------------------------------------------
# Gram diagonalization (used by the Scharlau-transfer test oracle)


def diagonalize_gram(field: FieldDescriptor, gram: list[list[FieldElem]]) -> list[FieldElem]:
    """Diagonal entries of a symmetric matrix under congruence (zeros dropped)."""
    n = len(gram)
    a = [[field.coerce(x) for x in row] for row in gram]
    out: list[FieldElem] = []
    idx = list(range(n))
    while idx:
        # find a nonzero diagonal entry, manufacturing one if necessary
        pivot = next((i for i in idx if not a[i][i].is_zero()), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in idx for j in idx if i != j and not a[i][j].is_zero()), None
            )
            if pair is None:
                break  # zero block: totally degenerate, contributes nothing
            i, j = pair
            for k in range(n):
                a[i][k] = a[i][k] + a[j][k]
            for k in range(n):
                a[k][i] = a[k][i] + a[k][j]
            pivot = i
        d = a[pivot][pivot]
        out.append(d)
        others = [i for i in idx if i != pivot]
        for i in others:
            c = a[i][pivot] / d
            if c.is_zero():
                continue
            for k in range(n):
                a[i][k] = a[i][k] - c * a[pivot][k]
            for k in range(n):
                a[k][i] = a[k][i] - c * a[k][pivot]
        idx = others
    return out
