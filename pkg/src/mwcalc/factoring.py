"""Exact univariate factorization.

Over Q: square-free (Yun) decomposition, rational-root extraction, then a
Berlekamp / Hensel / subset-recombination factorization of the square-free
core (classical Zassenhaus; adequate for the desk-scale degrees used here).

Over a simple extension Q(a): Trager's norm method, reducing to factorization
over Q plus gcds over the extension.  Towers are handled by rewriting through
a primitive element first.

No floats anywhere; moduli and bounds are exact integers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .fields import (
    QQ,
    AbsoluteModel,
    FieldElem,
    FieldError,
    Poly,
    SimpleExtension,
    absolutize,
    rep_poly,
)

# ---------------------------------------------------------------------------
# integer-coefficient helpers (dense lists, low degree first, trimmed)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_coeffs(f: Poly) -> list[int]:
    """Primitive integer coefficients of a Q-polynomial (content removed, sign kept)."""
    fracs = [c.as_fraction() for c in f.coeffs]
    den = math.lcm(*[c.denominator for c in fracs]) if fracs else 1
    ints = [int(c * den) for c in fracs]
    g = math.gcd(*[abs(c) for c in ints]) if ints else 1
    return [c // g for c in ints]


def _from_ints(ints: list[int]) -> Poly:
    return Poly.from_coeffs(QQ, ints)


# arithmetic mod a (possibly composite) modulus m


def _zm_mul(a: list[int], b: list[int], m: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % m
    return _trim(out)


def _zm_add(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)])


def _zm_sub(a: list[int], b: list[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)])


def _zm_divmod(a: list[int], b: list[int], m: int) -> tuple[list[int], list[int]]:
    """Division with remainder mod m; the leading coefficient of b must be a unit."""
    b = _trim(list(b))
    lead_inv = pow(b[-1], -1, m)
    rem = list(a)
    quo = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(rem) - 1, len(b) - 2, -1):
        c = rem[i] % m
        if c == 0:
            rem[i] = 0
            continue
        q = c * lead_inv % m
        quo[i - (len(b) - 1)] = q
        for j in range(len(b)):
            rem[i - (len(b) - 1) + j] = (rem[i - (len(b) - 1) + j] - q * b[j]) % m
    return _trim(quo), _trim(rem)


def _zp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _zm_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _zp_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    out = [1]
    b = _zm_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            out = _zm_divmod(_zm_mul(out, b, p), mod, p)[1]
        b = _zm_divmod(_zm_mul(b, b, p), mod, p)[1]
        e >>= 1
    return out


# ---------------------------------------------------------------------------
# Berlekamp factorization of a square-free monic polynomial mod p


def _berlekamp(f: list[int], p: int) -> list[list[int]]:
    n = len(f) - 1
    if n <= 1:
        return [f]
    # Frobenius matrix: column j holds x^(j*p) mod f
    xp = _zp_powmod([0, 1], p, f, p)
    cols = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _zm_divmod(_zm_mul(cur, xp, p), f, p)[1]
        cols.append(list(cur) + [0] * (n - len(cur)))
    # kernel of (F - I)
    mat = [[(cols[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _zp_nullspace(mat, p)
    if len(basis) == 1:
        return [f]
    factors = [f]
    for v in basis:
        vv = _trim(list(v))
        if len(vv) <= 1:
            continue  # constants split nothing
        next_factors = []
        for g in factors:
            if len(g) - 1 <= 1:
                next_factors.append(g)
                continue
            pieces = []
            rest = g
            for s in range(p):
                if len(rest) - 1 <= 0:
                    break
                w = _zm_sub(vv, [s], p)
                d = _zp_gcd(rest, w, p)
                if 0 < len(d) - 1 < len(rest) - 1:
                    pieces.append(d)
                    rest = _zm_divmod(rest, d, p)[0]
            if len(rest) - 1 > 0:
                pieces.append(rest)
            next_factors.extend(pieces if pieces else [g])
        factors = next_factors
        if len(factors) == len(basis):
            break
    return factors


def _zp_nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat)
    a = [row[:] for row in mat]
    pivots = {}
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, n) if a[r][col] % p != 0), None)
        if sel is None:
            continue
        a[row], a[sel] = a[sel], a[row]
        inv = pow(a[row][col], -1, p)
        a[row] = [x * inv % p for x in a[row]]
        for r in range(n):
            if r != row and a[r][col] % p:
                fct = a[r][col]
                a[r] = [(x - fct * y) % p for x, y in zip(a[r], a[row])]
        pivots[col] = row
        row += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        v = [0] * n
        v[col] = 1
        for pc, pr in pivots.items():
            v[pc] = (-a[pr][col]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# Hensel lifting


def _bezout_zp(g: list[int], h: list[int], p: int) -> tuple[list[int], list[int]]:
    """s, t with s*g + t*h = 1 mod p, deg s < deg h, deg t < deg g."""
    r0, r1 = list(g), list(h)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _zm_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _zm_sub(s0, _zm_mul(q, s1, p), p)
        t0, t1 = t1, _zm_sub(t0, _zm_mul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    s = [c * inv % p for c in s0]
    t = [c * inv % p for c in t0]
    s = _zm_divmod(s, h, p)[1]
    t = _zm_divmod(t, g, p)[1]
    return s, t


def _hensel_pair(f, g, h, s, t, p, target_mod):
    """Lift f = g*h (monic) from mod p to mod >= target_mod; returns g, h mod final."""
    m = p
    while m < target_mod:
        m2 = m * m
        e = _zm_sub(f, _zm_mul(g, h, m2), m2)
        q, r = _zm_divmod(_zm_mul(s, e, m2), h, m2)
        g = _zm_add(g, _zm_add(_zm_mul(t, e, m2), _zm_mul(q, g, m2), m2), m2)
        h = _zm_add(h, r, m2)
        b = _zm_sub(_zm_add(_zm_mul(s, g, m2), _zm_mul(t, h, m2), m2), [1], m2)
        c, d = _zm_divmod(_zm_mul(s, b, m2), h, m2)
        s = _zm_sub(s, d, m2)
        t = _zm_sub(t, _zm_add(_zm_mul(t, b, m2), _zm_mul(c, g, m2), m2), m2)
        m = m2
    return g, h, m


def _hensel_tree(f: list[int], local: list[list[int]], p: int, target_mod: int) -> list[list[int]]:
    if len(local) == 1:
        m = p
        while m < target_mod:
            m *= m
        return [[c % m for c in _trim(list(f))]]
    half = len(local) // 2
    g0 = [1]
    for fac in local[:half]:
        g0 = _zm_mul(g0, fac, p)
    h0 = [1]
    for fac in local[half:]:
        h0 = _zm_mul(h0, fac, p)
    s, t = _bezout_zp(g0, h0, p)
    g, h, _ = _hensel_pair(f, g0, h0, s, t, p, target_mod)
    return _hensel_tree(g, local[:half], p, target_mod) + _hensel_tree(h, local[half:], p, target_mod)


# ---------------------------------------------------------------------------
# Zassenhaus over Z for monic square-free integer polynomials


def _centered(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _exact_divide(a: list[int], b: list[int]):
    """a / b over Z, or None when the division is not exact."""
    a, b = _trim(list(a)), _trim(list(b))
    if not b:
        return None
    if not a:
        return []
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return None
    rem = list(a)
    quo = [0] * (da - db + 1)
    for i in range(da, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % b[-1]:
            return None
        q = c // b[-1]
        quo[i - db] = q
        for j in range(db + 1):
            rem[i - db + j] -= q * b[j]
    return _trim(quo) if not _trim(rem) else None


def _factor_monic_squarefree_Z(f: list[int]) -> list[list[int]]:
    n = len(f) - 1
    if n <= 1:
        return [f]
    disc_safe = None
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149):
        fp = [c % p for c in f]
        if fp[-1] == 0:
            continue
        dfp = _trim([c * i % p for i, c in enumerate(fp)][1:])
        if len(_zp_gcd(fp, dfp, p)) == 1:
            disc_safe = p
            break
    if disc_safe is None:
        raise FieldError("no small good prime for factorization (degree too large?)")
    p = disc_safe
    local = _berlekamp([c % p for c in f], p)
    if len(local) == 1:
        return [f]
    # Landau-Mignotte bound on factor coefficients
    norm = math.isqrt(sum(c * c for c in f)) + 1
    bound = 2 ** (n + 1) * norm
    target = 2 * bound + 1
    lifted = _hensel_tree(f, sorted(local, key=len), p, target)
    modulus = p
    while modulus < target:
        modulus *= modulus
    lifted = [[c % modulus for c in g] for g in lifted]

    factors: list[list[int]] = []
    remaining = list(range(len(lifted)))
    current = f
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for subset in _subsets(remaining, size):
            g = [1]
            for i in subset:
                g = _zm_mul(g, lifted[i], modulus)
            g = [_centered(c, modulus) for c in g]
            quo = _exact_divide(current, g)
            if quo is not None:
                factors.append(g)
                current = quo
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if len(current) - 1 > 0:
        factors.append(current)
    return factors


def _subsets(items: list[int], size: int):
    import itertools

    return itertools.combinations(items, size)


# ---------------------------------------------------------------------------
# public factorization over Q


@lru_cache(maxsize=4096)
def _factor_over_Q_cached(coeffs: tuple[Fraction, ...]):
    f = Poly.from_coeffs(QQ, coeffs)
    lead = f.lead().as_fraction()
    monic = f.monic()
    out: list[tuple[Poly, int]] = []
    # Yun's square-free decomposition
    for sqf, mult in _yun(monic):
        ints = _int_coeffs(sqf)
        for g in _factor_int_squarefree(ints):
            out.append((_from_ints(g).monic(), mult))
    out.sort(key=lambda t: (t[0].degree(), [str(c) for c in t[0].coeffs]))
    return lead, tuple(out)


def _yun(f: Poly) -> list[tuple[Poly, int]]:
    """Square-free decomposition of a monic polynomial in characteristic zero."""
    out = []
    g = f.gcd(f.derivative())
    c = f // g
    k = 0
    while c.degree() > 0:
        k += 1
        y = g.gcd(c)
        piece = c // y
        if piece.degree() > 0:
            out.append((piece.monic(), k))
        c, g = y, g // y
    return out


def _factor_int_squarefree(ints: list[int]) -> list[list[int]]:
    """Irreducible integer factors of a square-free primitive integer polynomial."""
    ints = _trim(list(ints))
    out = []
    # x-power
    shift = 0
    while ints and ints[0] == 0:
        ints = ints[1:]
        shift += 1
    out.extend([[0, 1]] * shift)
    if len(ints) - 1 < 1:
        return out
    # rational roots u/v with u | constant, v | lead
    from .arith import factor_int

    def divisors(n: int) -> list[int]:
        ds = [1]
        for q, e in factor_int(n).items():
            ds = [d * q**i for d in ds for i in range(e + 1)]
        return ds

    changed = True
    while changed and len(ints) - 1 >= 1:
        changed = False
        c0, cl = ints[0], ints[-1]
        if c0 == 0:
            break
        for u in divisors(c0):
            for v in divisors(cl):
                for root in (Fraction(u, v), Fraction(-u, v)):
                    if sum(c * root**i for i, c in enumerate(ints)) == 0:
                        out.append([-root.numerator, root.denominator])
                        quo = _from_ints(ints).divmod(Poly.from_coeffs(QQ, [-root, 1]))[0]
                        ints = _int_coeffs(quo)
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    if len(ints) - 1 < 1:
        return out
    if len(ints) - 1 == 1:
        out.append(ints)
        return out
    # monicize: g(x) = l^(n-1) f(x/l) is monic with integer coefficients
    l = ints[-1]
    n = len(ints) - 1
    monic = [ints[i] * l ** (n - 1 - i) for i in range(n)] + [1]
    for g in _factor_monic_squarefree_Z(monic):
        # undo the substitution: a factor of f is the primitive part of g(l*x)
        back = [c * l**i for i, c in enumerate(g)]
        gcd_all = math.gcd(*[abs(c) for c in back if c])
        out.append([c // gcd_all for c in back])
    return out


def factor_over_Q(f: Poly) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Factor a nonzero Q-polynomial into monic irreducibles with multiplicity.

    Returns (leading unit, [(monic irreducible, multiplicity), ...]) with
    f = unit * prod(factor^mult).
    """
    if f.field != QQ:
        raise FieldError("factor_over_Q expects a polynomial over Q")
    if f.is_zero():
        raise FieldError("cannot factor the zero polynomial")
    if f.degree() == 0:
        return f.lead().as_fraction(), []
    lead, factors = _factor_over_Q_cached(tuple(c.as_fraction() for c in f.coeffs))
    return lead, list(factors)


# ---------------------------------------------------------------------------
# factorization over simple extensions (Trager) and towers


def _mult_matrix(e: FieldElem) -> list[list[Fraction]]:
    """Matrix of multiplication by e on its field, viewed as a Q-vector space."""
    from .fields import _abs_coords

    field = e.field
    d = field.absolute_degree()
    cols = []
    basis = _field_q_basis(field)
    for b in basis:
        cols.append(_abs_coords(e * b))
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _field_q_basis(field) -> list[FieldElem]:
    if field.is_rationals():
        return [QQ.one()]
    sub = _field_q_basis(field.base)
    gen = field.generator()
    out = []
    power = field.one()
    for _ in range(field.degree()):
        for b in sub:
            out.append(power * field.coerce(b))
        power = power * gen
    return out


def _det_fraction(mat: list[list[Fraction]]) -> Fraction:
    n = len(mat)
    a = [row[:] for row in mat]
    det = Fraction(1)
    for col in range(n):
        sel = next((r for r in range(col, n) if a[r][col] != 0), None)
        if sel is None:
            return Fraction(0)
        if sel != col:
            a[col], a[sel] = a[sel], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                fct = a[r][col] * inv
                a[r] = [x - fct * y for x, y in zip(a[r], a[col])]
    return det


def norm_poly(f: Poly) -> Poly:
    """N_{L/Q}(f): product of the conjugates of f, an element of Q[x].

    Computed as det of the multiplication matrix of f over Q[x], by
    evaluation at integer points and Lagrange interpolation.
    """
    field = f.field
    if field.is_rationals():
        return f
    d = field.absolute_degree()
    deg_bound = d * max(f.degree(), 0)
    mats = [_mult_matrix(c) for c in f.coeffs]
    xs, ys = [], []
    for t in range(deg_bound + 1):
        m = [[sum(mats[k][i][j] * Fraction(t) ** k for k in range(len(mats))) for j in range(d)] for i in range(d)]
        xs.append(Fraction(t))
        ys.append(_det_fraction(m))
    return _lagrange(xs, ys)


def _lagrange(xs: list[Fraction], ys: list[Fraction]) -> Poly:
    out = Poly.zero(QQ)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        num = Poly.const(QQ, yi)
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if i == j:
                continue
            num = num * Poly.from_coeffs(QQ, [-xj, 1])
            den *= xi - xj
        out = out + num * (1 / den)
    return out


def factor_poly(f: Poly) -> tuple[FieldElem, list[tuple[Poly, int]]]:
    """Factor a nonzero polynomial over Q or over a number-field tower."""
    field = f.field
    if field.is_rationals():
        lead, factors = factor_over_Q(f)
        return QQ.coerce(lead), factors
    model = absolutize(field)
    if model.simple_field != field:
        g = f.map_coeffs(model.to_simple, model.simple_field)
        lead, factors = factor_poly(g)
        back = [
            (p.map_coeffs(model.from_simple, field), m) for p, m in factors
        ]
        return model.from_simple(lead), back
    return _factor_trager(f)


def _factor_trager(f: Poly) -> tuple[FieldElem, list[tuple[Poly, int]]]:
    field: SimpleExtension = f.field  # type: ignore[assignment]
    lead = f.lead()
    monic = f.monic()
    out: list[tuple[Poly, int]] = []
    for sqf, mult in _yun_generic(monic):
        for g in _trager_squarefree(sqf):
            out.append((g, mult))
    out.sort(key=lambda t: (t[0].degree(), str(t[0])))
    return lead, out


def _yun_generic(f: Poly) -> list[tuple[Poly, int]]:
    out = []
    g = f.gcd(f.derivative())
    c = f // g
    k = 0
    while c.degree() > 0:
        k += 1
        y = g.gcd(c)
        piece = c // y
        if piece.degree() > 0:
            out.append((piece.monic(), k))
        c, g = y, g // y
    return out


def _trager_squarefree(f: Poly) -> list[Poly]:
    """Irreducible factors of a monic square-free polynomial over a simple extension."""
    field: SimpleExtension = f.field  # type: ignore[assignment]
    if f.degree() <= 1:
        return [f]
    alpha = field.generator()
    for s in range(0, 40):
        shifted = f.compose(Poly.from_coeffs(field, [-(alpha * s), field.one()]))
        nrm = norm_poly(shifted)
        if nrm.gcd(nrm.derivative()).degree() == 0:
            _, nfactors = factor_over_Q(nrm)
            out = []
            rest = shifted
            for nf, _m in nfactors:
                lifted = nf.map_coeffs(lambda c: field.coerce(c), field)
                g = rest.gcd(lifted)
                if g.degree() > 0:
                    # shift back: factor of f is g(x + s*alpha)
                    back = g.compose(Poly.from_coeffs(field, [alpha * s, field.one()]))
                    out.append(back.monic())
                    rest = rest // g
            return out
    raise FieldError("Trager shift search failed")


def roots_in_field(f: Poly) -> list[FieldElem]:
    """All roots of f that lie in f's own coefficient field (with repetition collapsed)."""
    if f.is_zero():
        raise FieldError("zero polynomial")
    _, factors = factor_poly(f)
    roots = []
    for g, _m in factors:
        if g.degree() == 1:
            roots.append(-g.coeffs[0] / g.coeffs[1])
    return roots


def roots_with_multiplicity(f: Poly) -> list[tuple[FieldElem, int]]:
    _, factors = factor_poly(f)
    out = []
    for g, m in factors:
        if g.degree() == 1:
            out.append((-g.coeffs[0] / g.coeffs[1], m))
    return out


def is_irreducible(f: Poly) -> bool:
    """Irreducibility over f's coefficient field (degree >= 1)."""
    if f.degree() < 1:
        return False
    _, factors = factor_poly(f)
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree() == f.degree()
