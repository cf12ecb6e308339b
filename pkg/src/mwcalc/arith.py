"""Exact integer and rational helpers: primality, factorization, square-free parts.

Everything here works on Python ints and fractions.Fraction; no floats.
Inputs are desk scale (entries of quadratic forms, coefficients of small
polynomials), so trial division with a Pollard rho fallback is plenty.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit (and our) inputs."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
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


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    x, c = 2, 1
    while True:
        y, d = x, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        x, c = 2, c + 1


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; ignores the sign, n != 0."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in range(2, 10000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return out


def squarefree_part(q: Fraction | int) -> int:
    """Sign times square-free positive integer representing q modulo rational squares."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no square class")
    n = q.numerator * q.denominator  # same square class, integral
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factor_int(n).items():
        if e % 2:
            out *= p
    return sign * out


def primes_dividing(q: Fraction | int) -> set[int]:
    """Primes dividing the numerator or denominator of q (q nonzero)."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero")
    return set(factor_int(q.numerator * q.denominator))


def is_rational_square(q: Fraction | int) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    if q == 0:
        return True
    return (
        math.isqrt(q.numerator) ** 2 == q.numerator
        and math.isqrt(q.denominator) ** 2 == q.denominator
    )
