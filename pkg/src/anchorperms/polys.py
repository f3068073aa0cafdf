"""Small exact polynomial helpers over the rationals.

Polynomials are coefficient lists in ascending degree order. Only what the
generating-function code needs: arithmetic, gcd, normalization.
"""

from __future__ import annotations

from fractions import Fraction


def trim(p: list) -> list:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def poly_sub(a: list, b: list) -> list:
    out = list(a) + [0] * (len(b) - len(a))
    for j, y in enumerate(b):
        out[j] -= y
    return trim(out)


def poly_divmod(a: list, b: list) -> tuple[list, list]:
    """Exact division with remainder over Q."""
    b = trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in a]
    r = trim(r)
    q = [Fraction(0)] * max(0, len(r) - len(b) + 1)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = Fraction(r[-1], b[-1])
        q[shift] = c
        r = poly_sub(r, poly_mul([Fraction(0)] * shift + [c], b))
        r = trim(r)
    return trim(q), r


def poly_gcd(a: list, b: list) -> list:
    """Monic gcd over Q (empty list for gcd(0,0))."""
    a = trim([Fraction(x) for x in a])
    b = trim([Fraction(x) for x in b])
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a
