"""Dense univariate polynomials as ascending coefficient lists.

Coefficients may be ``int`` or ``Fraction``; every routine is exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list


def trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def add(p: Sequence, q: Sequence) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def scale(p: Sequence, c) -> list:
    return [c * a for a in p]


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence) -> list:
    return [i * c for i, c in enumerate(p)][1:]


def divmod_poly(p: Sequence, q: Sequence) -> tuple[list, list]:
    """Exact long division over the rationals."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    dq = len(q) - 1
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(r) - dq, 0)
    while len(r) - 1 >= dq and r:
        k = len(r) - 1 - dq
        c = r[-1] / lead
        quot[k] = c
        for i, a in enumerate(q):
            r[i + k] -= c * a
        r = trim(r)
    return trim(quot), r


def gcd(p: Sequence, q: Sequence) -> list:
    """Monic-free gcd over Q, normalised so the constant term is 1 when nonzero."""
    a, b = trim([Fraction(c) for c in p]), trim([Fraction(c) for c in q])
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    if not a:
        return []
    norm = a[0] if a[0] != 0 else a[-1]
    return [c / norm for c in a]


def to_integer(p: Sequence) -> list[int]:
    """Clear denominators of a rational polynomial (content not removed)."""
    from math import lcm

    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    out = [Fraction(c) * den for c in p]
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]


def divides(q: Sequence, p: Sequence) -> bool:
    _, r = divmod_poly(p, q)
    return not r


def reverse(p: Sequence, deg: int | None = None) -> list:
    """Reciprocal polynomial ``x^deg p(1/x)``."""
    p = trim(p)
    if deg is None:
        deg = len(p) - 1
    return list(reversed(p + [0] * (deg + 1 - len(p))))
