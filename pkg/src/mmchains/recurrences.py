"""Linear recurrences, rational generating functions and coupled systems.

Sequence index equals chain length throughout; index 0 is the empty chain,
which has exactly one (empty) maximal matching.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from typing import Sequence

from . import poly

__all__ = [
    "LinRec",
    "RationalGF",
    "AuxSystem",
    "SystemError_",
    "InsufficientData",
    "paper_recurrence",
    "paper_gf",
    "paper_system",
    "generate",
    "expand",
    "rec_to_gf",
    "gf_to_rec",
    "evaluate_aux_system",
    "discover",
    "annihilates",
    "to_bfile",
    "SEQUENCES",
]

SEQUENCES = "PMOLZH"


@dataclass(frozen=True)
class LinRec:
    """``a_n = c_1 a_{n-1} + ... + c_d a_{n-d}`` for ``n >= start + d``."""

    coeffs: tuple
    initial: tuple[int, ...]
    start: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "initial", tuple(self.initial))
        if len(self.coeffs) != len(self.initial):
            raise ValueError("need exactly one initial term per coefficient")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("last coefficient must be nonzero")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def characteristic(self) -> list:
        """Denominator form ``1 - c_1 x - ... - c_d x^d``."""
        return [1] + [-c for c in self.coeffs]


@dataclass(frozen=True)
class RationalGF:
    numerator: tuple
    denominator: tuple

    def __post_init__(self) -> None:
        num = poly.trim(self.numerator)
        den = poly.trim(self.denominator)
        if not den or den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if den[0] != 1:
            c = Fraction(den[0])
            num = [Fraction(a) / c for a in num]
            den = [Fraction(a) / c for a in den]
        object.__setattr__(self, "numerator", tuple(_intify(num)))
        object.__setattr__(self, "denominator", tuple(_intify(den)))

    @property
    def common_factor(self) -> list:
        """gcd of numerator and denominator over Q (``[1]`` when coprime)."""
        return poly.gcd(self.numerator, self.denominator)

    def reduced(self) -> "RationalGF":
        g = self.common_factor
        if len(g) <= 1:
            return self
        n, _ = poly.divmod_poly(self.numerator, g)
        d, _ = poly.divmod_poly(self.denominator, g)
        return RationalGF(tuple(n), tuple(d))

    def to_json(self) -> str:
        return json.dumps(
            {"num": [_jsonable(c) for c in self.numerator], "den": [_jsonable(c) for c in self.denominator]},
            sort_keys=True,
        )


def _intify(p):
    return [int(c) if Fraction(c).denominator == 1 else Fraction(c) for c in p]


def _jsonable(c):
    return int(c) if Fraction(c).denominator == 1 else str(c)


# --------------------------------------------------------------------------
# printed data
# --------------------------------------------------------------------------
_RECS = {
    "P": ((5, -4, 4), (1, 5, 25)),
    "M": ((6, -3, 2), (1, 5, 25)),
    "O": ((4, 4, 1), (1, 5, 25)),
    "L": ((4, 0, 0, 1, 1), (1, 5, 20, 79, 317)),
    "Z": ((3, 1, 6, 7, 7, 5, 1), (1, 5, 20, 75, 288, 1105, 4234)),
    "H": ((1, 7, 12, 6, 7, 4, 2), (1, 5, 20, 75, 288, 1094, 4171)),
}

_GFS = {
    "P": ((1, 0, 4), (1, -5, 4, -4)),
    "M": ((1, -1, -2), (1, -6, 3, -2)),
    "O": ((1, 1, 1), (1, -4, -4, -1)),
    "L": ((1, 1, 0, -1), (1, -4, 0, 0, -1, -1)),
    "Z": ((1, 2, 4, 4, 6, 4, 1), (1, -3, -1, -6, -7, -7, -5, -1)),
    "H": ((1, 4, 8, 8, 7, 4, 2), (1, -1, -7, -12, -6, -7, -4, -2)),
}


def _check_seq(seq: str) -> str:
    if seq not in _RECS:
        raise ValueError(f"unknown sequence {seq!r}; expected one of {SEQUENCES}")
    return seq


def paper_recurrence(seq: str) -> LinRec:
    coeffs, init = _RECS[_check_seq(seq)]
    return LinRec(coeffs, init)


def paper_gf(seq: str) -> RationalGF:
    num, den = _GFS[_check_seq(seq)]
    return RationalGF(num, den)


# --------------------------------------------------------------------------
# sequences and series
# --------------------------------------------------------------------------
def generate(rec: LinRec, count: int) -> list[int]:
    if count < 0:
        raise ValueError("count must be nonnegative")
    out = list(rec.initial[:count])
    d = rec.order
    while len(out) < count:
        out.append(sum(c * out[-i] for i, c in enumerate(rec.coeffs, 1)))
    if d == 0:
        out = [0] * count
    return out


def expand(gf: RationalGF, count: int) -> list:
    """First ``count`` Taylor coefficients from ``D(x) A(x) = N(x)``."""
    num, den = gf.numerator, gf.denominator
    out: list = []
    for n in range(count):
        acc = num[n] if n < len(num) else 0
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * out[n - i]
        out.append(acc)  # den[0] == 1
    return out


def rec_to_gf(rec: LinRec) -> RationalGF:
    den = rec.characteristic
    d = rec.order
    num = poly.mul(den, list(rec.initial))[:d]
    return RationalGF(tuple(num or [0]), tuple(den))


def gf_to_rec(gf: RationalGF) -> LinRec:
    """Recurrence read off the denominator, seeded with expanded terms.

    If the numerator degree reaches the denominator degree the recurrence only
    holds further out; those leading terms become the start offset.
    """
    den = list(gf.denominator)
    d = len(den) - 1
    start = max(len(gf.numerator) - d, 0)
    terms = expand(gf, start + d)
    return LinRec(tuple(-c for c in den[1:]), tuple(terms[start:]), start)


def annihilates(char: Sequence, seq: Sequence, start: int = 0) -> bool:
    """True when ``sum_i char[i] a_{n-i} = 0`` for every ``n >= start + deg``."""
    d = len(char) - 1
    return all(
        sum(c * seq[n - i] for i, c in enumerate(char)) == 0 for n in range(start + d, len(seq))
    )


def to_bfile(terms: Sequence[int], offset: int = 0) -> str:
    return "".join(f"{offset + i} {a}\n" for i, a in enumerate(terms))


# --------------------------------------------------------------------------
# coupled auxiliary systems
# --------------------------------------------------------------------------
class SystemError_(ValueError):
    """Circular same-index dependency or missing initial condition."""


_TERM = re.compile(r"^\s*(\d*)\s*\*?\s*([a-z]+)(?:\^(\d+))?\[n(?:-(\d+))?\]\s*$")


def _name(base: str, sup: str | None) -> str:
    return base if sup is None else f"{base}^{sup}"


@dataclass(frozen=True)
class AuxSystem:
    """Coupled recurrences such as ``p^1[n] = p^2[n] + p^3[n-1]``.

    ``equations`` maps each sequence name to ``(coef, name, lag)`` terms;
    ``initial`` maps ``(name, n)`` to a fixed value that overrides the
    equation at that index.
    """

    family: str
    main: str
    equations: dict
    initial: dict
    text: tuple[str, ...] = field(default=())

    @classmethod
    def parse(cls, family: str, main: str, lines: Sequence[str], initial: dict) -> "AuxSystem":
        eqs: dict[str, list[tuple[int, str, int]]] = {}
        for line in lines:
            lhs, rhs = line.split("=")
            m = _TERM.match(lhs)
            if not m or m.group(1) or m.group(4):
                raise SystemError_(f"bad left-hand side in {line!r}")
            target = _name(m.group(2), m.group(3))
            terms = []
            for tok in rhs.split("+"):
                t = _TERM.match(tok)
                if not t:
                    raise SystemError_(f"cannot parse term {tok!r}")
                coef = int(t.group(1)) if t.group(1) else 1
                terms.append((coef, _name(t.group(2), t.group(3)), int(t.group(4) or 0)))
            eqs[target] = terms
        return cls(family, main, eqs, dict(initial), tuple(lines))

    @property
    def names(self) -> list[str]:
        return [self.main] + sorted(k for k in self.equations if k != self.main)

    def order_at_same_index(self) -> list[str]:
        ts = TopologicalSorter()
        for target, terms in self.equations.items():
            ts.add(target, *[name for _, name, lag in terms if lag == 0])
        try:
            return list(ts.static_order())
        except CycleError as exc:
            raise SystemError_(f"circular same-index dependency: {exc.args[1]}") from None


def evaluate_aux_system(system: AuxSystem, horizon: int) -> dict[str, list[int]]:
    """Rows ``name -> [a_0, ..., a_horizon]`` for the main and auxiliary sequences."""
    order = system.order_at_same_index()
    table: dict[str, list[int]] = {name: [] for name in system.equations}
    for n in range(horizon + 1):
        for name in order:
            if (name, n) in system.initial:
                table[name].append(system.initial[(name, n)])
                continue
            acc = 0
            for coef, ref, lag in system.equations[name]:
                if n - lag < 0:
                    raise SystemError_(f"{name}[{n}] needs {ref}[{n - lag}]; add an initial condition")
                acc += coef * table[ref][n - lag]
            table[name].append(acc)
    return table


_SYSTEMS = {
    "P": (
        "p",
        [
            "p[n] = 2p^1[n-1] + p[n-1]",
            "p^1[n] = p^2[n] + p^3[n-1]",
            "p^2[n] = p^3[n-1] + 2p^1[n-1]",
            "p^3[n] = p[n] + 2p^3[n-1]",
        ],
        {("p", 0): 1, ("p^1", 0): 2, ("p^2", 0): 1, ("p^3", 0): 3},
    ),
    "M": (
        "m",
        [
            "m[n] = 2m^1[n-1] + m[n-1]",
            "m^1[n] = m^2[n] + m^3[n-1]",
            "m^2[n] = m^3[n-1] + m^1[n-1] + m^2[n-1] + m[n-1]",
            "m^3[n] = 2m^3[n-1] + m^1[n-1] + m^2[n-1] + m[n-1] + m^2[n]",
        ],
        {("m", 0): 1, ("m^1", 0): 2, ("m^2", 0): 1, ("m^3", 0): 3},
    ),
    "O": (
        "o",
        [
            "o[n] = 2o^1[n-1] + o[n-1]",
            "o^1[n] = o^2[n] + o^3[n-1]",
            "o^2[n] = o^3[n-1] + o^2[n-1] + o[n-1] + 2o^3[n-2]",
            "o^3[n] = o[n] + o^3[n-1] + o^2[n]",
        ],
        {("o", 0): 1, ("o^1", 0): 2, ("o^2", 0): 1, ("o^2", 1): 7, ("o^3", 0): 3},
    ),
    "L": (
        "l",
        [
            "l[n] = l^1[n-1] + l[n-1] + 2l^2[n-2]",
            "l^1[n] = 2l^1[n-1] + l[n-1] + 2l^3[n-1]",
            "l^2[n] = l^3[n] + l^1[n-1] + l^3[n-1]",
            "l^3[n] = l^1[n-1] + l[n-1] + l^3[n-1] + l^2[n-2] + l^1[n-2] + l^3[n-2]",
        ],
        {("l", 0): 1, ("l", 1): 5, ("l^1", 0): 2, ("l^2", 0): 3, ("l^3", 0): 2, ("l^3", 1): 7},
    ),
    "Z": (
        "z",
        [
            "z[n] = z^1[n-1] + z^2[n-1] + z^3[n-2]",
            "z^1[n] = 2z^2[n-1] + z^4[n-2] + z^5[n-1] + z^3[n-2] + z^2[n-2]",
            "z^2[n] = z[n] + z^5[n-1] + z[n-1]",
            "z^3[n] = 2z^2[n-1] + z^3[n-1] + z^1[n-1] + z^5[n-1]",
            "z^4[n] = z[n] + z^5[n-1] + z[n-1] + z^2[n-1] + z^3[n-1]",
            "z^5[n] = z^5[n-1] + z^4[n-2] + z^2[n-1] + z^3[n-2] + z[n-1]",
        ],
        {
            ("z", 0): 1, ("z", 1): 5, ("z^1", 0): 2, ("z^1", 1): 9, ("z^2", 0): 2,
            ("z^3", 0): 3, ("z^4", 0): 4, ("z^5", 0): 2, ("z^5", 1): 7,
        },
    ),
    "H": (
        "h",
        [
            "h[n] = h[n-1] + h^1[n-1] + h^2[n-2] + h^3[n-2]",
            "h^1[n] = 2h^4[n-1] + h^5[n-1] + h^3[n-2] + 2h^4[n-2] + h^5[n-2]",
            "h^2[n] = h^3[n-1] + 2h^4[n-1] + 2h^4[n-2] + 2h^3[n-2] + h^5[n-2]",
            "h^3[n] = h^5[n] + h[n]",
            "h^4[n] = h[n] + h^2[n-1]",
            "h^5[n] = h^2[n-1] + h^4[n-1] + h^1[n-1]",
        ],
        {
            ("h", 0): 1, ("h", 1): 5, ("h^1", 0): 2, ("h^1", 1): 9, ("h^2", 0): 3,
            ("h^2", 1): 11, ("h^3", 0): 3, ("h^4", 0): 2, ("h^5", 0): 2,
        },
    ),
}


def paper_system(seq: str) -> AuxSystem:
    main, lines, init = _SYSTEMS[_check_seq(seq)]
    return AuxSystem.parse(seq, main, lines, init)


# --------------------------------------------------------------------------
# recurrence discovery
# --------------------------------------------------------------------------
class InsufficientData(ValueError):
    pass


def _solve_consistent(rows: list[list[Fraction]], rhs: list[Fraction], d: int):
    """Gauss-Jordan on an overdetermined system; None if inconsistent."""
    m = [r[:] + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(d):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    if any(row[d] != 0 for row in m[r:]):
        return None
    sol = [Fraction(0)] * d
    for i, c in enumerate(piv_cols):
        sol[c] = m[i][d]
    return sol


def discover(seq: Sequence[int], max_order: int | None = None, guard: int = 8) -> LinRec | None:
    """Minimal-order constant-coefficient recurrence matching every supplied term.

    Each candidate order ``d`` is solved exactly over the rationals using all
    ``len(seq) - d`` equations, so at least ``guard`` equations beyond the
    ``d`` unknowns double as held-out checks.
    """
    seq = [Fraction(a) for a in seq]
    if max_order is None:
        max_order = (len(seq) - guard) // 2
    if max_order < 1 or len(seq) < 2 * max_order + guard:
        raise InsufficientData(
            f"need at least {2 * max(max_order, 1) + guard} terms, got {len(seq)}"
        )
    if all(a == 0 for a in seq):
        return None
    for d in range(1, max_order + 1):
        rows = [[seq[n - i] for i in range(1, d + 1)] for n in range(d, len(seq))]
        rhs = [seq[n] for n in range(d, len(seq))]
        sol = _solve_consistent(rows, rhs, d)
        if sol is None or sol[-1] == 0:
            continue
        coeffs = tuple(int(c) if c.denominator == 1 else c for c in sol)
        initial = tuple(int(a) if a.denominator == 1 else a for a in seq[:d])
        return LinRec(coeffs, initial)
    return None
