import json
from fractions import Fraction

import mpmath
import pytest

from mmchains import poly
from mmchains.asymptotics import (
    META_ROOT,
    DominanceError,
    RootDomainError,
    dominant_root,
    empirical_growth_check,
    growth,
)
from mmchains.recurrences import RationalGF, generate, paper_gf, paper_recurrence

REFERENCE = {
    "P": (4.28428, 1.37804),
    "M": (5.52233, 0.81408),
    "O": (4.86454, 1.05177),
}


@pytest.mark.parametrize("seq", REFERENCE)
def test_cactus_constants(seq):
    est = growth(paper_gf(seq))
    lam, C = REFERENCE[seq]
    assert abs(float(est.lam) - lam) <= 1e-4
    assert abs(float(est.C) - C) <= 1e-4
    assert est.alpha == -1


def test_benzenoid_rates_and_ordering():
    lam = {s: float(growth(paper_gf(s)).lam) for s in "PMOLZH"}
    assert abs(lam["L"] - 4.01923) <= 1e-4
    assert abs(lam["Z"] - 3.83256) <= 1e-4
    assert abs(lam["H"] - 3.81063) <= 1e-4
    assert lam["M"] > lam["O"] > lam["P"]
    assert lam["L"] > lam["Z"] > lam["H"]
    assert abs(float(growth(paper_gf("L")).w) - 0.248804) <= 1e-5


def test_meta_root_closed_form():
    w, _, _ = dominant_root(paper_gf("M"), 40)
    assert abs(w - META_ROOT()) < mpmath.mpf("1e-35")


def test_simple_pole():
    w, (lo, hi), margin = dominant_root(RationalGF((1,), (1, -2)))
    assert w == mpmath.mpf("0.5") and lo == hi == Fraction(1, 2)
    assert margin == float("inf")
    est = growth(RationalGF((1,), (1, -2)))
    assert empirical_growth_check([2**n for n in range(30)], est, 0, 29) == 0.0


@pytest.mark.parametrize("seq", "PMOLZH")
def test_sign_change_certificate(seq):
    den = list(paper_gf(seq).denominator)
    w, (lo, hi), margin = dominant_root(paper_gf(seq), 30)
    assert hi - lo <= Fraction(1, 10**30)
    assert poly.evaluate(den, lo) * poly.evaluate(den, hi) <= 0
    assert margin > 1.05
    with mpmath.workdps(60):
        assert mpmath.mpf(lo.numerator) / lo.denominator <= w <= mpmath.mpf(hi.numerator) / hi.denominator


@pytest.mark.parametrize("seq", "PMOLZH")
def test_common_factor_leaves_constants_unchanged(seq):
    g = paper_gf(seq)
    padded = RationalGF(tuple(poly.mul(g.numerator, [1, 1])), tuple(poly.mul(g.denominator, [1, 1])))
    a, b = growth(g), growth(padded)
    assert abs(a.w - b.w) < mpmath.mpf("1e-25") and abs(a.C - b.C) < mpmath.mpf("1e-25")


def test_empirical_windows():
    p = generate(paper_recurrence("P"), 61)
    assert empirical_growth_check(p, growth(paper_gf("P")), 40, 60) < 1e-6
    z = generate(paper_recurrence("Z"), 61)
    assert empirical_growth_check(z, growth(paper_gf("Z")), 40, 60) < 1e-4
    with pytest.raises(ValueError):
        empirical_growth_check(p, growth(paper_gf("P")), 10, 100)


def test_benzenoid_constant_is_not_lambda():
    # the printed benzenoid asymptotics use lambda^(n+1), i.e. C = lambda;
    # the residue gives a different constant, confirmed by a_n / lambda^n
    est = growth(paper_gf("L"))
    seq = generate(paper_recurrence("L"), 201)
    with mpmath.workdps(50):
        ratio = mpmath.mpf(seq[200]) / est.lam**200
        assert abs(ratio - est.C) < mpmath.mpf("1e-20")
    assert abs(est.C - est.lam) > 1e-3


def test_errors():
    with pytest.raises(RootDomainError):
        dominant_root(RationalGF((1,), (1, 1)))
    with pytest.raises(DominanceError):
        # 1 - x^2 has roots +1 and -1 of equal modulus
        dominant_root(RationalGF((1,), (1, 0, -1)))
    with pytest.raises(ValueError):
        dominant_root(paper_gf("P"), 100)


def test_json_fields():
    d = json.loads(growth(paper_gf("M"), 20).to_json())
    assert set(d) == {"C", "alpha", "dominance_margin", "lambda", "w"}
    assert d["w"].startswith("0.18108287362775")
