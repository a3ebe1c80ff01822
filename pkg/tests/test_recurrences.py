from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from oracles import fibonacci, linear_recurrence_terms
from mmchains.chains import named_spec
from mmchains.recurrences import (
    AuxSystem,
    InsufficientData,
    LinRec,
    RationalGF,
    SystemError_,
    annihilates,
    discover,
    evaluate_aux_system,
    expand,
    generate,
    gf_to_rec,
    paper_gf,
    paper_recurrence,
    paper_system,
    rec_to_gf,
    to_bfile,
)
from mmchains import poly
from mmchains.transfer import count_chain

GOLDEN = {
    "P": [1, 5, 25, 109],
    "M": [1, 5, 25, 137],
    "O": [1, 5, 25, 121],
    "L": [1, 5, 20, 79, 317, 1274],
    "Z": [1, 5, 20, 75, 288, 1105, 4234],
    "H": [1, 5, 20, 75, 288, 1094, 4171],
}


def test_printed_recurrences():
    p = paper_recurrence("P")
    assert (p.order, p.coeffs, p.initial) == (3, (5, -4, 4), (1, 5, 25))
    l_ = paper_recurrence("L")
    assert (l_.order, l_.coeffs, l_.initial) == (5, (4, 0, 0, 1, 1), (1, 5, 20, 79, 317))
    h = paper_recurrence("H")
    assert h.coeffs == (1, 7, 12, 6, 7, 4, 2)
    assert h.initial == (1, 5, 20, 75, 288, 1094, 4171)
    with pytest.raises(ValueError):
        paper_recurrence("Q")


def test_linrec_validation():
    with pytest.raises(ValueError):
        LinRec((1, 2), (1,))
    with pytest.raises(ValueError):
        LinRec((1, 0), (1, 1))


@pytest.mark.parametrize("seq", GOLDEN)
def test_golden_terms(seq):
    want = GOLDEN[seq]
    assert generate(paper_recurrence(seq), len(want)) == want
    assert expand(paper_gf(seq), len(want)) == want


def test_generate_examples():
    assert generate(paper_recurrence("P"), 4) == [1, 5, 25, 109]
    z = generate(paper_recurrence("Z"), 8)
    assert z[7] == 3 * 4234 + 1105 + 6 * 288 + 7 * 75 + 7 * 20 + 5 * 5 + 1 == 16226
    for s in "PMOLZH":
        r = paper_recurrence(s)
        assert generate(r, r.order) == list(r.initial)
    assert generate(paper_recurrence("P"), 0) == []
    with pytest.raises(ValueError):
        generate(paper_recurrence("P"), -1)


def test_printed_gfs():
    assert paper_gf("O").numerator == (1, 1, 1)
    assert paper_gf("O").denominator == (1, -4, -4, -1)
    assert paper_gf("H").numerator == (1, 4, 8, 8, 7, 4, 2)
    assert paper_gf("H").denominator == (1, -1, -7, -12, -6, -7, -4, -2)
    assert paper_gf("P").to_json() == '{"den": [1, -5, 4, -4], "num": [1, 0, 4]}'


def test_expand_geometric():
    assert expand(RationalGF((1,), (1, -1)), 6) == [1] * 6


def test_gf_normalises_constant_term():
    g = RationalGF((2,), (2, -4))
    assert g.denominator == (1, -2) and g.numerator == (1,)
    with pytest.raises(ValueError):
        RationalGF((1,), (0, 1))


@pytest.mark.parametrize("seq", "PMOLZH")
def test_gf_and_recurrence_agree(seq):
    r, g = paper_recurrence(seq), paper_gf(seq)
    assert expand(g, 50) == generate(r, 50)
    assert rec_to_gf(r) == g
    back = gf_to_rec(g)
    assert generate(back, 50) == generate(r, 50)


def test_rec_to_gf_examples():
    assert rec_to_gf(paper_recurrence("P")).denominator == (1, -5, 4, -4)
    g = rec_to_gf(LinRec((2,), (1,)))
    assert (g.numerator, g.denominator) == ((1,), (1, -2))


def test_gf_to_rec_with_high_numerator_uses_offset():
    # 1 + x^3 over (1 - x): numerator degree exceeds the denominator's
    g = RationalGF((1, 0, 0, 1), (1, -1))
    r = gf_to_rec(g)
    assert r.start == 3
    assert expand(g, 8) == [1, 1, 1, 2, 2, 2, 2, 2]


def test_common_factor_detected():
    g = RationalGF(tuple(poly.mul([1, 1], [1, 0, 4])), tuple(poly.mul([1, 1], [1, -5, 4, -4])))
    assert g.common_factor == [1, 1]
    assert g.reduced() == paper_gf("P")
    assert expand(g, 20) == expand(paper_gf("P"), 20)


@pytest.mark.parametrize("seq", "PMOLZH")
def test_aux_system_main_row(seq):
    sy = paper_system(seq)
    rows = evaluate_aux_system(sy, 50)
    assert rows[sy.main] == generate(paper_recurrence(seq), 51)


def test_aux_system_initial_conditions_and_hand_values():
    m = evaluate_aux_system(paper_system("M"), 2)
    assert (m["m^1"][0], m["m^2"][0], m["m^3"][0]) == (2, 1, 3)
    o = evaluate_aux_system(paper_system("O"), 2)
    assert o["o^2"][1] == 7
    l_ = evaluate_aux_system(paper_system("L"), 2)
    # l^1_1 = 2*2 + 1 + 2*2 and l^2_1 = l^3_1 + l^1_0 + l^3_0
    assert (l_["l^1"][1], l_["l^2"][1], l_["l"][2]) == (9, 11, 20)
    z = evaluate_aux_system(paper_system("Z"), 2)
    assert (z["z^2"][1], z["z^3"][1], z["z^4"][1], z["z"][2]) == (8, 11, 13, 20)
    h = evaluate_aux_system(paper_system("H"), 2)
    assert (h["h^5"][1], h["h^3"][1], h["h^4"][1], h["h"][2]) == (7, 12, 8, 20)


def test_aux_system_parsing_and_errors():
    sy = paper_system("M")
    assert sy.equations["m^3"][-1] == (1, "m^2", 0)
    assert sy.names[0] == "m"
    cyc = AuxSystem.parse("X", "a", ["a[n] = b[n]", "b[n] = a[n]"], {})
    with pytest.raises(SystemError_):
        evaluate_aux_system(cyc, 3)
    missing = AuxSystem.parse("X", "a", ["a[n] = a[n-1]"], {})
    with pytest.raises(SystemError_):
        evaluate_aux_system(missing, 2)
    with pytest.raises(SystemError_):
        AuxSystem.parse("X", "a", ["a[n-1] = a[n]"], {})
    with pytest.raises(SystemError_):
        AuxSystem.parse("X", "a", ["a[n] = ?"], {})


def test_discover_examples():
    m = discover(generate(paper_recurrence("M"), 30))
    assert (m.order, m.coeffs) == (3, (6, -3, 2))
    fib = [fibonacci(k) for k in range(1, 25)]
    f = discover(fib)
    assert (f.order, f.coeffs) == (2, (1, 1))
    data = [count_chain(named_spec("L", n)) for n in range(1, 31)]
    found = discover(data)
    assert annihilates([1, -4, 0, 0, -1, -1], data)
    assert poly.divides(found.characteristic, [1, -4, 0, 0, -1, -1])


def test_discover_limits():
    with pytest.raises(InsufficientData):
        discover([1, 2, 3], max_order=3)
    assert discover([0] * 20) is None
    # 2^n + n^3 needs order 5; with order capped at 2 nothing fits
    data = [2**n + n**3 for n in range(20)]
    assert discover(data, max_order=2) is None
    assert discover(data).order == 5


def test_discover_rational_coefficients():
    data = [Fraction(1, 2**n) for n in range(20)]
    r = discover(data)
    assert r.coeffs == (Fraction(1, 2),)


@given(
    st.lists(st.integers(-5, 5), min_size=1, max_size=4).filter(lambda c: c[-1] != 0),
    st.data(),
)
def test_discover_never_exceeds_input_order(coeffs, data):
    initial = data.draw(st.lists(st.integers(-9, 9), min_size=len(coeffs), max_size=len(coeffs)))
    terms = linear_recurrence_terms(coeffs, initial, 30)
    assume(any(terms))
    found = discover(terms)
    assert found is not None and found.order <= len(coeffs)
    assert annihilates(found.characteristic, terms)


def test_bfile():
    assert to_bfile([1, 5, 25, 109]) == "0 1\n1 5\n2 25\n3 109\n"
