"""Verification suites shared by the ``mmc verify`` command and the test-suite.

Each suite yields ``Check`` records; a suite passes when every record does.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Callable, Iterator

import mpmath

from . import asymptotics as asy
from . import extremal as ex
from . import recurrences as rec
from .chains import AUX_RANGE, AuxGraphId, ChainSpec, Family, build_auxiliary, build_named, iter_specs, named_spec
from .exact import (
    DEFAULT_BUDGET,
    count_maximal,
    count_nice_independent_sets,
    count_perfect,
    maximal_matching_polynomial,
    saturation_number,
    weighted_nice_count,
)
from .graph import Graph
from .transfer import chain_polynomial, count_chain

__all__ = ["Check", "SUITES", "run_suite", "REFERENCE_GROWTH", "named_terms"]

REFERENCE_GROWTH = {
    "P": (4.28428, 1.37804),
    "M": (5.52233, 0.81408),
    "O": (4.86454, 1.05177),
    "L": (4.01923, None),
    "Z": (3.83256, None),
    "H": (3.81063, None),
}
REFERENCE_W_L = 0.248804


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.suite}: {self.name}" + (
            f" ({self.detail})" if self.detail else ""
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def named_terms(seq: str, count: int) -> list[int]:
    """Transfer-DP values for lengths ``0..count-1`` (length 0 counts 1)."""
    return [1] + [count_chain(named_spec(seq, n)) for n in range(1, count)]


def _recurrences(cfg) -> Iterator[Check]:
    s = "recurrences"
    horizon = cfg.get("horizon", 200)
    for fam in rec.SEQUENCES:
        r = rec.paper_recurrence(fam)
        gen = rec.generate(r, horizon + 1)
        dp = named_terms(fam, horizon + 1)
        yield Check(s, f"{fam}: transfer DP = recurrence for n <= {horizon}", gen == dp)
        brute = [count_maximal(build_named(fam, n)) for n in range(7)]
        yield Check(s, f"{fam}: brute force = recurrence for n <= 6", brute == gen[:7])
        sysrows = rec.evaluate_aux_system(rec.paper_system(fam), 50)
        sy = rec.paper_system(fam)
        yield Check(s, f"{fam}: coupled system main row = recurrence (n <= 50)", sysrows[sy.main] == gen[:51])
        bad = []
        for i in range(1, AUX_RANGE[fam] + 1):
            row = sysrows[f"{sy.main}^{i}"]
            for n in range(4):
                got = count_maximal(build_auxiliary(AuxGraphId(fam, i, n)))
                if got != row[n]:
                    bad.append(f"{sy.main}^{i}_{n}: {got} != {row[n]}")
        yield Check(s, f"{fam}: auxiliary rows match brute force for n <= 3", not bad, "; ".join(bad))
        found = rec.discover(dp[:30])
        ok = found is not None and rec.annihilates(r.characteristic, dp) and _divides(found, r)
        yield Check(s, f"{fam}: discovered recurrence divides the printed one", ok, _rec_str(found))


def _divides(found, printed) -> bool:
    from . import poly

    return found is not None and poly.divides(found.characteristic, printed.characteristic)


def _rec_str(r) -> str:
    return "none" if r is None else f"order {r.order}, coeffs {list(r.coeffs)}"


def _gfs(cfg) -> Iterator[Check]:
    s = "gfs"
    for fam in rec.SEQUENCES:
        r, g = rec.paper_recurrence(fam), rec.paper_gf(fam)
        yield Check(s, f"{fam}: expand(gf, 50) = generate(rec, 50)", rec.expand(g, 50) == rec.generate(r, 50))
        back = rec.rec_to_gf(r)
        yield Check(s, f"{fam}: rec -> gf gives the printed gf", back == g, json.loads(back.to_json()).__repr__())
        again = rec.gf_to_rec(g)
        yield Check(
            s, f"{fam}: gf -> rec roundtrip", rec.generate(again, 50)[: 50] == rec.generate(r, 50)
        )


def _asymptotics(cfg) -> Iterator[Check]:
    s = "asymptotics"
    tol = cfg.get("tolerance", 1e-4)
    prec = cfg.get("precision", 30)
    for fam, (lam, C) in REFERENCE_GROWTH.items():
        est = asy.growth(rec.paper_gf(fam), prec)
        ok = abs(float(est.lam) - lam) <= tol
        detail = f"lambda={mpmath.nstr(est.lam, 8)}"
        if C is not None:
            ok = ok and abs(float(est.C) - C) <= tol
            detail += f" C={mpmath.nstr(est.C, 8)}"
        yield Check(s, f"{fam}: growth constants within {tol:g}", ok, detail)
        yield Check(s, f"{fam}: dominance margin > 1.05", est.dominance_margin > 1.05, f"{est.dominance_margin:.4f}")
    wl = asy.growth(rec.paper_gf("L"), prec).w
    yield Check(s, "w(L) within 1e-5 of 0.248804", abs(float(wl) - REFERENCE_W_L) <= 1e-5, mpmath.nstr(wl, 10))
    wm = asy.growth(rec.paper_gf("M"), prec).w
    diff = abs(wm - asy.META_ROOT())
    yield Check(s, "w(M) equals the closed form to 1e-12", diff <= mpmath.mpf("1e-12"), mpmath.nstr(diff, 3))


def _extremal(cfg) -> Iterator[Check]:
    s = "extremal"
    n_max = cfg.get("n", 10)
    workers = cfg.get("workers", 1)
    for n in range(3, n_max + 1):
        rc = ex.scan(Family.CACTUS, n, workers, n_max=max(12, n_max))
        p = count_chain(named_spec("P", n))
        m = count_chain(named_spec("M", n))
        yield Check(s, f"cactus n={n}: min = P_n", rc.min_count == p, f"{rc.min_spec} {rc.min_count}")
        yield Check(s, f"cactus n={n}: max = M_n", rc.max_count == m, f"{rc.max_spec} {rc.max_count}")
        rb = ex.scan(Family.BENZENOID, n, workers, n_max=max(12, n_max))
        l_ = count_chain(named_spec("L", n))
        h = count_chain(named_spec("H", n))
        yield Check(s, f"benzenoid n={n}: max = L_n", rb.max_count == l_, f"{rb.max_spec} {rb.max_count}")
        yield Check(s, f"benzenoid n={n}: min = H_n", rb.min_count == h, f"{rb.min_spec} {rb.min_count}")


def _identities(cfg) -> Iterator[Check]:
    s = "identities"
    budget = cfg.get("budget", DEFAULT_BUDGET)
    yield Check(s, "Psi(H_{n-1,n} - c) = 11", ex.cactus_fragment_constant() == 11)
    yield Check(s, "Psi(H_{n-1,n} \\ z) = 4", ex.benzenoid_fragment_constant() == 4)
    for ident in ("CP", "CM", "CO"):
        bad = [
            f"{r.base}: {r.lhs} != {r.rhs}"
            for m in (2, 3, 4)
            for b in iter_specs(Family.CACTUS, m)
            for r in [ex.verify_decomposition(ident, b, budget)]
            if not r.passed
        ]
        yield Check(s, f"{ident} decomposition on every base of length <= 4", not bad, _first(bad))
    for ident in ("BL", "BK"):
        bad = [
            f"{r.base}{' (flip)' if f else ''}: {r.lhs} != {r.rhs}"
            for m in (2, 3, 4)
            for b in iter_specs(Family.BENZENOID, m)
            for f in (False, True)
            for r in [ex.verify_decomposition_benzenoid(ident, b, budget, flip=f)]
            if not r.passed
        ]
        yield Check(s, f"{ident} decomposition on every base of length <= 4", not bad, _first(bad))
    for fam, names in ((Family.CACTUS, ("Sub2", "CactusEdges")), (Family.BENZENOID, ("BenzEdges",))):
        checks = [r for n in (2, 3, 4) for r in ex.verify_lemma_inequalities(fam, n, budget)]
        for name in names:
            bad = [f"{r.base}: {r.detail}" for r in checks if r.identity == name and not r.passed]
            yield Check(s, f"{name} on every {fam.value} chain of length <= 4", not bad, _first(bad))
    fib = [1, 1]
    while len(fib) < 12:
        fib.append(fib[-1] + fib[-2])
    ok = all(
        count_perfect(build_named("Z", n)) == fib[n + 1] == count_perfect(build_named("H", n))
        for n in range(1, 9)
    )
    yield Check(s, "perfect matchings of Z_n and H_n are F_{n+2} (n <= 8)", ok)
    c6 = Graph(6, tuple((i, (i + 1) % 6) for i in range(6)))
    poly6 = maximal_matching_polynomial(c6)
    yield Check(
        s,
        "C6: polynomial, saturation, transfer polynomial agree",
        poly6.as_dict() == {2: 3, 3: 2}
        and saturation_number(c6) == 2
        and chain_polynomial(ChainSpec(Family.CACTUS, "", 1)) == poly6,
    )
    yield Check(
        s,
        "C6: nice independent sets weighted by perfect matchings give Psi",
        weighted_nice_count(c6) == count_maximal(c6),
        f"unweighted nice sets = {count_nice_independent_sets(c6)}",
    )


def _first(bad: list[str]) -> str:
    if not bad:
        return ""
    return f"{len(bad)} failing, first: {bad[0]}"


def _logconcavity(cfg) -> Iterator[Check]:
    s = "logconcavity"
    n_max = cfg.get("lc_n_max", 60)
    exhaustive = cfg.get("lc_exhaustive", 8)
    for fam in Family:
        rep = ex.log_concavity_scan(fam, n_max, exhaustive)
        yield Check(
            s,
            f"{fam.value}: log-concave up to n={rep.exhaustive_up_to} (all) / {rep.named_up_to} (named)",
            not rep.violations,
            f"{rep.checked} polynomials, {rep.message}",
        )


SUITES: dict[str, Callable] = {
    "recurrences": _recurrences,
    "gfs": _gfs,
    "asymptotics": _asymptotics,
    "extremal": _extremal,
    "identities": _identities,
    "logconcavity": _logconcavity,
}


def run_suite(name: str, cfg: dict | None = None) -> list[Check]:
    cfg = cfg or {}
    names = list(SUITES) if name == "all" else [name]
    out: list[Check] = []
    for n in names:
        out.extend(SUITES[n](cfg))
    return out
