"""Dominant poles and growth constants, checked against the actual terms."""
from __future__ import annotations

import mpmath

from mmchains import asymptotics as asy
from mmchains import recurrences as rec

for fam in rec.SEQUENCES:
    est = asy.growth(rec.paper_gf(fam), precision=20)
    terms = rec.generate(rec.paper_recurrence(fam), 61)
    dev = asy.empirical_growth_check(terms, est, 40, 60)
    print(
        f"{fam}: lambda = {mpmath.nstr(est.lam, 12)}  C = {mpmath.nstr(est.C, 12)}  "
        f"margin = {est.dominance_margin:.3f}  max rel. error n=40..60: {dev:.1e}"
    )
with mpmath.workdps(40):
    gap = abs(asy.growth(rec.paper_gf("M"), 35).w - asy.META_ROOT())
print("meta pole vs closed form:", mpmath.nstr(gap, 3))
