"""Recheck the decomposition identities and show where they break."""
from __future__ import annotations

from mmchains import extremal as ex
from mmchains.chains import Family, iter_specs

print("fragment constants:", ex.cactus_fragment_constant(), ex.benzenoid_fragment_constant())
for ident in ex.CACTUS_IDENTITIES:
    for m in (2, 3):
        for base in iter_specs(Family.CACTUS, m):
            r = ex.verify_decomposition(ident, base)
            print(f"{ident} on {r.base:12s} count {r.lhs:5d}  sum {r.rhs:5d}  {'ok' if r.passed else 'MISMATCH'}")
for ident in ex.BENZENOID_IDENTITIES:
    for base in iter_specs(Family.BENZENOID, 3):
        r = ex.verify_decomposition_benzenoid(ident, base)
        print(f"{ident} on {r.base:12s} count {r.lhs:5d}  sum {r.rhs:5d}  {'ok' if r.passed else 'MISMATCH'}")
