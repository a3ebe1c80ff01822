"""Which chains of each length have the fewest and the most maximal matchings."""
from __future__ import annotations

from mmchains.chains import Family
from mmchains.extremal import scan

for fam in Family:
    for n in range(3, 11):
        r = scan(fam, n, workers=2)
        print(
            f"{fam.value:9s} n={n:2d}  {r.scanned:5d} chains  "
            f"min {r.min_count} at {r.min_spec!r}  max {r.max_count} at {r.max_spec!r}"
        )
