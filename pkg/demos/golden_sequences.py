"""Print the six named sequences from three independent engines side by side."""
from __future__ import annotations

from mmchains import build_chain, count_maximal, count_chain, named_spec
from mmchains import recurrences as rec

N = 8
for fam in rec.SEQUENCES:
    from_rec = rec.generate(rec.paper_recurrence(fam), N + 1)
    from_gf = rec.expand(rec.paper_gf(fam), N + 1)
    from_dp = [1] + [count_chain(named_spec(fam, n)) for n in range(1, N + 1)]
    brute = [1] + [count_maximal(build_chain(named_spec(fam, n))) for n in range(1, 6)]
    agree = from_rec == from_gf == from_dp and brute == from_dp[:6]
    print(f"{fam}: {', '.join(map(str, from_dp))}   engines agree: {agree}")
