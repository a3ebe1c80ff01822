"""Transfer-DP polynomials against exhaustive search, plus a long chain."""
from __future__ import annotations

import time

from mmchains import ChainSpec, build_chain, chain_polynomial, maximal_matching_polynomial

for text in ("PMO", "OOO", "MPM"):
    spec = ChainSpec.of("cactus", text)
    print(spec, chain_polynomial(spec).as_dict() == maximal_matching_polynomial(build_chain(spec)).as_dict())
for text in ("SLR", "LLL", "LRL"):
    spec = ChainSpec.of("benzenoid", text)
    print(spec, chain_polynomial(spec).as_dict() == maximal_matching_polynomial(build_chain(spec)).as_dict())
t0 = time.perf_counter()
big = chain_polynomial(ChainSpec.of("benzenoid", "LR" * 100))
print(f"202-hexagon zigzag: {len(str(big.total))} digits, saturation {big.saturation_number}, "
      f"{time.perf_counter() - t0:.2f}s")
