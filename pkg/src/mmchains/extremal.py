"""Exhaustive extremal scans, proof-identity checks and log-concavity search.

Vertex and edge labels
----------------------
The decomposition identities are phrased around the last two hexagons of a
base chain ``G_m`` (``h_{m-1}`` and the terminal ``h_m``).  ``cactus_labels``
and ``benzenoid_labels`` pin those letters to vertex indices of
``layout_chain(base)``:

* cactus: ``c`` is the cut vertex between ``h_{m-1}`` and ``h_m``; in
  ``h_{m-1}`` its neighbours are ``b`` and ``i``, then ``a`` and ``j``, and
  ``k`` is opposite.  In ``h_m`` the ring continues ``c, d, e, f, g, h``.
* benzenoid: ``c`` is the shared edge, ``a, h, g, f, e`` run around
  ``h_{m-1}`` from its top end and ``b, x, y, z, d`` around ``h_m``.
  Both mirror orientations are available.
"""
from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import islice

from .chains import (
    BENZ_EXIT,
    CACTUS_EXIT,
    ChainSpec,
    Family,
    canonicalize,
    is_canonical,
    iter_canonical_specs,
    layout_chain,
    named_spec,
)
from .exact import (
    DEFAULT_BUDGET,
    count_maximal,
    iter_maximal_matchings,
)
from .graph import Graph, delete_edge_endpoints, delete_vertices, induced_subgraph
from .transfer import chain_polynomial, count_chain

__all__ = [
    "ExtremalReport",
    "IdentityCheck",
    "scan",
    "check_conjecture_helicene",
    "cactus_labels",
    "benzenoid_labels",
    "cactus_fragment_constant",
    "benzenoid_fragment_constant",
    "verify_decomposition",
    "verify_decomposition_benzenoid",
    "verify_lemma_inequalities",
    "log_concavity_scan",
    "is_log_concave",
    "CACTUS_IDENTITIES",
    "BENZENOID_IDENTITIES",
]


@dataclass
class ExtremalReport:
    family: str
    length: int
    scanned: int
    min_spec: str
    min_count: int
    min_ties: int
    max_spec: str
    max_count: int
    max_ties: int
    histogram: dict | None = None

    def to_json(self) -> str:
        d = asdict(self)
        d["min_count"] = str(self.min_count)
        d["max_count"] = str(self.max_count)
        if self.histogram is not None:
            d["histogram"] = {str(k): v for k, v in sorted(self.histogram.items())}
        return json.dumps(d, sort_keys=True)

    def to_csv_rows(self, counts: list[tuple[str, int]]) -> str:
        return "spec,count\n" + "".join(f"{s},{c}\n" for s, c in counts)


@dataclass
class IdentityCheck:
    identity: str
    base: str
    lhs: int
    rhs: int
    passed: bool
    detail: str = ""

    def to_json(self) -> str:
        d = asdict(self)
        d["lhs"], d["rhs"] = str(self.lhs), str(self.rhs)
        return json.dumps(d, sort_keys=True)


# --------------------------------------------------------------------------
# scans
# --------------------------------------------------------------------------
def _count_chunk(items: list[tuple[str, str, int]]) -> list[tuple[str, int]]:
    out = []
    for fam, internal, n in items:
        out.append((internal, count_chain(ChainSpec(Family(fam), internal, n))))
    return out


def _chunks(seq, size):
    it = iter(seq)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def scan_counts(family: Family | str, n: int, workers: int = 1) -> list[tuple[str, int]]:
    """``(internal, count)`` for every canonical spec of length ``n``, sorted by spec."""
    family = Family(family)
    items = [(family.value, s.internal, n) for s in iter_canonical_specs(family, n)]
    if workers <= 1 or len(items) < 64:
        rows = _count_chunk(items)
    else:
        size = max(16, len(items) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [r for part in pool.map(_count_chunk, _chunks(items, size)) for r in part]
    return sorted(rows)


def scan(
    family: Family | str, n: int, workers: int = 1, histogram: bool = False, n_max: int = 12
) -> ExtremalReport:
    family = Family(family)
    if not 1 <= n <= n_max:
        raise ValueError(f"scan length must lie in 1..{n_max}")
    rows = scan_counts(family, n, workers)
    lo = min(c for _, c in rows)
    hi = max(c for _, c in rows)
    lows = sorted(s for s, c in rows if c == lo)
    highs = sorted(s for s, c in rows if c == hi)
    hist = dict(Counter(c for _, c in rows)) if histogram else None
    return ExtremalReport(
        family.value, n, len(rows), lows[0], lo, len(lows), highs[0], hi, len(highs), hist
    )


def check_conjecture_helicene(n: int, workers: int = 1) -> IdentityCheck:
    """Does the helicene attain the benzenoid minimum at length ``n``?"""
    rep = scan(Family.BENZENOID, n, workers)
    h = count_chain(named_spec("H", n))
    return IdentityCheck(
        "helicene-min",
        f"benzenoid n={n}",
        rep.min_count,
        h,
        rep.min_count == h,
        f"minimum attained by {rep.min_spec!r} ({rep.min_ties} spec(s))",
    )


# --------------------------------------------------------------------------
# label maps
# --------------------------------------------------------------------------
def cactus_labels(base: ChainSpec, flip: bool = False) -> dict[str, int]:
    """Letters ``a..k`` of the last two hexagons of a cactus base (length >= 2).

    ``flip`` exchanges the two sides (``b, a`` with ``i, j`` and ``d, e`` with
    ``h, g``).
    """
    if base.family is not Family.CACTUS or base.length < 2:
        raise ValueError("need a cactus chain of length at least 2")
    lay = layout_chain(base)
    prev, last = lay.rings[-2], lay.rings[-1]
    e = CACTUS_EXIT[base.types[-1]]
    s = -1 if flip else 1
    p = lambda k: prev[(e + s * k) % 6]  # noqa: E731
    q = lambda k: last[(s * k) % 6]  # noqa: E731
    return {
        "c": p(0), "b": p(1), "a": p(2), "k": p(3), "j": p(4), "i": p(5),
        "d": q(1), "e": q(2), "f": q(3), "g": q(4), "h": q(5),
    }


def benzenoid_labels(base: ChainSpec, flip: bool = False) -> dict[str, tuple[int, int]]:
    """Edge letters ``a..h, x, y, z`` of the last two hexagons of a benzenoid base.

    Without ``flip`` the top end of ``c`` is ``ring[1]`` of the terminal
    hexagon; ``flip`` mirrors the picture.
    """
    if base.family is not Family.BENZENOID or base.length < 2:
        raise ValueError("need a benzenoid chain of length at least 2")
    lay = layout_chain(base)
    prev, last = lay.rings[-2], lay.rings[-1]
    pa, pb = BENZ_EXIT[base.types[-1]]
    if not flip:
        top, s = pa, -1  # walk away from c on the top side
        q = lambda k: last[k % 6]  # noqa: E731
    else:
        top, s = pb, 1
        q = lambda k: last[(1 - k) % 6]  # noqa: E731
    p = lambda k: prev[(top + s * k) % 6]  # noqa: E731
    return {
        "c": (p(0), p(5)),
        "a": (p(0), p(1)),
        "h": (p(1), p(2)),
        "g": (p(2), p(3)),
        "f": (p(3), p(4)),
        "e": (p(4), p(5)),
        "b": (q(1), q(2)),
        "x": (q(2), q(3)),
        "y": (q(3), q(4)),
        "z": (q(4), q(5)),
        "d": (q(5), q(0)),
    }


def _prefix(lay, upto: int):
    verts = sorted({v for ring in lay.rings[:upto] for v in ring})
    return induced_subgraph(lay.graph, verts, return_map=True)


# --------------------------------------------------------------------------
# cactus decompositions
# --------------------------------------------------------------------------
CACTUS_IDENTITIES = {
    # attach letter, new hexagon type, coefficients of
    # H-{b,c}, H-{c,i}, H-c, H-{a,b,c,i,j}
    "CP": ("f", "P", (11, 11, 20, 5)),
    "CM": ("e", "M", (17, 17, 22, 3)),
    "CO": ("d", "O", (15, 15, 18, 3)),
}
_CACTUS_TERMS = (("b", "c"), ("c", "i"), ("c",), ("a", "b", "c", "i", "j"))


def cactus_fragment_constant() -> int:
    """Two para-joined hexagons with the far cut vertex ``c`` removed."""
    lay = layout_chain(ChainSpec(Family.CACTUS, "", 2))
    return count_maximal(delete_vertices(lay.graph, [lay.rings[0][0]]))


def verify_decomposition(
    identity: str, base: ChainSpec, budget: int = DEFAULT_BUDGET, flip: bool = False
) -> IdentityCheck:
    """Brute-force both sides of the CP / CM / CO identity on ``base``."""
    _, t, coeffs = CACTUS_IDENTITIES[identity]
    lab = cactus_labels(base, flip)
    # flipping the labels mirrors h_m, which maps the extension onto itself
    ext = ChainSpec(Family.CACTUS, base.internal + t, base.length + 1)
    lhs = count_maximal(layout_chain(ext).graph, budget)
    lay = layout_chain(base)
    head, where = _prefix(lay, base.length - 1)
    rhs = 0
    for coef, letters in zip(coeffs, _CACTUS_TERMS):
        rhs += coef * count_maximal(delete_vertices(head, [where[lab[x]] for x in letters]), budget)
    return IdentityCheck(identity, str(base), lhs, rhs, lhs == rhs, "flip" if flip else "")


# --------------------------------------------------------------------------
# benzenoid decompositions
# --------------------------------------------------------------------------
_BENZ_TERMS = (("a", "f"), ("c", "f"), ("c",), ("e", "h"), ("c", "h"), ("a", "e"), ("a", "c"), ("c", "e"))
BENZENOID_IDENTITIES = {
    "BL": ("y", (4, 3, 14, 4, 3, 9, 7, 7)),
    "BK": ("z", (6, 5, 12, 5, 3, 8, 5, 7)),
}


def benzenoid_fragment_constant() -> int:
    """Private part of ``h_{n-1}`` plus ``h_n`` (fused on ``y``) minus the ends of ``z``.

    The two ends of the shared edge ``c`` belong to ``H_{n-2}`` and are left
    out of the fragment, as in the case count that uses this constant.
    """
    base = ChainSpec(Family.BENZENOID, "", 2)
    lab = benzenoid_labels(base)
    lay = layout_chain(ChainSpec(Family.BENZENOID, "S", 3))
    keep = (set(lay.rings[1]) | set(lay.rings[2])) - set(lab["c"])
    frag, where = induced_subgraph(lay.graph, keep, return_map=True)
    u, v = lab["z"]
    return count_maximal(delete_edge_endpoints(frag, [(where[u], where[v])]))


def _benz_extension(base: ChainSpec, identity: str, flip: bool) -> ChainSpec:
    if identity == "BL":
        t = "S"
    else:
        t = "L" if flip else "R"
    return ChainSpec(Family.BENZENOID, base.internal + t, base.length + 1)


def verify_decomposition_benzenoid(
    identity: str, base: ChainSpec, budget: int = DEFAULT_BUDGET, flip: bool = False
) -> IdentityCheck:
    """Brute-force both sides of the BL / BK identity (``\\`` deletes edge endpoints)."""
    _, coeffs = BENZENOID_IDENTITIES[identity]
    lab = benzenoid_labels(base, flip)
    ext = _benz_extension(base, identity, flip)
    ext_lay = layout_chain(ext)
    attach = set(ext_lay.rings[-1][:2])
    want = "y" if identity == "BL" else "z"
    if attach != set(lab[want]):  # pragma: no cover - layout self-check
        raise AssertionError("extension does not attach at the labelled edge")
    lhs = count_maximal(ext_lay.graph, budget)
    head, where = _prefix(layout_chain(base), base.length - 1)
    rhs = 0
    for coef, letters in zip(coeffs, _BENZ_TERMS):
        edges = [(where[lab[x][0]], where[lab[x][1]]) for x in letters]
        rhs += coef * count_maximal(delete_edge_endpoints(head, edges), budget)
    return IdentityCheck(identity, str(base), lhs, rhs, lhs == rhs, "flip" if flip else "")


# --------------------------------------------------------------------------
# lemma checks
# --------------------------------------------------------------------------
def _cactus_lemma_checks(spec: ChainSpec, budget: int) -> list[IdentityCheck]:
    out = []
    lab = cactus_labels(spec)
    lay = layout_chain(spec)
    head, where = _prefix(lay, spec.length - 1)

    def psi(*letters):
        return count_maximal(delete_vertices(head, [where[lab[x]] for x in letters]), budget)

    bc, ci, c = psi("b", "c"), psi("c", "i"), psi("c")
    ok = 2 * bc >= c or 2 * ci >= c
    out.append(
        IdentityCheck("Sub2", str(spec), max(2 * bc, 2 * ci), c, ok, f"2*Psi(-bc)={2*bc} 2*Psi(-ci)={2*ci} Psi(-c)={c}")
    )

    g = lay.graph
    c_edges = {frozenset((lab["c"], lab[x])) for x in "bdhi"}
    four = [frozenset((lab[u], lab[v])) for u, v in (("a", "b"), ("d", "e"), ("j", "i"), ("h", "g"))]
    total = single = allfour = 0
    for m in iter_maximal_matchings(g, budget):
        es = {frozenset(e) for e in m}
        total += 1
        k = len(es & c_edges)
        if k == 1:
            single += 1
        elif all(e in es for e in four):
            allfour += 1
    out.append(
        IdentityCheck(
            "CactusEdges", str(spec), single + allfour, total, single + allfour == total,
            f"one c-edge: {single}, all four side edges: {allfour}",
        )
    )
    return out


_BENZ_PAIRS = ({"a", "e"}, {"a", "d"}, {"b", "e"}, {"b", "d"})


def _benzenoid_lemma_checks(spec: ChainSpec, budget: int) -> list[IdentityCheck]:
    lab = benzenoid_labels(spec)
    names = {frozenset(lab[x]): x for x in "abcde"}
    total = good = 0
    for m in iter_maximal_matchings(layout_chain(spec).graph, budget):
        total += 1
        hit = {names[frozenset(e)] for e in m if frozenset(e) in names}
        if len(hit) == 1 or hit in _BENZ_PAIRS:
            good += 1
    return [
        IdentityCheck("BenzEdges", str(spec), good, total, good == total, f"{total - good} unclassified")
    ]


def verify_lemma_inequalities(
    family: Family | str, n: int, budget: int = DEFAULT_BUDGET
) -> list[IdentityCheck]:
    """Case-partition and inequality checks on every canonical chain of length ``n`` (>= 2)."""
    family = Family(family)
    out: list[IdentityCheck] = []
    for spec in iter_canonical_specs(family, n):
        for variant in _orientations(spec):
            if family is Family.CACTUS:
                out.extend(_cactus_lemma_checks(variant, budget))
            else:
                out.extend(_benzenoid_lemma_checks(variant, budget))
    return out


def _orientations(spec: ChainSpec) -> list[ChainSpec]:
    """The chain and its reversal (which terminal hexagon plays ``h_m``)."""
    rev = ChainSpec(spec.family, spec.internal[::-1], spec.length)
    return [spec] if rev == spec else [spec, rev]


# --------------------------------------------------------------------------
# log-concavity
# --------------------------------------------------------------------------
def is_log_concave(coeffs) -> tuple[bool, int | None]:
    """Check ``c_k^2 >= c_{k-1} c_{k+1}`` for interior ``k`` of the nonzero support."""
    support = [k for k, c in enumerate(coeffs) if c]
    if not support:
        return True, None
    lo, hi = support[0], support[-1]
    for k in range(lo + 1, hi):
        if coeffs[k] * coeffs[k] < coeffs[k - 1] * coeffs[k + 1]:
            return False, k
    return True, None


@dataclass
class LogConcavityReport:
    family: str
    exhaustive_up_to: int
    named_up_to: int
    checked: int
    violations: list = field(default_factory=list)

    @property
    def message(self) -> str:
        if not self.violations:
            return "no counterexample found"
        return f"{len(self.violations)} violation(s)"

    def to_json(self) -> str:
        d = asdict(self)
        d["message"] = self.message
        return json.dumps(d, sort_keys=True)


def log_concavity_scan(
    family: Family | str, n_max: int = 60, exhaustive_max: int = 10
) -> LogConcavityReport:
    """All canonical chains up to ``min(n_max, exhaustive_max)``; named chains up to ``n_max``."""
    family = Family(family)
    checked = 0
    bad = []
    seen = set()
    top = min(n_max, exhaustive_max)
    for n in range(1, top + 1):
        for spec in iter_canonical_specs(family, n):
            seen.add(spec)
            ok, k = is_log_concave(chain_polynomial(spec).coeffs)
            checked += 1
            if not ok:
                bad.append({"spec": str(spec), "length": n, "index": k})
    names = "PMO" if family is Family.CACTUS else "LZH"
    for n in range(top + 1, n_max + 1):
        for seq in names:
            spec = canonicalize(named_spec(seq, n))
            if spec in seen:
                continue
            seen.add(spec)
            ok, k = is_log_concave(chain_polynomial(spec).coeffs)
            checked += 1
            if not ok:
                bad.append({"spec": str(spec), "length": n, "index": k})
    return LogConcavityReport(family.value, top, n_max, checked, bad)


__all__ += ["LogConcavityReport", "scan_counts", "is_canonical"]
