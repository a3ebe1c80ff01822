"""Boundary-state dynamic programming along a chain.

Every boundary vertex (the cut vertex of a cactus, or each end of the shared
edge of a benzenoid) carries one of three statuses once the hexagons to its
left have been decided:

``M``  already matched;
``F``  unmatched so far, every neighbour seen so far is matched (it may stay
       unmatched if the next hexagon covers all of its remaining neighbours);
``N``  unmatched so far with an unmatched neighbour, so the next hexagon must
       match it.

A cactus boundary is one status, a benzenoid boundary an ordered pair
``(ring[0], ring[1])`` of the next hexagon.  The shared benzenoid edge belongs
to the hexagon on its left; the hexagon on its right is the one that checks
that its two ends are not both left unmatched.

Tensors are derived once, by enumerating all matchings of a single hexagon
under every incoming state.  Entries are polynomials in the matching size
(ascending coefficient lists) so the same machinery gives the maximal
matching polynomial; ``count_chain`` evaluates them at 1.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from . import poly
from .chains import BENZ_EXIT, CACTUS_EXIT, ChainSpec, Family
from .exact import MatchPoly

__all__ = [
    "STATUSES",
    "states",
    "TransferTensor",
    "derive_gadget_tensor",
    "derive_sized_tensor",
    "seed_vector",
    "closing_vector",
    "count_chain",
    "chain_polynomial",
    "chain_vector_trace",
]

STATUSES = ("M", "F", "N")
_RING_EDGES = tuple((i, (i + 1) % 6) for i in range(6))


def states(family: Family | str) -> tuple[tuple[str, ...], ...]:
    if Family(family) is Family.CACTUS:
        return tuple((s,) for s in STATUSES)
    return tuple(product(STATUSES, repeat=2))


def _gadget(family: Family, exits: tuple[int, ...], in_state: tuple[str, ...]):
    """Map ``out_state -> {size: count}`` for one hexagon.

    ``exits`` are the ring positions handed on to the next hexagon (empty for
    the terminal hexagon); ``out_state`` lists their statuses in the order the
    next hexagon sees them as ``ring[0], ring[1]``.
    """
    entries = (0,) if family is Family.CACTUS else (0, 1)
    own = [e for e in _RING_EDGES if family is Family.CACTUS or e != (0, 1)]
    out: dict[tuple[str, ...], dict[int, int]] = {}
    for k in range(4):
        for chosen in combinations(own, k):
            covered = [v for e in chosen for v in e]
            if len(set(covered)) != len(covered):
                continue
            hit = set(covered)
            ok = True
            for pos, st in zip(entries, in_state):
                if st == "M" and pos in hit:
                    ok = False
                if st == "N" and pos not in hit:
                    ok = False
            if not ok:
                continue
            matched = set(hit)
            matched.update(p for p, st in zip(entries, in_state) if st == "M")
            needy = set()
            for u, w in own:
                pu, pw = u in exits, w in exits
                mu, mw = u in matched, w in matched
                if mu or mw:
                    continue
                if pu and pw:
                    continue  # checked by the next hexagon
                if pu:
                    needy.add(u)
                elif pw:
                    needy.add(w)
                else:
                    ok = False
                    break
            if not ok:
                continue
            if family is Family.BENZENOID and 0 not in matched and 1 not in matched:
                continue  # the inherited shared edge would be addable
            # next hexagon reads the exit pair reversed (see chains.layout_chain)
            key = tuple(
                "M" if p in matched else ("N" if p in needy else "F") for p in reversed(exits)
            )
            row = out.setdefault(key, {})
            row[k] = row.get(k, 0) + 1
    return out


class TransferTensor:
    """Square table ``entries[i][j]`` of size polynomials over ``states(family)``."""

    def __init__(self, family: Family, entries):
        self.family = Family(family)
        self.states = states(self.family)
        self.entries = tuple(tuple(tuple(p) for p in row) for row in entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.entries[0]))

    def at_one(self) -> list[list[int]]:
        return [[sum(p) for p in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        return isinstance(other, TransferTensor) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def permuted(self, perm) -> "TransferTensor":
        """Entries ``[perm(i)][perm(j)]``."""
        return TransferTensor(
            self.family, [[self.entries[perm[i]][perm[j]] for j in range(len(perm))] for i in range(len(perm))]
        )


def _rows_to_poly(d: dict[int, int]) -> list[int]:
    if not d:
        return []
    out = [0] * (max(d) + 1)
    for k, v in d.items():
        out[k] = v
    return out


@lru_cache(maxsize=None)
def derive_sized_tensor(family: Family | str, hexagon_type: str) -> TransferTensor:
    family = Family(family)
    if hexagon_type not in family.alphabet:
        raise ValueError(f"type {hexagon_type!r} not valid for {family.value} chains")
    exits = (CACTUS_EXIT[hexagon_type],) if family is Family.CACTUS else BENZ_EXIT[hexagon_type]
    sts = states(family)
    index = {s: i for i, s in enumerate(sts)}
    entries = [[[] for _ in sts] for _ in sts]
    for s in sts:
        for t, row in _gadget(family, exits, s).items():
            entries[index[s]][index[t]] = _rows_to_poly(row)
    tensor = TransferTensor(family, entries)
    if family is Family.BENZENOID and hexagon_type == "L":
        swap = [index[(b, a)] for a, b in sts]
        mirrored = derive_sized_tensor(family, "R").permuted(swap)
        if mirrored != tensor:  # pragma: no cover - structural self-check
            raise AssertionError("L tensor is not the state-swapped R tensor")
    return tensor


def derive_gadget_tensor(family: Family | str, hexagon_type: str) -> list[list[int]]:
    """Counting tensor (size polynomials evaluated at 1)."""
    return derive_sized_tensor(family, hexagon_type).at_one()


@lru_cache(maxsize=None)
def _closing(family: Family) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(_rows_to_poly(_gadget(family, (), s).get((), {}))) for s in states(family))


def closing_vector(family: Family | str, sized: bool = False):
    """Terminal-hexagon column indexed by incoming state."""
    col = _closing(Family(family))
    return [list(p) for p in col] if sized else [sum(p) for p in col]


def seed_vector(family: Family | str, sized: bool = False):
    """State of the first attachment before the first hexagon is placed.

    A cactus starts from a fresh free vertex.  A benzenoid starts from a fresh
    free pair joined by an edge that is either in the matching (both ends
    matched, one edge counted) or not.
    """
    family = Family(family)
    sts = states(family)
    vec = [[] for _ in sts]
    if family is Family.CACTUS:
        vec[sts.index(("F",))] = [1]
    else:
        vec[sts.index(("M", "M"))] = [0, 1]
        vec[sts.index(("F", "F"))] = [1]
    return vec if sized else [sum(p) for p in vec]


def _step(vec, tensor: TransferTensor, sized: bool):
    n = len(vec)
    if sized:
        out = [[] for _ in range(n)]
        for i, p in enumerate(vec):
            if not p:
                continue
            row = tensor.entries[i]
            for j in range(n):
                if row[j]:
                    out[j] = poly.add(out[j], poly.mul(p, row[j]))
        return out
    mat = tensor.at_one()
    return [sum(vec[i] * mat[i][j] for i in range(n) if vec[i]) for j in range(n)]


def chain_vector_trace(spec: ChainSpec, sized: bool = False) -> list:
    """State vectors after each non-terminal hexagon (for inspection and tests)."""
    vec = seed_vector(spec.family, sized)
    trace = [vec]
    for t in spec.types:
        vec = _step(vec, derive_sized_tensor(spec.family, t), sized)
        trace.append(vec)
    return trace


def count_chain(spec: ChainSpec) -> int:
    """Number of maximal matchings of ``build_chain(spec)`` in O(n) steps."""
    vec = seed_vector(spec.family)
    for t in spec.types:
        mat = _at_one(spec.family, t)
        n = len(vec)
        vec = [sum(vec[i] * mat[i][j] for i in range(n) if vec[i]) for j in range(n)]
    close = closing_vector(spec.family)
    return sum(a * b for a, b in zip(vec, close))


@lru_cache(maxsize=None)
def _at_one(family: Family, t: str):
    return tuple(tuple(r) for r in derive_gadget_tensor(family, t))


def chain_polynomial(spec: ChainSpec) -> MatchPoly:
    vec = chain_vector_trace(spec, sized=True)[-1]
    close = closing_vector(spec.family, sized=True)
    acc: list = []
    for p, q in zip(vec, close):
        if p and q:
            acc = poly.add(acc, poly.mul(p, q))
    return MatchPoly(tuple(acc))
