"""Hexagonal cactus chains, benzenoid chains and their auxiliary graphs.

Layout convention
-----------------
Hexagons are numbered in chain order.  Each hexagon carries a *ring*: its six
vertices listed clockwise, starting at the attachment to the previous hexagon.

* cactus: ``ring[0]`` is the cut vertex shared with the previous hexagon.  The
  next hexagon hangs off ``ring[1]`` (ortho), ``ring[2]`` (meta) or ``ring[3]``
  (para).
* benzenoid: ``(ring[0], ring[1])`` is the edge shared with the previous
  hexagon.  The next hexagon is fused onto ``(ring[3], ring[4])`` (straight),
  ``(ring[2], ring[3])`` (``L``) or ``(ring[4], ring[5])`` (``R``).  The next
  ring starts with the exit edge traversed backwards, so clockwise order is
  preserved along the chain and ``L``/``R`` have a consistent turn sense.

The first hexagon uses the same ring shape with a virtual attachment, and its
exit is placed at the para vertex / straight edge (any choice is isomorphic).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator

from .graph import Graph

__all__ = [
    "Family",
    "ChainSpec",
    "ChainLayout",
    "SpecError",
    "AuxGraphId",
    "NAMED",
    "build_chain",
    "layout_chain",
    "build_named",
    "named_spec",
    "build_auxiliary",
    "layout_auxiliary",
    "canonicalize",
    "is_canonical",
    "iter_specs",
    "iter_canonical_specs",
    "parse_spec",
    "AUX_RANGE",
]


class SpecError(ValueError):
    """Malformed chain description or auxiliary graph id."""


class Family(str, Enum):
    CACTUS = "cactus"
    BENZENOID = "benzenoid"

    @property
    def alphabet(self) -> str:
        return "MOP" if self is Family.CACTUS else "LRS"


# exit position(s) inside a ring, per internal hexagon type
CACTUS_EXIT = {"O": 1, "M": 2, "P": 3}
BENZ_EXIT = {"S": (3, 4), "L": (2, 3), "R": (4, 5)}
FIRST_TYPE = {Family.CACTUS: "P", Family.BENZENOID: "S"}
_MIRROR = str.maketrans("LR", "RL")


@dataclass(frozen=True)
class ChainSpec:
    family: Family
    internal: str
    length: int

    def __post_init__(self) -> None:
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if self.length < 1:
            raise SpecError("chain length must be at least 1")
        if len(self.internal) != max(self.length - 2, 0):
            raise SpecError(
                f"internal string {self.internal!r} does not fit length {self.length}"
            )
        bad = set(self.internal) - set(fam.alphabet)
        if bad:
            raise SpecError(f"symbols {sorted(bad)} not allowed for {fam.value} chains")

    @classmethod
    def of(cls, family: Family | str, internal: str = "", length: int | None = None) -> "ChainSpec":
        if length is None:
            length = len(internal) + 2
        return cls(Family(family), internal, length)

    @property
    def types(self) -> str:
        """Exit type of hexagons 1..n-1 (hexagon 1 gets the default type)."""
        if self.length == 1:
            return ""
        return FIRST_TYPE[self.family] + self.internal

    def __str__(self) -> str:
        if self.length <= 2:
            return f"{self.family.value}:{self.internal}@{self.length}"
        return f"{self.family.value}:{self.internal}"


@dataclass(frozen=True)
class ChainLayout:
    spec: ChainSpec
    graph: Graph
    rings: tuple[tuple[int, ...], ...]

    def exit_of(self, k: int) -> tuple[int, ...]:
        """Boundary vertices hexagon ``k`` (0-based) shares with hexagon ``k+1``."""
        t = self.spec.types[k]
        ring = self.rings[k]
        if self.spec.family is Family.CACTUS:
            return (ring[CACTUS_EXIT[t]],)
        a, b = BENZ_EXIT[t]
        return (ring[a], ring[b])


def _ring_edges(ring) -> list[tuple[int, int]]:
    return [(ring[i], ring[(i + 1) % 6]) for i in range(6)]


def layout_chain(spec: ChainSpec) -> ChainLayout:
    """Build the chain together with its ring bookkeeping."""
    rings: list[tuple[int, ...]] = [tuple(range(6))]
    nv = 6
    edges = _ring_edges(rings[0])
    types = spec.types
    for k in range(1, spec.length):
        prev = rings[k - 1]
        t = types[k - 1]
        if spec.family is Family.CACTUS:
            ring = (prev[CACTUS_EXIT[t]],) + tuple(range(nv, nv + 5))
            nv += 5
            edges.extend(_ring_edges(ring))
        else:
            a, b = BENZ_EXIT[t]
            ring = (prev[b], prev[a]) + tuple(range(nv, nv + 4))
            nv += 4
            # the shared edge already exists in the previous ring
            edges.extend(_ring_edges(ring)[1:])
        rings.append(ring)
    return ChainLayout(spec, Graph(nv, tuple(edges)), tuple(rings))


def build_chain(spec: ChainSpec) -> Graph:
    return layout_chain(spec).graph


NAMED = {
    "P": Family.CACTUS,
    "M": Family.CACTUS,
    "O": Family.CACTUS,
    "L": Family.BENZENOID,
    "Z": Family.BENZENOID,
    "H": Family.BENZENOID,
}


def named_spec(seq: str, n: int) -> ChainSpec:
    """Spec of ``P_n``, ``M_n``, ``O_n``, ``L_n``, ``Z_n`` or ``H_n``."""
    if seq not in NAMED:
        raise SpecError(f"unknown named family {seq!r}")
    k = max(n - 2, 0)
    if seq in "PMO":
        internal = seq * k
    elif seq == "L":
        internal = "S" * k
    elif seq == "Z":
        internal = ("LR" * k)[:k]
    else:
        internal = "L" * k
    return ChainSpec(NAMED[seq], internal, n)


def build_named(seq: str, n: int) -> Graph:
    """Named family member; ``n = 0`` is the empty graph."""
    if n == 0:
        return Graph(0)
    return build_chain(named_spec(seq, n))


# --------------------------------------------------------------------------
# auxiliary graphs
# --------------------------------------------------------------------------
# Each auxiliary graph X^i_n is X_{n+1} with its last hexagon trimmed to a
# partial ring hanging off the attachment vertex (cactus) or edge (benzenoid).
# Entries: ring positions of hexagon n+1 that survive besides the attachment,
# and ring edges (by position pair) that are dropped although both ends stay.
# For the zigzag chain the positions are read in the frame where the last turn
# is ``R`` (the chain is mirrored when it ends on ``L``).
_AUX_DECORATIONS: dict[tuple[str, int], tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = {
    ("P", 1): ((1, 5), ()),
    ("P", 2): ((1,), ()),
    ("P", 3): ((1, 2, 4, 5), ()),
    ("M", 1): ((1, 5), ()),
    ("M", 2): ((1,), ()),
    ("M", 3): ((1, 2, 3, 5), ()),
    ("O", 1): ((1, 5), ()),
    ("O", 2): ((1,), ()),
    ("O", 3): ((1, 2, 3, 4), ()),
    ("L", 1): ((2, 5), ()),
    ("L", 2): ((2, 3, 5), ()),
    ("L", 3): ((2,), ()),
    ("Z", 1): ((2, 5), ()),
    ("Z", 2): ((4, 5), ()),
    ("Z", 3): ((2, 4, 5), ()),
    ("Z", 4): ((2, 3, 4, 5), ((3, 4),)),
    ("Z", 5): ((5,), ()),
    ("H", 1): ((2, 5), ()),
    ("H", 2): ((2, 4, 5), ()),
    ("H", 3): ((3, 4, 5), ()),
    ("H", 4): ((4, 5), ()),
    ("H", 5): ((5,), ()),
}

AUX_RANGE = {"P": 3, "M": 3, "O": 3, "L": 3, "Z": 5, "H": 5}


@dataclass(frozen=True)
class AuxGraphId:
    family_sequence: str
    index: int
    length: int

    def __post_init__(self) -> None:
        if self.family_sequence not in AUX_RANGE:
            raise SpecError(f"unknown family {self.family_sequence!r}")
        if not 1 <= self.index <= AUX_RANGE[self.family_sequence]:
            raise SpecError(
                f"{self.family_sequence} has auxiliary graphs 1..{AUX_RANGE[self.family_sequence]}"
            )
        if self.length < 0:
            raise SpecError("auxiliary length must be nonnegative")

    def __str__(self) -> str:
        return f"{self.family_sequence}^{self.index}_{self.length}"


def _aux_trim(seq: str, index: int):
    try:
        return _AUX_DECORATIONS[(seq, index)]
    except KeyError:  # pragma: no cover - table is complete
        raise SpecError(f"no decoration for {seq}^{index}") from None


def layout_auxiliary(aux: AuxGraphId) -> tuple[Graph, ChainLayout]:
    """Auxiliary graph plus the layout of the full chain it was trimmed from."""
    seq, n = aux.family_sequence, aux.length
    spec = named_spec(seq, n + 1)
    if seq == "Z" and spec.internal.endswith("L"):
        spec = ChainSpec(spec.family, spec.internal.translate(_MIRROR), spec.length)
    lay = layout_chain(spec)
    ring = lay.rings[-1]
    kept, dropped = _aux_trim(seq, aux.index)
    attach = (0,) if NAMED[seq] is Family.CACTUS else (0, 1)
    keep_pos = set(attach) | set(kept)
    removed = {ring[p] for p in range(6) if p not in keep_pos}
    drop = {frozenset((ring[a], ring[b])) for a, b in dropped}
    survivors = [v for v in range(lay.graph.num_vertices) if v not in removed]
    index = {v: i for i, v in enumerate(survivors)}
    edges = tuple(
        (index[u], index[v])
        for u, v in lay.graph.edges
        if u in index and v in index and frozenset((u, v)) not in drop
    )
    return Graph(len(survivors), edges), lay


def build_auxiliary(aux: AuxGraphId) -> Graph:
    return layout_auxiliary(aux)[0]


# --------------------------------------------------------------------------
# symmetry, enumeration, parsing
# --------------------------------------------------------------------------
def _variants(spec: ChainSpec) -> list[str]:
    s = spec.internal
    out = [s, s[::-1]]
    if spec.family is Family.BENZENOID:
        out += [s.translate(_MIRROR), s[::-1].translate(_MIRROR)]
    return out


def canonicalize(spec: ChainSpec) -> ChainSpec:
    """Lexicographically least equivalent spec under reversal (and mirroring)."""
    return ChainSpec(spec.family, min(_variants(spec)), spec.length)


def is_canonical(spec: ChainSpec) -> bool:
    return spec.internal == min(_variants(spec))


def iter_specs(family: Family | str, n: int) -> Iterator[ChainSpec]:
    family = Family(family)
    for tup in product(sorted(family.alphabet), repeat=max(n - 2, 0)):
        yield ChainSpec(family, "".join(tup), n)


def iter_canonical_specs(family: Family | str, n: int) -> Iterator[ChainSpec]:
    return (s for s in iter_specs(family, n) if is_canonical(s))


_NAMED_RE = re.compile(r"^([PMOLZH])(\d+)$")


def parse_spec(text: str, length: int | None = None) -> ChainSpec:
    """Parse ``cactus:MMPO``, ``benzenoid:SLR`` or a named shorthand like ``Z5``."""
    text = text.strip()
    m = _NAMED_RE.match(text)
    if m:
        n = int(m.group(2))
        if length is not None and length != n:
            raise SpecError("conflicting lengths")
        return named_spec(m.group(1), n)
    if ":" not in text:
        raise SpecError(f"cannot parse chain spec {text!r}")
    fam, internal = text.split(":", 1)
    try:
        family = Family(fam.strip().lower())
    except ValueError:
        raise SpecError(f"unknown family {fam!r}") from None
    internal = internal.strip().upper()
    if length is None:
        length = len(internal) + 2
    return ChainSpec(family, internal, length)
