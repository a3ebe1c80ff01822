"""Exhaustive counting on arbitrary small graphs.

A matching is maximal exactly when its unmatched vertices form an independent
set.  The search walks the vertices in index order; an undecided vertex is
either left unmatched (which obliges all of its neighbours to end up matched)
or matched to a later undecided neighbour.  Every leaf is a maximal matching,
so nothing is generated and then thrown away except at pruned branches.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph

__all__ = [
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "MatchPoly",
    "count_maximal",
    "maximal_matching_polynomial",
    "saturation_number",
    "iter_maximal_matchings",
    "count_perfect",
    "has_perfect_matching",
    "count_nice_independent_sets",
    "weighted_nice_count",
    "is_maximal_matching",
]

DEFAULT_BUDGET = 10**9

_UNDECIDED, _MATCHED, _UNMATCHED = 0, 1, 2


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than the configured budget allows."""


@dataclass(frozen=True)
class MatchPoly:
    """Maximal matching polynomial: ``coeffs[k]`` maximal matchings of size ``k``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    def __call__(self, x=1):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    @property
    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    @property
    def saturation_number(self) -> int:
        s = self.support
        return s[0] if s else 0

    @property
    def max_size(self) -> int:
        return len(self.coeffs) - 1

    def as_dict(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def to_json(self) -> str:
        return json.dumps(
            {"coeffs": {str(k): str(c) for k, c in self.as_dict().items()}}, sort_keys=True
        )

    @classmethod
    def from_json(cls, text: str) -> "MatchPoly":
        d = {int(k): int(v) for k, v in json.loads(text)["coeffs"].items()}
        size = max(d, default=-1) + 1
        return cls(tuple(d.get(k, 0) for k in range(size)))

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "MatchPoly":
        size = max(d, default=-1) + 1
        return cls(tuple(d.get(k, 0) for k in range(size)))


class _Search:
    def __init__(self, g: Graph, budget: int):
        self.adj = g.adjacency
        self.n = g.num_vertices
        self.status = [_UNDECIDED] * self.n
        self.need = [0] * self.n  # unmatched neighbours demanding a match
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")

    def _can_still_match(self, w: int) -> bool:
        st = self.status
        return any(st[u] == _UNDECIDED for u in self.adj[w])

    def count(self, v: int, size: int, acc: list[int]) -> None:
        self.tick()
        n, st, adj = self.n, self.status, self.adj
        while v < n and st[v] == _MATCHED:
            v += 1
        if v == n:
            while len(acc) <= size:
                acc.append(0)
            acc[size] += 1
            return
        if self.need[v] == 0 and self._leave_unmatched(v):
            self.count(v + 1, size, acc)
            self._undo_unmatched(v)
        st[v] = _MATCHED
        for w in adj[v]:
            if w > v and st[w] == _UNDECIDED:
                st[w] = _MATCHED
                self.count(v + 1, size + 1, acc)
                st[w] = _UNDECIDED
        st[v] = _UNDECIDED

    def walk(self, v: int, chosen: list[tuple[int, int]]) -> Iterator[tuple[tuple[int, int], ...]]:
        self.tick()
        n, st, adj = self.n, self.status, self.adj
        while v < n and st[v] == _MATCHED:
            v += 1
        if v == n:
            yield tuple(chosen)
            return
        if self.need[v] == 0 and self._leave_unmatched(v):
            yield from self.walk(v + 1, chosen)
            self._undo_unmatched(v)
        st[v] = _MATCHED
        for w in adj[v]:
            if w > v and st[w] == _UNDECIDED:
                st[w] = _MATCHED
                chosen.append((v, w))
                yield from self.walk(v + 1, chosen)
                chosen.pop()
                st[w] = _UNDECIDED
        st[v] = _UNDECIDED

    def _leave_unmatched(self, v: int) -> bool:
        """Mark ``v`` unmatched if no later neighbour is left without a partner."""
        st = self.status
        st[v] = _UNMATCHED
        for w in self.adj[v]:
            self.need[w] += 1
        for w in self.adj[v]:
            if w > v and st[w] == _UNDECIDED and not self._can_still_match(w):
                self._undo_unmatched(v)
                return False
        return True

    def _undo_unmatched(self, v: int) -> None:
        for w in self.adj[v]:
            self.need[w] -= 1
        self.status[v] = _UNDECIDED


def maximal_matching_polynomial(g: Graph, budget: int = DEFAULT_BUDGET) -> MatchPoly:
    acc: list[int] = []
    _Search(g, budget).count(0, 0, acc)
    return MatchPoly(tuple(acc))


def count_maximal(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Number of maximal matchings of ``g`` (the empty graph has exactly one)."""
    return maximal_matching_polynomial(g, budget).total


def saturation_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return maximal_matching_polynomial(g, budget).saturation_number


def iter_maximal_matchings(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield every maximal matching as a tuple of ``(u, v)`` edges with ``u < v``."""
    return _Search(g, budget).walk(0, [])


def is_maximal_matching(g: Graph, matching) -> bool:
    covered: set[int] = set()
    for u, v in matching:
        if not g.has_edge(u, v) or u in covered or v in covered:
            return False
        covered.update((u, v))
    return all(u in covered or v in covered for u, v in g.edges)


# --------------------------------------------------------------------------
# perfect matchings and nice independent sets
# --------------------------------------------------------------------------
def _perfect(adj, alive: list[bool], budget: list[int], stop_at_one: bool) -> int:
    budget[0] -= 1
    if budget[0] < 0:
        raise BudgetExceeded("perfect matching search exceeded budget")
    try:
        v = alive.index(True)
    except ValueError:
        return 1
    alive[v] = False
    total = 0
    for w in adj[v]:
        if alive[w]:
            alive[w] = False
            total += _perfect(adj, alive, budget, stop_at_one)
            alive[w] = True
            if stop_at_one and total:
                break
    alive[v] = True
    return total


def count_perfect(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return _perfect(g.adjacency, [True] * g.num_vertices, [budget], False)


def has_perfect_matching(g: Graph, removed=(), budget: int = DEFAULT_BUDGET) -> bool:
    alive = [True] * g.num_vertices
    for v in removed:
        alive[v] = False
    if sum(alive) % 2:
        return False
    return _perfect(g.adjacency, alive, [budget], True) > 0


def _independent_sets(adj, n: int) -> Iterator[list[int]]:
    chosen: list[int] = []
    blocked = [0] * n

    def rec(v: int):
        if v == n:
            yield list(chosen)
            return
        yield from rec(v + 1)
        if not blocked[v]:
            chosen.append(v)
            for w in adj[v]:
                blocked[w] += 1
            yield from rec(v + 1)
            for w in adj[v]:
                blocked[w] -= 1
            chosen.pop()

    return rec(0)


def count_nice_independent_sets(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Independent sets ``S`` (empty set included) such that ``G - S`` has a perfect matching."""
    return sum(
        1
        for s in _independent_sets(g.adjacency, g.num_vertices)
        if has_perfect_matching(g, s, budget)
    )


def weighted_nice_count(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Sum over independent ``S`` of the number of perfect matchings of ``G - S``.

    Sending a maximal matching to its set of unmatched vertices hits every nice
    independent set ``S`` once per perfect matching of ``G - S``, so this sum is
    the number of maximal matchings.
    """
    adj = g.adjacency
    total = 0
    for s in _independent_sets(adj, g.num_vertices):
        alive = [True] * g.num_vertices
        for v in s:
            alive[v] = False
        if (g.num_vertices - len(s)) % 2 == 0:
            total += _perfect(adj, alive, [budget], False)
    return total
