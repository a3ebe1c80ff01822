"""Small immutable simple-graph type plus the two vertex-deletion operators.

``G - S`` removes a vertex set; ``G \\ X`` removes the endpoints of an edge set.
Both relabel the surviving vertices to ``0..k-1`` preserving order and can
optionally report the old-to-new mapping.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "delete_vertices",
    "delete_edge_endpoints",
    "induced_subgraph",
    "relabel",
    "disjoint_union",
]


class GraphError(ValueError):
    """Raised for malformed graphs (loops, duplicate edges, bad indices)."""


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.num_vertices < 0:
            raise GraphError("negative vertex count")
        norm = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise GraphError(f"edge ({u}, {v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def __len__(self) -> int:
        return self.num_vertices

    # -- serialization -----------------------------------------------------
    def to_edgelist(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)

    def to_json(self) -> str:
        return json.dumps(
            {"num_vertices": self.num_vertices, "edges": [list(e) for e in self.edges]},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        obj = json.loads(text)
        return cls(int(obj["num_vertices"]), tuple(tuple(e) for e in obj["edges"]))

    @classmethod
    def from_edgelist(cls, text: str, num_vertices: int | None = None) -> "Graph":
        edges = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            u, v = line.split()
            edges.append((int(u), int(v)))
        if num_vertices is None:
            num_vertices = 1 + max((max(e) for e in edges), default=-1)
        return cls(num_vertices, tuple(edges))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.num_vertices))
        g.add_edges_from(self.edges)
        return g


def induced_subgraph(
    g: Graph, keep: Iterable[int], *, return_map: bool = False
) -> Graph | tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep``; vertices renumbered in increasing order."""
    keep_sorted = sorted(set(keep))
    mapping = {old: new for new, old in enumerate(keep_sorted)}
    edges = tuple(
        (mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping
    )
    h = Graph(len(keep_sorted), edges)
    return (h, mapping) if return_map else h


def delete_vertices(g: Graph, removed: Iterable[int], *, return_map: bool = False):
    """``G - S``: delete the vertices of ``S`` and every edge incident to them."""
    removed = set(removed)
    for v in removed:
        if not 0 <= v < g.num_vertices:
            raise GraphError(f"vertex {v} not in graph")
    return induced_subgraph(
        g, (v for v in range(g.num_vertices) if v not in removed), return_map=return_map
    )


def delete_edge_endpoints(
    g: Graph, edges: Iterable[Sequence[int]], *, return_map: bool = False
):
    """``G \\ X``: delete both endpoints of each edge in ``X`` (and their edges)."""
    removed: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        removed.update((u, v))
    return delete_vertices(g, removed, return_map=return_map)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex permutation ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.num_vertices)):
        raise GraphError("not a permutation")
    return Graph(g.num_vertices, tuple((perm[u], perm[v]) for u, v in g.edges))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.num_vertices
    return Graph(offset, tuple(edges))
