"""Small simple-graph utilities: girth and random regular graphs."""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass

from .errors import InvalidParameters


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices ``1..vertex_count``; edges are sorted pairs."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 1:
            raise InvalidParameters("a graph needs at least one vertex")
        if any(u == v for u, v in edges):
            raise InvalidParameters("loops are not allowed")
        if len(set(edges)) != len(edges):
            raise InvalidParameters("duplicate edges are not allowed")
        if edges and (edges[0][0] < 1 or max(v for _, v in edges) > self.vertex_count):
            raise InvalidParameters("edge endpoint out of range")
        adj: list[list[int]] = [[] for _ in range(self.vertex_count + 1)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        return cls(n, tuple(edges))

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def regular_degree(self) -> int | None:
        degs = {self.degree(v) for v in range(1, self.vertex_count + 1)}
        return degs.pop() if len(degs) == 1 else None

    def edge_index(self) -> dict[tuple[int, int], int]:
        """1-based position of each edge in the sorted edge list."""
        return {e: i for i, e in enumerate(self.edges, start=1)}


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle (``math.inf`` for forests), by BFS from every vertex."""
    best = math.inf
    for root in range(1, g.vertex_count + 1):
        dist = {root: 0}
        parent = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in g.neighbours(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def moore_bound(k: int, g: int) -> int:
    """Least vertex count of a k-regular graph of girth g."""
    if g % 2:
        d = (g - 1) // 2
        return 1 + k * sum((k - 1) ** i for i in range(d))
    d = g // 2
    return 2 * sum((k - 1) ** i for i in range(d))


def random_regular(n: int, k: int, rng: random.Random, tries: int = 100) -> SimpleGraph | None:
    """Pairing model with rejection of loops and multi-edges."""
    if n * k % 2 or k >= n:
        return None
    for _ in range(tries):
        stubs = [v for v in range(1, n + 1) for _ in range(k)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for u, v in zip(stubs[::2], stubs[1::2]):
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return SimpleGraph(n, tuple(edges))
    return None


__all__ = ["SimpleGraph", "girth", "moore_bound", "random_regular"]
