"""A small undirected graph with per-vertex data and edge kinds."""
from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable


class Graph:
    def __init__(self):
        self.adj: dict = {}
        self.data: dict = {}
        self.edge_kind: dict = {}
        self.meta: dict = {}

    def add_vertex(self, v: Hashable, **data) -> None:
        if v not in self.adj:
            self.adj[v] = set()
            self.data[v] = {}
        self.data[v].update(data)

    def add_edge(self, u: Hashable, v: Hashable, kind: str | None = None) -> None:
        if u == v:
            return
        self.add_vertex(u)
        self.add_vertex(v)
        self.adj[u].add(v)
        self.adj[v].add(u)
        key = (u, v) if u <= v else (v, u)
        if kind is not None:
            old = self.edge_kind.get(key)
            if old is not None and old != kind:
                raise ValueError(f"edge {key} classified as both {old} and {kind}")
            self.edge_kind[key] = kind

    def has_edge(self, u, v) -> bool:
        return u in self.adj and v in self.adj[u]

    def vertices(self) -> list:
        return sorted(self.adj)

    def edges(self) -> list[tuple]:
        out = []
        for u, nb in self.adj.items():
            for v in nb:
                if u < v:
                    out.append((u, v))
        return sorted(out)

    def neighbors(self, v) -> set:
        return self.adj[v]

    def degree(self, v) -> int:
        return len(self.adj[v])

    def __len__(self) -> int:
        return len(self.adj)

    def __contains__(self, v) -> bool:
        return v in self.adj

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adj.values()) // 2

    def subgraph(self, vertices: Iterable) -> "Graph":
        keep = set(vertices)
        H = Graph()
        for v in keep:
            H.add_vertex(v, **self.data.get(v, {}))
        for v in keep:
            for w in self.adj[v]:
                if w in keep and v < w:
                    H.add_edge(v, w, self.edge_kind.get((v, w)))
        H.meta = dict(self.meta)
        return H

    def bfs(self, source, limit: int | None = None) -> dict:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if limit is not None and dist[u] >= limit:
                continue
            for w in self.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def components(self, vertices: Iterable | None = None) -> list[list]:
        """Connected components of the induced subgraph on ``vertices``."""
        pool = set(self.adj if vertices is None else vertices)
        comps = []
        for s in sorted(pool):
            if s not in pool:
                continue
            pool.discard(s)
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w in pool:
                        pool.discard(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1
