"""Partially persistent disjoint-set union.

Unions happen at increasing integer timestamps; connectivity can be queried
at any past timestamp.  Links are by rank only and each parent pointer is
written exactly once, so no fat nodes are needed: a find at time t simply
stops at the first link younger than t.  Path compression is deliberately
absent (it would rewrite history).
"""

from __future__ import annotations


class PersistentDsu:
    def __init__(self, n: int):
        if n < 0:
            raise ValueError("node count must be nonnegative")
        self.n = n
        self._parent = [-1] * n
        self._link_time = [0] * n
        self._rank = [0] * n
        self._time = 0

    @property
    def time(self) -> int:
        return self._time

    def _check_node(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise ValueError(f"node {u} out of range 0..{self.n - 1}")

    def find(self, u: int, t: int) -> int:
        """Root of u in the forest restricted to links made at or before t."""
        parent, link_time = self._parent, self._link_time
        while parent[u] >= 0 and link_time[u] <= t:
            u = parent[u]
        return u

    def find_with_hops(self, u: int, t: int) -> tuple[int, int]:
        parent, link_time = self._parent, self._link_time
        hops = 0
        while parent[u] >= 0 and link_time[u] <= t:
            u = parent[u]
            hops += 1
        return u, hops

    def union(self, u: int, v: int) -> int:
        """Merge the components of u and v; returns the new timestamp.

        Time advances even when u and v are already connected, keeping a
        one-to-one correspondence between timestamps and union calls.
        """
        self._check_node(u)
        self._check_node(v)
        self._time += 1
        ru = self.find(u, self._time)
        rv = self.find(v, self._time)
        if ru != rv:
            rank = self._rank
            if rank[ru] < rank[rv]:
                child, root = ru, rv
            elif rank[ru] > rank[rv]:
                child, root = rv, ru
            else:
                root, child = (ru, rv) if ru < rv else (rv, ru)
                rank[root] += 1
            self._parent[child] = root
            self._link_time[child] = self._time
        return self._time

    def connected(self, u: int, v: int, t: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        if not 0 <= t <= self._time:
            raise ValueError(f"timestamp {t} out of range 0..{self._time}")
        return self.find(u, t) == self.find(v, t)

    def connected_with_hops(self, u: int, v: int, t: int) -> tuple[bool, int]:
        self._check_node(u)
        self._check_node(v)
        if not 0 <= t <= self._time:
            raise ValueError(f"timestamp {t} out of range 0..{self._time}")
        ru, hu = self.find_with_hops(u, t)
        rv, hv = self.find_with_hops(v, t)
        return ru == rv, hu + hv
