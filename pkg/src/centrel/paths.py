"""All-pairs shortest-path distances, path counts, and global distance metrics.

Distances are exact hop counts; shortest-path counts come from the standard
BFS dynamic program.  Derived means are exact rationals.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .graphs import MAX_DENSE_VERTICES, Graph


class DisconnectedGraphError(ValueError):
    """Raised when a distance-based measure meets an unreachable pair."""


class DistanceData:
    """Dense all-pairs hop counts ``dist`` and shortest-path counts ``sigma``.

    ``dist[s][t]`` is the hop distance, ``sigma[s][t]`` the number of distinct
    shortest s-t paths (``sigma[s][s] == 1`` by convention).  Both matrices
    are symmetric for undirected graphs.
    """

    __slots__ = ("dist", "sigma")

    def __init__(self, dist: list[list[int]], sigma: list[list[int]]):
        self.dist = dist
        self.sigma = sigma

    @property
    def n(self) -> int:
        return len(self.dist)

    def row_sum(self, v: int) -> int:
        return sum(self.dist[v])


def _bfs_counting(g: Graph, source: int) -> tuple[list[int], list[int]]:
    dist = [-1] * g.n
    sigma = [0] * g.n
    dist[source] = 0
    sigma[source] = 1
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        sv = sigma[v]
        for w in g.neighbors(v):
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
            if dist[w] == dv + 1:
                sigma[w] += sv
    return dist, sigma


def all_pairs(g: Graph) -> DistanceData:
    """BFS from every source; errors on disconnected input."""
    if g.n > MAX_DENSE_VERTICES:
        raise ValueError(f"graph too large for dense all-pairs (n={g.n} > "
                         f"{MAX_DENSE_VERTICES})")
    dist_rows = []
    sigma_rows = []
    for s in range(g.n):
        dist, sigma = _bfs_counting(g, s)
        if any(d < 0 for d in dist):
            raise DisconnectedGraphError(
                f"vertex {s} cannot reach every vertex; distance sums undefined")
        dist_rows.append(dist)
        sigma_rows.append(sigma)
    return DistanceData(dist_rows, sigma_rows)


def sigma_through(dd: DistanceData, s: int, t: int, i: int) -> int:
    """Number of shortest s-t paths with i as an interior vertex.

    Equals sigma(s,i) * sigma(i,t) when i lies on some shortest s-t path,
    else 0.  Requires s, t, i pairwise distinct.
    """
    if s == t or i == s or i == t:
        raise ValueError("sigma_through needs pairwise distinct s, t, i")
    if dd.dist[s][i] + dd.dist[i][t] != dd.dist[s][t]:
        return 0
    return dd.sigma[s][i] * dd.sigma[i][t]


def diameter(dd: DistanceData) -> int:
    """Largest hop distance over all pairs."""
    if dd.n < 2:
        raise ValueError("diameter needs at least 2 vertices")
    return max(max(row) for row in dd.dist)


def avg_path_length(dd: DistanceData) -> Fraction:
    """Mean hop distance over ordered pairs s != t."""
    n = dd.n
    if n < 2:
        raise ValueError("average path length needs at least 2 vertices")
    total = sum(sum(row) for row in dd.dist)
    return Fraction(total, n * (n - 1))


def global_efficiency(dd: DistanceData) -> Fraction:
    """Mean inverse hop distance over ordered pairs s != t."""
    n = dd.n
    if n < 2:
        raise ValueError("global efficiency needs at least 2 vertices")
    total = Fraction(0)
    for s in range(n):
        row = dd.dist[s]
        for t in range(n):
            if t != s:
                total += Fraction(1, row[t])
    return total / (n * (n - 1))


def density(g: Graph) -> Fraction:
    """Edge count over the maximum possible edge count."""
    if g.n < 2:
        raise ValueError("density needs at least 2 vertices")
    return Fraction(2 * g.m, g.n * (g.n - 1))
