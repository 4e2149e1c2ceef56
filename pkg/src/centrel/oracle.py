"""Brute-force ground truth for small graphs.

Everything here is recomputed from first principles: its own BFS distances,
exhaustive shortest-path enumeration, and definition-literal formulas.  No
computation is shared with the fast modules (only the report containers are
reused), so field-by-field agreement is a meaningful check.
"""

from __future__ import annotations

from fractions import Fraction

from .centralities import CentralityReport
from .graphs import Graph
from .neighborhood import NeighborhoodProfile

DEFAULT_ENUMERATION_CAP = 12


class PathEnumeration:
    """Every shortest path, as a vertex sequence, for every ordered pair."""

    __slots__ = ("n", "dist", "paths")

    def __init__(self, n: int, dist: list[list[int]],
                 paths: dict[tuple[int, int], list[tuple[int, ...]]]):
        self.n = n
        self.dist = dist
        self.paths = paths

    def count(self, s: int, t: int) -> int:
        if s == t:
            return 1
        return len(self.paths[(s, t)])

    def count_through(self, s: int, t: int, i: int) -> int:
        return sum(1 for p in self.paths[(s, t)] if i in p[1:-1])


def _bfs_levels(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def enumerate_shortest_paths(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP
                             ) -> PathEnumeration:
    """DFS over the BFS-layered DAG, listing every shortest path."""
    if g.n > cap:
        raise ValueError(f"graph too large for path enumeration (n={g.n} > cap={cap})")
    dist_rows = []
    for s in range(g.n):
        dist = _bfs_levels(g, s)
        if any(d < 0 for d in dist):
            raise ValueError("path enumeration needs a connected graph")
        dist_rows.append(dist)

    paths: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for s in range(g.n):
        dist = dist_rows[s]
        for t in range(g.n):
            if t == s:
                continue
            found: list[tuple[int, ...]] = []
            stack = [(s,)]
            while stack:
                partial = stack.pop()
                u = partial[-1]
                if u == t:
                    found.append(partial)
                    continue
                for w in g.neighbors(u):
                    if dist[w] == dist[u] + 1 and dist_rows[w][t] == dist[t] - dist[w]:
                        stack.append(partial + (w,))
            found.sort()
            paths[(s, t)] = found
    return PathEnumeration(g.n, dist_rows, paths)


def _triple_products(g: Graph, i: int) -> int:
    """Sum over ordered (j, k) of a_ij * a_jk * a_ki."""
    total = 0
    for j in g.neighbors(i):
        for k in g.neighbors(j):
            if k != i and g.adjacent(k, i):
                total += 1
    return total


def oracle_measures(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP) -> CentralityReport:
    """CentralityReport recomputed literally from enumerated paths."""
    pe = enumerate_shortest_paths(g, cap=cap)
    n = g.n
    dist = pe.dist
    degrees = [g.degree(i) for i in range(n)]

    clustering = []
    for i in range(n):
        d = degrees[i]
        if d <= 1:
            clustering.append(Fraction(0))
        else:
            clustering.append(Fraction(_triple_products(g, i), d * (d - 1)))

    bc = []
    st = []
    for i in range(n):
        acc_bc = Fraction(0)
        acc_st = 0
        for s in range(n):
            if s == i:
                continue
            for t in range(n):
                if t == s or t == i:
                    continue
                through = pe.count_through(s, t, i)
                if through:
                    acc_bc += Fraction(through, pe.count(s, t))
                    acc_st += through
        bc.append(acc_bc)
        st.append(acc_st)

    diam = max(max(row) for row in dist)
    total_dist = sum(sum(row) for row in dist)
    apl = Fraction(total_dist, n * (n - 1))
    eglob = sum((Fraction(1, dist[s][t])
                 for s in range(n) for t in range(n) if t != s),
                Fraction(0)) / (n * (n - 1))

    clo = [Fraction(n - 1, sum(dist[v])) for v in range(n)]
    rad = [Fraction(sum(diam + 1 - dist[v][t] for t in range(n) if t != v), n - 1)
           for v in range(n)]

    eloc = Fraction(0)
    for v in range(n):
        d = degrees[v]
        if d <= 1:
            continue
        nbrs = g.neighbors(v)
        term = sum((Fraction(1, dist[s][t])
                    for s in nbrs for t in nbrs if s != t), Fraction(0))
        eloc += term / (d * (d - 1))
    eloc /= n

    triple_total = sum(_triple_products(g, i) for i in range(n))
    degree_pairs = sum(d * (d - 1) for d in degrees)
    glob_c = Fraction(triple_total, degree_pairs) if degree_pairs else None

    return CentralityReport(
        degree=degrees,
        local_clustering=clustering,
        betweenness=bc,
        stress=st,
        closeness=clo,
        radiality=rad,
        density=Fraction(2 * g.m, n * (n - 1)),
        diameter=diam,
        avg_path_length=apl,
        global_efficiency=eglob,
        avg_clustering=sum(clustering, Fraction(0)) / n,
        global_clustering=glob_c,
        local_efficiency=eloc,
    )


def oracle_neighborhood_profiles(g: Graph, cap: int = DEFAULT_ENUMERATION_CAP
                                 ) -> list[NeighborhoodProfile]:
    """Neighborhood-restricted values recomputed from enumerated paths."""
    pe = enumerate_shortest_paths(g, cap=cap)
    dist = pe.dist
    out = []
    for i in range(g.n):
        nbrs = g.neighbors(i)
        d = len(nbrs)
        complete = all(g.adjacent(a, b) for ai, a in enumerate(nbrs)
                       for b in nbrs[ai + 1:])
        if d <= 1:
            out.append(NeighborhoodProfile(i, Fraction(0), Fraction(0), 0,
                                           Fraction(0), Fraction(0), complete))
            continue
        pair_dists = [dist[a][b] for a in nbrs for b in nbrs if a != b]
        avg_path = Fraction(sum(pair_dists), d * (d - 1))
        diam_n = max(pair_dists)

        bc_n = sum((Fraction(pe.count_through(s, t, i), pe.count(s, t))
                    for s in nbrs for t in nbrs if s != t), Fraction(0))

        rad_n = Fraction(0)
        clo_n = Fraction(0)
        for v in nbrs:
            others = [t for t in nbrs if t != v]
            rad_n += Fraction(sum(diam_n + 1 - dist[v][t] for t in others), d - 1)
            clo_n += Fraction(d - 1, sum(dist[v][t] for t in others))
        rad_n /= d
        clo_n /= d

        out.append(NeighborhoodProfile(i, avg_path, bc_n, diam_n, rad_n, clo_n,
                                       complete))
    return out
