"""Neighborhood-restricted measures.

Every quantity here ranges over the neighbors N(i) of a vertex, but all
distances, path counts, and diameters are measured in the whole graph,
never in the induced subgraph.  Degree-1 vertices contribute 0 to every
aggregate while still counting in 1/n averages.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph
from .paths import DistanceData, sigma_through


def neighborhood_avg_path(g: Graph, dd: DistanceData, i: int) -> Fraction:
    """Mean whole-graph distance over ordered pairs of distinct neighbors of i."""
    d = g.degree(i)
    if d <= 1:
        return Fraction(0)
    nbrs = g.neighbors(i)
    total = 0
    for a_idx in range(d):
        row = dd.dist[nbrs[a_idx]]
        for b_idx in range(a_idx + 1, d):
            total += row[nbrs[b_idx]]
    return Fraction(2 * total, d * (d - 1))


def neighborhood_diameter(g: Graph, dd: DistanceData, i: int) -> int:
    """Largest whole-graph distance among pairs of neighbors of i (0 if d<=1)."""
    d = g.degree(i)
    if d <= 1:
        return 0
    nbrs = g.neighbors(i)
    best = 0
    for a_idx in range(d):
        row = dd.dist[nbrs[a_idx]]
        for b_idx in range(a_idx + 1, d):
            if row[nbrs[b_idx]] > best:
                best = row[nbrs[b_idx]]
    return best


def is_complete_neighborhood(g: Graph, i: int) -> bool:
    """True iff the neighbors of i are pairwise adjacent."""
    nbrs = g.neighbors(i)
    d = len(nbrs)
    for a_idx in range(d):
        a = nbrs[a_idx]
        for b_idx in range(a_idx + 1, d):
            if not g.adjacent(a, nbrs[b_idx]):
                return False
    return True


def neighborhood_betweenness(g: Graph, dd: DistanceData, i: int) -> Fraction:
    """Betweenness of i restricted to ordered pairs of its own neighbors."""
    nbrs = g.neighbors(i)
    d = len(nbrs)
    total = Fraction(0)
    for a_idx in range(d):
        s = nbrs[a_idx]
        for b_idx in range(a_idx + 1, d):
            t = nbrs[b_idx]
            through = sigma_through(dd, s, t, i)
            if through:
                total += Fraction(through, dd.sigma[s][t])
    return 2 * total  # ordered pairs


def bc_loc(g: Graph, dd: DistanceData) -> Fraction:
    """Mean of BC(i, N(i)) / (d_i (d_i - 1)) over all vertices."""
    total = Fraction(0)
    for i in range(g.n):
        d = g.degree(i)
        if d <= 1:
            continue
        total += neighborhood_betweenness(g, dd, i) / (d * (d - 1))
    return total / g.n


def radiality_in_neighborhood(g: Graph, dd: DistanceData, i: int, v: int) -> Fraction:
    """Radiality of neighbor v among the other neighbors of i.

    Uses the neighborhood diameter and whole-graph distances; 0 when i has
    fewer than two neighbors.
    """
    d = g.degree(i)
    if d <= 1:
        return Fraction(0)
    diam_n = neighborhood_diameter(g, dd, i)
    row = dd.dist[v]
    total = sum(diam_n + 1 - row[t] for t in g.neighbors(i) if t != v)
    return Fraction(total, d - 1)


def neighborhood_radiality(g: Graph, dd: DistanceData, i: int) -> Fraction:
    """Mean radiality of the neighbors of i within N(i)."""
    d = g.degree(i)
    if d <= 1:
        return Fraction(0)
    total = sum((radiality_in_neighborhood(g, dd, i, v) for v in g.neighbors(i)),
                Fraction(0))
    return total / d


def rad_loc(g: Graph, dd: DistanceData) -> Fraction:
    """Mean neighborhood radiality over all vertices."""
    return sum((neighborhood_radiality(g, dd, i) for i in range(g.n)),
               Fraction(0)) / g.n


def closeness_in_neighborhood(g: Graph, dd: DistanceData, i: int, v: int,
                              include_center: bool = False) -> Fraction:
    """Closeness of neighbor v restricted to the other members of N(i).

    With ``include_center`` the center i joins the target set (the closed
    neighborhood reading); the default excludes it.
    """
    targets = [t for t in g.neighbors(i) if t != v]
    if include_center:
        targets.append(i)
    if not targets:
        return Fraction(0)
    row = dd.dist[v]
    return Fraction(len(targets), sum(row[t] for t in targets))


def neighborhood_closeness(g: Graph, dd: DistanceData, i: int,
                           include_center: bool = False) -> Fraction:
    """Mean restricted closeness of the neighbors of i."""
    d = g.degree(i)
    if d <= 1:
        return Fraction(0)
    total = sum((closeness_in_neighborhood(g, dd, i, v, include_center)
                 for v in g.neighbors(i)), Fraction(0))
    return total / d


def clo_loc(g: Graph, dd: DistanceData, include_center: bool = False) -> Fraction:
    """Mean neighborhood closeness over all vertices."""
    return sum((neighborhood_closeness(g, dd, i, include_center)
                for i in range(g.n)), Fraction(0)) / g.n


@dataclass
class NeighborhoodProfile:
    """All neighborhood-restricted values for one vertex."""

    vertex: int
    avg_path: Fraction
    betweenness: Fraction
    diameter: int
    radiality: Fraction
    closeness: Fraction
    is_complete: bool

    FIELDS = ("avg_path", "betweenness", "diameter", "radiality", "closeness",
              "is_complete")


def profile(g: Graph, dd: DistanceData, i: int) -> NeighborhoodProfile:
    return NeighborhoodProfile(
        vertex=i,
        avg_path=neighborhood_avg_path(g, dd, i),
        betweenness=neighborhood_betweenness(g, dd, i),
        diameter=neighborhood_diameter(g, dd, i),
        radiality=neighborhood_radiality(g, dd, i),
        closeness=neighborhood_closeness(g, dd, i),
        is_complete=is_complete_neighborhood(g, i),
    )


def profiles(g: Graph, dd: DistanceData) -> list[NeighborhoodProfile]:
    return [profile(g, dd, i) for i in range(g.n)]
