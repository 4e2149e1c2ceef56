"""Mechanical verification of the clustering/centrality relations.

Each checker computes both sides of one relation in exact arithmetic,
decides whether it holds (zero tolerance), measures the slack, and detects
the structural equality condition where one exists.  Checkers refuse graphs
with degree-1 vertices unless explicitly overridden, in which case the
degree-1 conventions apply and the outcome is reported honestly (several
relations do not survive the conventions).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .centralities import (average_clustering, betweenness_and_stress,
                           closeness, global_clustering, local_clustering,
                           local_efficiency, radiality)
from .graphs import FamilySpec, Graph, generate
from .neighborhood import (bc_loc, clo_loc, is_complete_neighborhood,
                           neighborhood_avg_path, neighborhood_betweenness,
                           rad_loc)
from .paths import (DistanceData, all_pairs, avg_path_length, diameter)
from .serialize import rational_json

RELATION_ORDER = ("lemma1", "thm1", "thm2", "thm3", "cor_sandwich", "lemma2",
                  "thm4", "lemma3", "thm5", "thm6", "cor_thm6", "cor_regular")


class PreconditionError(ValueError):
    """The graph violates a checker's stated hypotheses."""


@dataclass
class RelationReport:
    """Outcome of one relation check.

    ``direction`` is "eq", "le", "ge" (lhs vs rhs) or "none" when no
    direction was asserted.  For inequalities ``slack`` is the margin in the
    asserted direction (holds iff slack >= 0); for identities it is the worst
    absolute deviation (holds iff slack == 0).
    """

    relation: str
    direction: str
    lhs: Fraction
    rhs: Fraction
    holds: bool
    slack: Fraction
    equality_expected: bool
    equality_observed: bool
    hypothesis_met: bool = True
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self, exact: bool = True) -> dict:
        return {
            "relation": self.relation,
            "direction": self.direction,
            "lhs": rational_json(self.lhs, exact),
            "rhs": rational_json(self.rhs, exact),
            "holds": self.holds,
            "slack": rational_json(self.slack, exact),
            "equality_expected": self.equality_expected,
            "equality_observed": self.equality_observed,
            "hypothesis_met": self.hypothesis_met,
            "notes": list(self.notes),
        }


def _prepare(g: Graph, dd: DistanceData | None, allow_pendant: bool,
             need_min_degree_2: bool) -> DistanceData:
    if need_min_degree_2 and not allow_pendant and g.min_degree() < 2:
        raise PreconditionError(
            "graph has a vertex of degree < 2; rerun with the pendant override "
            "to apply the degree-1 conventions")
    return dd if dd is not None else all_pairs(g)


def _eligible(g: Graph) -> list[int]:
    """Vertices with the degree-normalized quantities defined."""
    return [i for i in range(g.n) if g.degree(i) >= 2]


def _skip_note(g: Graph, notes: list[str]) -> None:
    skipped = g.n - len(_eligible(g))
    if skipped:
        notes.append(f"skipped {skipped} vertices of degree <= 1 "
                     "(degree-1 convention)")


def check_lemma1(g: Graph, dd: DistanceData | None = None,
                 allow_pendant: bool = False) -> RelationReport:
    """Per-vertex identity: neighborhood average path length = 2 - c_i."""
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=True)
    notes: list[str] = []
    _skip_note(g, notes)
    worst = Fraction(0)
    lhs_total = Fraction(0)
    rhs_total = Fraction(0)
    count = 0
    for i in _eligible(g):
        lhs_i = neighborhood_avg_path(g, dd, i)
        rhs_i = 2 - local_clustering(g, i)
        dev = abs(lhs_i - rhs_i)
        if dev > worst:
            worst = dev
            notes.append(f"vertex {i}: L(N)={lhs_i} vs 2-c={rhs_i}")
        lhs_total += lhs_i
        rhs_total += rhs_i
        count += 1
    lhs = lhs_total / count if count else Fraction(0)
    rhs = rhs_total / count if count else Fraction(0)
    holds = worst == 0
    return RelationReport("lemma1", "eq", lhs, rhs, holds, worst,
                          equality_expected=True, equality_observed=holds,
                          notes=notes)


def check_thm1(g: Graph, dd: DistanceData | None = None,
               allow_pendant: bool = False) -> RelationReport:
    """Identity: local efficiency = (1 + average clustering) / 2."""
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=True)
    lhs = local_efficiency(g, dd)
    rhs = (1 + average_clustering(g)) / 2
    slack = abs(rhs - lhs)
    holds = slack == 0
    return RelationReport("thm1", "eq", lhs, rhs, holds, slack,
                          equality_expected=True, equality_observed=holds)


def check_thm2(g: Graph, dd: DistanceData | None = None,
               allow_pendant: bool = False) -> RelationReport:
    """Bound: average clustering >= 1 - mean of Str(i)/(d_i(d_i-1)).

    Equality is expected whenever the diameter is at most 2 (every
    through-path then has length exactly 2).
    """
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=True)
    # only the stress column is used here; it is exact in either mode
    _, stress = betweenness_and_stress(g, exact=False)
    term_total = Fraction(0)
    for i in range(g.n):
        d = g.degree(i)
        if d >= 2:
            term_total += Fraction(stress[i], d * (d - 1))
    lhs = average_clustering(g)
    rhs = 1 - term_total / g.n
    slack = lhs - rhs
    expected = diameter(dd) <= 2
    return RelationReport("thm2", "ge", lhs, rhs, holds=slack >= 0, slack=slack,
                          equality_expected=expected,
                          equality_observed=slack == 0)


def neighborhoods_unique_two_paths(g: Graph, dd: DistanceData) -> bool:
    """True iff every non-adjacent neighbor pair, in every neighborhood, is
    joined by a single shortest path (exactly one common neighbor)."""
    for i in range(g.n):
        nbrs = g.neighbors(i)
        for a_idx in range(len(nbrs)):
            s = nbrs[a_idx]
            for b_idx in range(a_idx + 1, len(nbrs)):
                t = nbrs[b_idx]
                if not g.adjacent(s, t) and dd.sigma[s][t] != 1:
                    return False
    return True


def neighborhoods_are_clique_unions(g: Graph) -> bool:
    """True iff each induced neighborhood splits into disjoint cliques.

    This is the textbook phrasing of the betweenness-bound equality regime,
    but on its own it is weaker than ``neighborhoods_unique_two_paths``: a
    4-cycle satisfies it (two isolated neighbors) while a second 2-hop route
    through the opposite vertex still breaks equality.
    """
    for i in range(g.n):
        nbrs = g.neighbors(i)
        nbr_set = set(nbrs)
        seen: set[int] = set()
        for start in nbrs:
            if start in seen:
                continue
            component = {start}
            frontier = [start]
            while frontier:
                u = frontier.pop()
                for w in g.neighbors(u):
                    if w in nbr_set and w not in component:
                        component.add(w)
                        frontier.append(w)
            comp = sorted(component)
            for x_idx in range(len(comp)):
                for y_idx in range(x_idx + 1, len(comp)):
                    if not g.adjacent(comp[x_idx], comp[y_idx]):
                        return False
            seen |= component
    return True


def check_thm3(g: Graph, dd: DistanceData | None = None,
               allow_pendant: bool = False) -> RelationReport:
    """Bound: average clustering <= 1 - local betweenness.

    Equality is expected exactly when every non-adjacent neighbor pair has a
    unique shortest (2-hop) path; that implies, and is stronger than, every
    neighborhood splitting into disjoint cliques.
    """
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=True)
    lhs = average_clustering(g)
    rhs = 1 - bc_loc(g, dd)
    slack = rhs - lhs
    expected = neighborhoods_unique_two_paths(g, dd)
    return RelationReport("thm3", "le", lhs, rhs, holds=slack >= 0, slack=slack,
                          equality_expected=expected,
                          equality_observed=slack == 0)


def check_cor_sandwich(g: Graph, dd: DistanceData | None = None,
                       allow_pendant: bool = False) -> RelationReport:
    """Per-vertex sandwich:
    BC(i,N(i))/(d(d-1)) <= L(N(i)) - 1 <= Str(i)/(d(d-1))."""
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=True)
    _, stress = betweenness_and_stress(g, exact=False)
    notes: list[str] = []
    _skip_note(g, notes)
    worst: Fraction | None = None
    left_total = Fraction(0)
    right_total = Fraction(0)
    count = 0
    for i in _eligible(g):
        pair_count = g.degree(i) * (g.degree(i) - 1)
        left = neighborhood_betweenness(g, dd, i) / pair_count
        mid = neighborhood_avg_path(g, dd, i) - 1
        right = Fraction(stress[i], pair_count)
        margin = min(mid - left, right - mid)
        if worst is None or margin < worst:
            worst = margin
            if margin < 0:
                notes.append(f"vertex {i}: {left} <= {mid} <= {right} fails")
        left_total += left
        right_total += right
        count += 1
    if worst is None:
        worst = Fraction(0)
    lhs = left_total / count if count else Fraction(0)
    rhs = right_total / count if count else Fraction(0)
    return RelationReport("cor_sandwich", "le", lhs, rhs,
                          holds=worst >= 0, slack=worst,
                          equality_expected=False,
                          equality_observed=worst == 0, notes=notes)


def check_lemma2(g: Graph, dd: DistanceData | None = None,
                 allow_pendant: bool = False) -> RelationReport:
    """Bound: mean closeness >= 1 / average path length.

    Equality is expected when all per-vertex distance sums agree.
    """
    if g.n < 2:
        raise PreconditionError("needs at least 2 vertices")
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=False)
    lhs = sum((closeness(g, dd, v) for v in range(g.n)), Fraction(0)) / g.n
    rhs = 1 / avg_path_length(dd)
    slack = lhs - rhs
    row_sums = {dd.row_sum(v) for v in range(g.n)}
    expected = len(row_sums) == 1
    return RelationReport("lemma2", "ge", lhs, rhs, holds=slack >= 0, slack=slack,
                          equality_expected=expected,
                          equality_observed=slack == 0)


def check_thm4(g: Graph, dd: DistanceData | None = None,
               allow_pendant: bool = False) -> RelationReport:
    """Bound: 1/(2 - average clustering) <= mean neighborhood closeness."""
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=True)
    lhs = 1 / (2 - average_clustering(g))
    rhs = clo_loc(g, dd)
    slack = rhs - lhs
    return RelationReport("thm4", "le", lhs, rhs, holds=slack >= 0, slack=slack,
                          equality_expected=False,
                          equality_observed=slack == 0)


def check_lemma3(g: Graph, dd: DistanceData | None = None,
                 allow_pendant: bool = False) -> RelationReport:
    """Identity: mean radiality = diameter + 1 - average path length."""
    if g.n < 2:
        raise PreconditionError("needs at least 2 vertices")
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=False)
    lhs = sum((radiality(g, dd, v) for v in range(g.n)), Fraction(0)) / g.n
    rhs = diameter(dd) + 1 - avg_path_length(dd)
    slack = abs(rhs - lhs)
    holds = slack == 0
    return RelationReport("lemma3", "eq", lhs, rhs, holds, slack,
                          equality_expected=True, equality_observed=holds)


def check_thm5(g: Graph, dd: DistanceData | None = None,
               allow_pendant: bool = False) -> RelationReport:
    """Identity: average clustering = local radiality - 1 + (complete
    neighborhoods) / n."""
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=True)
    lhs = average_clustering(g)
    complete = sum(1 for i in range(g.n) if is_complete_neighborhood(g, i))
    rhs = rad_loc(g, dd) - 1 + Fraction(complete, g.n)
    slack = abs(rhs - lhs)
    holds = slack == 0
    report = RelationReport("thm5", "eq", lhs, rhs, holds, slack,
                            equality_expected=True, equality_observed=holds)
    report.notes.append(f"complete neighborhoods: {complete} of {g.n}")
    return report


def _degree_class_ordering(g: Graph) -> str:
    """Classify the joint degree/clustering ordering across vertices.

    Returns "both", "co", "anti", or "none".  Ties in degree force equal
    clustering for either ordering to hold.
    """
    by_degree: dict[int, set[Fraction]] = {}
    for i in range(g.n):
        by_degree.setdefault(g.degree(i), set()).add(local_clustering(g, i))
    if any(len(vals) > 1 for vals in by_degree.values()):
        return "none"
    reps = [next(iter(by_degree[d])) for d in sorted(by_degree)]
    co = all(reps[k] <= reps[k + 1] for k in range(len(reps) - 1))
    anti = all(reps[k] >= reps[k + 1] for k in range(len(reps) - 1))
    if co and anti:
        return "both"
    if co:
        return "co"
    if anti:
        return "anti"
    return "none"


def check_thm6(g: Graph, dd: DistanceData | None = None,
               allow_pendant: bool = False) -> RelationReport:
    """Chebyshev ordering between average and global clustering.

    Co-monotone degree/clustering sequences give C_WS <= C, anti-monotone
    ones C_WS >= C, regular graphs (and graphs with all clusterings equal)
    exact equality.  When neither ordering holds no direction is asserted.
    """
    dd = _prepare(g, dd, allow_pendant, need_min_degree_2=False)
    lhs = average_clustering(g)
    try:
        rhs = global_clustering(g)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc

    degrees = set(g.degrees())
    if len(degrees) == 1:
        slack = abs(rhs - lhs)
        holds = slack == 0
        return RelationReport("cor_regular", "eq", lhs, rhs, holds, slack,
                              equality_expected=True, equality_observed=holds,
                              notes=["regular graph"])

    ordering = _degree_class_ordering(g)
    if ordering == "both":
        slack = abs(rhs - lhs)
        holds = slack == 0
        return RelationReport("thm6", "eq", lhs, rhs, holds, slack,
                              equality_expected=True, equality_observed=holds,
                              notes=["all local clusterings equal"])
    if ordering == "co":
        slack = rhs - lhs
        return RelationReport("thm6", "le", lhs, rhs, holds=slack >= 0,
                              slack=slack, equality_expected=False,
                              equality_observed=slack == 0,
                              notes=["co-monotone degree/clustering ordering"])
    if ordering == "anti":
        slack = lhs - rhs
        return RelationReport("cor_thm6", "ge", lhs, rhs, holds=slack >= 0,
                              slack=slack, equality_expected=False,
                              equality_observed=slack == 0,
                              notes=["anti-monotone degree/clustering ordering"])
    return RelationReport("thm6", "none", lhs, rhs, holds=True,
                          slack=Fraction(0), equality_expected=False,
                          equality_observed=lhs == rhs, hypothesis_met=False,
                          notes=["no degree/clustering ordering holds; "
                                 "no direction asserted"])


CHECKERS = (check_lemma1, check_thm1, check_thm2, check_thm3,
            check_cor_sandwich, check_lemma2, check_thm4, check_lemma3,
            check_thm5, check_thm6)


def check_all(g: Graph, dd: DistanceData | None = None,
              allow_pendant: bool = False) -> list[RelationReport]:
    """Run every checker, sharing one distance computation."""
    if dd is None:
        dd = all_pairs(g)
    return [chk(g, dd, allow_pendant=allow_pendant) for chk in CHECKERS]


# ---------------------------------------------------------------------------
# Windmill divergence sweep
# ---------------------------------------------------------------------------

@dataclass
class SweepResult:
    """Per-size clustering values for a windmill family sweep.

    ``rows`` holds (eta, C_WS, C).  Trend flags cover the eta >= 2 rows; the
    eta = 1 point is a single clique where both coefficients are 1.
    """

    k: int
    rows: list[tuple[int, Fraction, Fraction]]
    avg_strictly_increasing: bool
    glob_strictly_decreasing: bool
    degenerate_start: bool = False


def sweep_windmill(eta_max: int, k: int, eta_min: int = 2) -> SweepResult:
    """Tabulate average vs global clustering for windmill(eta, k)."""
    if k < 3:
        raise ValueError("windmill sweep needs k >= 3")
    if eta_min < 1 or eta_max < eta_min:
        raise ValueError("bad eta range")
    rows = []
    for eta in range(eta_min, eta_max + 1):
        g = generate(FamilySpec("windmill", (eta, k)))
        rows.append((eta, average_clustering(g), global_clustering(g)))
    trend_rows = [r for r in rows if r[0] >= 2]
    inc = all(a[1] < b[1] for a, b in zip(trend_rows, trend_rows[1:]))
    dec = all(a[2] > b[2] for a, b in zip(trend_rows, trend_rows[1:]))
    return SweepResult(k=k, rows=rows, avg_strictly_increasing=inc,
                       glob_strictly_decreasing=dec,
                       degenerate_start=eta_min < 2)
