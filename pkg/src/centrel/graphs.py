"""Simple undirected graphs: representation, validation, I/O, and generators.

Vertices are dense 0-based integers.  Input files may use arbitrary labels;
these are mapped to indices and the label table is kept on the graph.  All
graphs are simple (no self-loops, no multi-edges) and immutable after
construction.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

# Dense all-pairs matrices get unwieldy past this; refuse early.
MAX_DENSE_VERTICES = 20_000


class GraphFormatError(ValueError):
    """Malformed graph input (bad edge list, bad JSON, bad labels)."""


class FamilyParameterError(ValueError):
    """Generator parameters violate the family's requirements."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Invariants enforced at construction: no self-loops, symmetric adjacency,
    no multi-edges, m = (1/2) * sum of degrees.
    """

    __slots__ = ("_adj", "_neighbors", "_m", "labels", "duplicates_collapsed")

    def __init__(self, adjacency: Sequence[Iterable[int]],
                 labels: Sequence[str] | None = None,
                 duplicates_collapsed: bool = False):
        n = len(adjacency)
        if n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        adj = [frozenset(nbrs) for nbrs in adjacency]
        for i, nbrs in enumerate(adj):
            if i in nbrs:
                raise GraphFormatError(f"self-loop at vertex {i}")
            for j in nbrs:
                if not (0 <= j < n):
                    raise GraphFormatError(f"neighbor {j} of vertex {i} out of range")
                if i not in adj[j]:
                    raise GraphFormatError(f"asymmetric adjacency between {i} and {j}")
        self._adj = tuple(adj)
        self._neighbors = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._m = sum(len(nbrs) for nbrs in adj) // 2
        if labels is not None and len(labels) != n:
            raise GraphFormatError("label table size does not match vertex count")
        self.labels = tuple(labels) if labels is not None else None
        self.duplicates_collapsed = duplicates_collapsed

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    def degree(self, i: int) -> int:
        return len(self._adj[i])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def neighbors(self, i: int) -> tuple[int, ...]:
        """Neighbors of i in increasing vertex order."""
        return self._neighbors[i]

    def adjacent(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) with i < j, sorted."""
        return [(i, j) for i in range(self.n) for j in self._neighbors[i] if i < j]

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(edges: Iterable[tuple[int, int]], n: int,
                   labels: Sequence[str] | None = None) -> Graph:
    """Build a Graph from integer index pairs.

    Duplicate edges (in either orientation) are collapsed; the returned
    graph's ``duplicates_collapsed`` flag records whether any were seen.
    Self-loops and out-of-range indices are errors.
    """
    if n < 1:
        raise GraphFormatError("vertex count must be at least 1")
    adjacency: list[set[int]] = [set() for _ in range(n)]
    duplicates = False
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise GraphFormatError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise GraphFormatError(f"self-loop ({i}, {i}) not allowed in a simple graph")
        if j in adjacency[i]:
            duplicates = True
            continue
        adjacency[i].add(j)
        adjacency[j].add(i)
    return Graph(adjacency, labels=labels, duplicates_collapsed=duplicates)


def validate_no_pendant(g: Graph) -> bool:
    """True iff every vertex has degree at least 2."""
    return g.min_degree() >= 2


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches all vertices."""
    seen = [False] * g.n
    seen[0] = True
    frontier = [0]
    count = 1
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    nxt.append(w)
        frontier = nxt
    return count == g.n


# ---------------------------------------------------------------------------
# Parametric families
# ---------------------------------------------------------------------------

FAMILIES = (
    "complete",
    "cycle",
    "circulant",
    "hypercube",
    "windmill",
    "friendship",
    "complete-with-glued-4-cycles",
    "random-min-degree-2",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named generator family plus its integer parameters.

    Parameter arity by family:
      complete(n), cycle(n), hypercube(d), friendship(eta),
      complete-with-glued-4-cycles(n), random-min-degree-2(n): one parameter;
      windmill(eta, k): two; circulant(n, s1, ..., sk): two or more.
    ``seed`` only applies to random-min-degree-2.
    """

    family: str
    params: tuple[int, ...]
    seed: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilyParameterError(
                f"unknown family {self.family!r}; known: {', '.join(FAMILIES)}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if any(p <= 0 for p in self.params):
            raise FamilyParameterError("family parameters must be positive integers")
        arity_ok = {
            "complete": len(self.params) == 1,
            "cycle": len(self.params) == 1,
            "circulant": len(self.params) >= 2,
            "hypercube": len(self.params) == 1,
            "windmill": len(self.params) == 2,
            "friendship": len(self.params) == 1,
            "complete-with-glued-4-cycles": len(self.params) == 1,
            "random-min-degree-2": len(self.params) == 1,
        }[self.family]
        if not arity_ok:
            raise FamilyParameterError(
                f"wrong number of parameters for {self.family}: {self.params}")

    def name(self) -> str:
        s = f"{self.family}({','.join(str(p) for p in self.params)})"
        if self.seed is not None:
            s += f"@seed={self.seed}"
        return s


def _complete(n: int) -> Graph:
    if n < 3:
        raise FamilyParameterError("complete(n) needs n >= 3 for minimum degree 2")
    return from_edge_list(combinations(range(n), 2), n)


def _cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyParameterError("cycle(n) needs n >= 3")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def _circulant(n: int, offsets: tuple[int, ...]) -> Graph:
    if n < 3:
        raise FamilyParameterError("circulant(n, ...) needs n >= 3")
    if any(not (1 <= s <= n // 2) for s in offsets):
        raise FamilyParameterError("circulant offsets must lie in [1, n/2]")
    edges = set()
    for s in offsets:
        for i in range(n):
            j = (i + s) % n
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return from_edge_list(sorted(edges), n)


def _hypercube(d: int) -> Graph:
    if d < 2:
        raise FamilyParameterError("hypercube(d) needs d >= 2 for minimum degree 2")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return from_edge_list(edges, n)


def _windmill(eta: int, k: int) -> Graph:
    # eta vertex-disjoint copies of K_{k-1}, all joined to hub vertex 0.
    if k < 3:
        raise FamilyParameterError("windmill(eta, k) needs k >= 3")
    if eta < 1:
        raise FamilyParameterError("windmill(eta, k) needs eta >= 1")
    n = 1 + eta * (k - 1)
    edges = []
    for copy in range(eta):
        block = range(1 + copy * (k - 1), 1 + (copy + 1) * (k - 1))
        edges.extend((0, v) for v in block)
        edges.extend(combinations(block, 2))
    return from_edge_list(edges, n)


def _glued_4_cycles(n: int) -> Graph:
    # K_n plus, per original vertex v, a private 4-cycle v-a-b-c-v on three
    # fresh vertices.
    if n < 1:
        raise FamilyParameterError("complete-with-glued-4-cycles(n) needs n >= 1")
    total = n + 3 * n
    edges = list(combinations(range(n), 2))
    for v in range(n):
        a, b, c = n + 3 * v, n + 3 * v + 1, n + 3 * v + 2
        edges.extend([(v, a), (a, b), (b, c), (c, v)])
    return from_edge_list(edges, total)


def _random_min_degree_2(n: int, seed: int | None, max_tries: int = 1000) -> Graph:
    # G(n, p) resampled until connected with min degree >= 2.
    if n < 3:
        raise FamilyParameterError("random-min-degree-2(n) needs n >= 3")
    rng = random.Random(seed)
    p = min(1.0, (math.log(n) + 2.0) / n)
    for _ in range(max_tries):
        edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]
        g = from_edge_list(edges, n)
        if g.min_degree() >= 2 and is_connected(g):
            return g
    raise FamilyParameterError(
        f"could not sample a connected min-degree-2 graph on {n} vertices "
        f"in {max_tries} tries")


def generate(spec: FamilySpec, allow_pendant: bool = False) -> Graph:
    """Generate the named family graph.

    Every family produced here is connected with minimum degree >= 2;
    parameters that would break that are rejected unless ``allow_pendant``
    is set (used only for degree-1 convention experiments).
    """
    family, params = spec.family, spec.params
    if family == "complete":
        if params[0] == 2 and allow_pendant:
            return from_edge_list([(0, 1)], 2)
        g = _complete(params[0])
    elif family == "cycle":
        g = _cycle(params[0])
    elif family == "circulant":
        g = _circulant(params[0], params[1:])
    elif family == "hypercube":
        g = _hypercube(params[0])
    elif family == "windmill":
        g = _windmill(params[0], params[1])
    elif family == "friendship":
        g = _windmill(params[0], 3)
    elif family == "complete-with-glued-4-cycles":
        g = _glued_4_cycles(params[0])
    else:
        g = _random_min_degree_2(params[0], spec.seed)
    if not allow_pendant and g.min_degree() < 2:
        raise FamilyParameterError(
            f"{spec.name()} has a vertex of degree < 2; "
            "pass allow_pendant to permit it")
    if not is_connected(g):
        raise FamilyParameterError(f"{spec.name()} is disconnected")
    return g


def parse_family(family: str, params_text: str, seed: int | None = None) -> FamilySpec:
    """Parse a comma-separated integer parameter list into a FamilySpec."""
    try:
        params = tuple(int(tok) for tok in params_text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise FamilyParameterError(f"bad parameter list {params_text!r}: {exc}") from exc
    return FamilySpec(family, params, seed=seed)


# ---------------------------------------------------------------------------
# File formats
# ---------------------------------------------------------------------------

def read_edge_list_text(text: str) -> Graph:
    """Parse the edge-list text format.

    One edge per line as two whitespace-separated labels; ``#`` starts a
    comment; an optional first data line ``n=<count>`` fixes the vertex count
    (labels must then be integers in [0, n), which preserves isolated
    vertices).  Without the header, labels are arbitrary strings mapped to
    indices in order of first appearance.
    """
    n_declared: int | None = None
    pairs: list[tuple[str, str]] = []
    first_data_line = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if first_data_line and line.startswith("n="):
            try:
                n_declared = int(line[2:])
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: bad vertex count {line!r}") from exc
            if n_declared < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be >= 1")
            first_data_line = False
            continue
        first_data_line = False
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected two labels, got {len(parts)}")
        pairs.append((parts[0], parts[1]))

    if n_declared is not None:
        edges = []
        for a, b in pairs:
            try:
                i, j = int(a), int(b)
            except ValueError as exc:
                raise GraphFormatError(
                    "labels must be integers in [0, n) when n= is declared") from exc
            edges.append((i, j))
        if n_declared > MAX_DENSE_VERTICES:
            raise GraphFormatError(f"vertex count {n_declared} exceeds soft cap "
                                   f"{MAX_DENSE_VERTICES}")
        return from_edge_list(edges, n_declared)

    index: dict[str, int] = {}
    edges = []
    for a, b in pairs:
        for lbl in (a, b):
            if lbl not in index:
                index[lbl] = len(index)
        edges.append((index[a], index[b]))
    if not index:
        raise GraphFormatError("empty edge list and no n= header")
    if len(index) > MAX_DENSE_VERTICES:
        raise GraphFormatError(f"vertex count {len(index)} exceeds soft cap "
                               f"{MAX_DENSE_VERTICES}")
    labels = sorted(index, key=index.get)
    return from_edge_list(edges, len(index), labels=labels)


def to_edge_list_text(g: Graph) -> str:
    """Serialize to the edge-list text format (with n= header)."""
    lines = [f"n={g.n}"]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def read_json_graph(text: str) -> Graph:
    """Parse the JSON graph format: {"n": int, "edges": [[i, j], ...]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphFormatError('JSON graph needs "n" and "edges" keys')
    n = obj["n"]
    if not isinstance(n, int):
        raise GraphFormatError('"n" must be an integer')
    edges = []
    for e in obj["edges"]:
        if not (isinstance(e, list) and len(e) == 2
                and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"bad edge entry {e!r}")
        edges.append((e[0], e[1]))
    if n > MAX_DENSE_VERTICES:
        raise GraphFormatError(f"vertex count {n} exceeds soft cap {MAX_DENSE_VERTICES}")
    return from_edge_list(edges, n)


def to_json_graph(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [[i, j] for i, j in g.edges()]})


def load_graph(path: str) -> Graph:
    """Read a graph file, picking the format from the extension.

    ``.json`` uses the JSON format; anything else is edge-list text.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return read_json_graph(text)
    return read_edge_list_text(text)
