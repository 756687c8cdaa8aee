"""Hypergraph data model, derived structures, identities and hypothesis checks.

Vertices are the integers ``0..n-1``.  Each hyperedge is stored as a strictly
increasing tuple and the edge list itself is kept in lexicographic order, so
two hypergraphs on the same vertex set are equal exactly when their edge
tuples are equal.  Edge indices used throughout the package refer to this
sorted order.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

Edge = tuple[int, ...]


class Hypergraph:
    """Finite hypergraph ``(V, E)`` with ``V = {0, ..., n-1}``.

    Edges of size one (loops) are rejected unless ``allow_loops`` is set; the
    dual construction is the only place in the package that needs them.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = (), *, allow_loops: bool = False):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        normalized = []
        for raw in edges:
            e = tuple(sorted(raw))
            if not e:
                raise ValueError("empty hyperedge")
            if len(set(e)) != len(e):
                raise ValueError(f"hyperedge {raw!r} repeats a vertex")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"hyperedge {raw!r} has a vertex outside [0, {n})")
            if len(e) < 2 and not allow_loops:
                raise ValueError(f"hyperedge {raw!r} is a loop")
            normalized.append(e)
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise ValueError(f"duplicate hyperedge {a!r}")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(normalized)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def loopless(self) -> bool:
        return all(len(e) >= 2 for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        body = " ".join("".join(map(str, e)) if self.n <= 10 else "-".join(map(str, e)) for e in self.edges)
        return f"Hypergraph(n={self.n}, edges=[{body}])"

    def index(self, edge: Iterable[int]) -> int:
        """Index of ``edge`` in the sorted edge list."""
        e = tuple(sorted(edge))
        try:
            return self.edges.index(e)
        except ValueError:
            raise KeyError(f"{e!r} is not a hyperedge") from None


class SimpleGraph:
    """Undirected loop-free graph stored as a tuple of neighbour sets."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside [0, {n})")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(s) for s in self.adj), default=0)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def is_valid(self) -> bool:
        return all(u not in self.adj[u] and all(u in self.adj[v] for v in self.adj[u]) for u in range(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edge_list()})"


@dataclass(frozen=True)
class HypergraphStats:
    vertex_count: int
    edge_count: int
    min_degree: int
    max_degree: int
    antirank: int | None  # None when there is no edge
    rank: int
    mean_edge_size: Fraction
    max_intersecting: int


@dataclass(frozen=True)
class EdgePartition:
    """Split of the edge indices into large edges and two classes of small ones."""

    large: tuple[int, ...]
    small_low: tuple[int, ...]
    small_high: tuple[int, ...]


@dataclass(frozen=True)
class HypothesisReport:
    """Which sufficient conditions for the two colouring bounds hold for ``H``.

    ``checks`` maps a condition name to whether it holds; ``bounds`` maps the
    same names to the upper bound on the chromatic index it implies.
    """

    checks: dict[str, bool]
    bounds: dict[str, int]
    two_section_bound: int
    vertex_bound: int

    def implied_bound(self) -> int | None:
        vals = [self.bounds[name] for name, ok in self.checks.items() if ok]
        return min(vals) if vals else None


@dataclass(frozen=True)
class IdentityReport:
    """Outcome per identity: True/False, or None when its hypotheses fail."""

    results: dict[str, bool | None] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.results.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.results.items() if v is False]


# -- basic queries ---------------------------------------------------------


def _check_vertex(H: Hypergraph, x: int) -> None:
    if not 0 <= x < H.n:
        raise IndexError(f"vertex {x} out of range [0, {H.n})")


def _check_edge(H: Hypergraph, e: int) -> None:
    if not 0 <= e < H.m:
        raise IndexError(f"edge index {e} out of range [0, {H.m})")


def degrees(H: Hypergraph) -> list[int]:
    deg = [0] * H.n
    for e in H.edges:
        for x in e:
            deg[x] += 1
    return deg


def degree(H: Hypergraph, x: int) -> int:
    _check_vertex(H, x)
    return sum(1 for e in H.edges if x in e)


def star(H: Hypergraph, x: int) -> list[int]:
    """Indices of the edges containing ``x``."""
    _check_vertex(H, x)
    return [i for i, e in enumerate(H.edges) if x in e]


def edge_degree(H: Hypergraph, e: int) -> int:
    """Number of other edges meeting edge ``e``."""
    _check_edge(H, e)
    s = set(H.edges[e])
    return sum(1 for i, a in enumerate(H.edges) if i != e and not s.isdisjoint(a))


def parallel_set(H: Hypergraph, e: int) -> list[int]:
    """Indices of the edges disjoint from edge ``e``."""
    _check_edge(H, e)
    s = set(H.edges[e])
    return [i for i, a in enumerate(H.edges) if s.isdisjoint(a)]


def remove_edge(H: Hypergraph, e: int) -> Hypergraph:
    _check_edge(H, e)
    return Hypergraph(H.n, H.edges[:e] + H.edges[e + 1 :], allow_loops=not H.loopless)


def is_linear(H: Hypergraph) -> bool:
    seen: set[tuple[int, int]] = set()
    for e in H.edges:
        for pair in combinations(e, 2):
            if pair in seen:
                return False
            seen.add(pair)
    return True


def is_uniform(H: Hypergraph, k: int) -> bool:
    return all(len(e) == k for e in H.edges)


def two_section(H: Hypergraph) -> SimpleGraph:
    return SimpleGraph(H.n, (p for e in H.edges for p in combinations(e, 2)))


def line_graph(H: Hypergraph) -> SimpleGraph:
    sets = [set(e) for e in H.edges]
    pairs = [(i, j) for i, j in combinations(range(H.m), 2) if not sets[i].isdisjoint(sets[j])]
    return SimpleGraph(H.m, pairs)


def dual(H: Hypergraph) -> Hypergraph:
    """Hypergraph of the transposed incidence matrix.

    Vertex ``i`` of the result is edge ``i`` of ``H``; each vertex of ``H``
    becomes the edge made of the indices of its star.  Loops may appear and
    are kept (check ``.loopless`` on the result).
    """
    stars: list[list[int]] = [[] for _ in range(H.n)]
    for i, e in enumerate(H.edges):
        for x in e:
            stars[x].append(i)
    isolated = [x for x, s in enumerate(stars) if not s]
    if isolated:
        raise ValueError(f"dual undefined: isolated vertices {isolated}")
    if len(set(map(tuple, stars))) != len(stars):
        raise ValueError("dual would contain repeated hyperedges (two vertices with identical stars)")
    return Hypergraph(H.m, stars, allow_loops=True)


# -- max clique in the line graph ------------------------------------------


def max_clique(G: SimpleGraph) -> list[int]:
    """Maximum clique by branch and bound with greedy colouring bounds."""
    nbr = [0] * G.n
    for v in range(G.n):
        for u in G.adj[v]:
            nbr[v] |= 1 << u

    best: list[int] = []

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy colour classes; returns (vertex, colour number) in increasing colour order
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v)
                avail &= ~nbr[v]
                rest &= ~(1 << v)
                order.append((v, color))
        return order

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order = color_bound(cand)
        for v, c in reversed(order):
            if len(clique) + c <= len(best):
                return
            clique.append(v)
            new = cand & nbr[v]
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << G.n) - 1)
    return sorted(best)


def max_intersecting(H: Hypergraph) -> int:
    """Size of the largest pairwise-intersecting family of edges."""
    return len(max_clique(line_graph(H)))


def stats(H: Hypergraph) -> HypergraphStats:
    deg = degrees(H)
    sizes = [len(e) for e in H.edges]
    return HypergraphStats(
        vertex_count=H.n,
        edge_count=H.m,
        min_degree=min(deg, default=0),
        max_degree=max(deg, default=0),
        antirank=min(sizes) if sizes else None,
        rank=max(sizes, default=0),
        mean_edge_size=Fraction(sum(sizes), H.n) if H.n else Fraction(0),
        max_intersecting=max_intersecting(H),
    )


# -- predicates ------------------------------------------------------------


def condition_star(H: Hypergraph) -> tuple[bool, dict[int, int | None]]:
    """Does every edge contain a vertex whose degree is at most the edge size?

    Returns the verdict and, per edge index, the smallest such vertex (or None).
    """
    deg = degrees(H)
    witness: dict[int, int | None] = {}
    for i, e in enumerate(H.edges):
        witness[i] = next((x for x in e if deg[x] <= len(e)), None)
    return all(w is not None for w in witness.values()), witness


def is_affine_plane(H: Hypergraph) -> bool:
    k = math.isqrt(H.n)
    if k < 2 or k * k != H.n:
        return False
    if H.m != k * k + k or not is_uniform(H, k):
        return False
    if any(d != k + 1 for d in degrees(H)):
        return False
    # every pair of points on exactly one line
    covered: dict[tuple[int, int], int] = {}
    for i, e in enumerate(H.edges):
        for p in combinations(e, 2):
            if p in covered:
                return False
            covered[p] = i
    if len(covered) != H.n * (H.n - 1) // 2:
        return False
    # unique parallel through each external point
    sets = [set(e) for e in H.edges]
    for a in sets:
        for x in range(H.n):
            if x in a:
                continue
            through = [s for s in sets if x in s and s.isdisjoint(a)]
            if len(through) != 1:
                return False
    return True


def partition_edges(H: Hypergraph) -> EdgePartition:
    deg = degrees(H)
    large, low, high = [], [], []
    for i, e in enumerate(H.edges):
        if len(e) ** 2 >= H.n:
            large.append(i)
        elif any(deg[x] <= len(e) for x in e):
            low.append(i)
        else:
            high.append(i)
    return EdgePartition(tuple(large), tuple(low), tuple(high))


def _le_sqrt_plus_one(d: int, n: int) -> bool:
    # d <= sqrt(n) + 1, exactly
    return d <= 1 or (d - 1) ** 2 <= n


def theorem_hypotheses(H: Hypergraph) -> HypothesisReport:
    """Evaluate the sufficient conditions for ``q <= Delta([H]_2)+1`` and ``q <= n``.

    Condition names:

    ``low_degree_witness``
        every edge has a vertex of degree at most its size.
    ``large_antirank``
        ``ar(H)^2 >= n``.
    ``small_max_degree``
        ``Delta(H) <= sqrt(n) + 1`` (implies ``q <= n``).
    ``near_square_uniform``
        ``H`` is ``k``-uniform with ``n <= k^2 + k - 2``.
    ``mixed_partition``
        the small edges split as above with no edge in the high part.
    """
    if not is_linear(H):
        raise ValueError("hypothesis report requires a linear hypergraph")
    if not H.loopless:
        raise ValueError("hypothesis report requires a loopless hypergraph")
    n = H.n
    deg = degrees(H)
    sizes = [len(e) for e in H.edges]
    ar = min(sizes) if sizes else None
    bf = two_section(H).max_degree() + 1
    uniform_k = sizes[0] if sizes and all(s == sizes[0] for s in sizes) else None

    checks = {
        "low_degree_witness": condition_star(H)[0],
        "large_antirank": ar is None or ar * ar >= n,
        "small_max_degree": _le_sqrt_plus_one(max(deg, default=0), n),
        "near_square_uniform": uniform_k is not None and n <= uniform_k**2 + uniform_k - 2,
        "mixed_partition": not partition_edges(H).small_high,
    }
    if not sizes:
        checks["near_square_uniform"] = True
    bounds = {name: bf for name in checks}
    bounds["small_max_degree"] = n
    return HypothesisReport(checks=checks, bounds=bounds, two_section_bound=bf, vertex_bound=n)


def verify_identities(H: Hypergraph) -> IdentityReport:
    """Check the counting identities and elementary bounds exactly."""
    deg = degrees(H)
    sizes = [len(e) for e in H.edges]
    n, m = H.n, H.m
    linear = is_linear(H)
    ar = min(sizes) if sizes else None
    r = max(sizes, default=0)
    D = max(deg, default=0)
    delta = min(deg, default=0)
    sec = two_section(H)
    lg = line_graph(H)
    edeg = [lg.degree(i) for i in range(m)]
    res: dict[str, bool | None] = {}

    res["degree_sum"] = sum(deg) == sum(sizes)
    res["edge_count_bound"] = ar is None or m * ar <= n * D
    res["edge_degree_bound"] = all(d <= m - 1 for d in edeg) and sum(edeg) <= m * (m - 1)
    res["line_graph_degree"] = all(lg.degree(i) == sum(1 for j in range(m) if j != i and set(H.edges[i]) & set(H.edges[j])) for i in range(m))
    res["line_graph_bound"] = m == 0 or lg.max_degree() <= r * (D - 1)
    if linear:
        res["edge_degree_formula"] = all(edeg[i] == sum(deg[x] - 1 for x in e) for i, e in enumerate(H.edges))
        res["edge_degree_sum"] = sum(edeg) == sum((d - 1) * d for d in deg)
        res["two_section_degree"] = all(
            sec.degree(x) == sum(len(e) - 1 for e in H.edges if x in e) for x in range(n)
        )
        res["two_section_degree_sum"] = sum(sec.degree(x) for x in range(n)) == sum(s * s - s for s in sizes)
        res["two_section_max_degree"] = ar is None or sec.max_degree() >= (ar - 1) * D
    else:
        for name in ("edge_degree_formula", "edge_degree_sum", "two_section_degree", "two_section_degree_sum", "two_section_max_degree"):
            res[name] = None
    if linear and H.loopless and m and delta >= 2 and ar >= 2:
        res["vertex_degree_bound"] = all(d * (ar - 1) <= n - 1 for d in deg)
        res["edge_size_bound"] = all(s * (delta - 1) <= m - 1 for s in sizes)
    else:
        res["vertex_degree_bound"] = None
        res["edge_size_bound"] = None
    return IdentityReport(res)


def large_antirank_bounds_hold(H: Hypergraph) -> bool | None:
    """Edge-count and degree bounds for linear hypergraphs whose antirank exceeds sqrt(n).

    Returns None when ``ar(H)^2 <= n`` (the bounds are not claimed there).
    """
    if not H.m:
        return None
    ar = min(len(e) for e in H.edges)
    n = H.n
    if ar * ar <= n:
        return None
    # |E| <= n(ar-1)/(ar^2-n) and Delta <= ar
    return H.m * (ar * ar - n) <= n * (ar - 1) and max(degrees(H)) <= ar


# -- random corpus ---------------------------------------------------------


def packing_bound(n: int, k: int) -> int:
    """Maximum number of edges of a linear k-uniform hypergraph on n vertices (pair count bound)."""
    return (n * (n - 1)) // (k * (k - 1))


def random_linear_hypergraph(
    n: int,
    k: int,
    m: int,
    seed: int,
    *,
    max_size: int | None = None,
    max_tries: int = 2000,
) -> Hypergraph:
    """Random linear hypergraph by rejection sampling.

    Edge sizes are uniform in ``[k, max_size]`` (``k``-uniform by default).
    Returns fewer than ``m`` edges when ``max_tries`` consecutive draws are
    rejected; a warning is logged in that case.
    """
    if k < 2:
        raise ValueError(f"edge size must be at least 2, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    top = k if max_size is None else min(max_size, n)
    if top < k:
        raise ValueError(f"max_size {max_size} below k={k}")
    bound = packing_bound(n, k)
    if m > bound:
        raise ValueError(f"{m} edges infeasible: a linear {k}-uniform hypergraph on {n} vertices has at most {bound}")
    rng = random.Random(seed)
    covered: set[tuple[int, int]] = set()
    edges: list[Edge] = []
    misses = 0
    while len(edges) < m and misses < max_tries:
        size = rng.randint(k, top)
        e = tuple(sorted(rng.sample(range(n), size)))
        pairs = list(combinations(e, 2))
        if any(p in covered for p in pairs):
            misses += 1
            continue
        misses = 0
        covered.update(pairs)
        edges.append(e)
    if len(edges) < m:
        log.warning("random_linear_hypergraph: stalled at %d of %d edges (n=%d, k=%d)", len(edges), m, n, k)
    return Hypergraph(n, edges)


def from_edges(edges: Sequence[Sequence[int]], n: int | None = None) -> Hypergraph:
    """Build a hypergraph, inferring ``n`` from the largest vertex if omitted."""
    if n is None:
        n = 1 + max((max(e) for e in edges if e), default=-1)
    return Hypergraph(n, edges)


def parse_edges(spec: str, n: int | None = None) -> Hypergraph:
    """Parse the digit shorthand ``"012 036 048"`` (single-digit vertices)."""
    return from_edges([[int(c) for c in tok] for tok in spec.split()], n)
