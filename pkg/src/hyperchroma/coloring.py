"""Edge colourings: verification, greedy, exact search and the explicit constructions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Hypergraph, edge_degree, line_graph, max_clique, remove_edge
from .generators import HkCertificate, PlaneCoords, field_plane, twisted_plane


class ColoringStructureError(ValueError):
    """The input lacks the structure a constructive colouring relies on."""


@dataclass(frozen=True)
class EdgeColoring:
    """Colour per edge index; colours are ``0..num_colors-1`` with none skipped."""

    colors: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.colors):
            raise ValueError("negative colour")
        if set(self.colors) != set(range(len(set(self.colors)))):
            raise ValueError(f"colour ids {sorted(set(self.colors))} are not dense")

    @classmethod
    def from_labels(cls, labels: Sequence) -> "EdgeColoring":
        """Renumber arbitrary hashable labels by order of first appearance."""
        ids: dict = {}
        return cls(tuple(ids.setdefault(lab, len(ids)) for lab in labels))

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for i, c in enumerate(self.colors):
            out[c].append(i)
        return out

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class CriticalityReport:
    q: int
    critical: tuple[int, ...]


def _neighbour_masks(H: Hypergraph) -> list[int]:
    masks = [0] * H.m
    for i, j in line_graph(H).edge_list():
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return masks


def verify_coloring(H: Hypergraph, c: EdgeColoring | Sequence[int]) -> bool:
    colors = c.colors if isinstance(c, EdgeColoring) else tuple(c)
    if len(colors) != H.m:
        raise ValueError(f"colouring covers {len(colors)} edges, hypergraph has {H.m}")
    owner: dict[tuple[int, int], int] = {}
    for e, col in zip(H.edges, colors):
        for x in e:
            if (x, col) in owner:
                return False
            owner[(x, col)] = 1
    return True


def greedy_color(H: Hypergraph, order: Sequence[int] | None = None) -> EdgeColoring:
    """Give each edge, in ``order``, the lowest colour free at all its vertices."""
    order = list(range(H.m)) if order is None else list(order)
    if sorted(order) != list(range(H.m)):
        raise ValueError("order must be a permutation of the edge indices")
    nbr = _neighbour_masks(H)
    col = [-1] * H.m
    for v in order:
        taken = {col[u] for u in range(H.m) if nbr[v] >> u & 1 and col[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        col[v] = c
    return EdgeColoring.from_labels(col)


class _Search:
    """Backtracking vertex colouring of a graph given by neighbour bitmasks.

    Branches in DSATUR order (saturation, then degree, then index) and never
    opens more than one new colour at a node, so colourings that differ only
    by a renaming of colours are visited once.
    """

    def __init__(self, nbr: list[int]):
        self.nbr = nbr
        self.m = len(nbr)
        self.deg = [bin(x).count("1") for x in nbr]
        self.adj = [[u for u in range(self.m) if x >> u & 1] for x in nbr]

    def solve(self, t: int) -> list[int] | None:
        m = self.m
        if m == 0:
            return []
        if t <= 0:
            return None
        col = [-1] * m
        cnt = [[0] * t for _ in range(m)]
        sat = [0] * m  # bitmask of colours seen on coloured neighbours

        def pick() -> int:
            best, key = -1, None
            for v in range(m):
                if col[v] < 0:
                    k = (bin(sat[v]).count("1"), self.deg[v], -v)
                    if key is None or k > key:
                        best, key = v, k
            return best

        def assign(v: int, c: int) -> None:
            col[v] = c
            for u in self.adj[v]:
                cnt[u][c] += 1
                sat[u] |= 1 << c

        def unassign(v: int, c: int) -> None:
            col[v] = -1
            for u in self.adj[v]:
                cnt[u][c] -= 1
                if not cnt[u][c]:
                    sat[u] &= ~(1 << c)

        def rec(done: int, used: int) -> bool:
            if done == m:
                return True
            v = pick()
            for c in range(min(used + 1, t)):
                if sat[v] >> c & 1:
                    continue
                assign(v, c)
                if rec(done + 1, max(used, c + 1)):
                    return True
                unassign(v, c)
            return False

        return list(col) if rec(0, 0) else None

    def greedy(self) -> list[int]:
        """DSATUR without backtracking."""
        m = self.m
        col = [-1] * m
        sat = [0] * m
        for _ in range(m):
            v = max((u for u in range(m) if col[u] < 0), key=lambda u: (bin(sat[u]).count("1"), self.deg[u], -u))
            c = 0
            while sat[v] >> c & 1:
                c += 1
            col[v] = c
            for u in self.adj[v]:
                sat[u] |= 1 << c
        return col


def exact_chromatic_index(H: Hypergraph) -> tuple[int, EdgeColoring]:
    """Chromatic index with an optimal witness colouring.

    Tries ``t`` upward from the largest intersecting family to the DSATUR
    greedy count; the first ``t`` admitting a colouring is optimal.
    """
    if H.m == 0:
        return 0, EdgeColoring(())
    nbr = _neighbour_masks(H)
    search = _Search(nbr)
    lo = len(max_clique(line_graph(H)))
    hi = max(search.greedy()) + 1
    for t in range(lo, hi + 1):
        sol = search.solve(t)
        if sol is not None:
            return t, EdgeColoring.from_labels(sol)
    raise AssertionError("greedy colouring bound was not reached")


def chromatic_index(H: Hypergraph) -> int:
    return exact_chromatic_index(H)[0]


def is_colorable(H: Hypergraph, t: int) -> bool:
    return _Search(_neighbour_masks(H)).solve(t) is not None


# -- criticality -----------------------------------------------------------


def is_critical(H: Hypergraph, e: int, q: int | None = None) -> bool:
    """True iff deleting edge ``e`` lowers the chromatic index by one."""
    if q is None:
        q = chromatic_index(H)
    if edge_degree(H, e) < q - 1:
        # a critical edge meets at least q-1 others
        return False
    return chromatic_index(remove_edge(H, e)) == q - 1


def critical_edges(H: Hypergraph) -> CriticalityReport:
    q = chromatic_index(H)
    return CriticalityReport(q=q, critical=tuple(e for e in range(H.m) if is_critical(H, e, q)))


# -- counting --------------------------------------------------------------


def _static_order(nbr: list[int]) -> list[int]:
    # repeatedly take the edge with most already-placed neighbours
    m = len(nbr)
    placed = 0
    order = []
    deg = [bin(x).count("1") for x in nbr]
    for _ in range(m):
        v = max((u for u in range(m) if not placed >> u & 1), key=lambda u: (bin(nbr[u] & placed).count("1"), deg[u], -u))
        order.append(v)
        placed |= 1 << v
    return order


def count_colorings_up_to_relabel(
    H: Hypergraph,
    t: int,
    *,
    surjective: bool = False,
    max_edges: int = 20,
) -> int:
    """Number of proper colourings with at most ``t`` colours, colour names ignored.

    With ``surjective=True`` only colourings using exactly ``t`` colours count.
    """
    if H.m > max_edges:
        raise ValueError(f"{H.m} edges exceeds the counting guard of {max_edges}")
    if H.m == 0:
        return 0 if surjective and t > 0 else 1
    nbr = _neighbour_masks(H)
    order = _static_order(nbr)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in range(H.m) if nbr[v] >> u & 1 and pos[u] < pos[v]] for v in order]
    col = [-1] * H.m
    m = H.m

    def rec(i: int, used: int) -> int:
        if surjective and t - used > m - i:
            return 0
        if i == m:
            return 1 if (not surjective or used == t) else 0
        v = order[i]
        forbidden = {col[u] for u in earlier[i]}
        total = 0
        for c in range(min(used + 1, t)):
            if c in forbidden:
                continue
            col[v] = c
            total += rec(i + 1, max(used, c + 1))
        col[v] = -1
        return total

    return rec(0, 0)


# -- constructive colourings -----------------------------------------------


def color_class_Hk(H: Hypergraph, cert: HkCertificate) -> EdgeColoring:
    """Colouring with at most ``1 + k*ceil(k/2)`` colours for class members.

    The special edge gets its own colour; stars of its even-indexed vertices
    get fresh colours; every edge through an odd-indexed vertex borrows the
    colour of the unique edge of the previous star that it misses.
    """
    if not cert.member or cert.e0 is None:
        raise ColoringStructureError(f"not a class member (first failed check: {cert.failed})")
    e0 = H.edges[cert.e0]
    stars = [[i for i, e in enumerate(H.edges) if x in e and i != cert.e0] for x in e0]
    col: list[object] = [None] * H.m
    col[cert.e0] = "e0"
    for i, st in enumerate(stars):
        if i % 2 == 0:
            for j, e in enumerate(st):
                col[e] = (i, j)
            continue
        prev = stars[i - 1]
        taken = set()
        for e in st:
            se = set(H.edges[e])
            partners = [a for a in prev if se.isdisjoint(H.edges[a])]
            if len(partners) != 1 or partners[0] in taken:
                raise ColoringStructureError(
                    f"edge {H.edges[e]} has {len(partners)} disjoint partners in the star of {e0[i - 1]}"
                )
            taken.add(partners[0])
            col[e] = col[partners[0]]
    if any(c is None for c in col):
        raise ColoringStructureError("some edge misses the special edge")
    return EdgeColoring.from_labels(col)


def color_affine_plane(A: Hypergraph, coords: PlaneCoords) -> EdgeColoring:
    """One colour per parallel class of the field plane."""
    if A != field_plane(coords.k)[0]:
        raise ColoringStructureError(f"input is not the field plane of order {coords.k}")
    k = coords.k
    return EdgeColoring(tuple(k if (s := coords.slope(e)) is None else s for e in A.edges))


def color_twisted_plane(Hp: Hypergraph, coords: PlaneCoords, lam: int) -> EdgeColoring:
    """The ``(2k-1)``-colouring of the twisted plane attached to slope ``lam``.

    Colour 0 is the vertical axis; colour ``c`` (``1 <= c < k``) is the
    re-routed edge from column ``c`` together with the slope-``lam`` line
    through ``(c, 0)``; colour ``k`` is the horizontal class; each other
    non-zero slope gets one further colour.
    """
    k = coords.k
    if not 0 < lam < k:
        raise ValueError(f"slope must be a non-zero element of GF({k}), got {lam}")
    if Hp != twisted_plane(k)[0]:
        raise ColoringStructureError(f"input is not the twisted plane of order {k}")
    origin = coords.vertex(0, 0)
    others = [s for s in range(1, k) if s != lam]
    col = []
    for e in Hp.edges:
        if all(coords.point(v)[0] == 0 for v in e):
            col.append(0)
        elif origin in e and not all(coords.point(v)[1] == 0 for v in e):
            col.append(coords.point(e[-1])[0])
        else:
            s = coords.slope(e)
            if s == 0:
                col.append(k)
            elif s == lam:
                col.append(next(coords.point(v)[0] for v in e if coords.point(v)[1] == 0))
            else:
                col.append(k + 1 + others.index(s))
    return EdgeColoring(tuple(col))
