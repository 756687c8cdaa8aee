"""Constructions: field planes, truncated planes, twisted planes, class membership.

All planes live on coordinates ``(x, y)`` over GF(k), with vertex
``k*x + y`` (field elements taken by their integer encoding).  The vertical
axis ``x = 0`` is the distinguished edge ``{0, ..., k-1}`` and the horizontal
axis ``y = 0`` is ``{0, k, 2k, ...}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Hypergraph, degrees, is_linear, is_uniform, parse_edges
from .galois import GaloisField, gf


@dataclass(frozen=True)
class PlaneCoords:
    field: GaloisField

    @property
    def k(self) -> int:
        return self.field.q

    def vertex(self, x: int, y: int) -> int:
        return self.k * x + y

    def point(self, v: int) -> tuple[int, int]:
        return divmod(v, self.k)

    def line(self, slope: int | None, intercept: int) -> tuple[int, ...]:
        """Points of ``y = slope*x + intercept``, or of ``x = intercept`` when slope is None."""
        F = self.field
        if slope is None:
            return tuple(sorted(self.vertex(intercept, y) for y in F.elements))
        return tuple(sorted(self.vertex(x, F.add(F.mul(slope, x), intercept)) for x in F.elements))

    def slope(self, edge) -> int | None:
        """Slope of the line through the points of ``edge`` (None = vertical).

        Raises ValueError if the points are not collinear.
        """
        F = self.field
        pts = [self.point(v) for v in edge]
        (x0, y0), (x1, y1) = pts[0], pts[1]
        if x0 == x1:
            s = None
            ok = all(x == x0 for x, _ in pts)
        else:
            s = F.div(F.sub(y1, y0), F.sub(x1, x0))
            ok = all(F.sub(y, y0) == F.mul(s, F.sub(x, x0)) for x, y in pts)
        if not ok:
            raise ValueError(f"{edge!r} is not a line of the plane of order {self.k}")
        return s


@dataclass
class HkCertificate:
    """Membership verdict for the class of near-plane hypergraphs of order ``k``.

    ``conditions`` holds, in check order: ``linear_uniform``, ``vertex_count``,
    ``edge_count``, ``special_edge`` (an edge whose vertices all have degree
    ``k+1``) and ``other_degrees`` (every vertex off it has degree >= ``k``).
    """

    k: int
    member: bool
    e0: int | None
    degrees: tuple[int, ...]
    conditions: dict[str, bool] = field(default_factory=dict)

    @property
    def failed(self) -> str | None:
        return next((name for name, ok in self.conditions.items() if not ok), None)


def _plane_coords(k: int) -> PlaneCoords:
    if k < 2:
        raise ValueError(f"plane order must be at least 2, got {k}")
    return PlaneCoords(gf(k))


def field_plane(k: int) -> tuple[Hypergraph, PlaneCoords]:
    """The affine plane over GF(k): ``k^2`` points, ``k^2 + k`` lines."""
    c = _plane_coords(k)
    lines = [c.line(None, b) for b in range(k)]
    lines += [c.line(s, b) for s in range(k) for b in range(k)]
    return Hypergraph(k * k, lines), c


def truncated_plane(k: int) -> tuple[Hypergraph, HkCertificate]:
    """Field plane minus the vertical lines other than the axis ``x = 0``."""
    A, c = field_plane(k)
    drop = {c.line(None, b) for b in range(1, k)}
    H = Hypergraph(A.n, [e for e in A.edges if e not in drop])
    return H, check_class_Hk(H, k)


def twisted_plane(k: int) -> tuple[Hypergraph, HkCertificate]:
    """Field plane re-routed at the origin.

    The non-axis lines through the origin are deleted, and each vertical
    line ``x = c`` (``c != 0``) trades its point on the horizontal axis for
    the origin.
    """
    if k < 3:
        raise ValueError(f"twisted plane needs k >= 3, got {k}")
    A, c = field_plane(k)
    origin = c.vertex(0, 0)
    edges = []
    for e in A.edges:
        s = c.slope(e)
        if origin in e and s not in (None, 0):
            continue
        if s is None and origin not in e:
            xc = c.point(e[0])[0]
            e = tuple(sorted({origin} | (set(e) - {c.vertex(xc, 0)})))
        edges.append(e)
    H = Hypergraph(A.n, edges)
    return H, check_class_Hk(H, k)


def plane_coords(k: int) -> PlaneCoords:
    return _plane_coords(k)


H3_PRIME_EDGES = "012 036 048 057 147 138 156 258 234 276"


def h3_prime_literal() -> Hypergraph:
    """The second member of the order-3 class, as a literal edge list."""
    return parse_edges(H3_PRIME_EDGES, 9)


def check_class_Hk(H: Hypergraph, k: int) -> HkCertificate:
    deg = tuple(degrees(H))
    conds: dict[str, bool] = {}
    conds["linear_uniform"] = is_linear(H) and is_uniform(H, k)
    conds["vertex_count"] = H.n == k * k
    conds["edge_count"] = H.m == k * k + 1
    e0 = None
    if all(conds.values()):
        specials = [i for i, e in enumerate(H.edges) if all(deg[x] == k + 1 for x in e)]
        conds["special_edge"] = bool(specials)
        for i in specials:
            inside = set(H.edges[i])
            if all(deg[x] >= k for x in range(H.n) if x not in inside):
                e0 = i
                break
        conds["other_degrees"] = e0 is not None
    else:
        conds["special_edge"] = False
        conds["other_degrees"] = False
    member = all(conds.values())
    return HkCertificate(k=k, member=member, e0=e0 if member else None, degrees=deg, conditions=conds)
