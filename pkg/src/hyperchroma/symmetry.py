"""Canonical labelling, isomorphism, automorphism groups, class enumeration, maximality.

Canonical forms come from an individualise-and-refine search on the
vertex/edge incidence structure.  Vertex colours are refined against edge
signatures until stable; the first non-singleton cell is split by
individualising each of its vertices in turn.  Every discrete leaf gives a
labelling; the canonical form is the one whose sorted edge list is
lexicographically smallest.  Two leaves producing the same relabelled
hypergraph differ by an automorphism, and those automorphisms prune sibling
branches lying in a common orbit.
"""

from __future__ import annotations

import re
import time
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .core import Edge, Hypergraph, is_linear, is_uniform


@dataclass(frozen=True)
class Permutation:
    """Vertex bijection: ``images[v]`` is the image of ``v``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: str | Sequence[Sequence[int]]) -> "Permutation":
        """Build from cycle notation, e.g. ``"(4 3 5)(6 7 8)"``."""
        if isinstance(cycles, str):
            cycles = [[int(t) for t in c.split()] for c in re.findall(r"\(([^)]*)\)", cycles)]
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for i, v in enumerate(cyc):
                if v in seen:
                    raise ValueError(f"{v} appears twice in the cycles")
                seen.add(v)
                img[v] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(img))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(v) = self(other(v))
        return Permutation(tuple(self.images[w] for w in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for v in range(len(self.images)):
            if v in seen or self.images[v] == v:
                continue
            cyc, w = [], v
            while w not in seen:
                seen.add(w)
                cyc.append(w)
                w = self.images[w]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"


@dataclass(frozen=True)
class CanonicalForm:
    hypergraph: Hypergraph
    labelling: Permutation  # apply(labelling, H) == hypergraph


@dataclass(frozen=True)
class AutGroup:
    generators: tuple[Permutation, ...]
    order: int


def apply(pi: Permutation, H: Hypergraph) -> Hypergraph:
    if len(pi) != H.n:
        raise ValueError(f"permutation on {len(pi)} points applied to {H.n} vertices")
    return Hypergraph(H.n, ([pi.images[x] for x in e] for e in H.edges), allow_loops=not H.loopless)


# -- refinement ------------------------------------------------------------


def _rank(keys: list) -> list[int]:
    table = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [table[k] for k in keys]


def _refine(colors: list[int], edges: tuple[Edge, ...], inc: list[list[int]]) -> list[int]:
    cells = len(set(colors))
    while True:
        ecol = _rank([(len(e), tuple(sorted(colors[x] for x in e))) for e in edges])
        new = _rank([(colors[v], tuple(sorted(ecol[i] for i in inc[v]))) for v in range(len(colors))])
        ncells = len(set(new))
        if ncells == cells:
            return new
        colors, cells = new, ncells


def _individualize(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    return _rank([2 * col + (1 if col == c and u != v else 0) for u, col in enumerate(colors)])


def _orbits(n: int, gens: Iterable[Permutation]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v, w in enumerate(g.images):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Canonizer:
    def __init__(self, H: Hypergraph, initial: Sequence[int] | None = None):
        self.H = H
        self.inc: list[list[int]] = [[] for _ in range(H.n)]
        for i, e in enumerate(H.edges):
            for x in e:
                self.inc[x].append(i)
        self.initial = list(initial) if initial is not None else [0] * H.n
        self.first: tuple | None = None
        self.first_lab: list[int] | None = None
        self.best: tuple | None = None
        self.best_lab: list[int] | None = None
        self.autos: list[Permutation] = []
        self.leaves = 0

    def _relabel(self, lab: list[int]) -> tuple:
        return tuple(sorted(tuple(sorted(lab[x] for x in e)) for e in self.H.edges))

    def _leaf(self, colors: list[int]) -> None:
        self.leaves += 1
        key = self._relabel(colors)
        if self.first is None:
            self.first, self.first_lab = key, colors
            self.best, self.best_lab = key, colors
            return
        for ref_key, ref_lab in ((self.first, self.first_lab), (self.best, self.best_lab)):
            if key == ref_key:
                # ref_lab^-1 . colors maps this leaf onto the reference leaf
                inv = [0] * len(ref_lab)
                for v, c in enumerate(ref_lab):
                    inv[c] = v
                g = Permutation(tuple(inv[c] for c in colors))
                if not g.is_identity():
                    self.autos.append(g)
                return
        if key < self.best:
            self.best, self.best_lab = key, colors

    def _search(self, colors: list[int], fixed: tuple[int, ...]) -> None:
        colors = _refine(colors, self.H.edges, self.inc)
        n = len(colors)
        if len(set(colors)) == n:
            self._leaf(colors)
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        cell = [v for v in range(n) if colors[v] == target]
        done: list[int] = []
        for v in cell:
            stab = [g for g in self.autos if all(g.images[x] == x for x in fixed)]
            if stab and done:
                orb = _orbits(n, stab)
                if any(orb[v] == orb[w] for w in done):
                    continue
            done.append(v)
            self._search(_individualize(colors, v), fixed + (v,))

    def run(self) -> None:
        if self.H.n == 0:
            self.best, self.best_lab = (), []
            return
        self._search(_rank(self.initial), ())


def _canonizer(H: Hypergraph, initial=None) -> _Canonizer:
    c = _Canonizer(H, initial)
    c.run()
    return c


def canonical_form(H: Hypergraph) -> CanonicalForm:
    c = _canonizer(H)
    lab = Permutation(tuple(c.best_lab))
    return CanonicalForm(apply(lab, H), lab)


def canonical_key(H: Hypergraph) -> tuple:
    """Hashable isomorphism invariant: ``(n, canonical edge tuple)``."""
    return (H.n, canonical_form(H).hypergraph.edges)


def are_isomorphic(H1: Hypergraph, H2: Hypergraph) -> tuple[bool, Permutation | None]:
    """Isomorphism test; on success also returns ``pi`` with ``apply(pi, H1) == H2``."""
    if H1.n != H2.n or H1.m != H2.m or sorted(map(len, H1.edges)) != sorted(map(len, H2.edges)):
        return False, None
    c1, c2 = canonical_form(H1), canonical_form(H2)
    if c1.hypergraph != c2.hypergraph:
        return False, None
    pi = c2.labelling.inverse() * c1.labelling
    if apply(pi, H1) != H2:
        raise AssertionError("isomorphism witness failed verification")
    return True, pi


def is_automorphism(pi: Permutation, H: Hypergraph) -> bool:
    return apply(pi, H) == H


def group_closure(n: int, gens: Sequence[Permutation], limit: int = 200_000) -> set[tuple[int, ...]]:
    """All elements of the group generated by ``gens`` (breadth first)."""
    ident = tuple(range(n))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g.images[v] for v in x)
            if y not in seen:
                if len(seen) >= limit:
                    raise ValueError(f"group has more than {limit} elements")
                seen.add(y)
                queue.append(y)
    return seen


def automorphism_group(H: Hypergraph, *, max_vertices: int = 40, limit: int = 200_000) -> AutGroup:
    if H.n > max_vertices:
        raise ValueError(f"{H.n} vertices exceeds the automorphism search guard of {max_vertices}")
    c = _canonizer(H)
    gens: list[Permutation] = []
    for g in c.autos:
        if g not in gens:
            gens.append(g)
    for g in gens:
        if not is_automorphism(g, H):
            raise AssertionError(f"found non-automorphism {g}")
    order = len(group_closure(H.n, gens, limit)) if gens else 1
    return AutGroup(tuple(gens), order)


# -- class enumeration -----------------------------------------------------


def _partitions(items: list[int], block: int, ok) -> Iterable[list[tuple[int, ...]]]:
    """Set partitions of ``items`` into blocks of size ``block`` accepted by ``ok``.

    The smallest remaining element always starts the next block, so each
    partition is produced once.
    """
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for others in combinations(rest, block - 1):
        b = (first,) + others
        if not ok(b):
            continue
        remaining = [x for x in rest if x not in others]
        for tail in _partitions(remaining, block, ok):
            yield [b] + tail


def _marked_key(n: int, edges: list[Edge], k: int) -> tuple:
    # the special edge gets an extra pendant vertex so isomorphisms must fix it
    marked = [tuple(range(k)) + (n,)] + [e for e in edges if e != tuple(range(k))]
    return canonical_key(Hypergraph(n + 1, marked))


class EnumerationBudgetExceeded(TimeoutError):
    def __init__(self, level: int, classes: int):
        super().__init__(f"budget exhausted while completing vertex {level} of the special edge ({classes} partial classes so far)")
        self.level = level
        self.classes = classes


def enumerate_Hk(k: int, *, allow_large: bool = False, time_budget: float | None = None) -> list[Hypergraph]:
    """All class members of order ``k`` up to isomorphism, as canonical forms.

    Every member has all its edges meeting the special edge in one vertex, so
    the search fixes that edge as ``{0..k-1}`` and, vertex by vertex, chooses
    a partition of the other ``k^2-k`` vertices into ``k`` blocks of size
    ``k-1`` compatible with linearity.  Partial structures are reduced to one
    representative per isomorphism class after each vertex.  Orders above 3
    need ``allow_large``; when ``time_budget`` (seconds) runs out,
    EnumerationBudgetExceeded reports how far the search got.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if k > 3 and not allow_large:
        raise ValueError(f"enumeration for k={k} is opt-in (allow_large=True)")
    start = time.monotonic()
    n = k * k
    e0 = tuple(range(k))
    outside = list(range(k, n))
    level: list[list[Edge]] = [[e0]]
    for xi in range(k):
        nxt: dict[tuple, list[Edge]] = {}
        for edges in level:
            covered = {p for e in edges for p in combinations(e, 2)}

            def ok(b, covered=covered):
                return all(p not in covered for p in combinations(b, 2))

            for part in _partitions(outside, k - 1, ok):
                new = edges + [tuple(sorted((xi,) + b)) for b in part]
                key = _marked_key(n, new, k)
                nxt.setdefault(key, new)
                if time_budget is not None and time.monotonic() - start > time_budget:
                    raise EnumerationBudgetExceeded(xi, len(nxt))
        level = list(nxt.values())
    reps: dict[tuple, Hypergraph] = {}
    for edges in level:
        H = Hypergraph(n, edges)
        cf = canonical_form(H).hypergraph
        reps.setdefault(cf.edges, cf)
    return [reps[key] for key in sorted(reps)]


# -- maximality ------------------------------------------------------------


def is_maximal_linear(H: Hypergraph, k: int) -> tuple[bool, Edge | None]:
    """Can a further ``k``-subset be added while keeping ``H`` linear?

    Returns ``(True, None)`` if not, else ``(False, e)`` with the
    lexicographically first addable ``k``-subset ``e``.
    """
    if not (is_linear(H) and is_uniform(H, k)):
        raise ValueError("maximality is checked for linear k-uniform hypergraphs")
    n = H.n
    free = [(1 << n) - 1 & ~(1 << v) for v in range(n)]
    for e in H.edges:
        for a, b in combinations(e, 2):
            free[a] &= ~(1 << b)
            free[b] &= ~(1 << a)

    def rec(chosen: list[int], cand: int) -> Edge | None:
        if len(chosen) == k:
            return tuple(chosen)
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            # only vertices above v, pairwise uncovered with all chosen
            found = rec(chosen + [v], cand & free[v])
            if found:
                return found
        return None

    ext = rec([], (1 << n) - 1)
    return (ext is None), ext
