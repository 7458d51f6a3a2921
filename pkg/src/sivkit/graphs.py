"""Signed graphs on labeled vertices 1..n, with the switching calculus.

Every edge carries a parity ("even" or "odd"), switching at a vertex set
flips the parity of the cut edges, and two signings of the same graph are
equivalent exactly when their cycle-space parities agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]

EVEN = "even"
ODD = "odd"
PARITIES = (EVEN, ODD)


def edge(u: int, v: int) -> Edge:
    """Canonical unordered pair; loops are rejected."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def _check_parity(parity: str) -> None:
    if parity not in PARITIES:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


@dataclass(frozen=True)
class SignedGraph:
    """Simple graph plus a parity on each present edge (the odd edge set)."""

    n: int
    edges: frozenset[Edge]
    odd: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "odd", frozenset(self.odd))
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u},{v}) is not a canonical pair in range")
        if not self.odd <= self.edges:
            raise ValueError("odd edges must be a subset of the edge set")

    @classmethod
    def of(cls, n: int, signed_edges: Iterable[tuple[int, int, str]]) -> SignedGraph:
        """Build from (u, v, parity) triples; duplicates and loops are errors."""
        edges: set[Edge] = set()
        odd: set[Edge] = set()
        for u, v, parity in signed_edges:
            _check_parity(parity)
            e = edge(u, v)
            if e in edges:
                raise ValueError(f"duplicate edge ({u},{v})")
            edges.add(e)
            if parity == ODD:
                odd.add(e)
        return cls(n, frozenset(edges), frozenset(odd))

    @classmethod
    def all_even(cls, n: int, edges: Iterable[Edge]) -> SignedGraph:
        return cls(n, frozenset(edge(u, v) for u, v in edges), frozenset())

    @classmethod
    def complete(cls, n: int, odd: Iterable[Edge] = ()) -> SignedGraph:
        all_pairs = frozenset(combinations(range(1, n + 1), 2))
        return cls(n, all_pairs, frozenset(edge(u, v) for u, v in odd))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def _adj(self) -> dict[int, dict[int, bool]]:
        adj: dict[int, dict[int, bool]] = {v: {} for v in self.vertices}
        for u, v in self.edges:
            is_odd = (u, v) in self.odd
            adj[u][v] = is_odd
            adj[v][u] = is_odd
        return adj

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def adjacency(self, v: int) -> dict[int, bool]:
        """Neighbors of v mapped to True when the joining edge is odd."""
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> set[int]:
        return set(self.adjacency(v))

    def odd_neighbors(self, v: int) -> set[int]:
        return {u for u, is_odd in self.adjacency(v).items() if is_odd}

    def even_neighbors(self, v: int) -> set[int]:
        return {u for u, is_odd in self.adjacency(v).items() if not is_odd}

    def degree(self, v: int) -> int:
        return len(self.adjacency(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return u != v and edge(u, v) in self.edges

    def is_odd_edge(self, u: int, v: int) -> bool:
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) is missing")
        return edge(u, v) in self.odd

    def parity(self, u: int, v: int) -> str:
        return ODD if self.is_odd_edge(u, v) else EVEN

    def add_edge(self, u: int, v: int, parity: str) -> SignedGraph:
        _check_parity(parity)
        e = edge(u, v)
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        odd = self.odd | {e} if parity == ODD else self.odd
        return SignedGraph(self.n, self.edges | {e}, odd)

    def remove_edge(self, u: int, v: int) -> SignedGraph:
        e = edge(u, v)
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) is missing")
        return SignedGraph(self.n, self.edges - {e}, self.odd - {e})

    def remove_edges(self, edges: Iterable[Edge]) -> SignedGraph:
        out = self
        for u, v in edges:
            out = out.remove_edge(u, v)
        return out

    def non_adjacent_pairs(self) -> Iterator[Edge]:
        for pair in combinations(self.vertices, 2):
            if pair not in self.edges:
                yield pair

    def same_underlying(self, other: SignedGraph) -> bool:
        return self.n == other.n and self.edges == other.edges


def switch_at(g: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Flip the parity of every edge with exactly one end in s."""
    sset = set(s)
    for v in sset:
        g._check_vertex(v)
    odd = frozenset(
        e for e in g.edges if (e in g.odd) ^ ((e[0] in sset) != (e[1] in sset))
    )
    return SignedGraph(g.n, g.edges, odd)


def _spanning_forest(g: SignedGraph) -> tuple[dict[int, int], dict[int, bool], set[Edge]]:
    """Depth-first forest: parent map, path parity to each root, forest edges.

    Depends only on the underlying graph, so equal underlying graphs get
    identical forests.
    """
    parent: dict[int, int] = {}
    path_odd: dict[int, bool] = {}
    forest: set[Edge] = set()
    seen: set[int] = set()
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        path_odd[root] = False
        stack = [root]
        while stack:
            u = stack.pop()
            for x in sorted(g.neighbors(u), reverse=True):
                if x in seen:
                    continue
                seen.add(x)
                parent[x] = u
                forest.add(edge(u, x))
                path_odd[x] = path_odd[u] ^ g.is_odd_edge(u, x)
                stack.append(x)
    return parent, path_odd, forest


def _normalizing_switch_set(g: SignedGraph) -> frozenset[int]:
    _, path_odd, _ = _spanning_forest(g)
    return frozenset(v for v, odd in path_odd.items() if odd)


def switching_normal_form(g: SignedGraph) -> SignedGraph:
    """Equivalent signing with every spanning-forest edge even.

    Two signings of the same underlying graph are switching equivalent
    exactly when their normal forms coincide.
    """
    return switch_at(g, _normalizing_switch_set(g))


def _fundamental_cycle(parent: dict[int, int], u: int, v: int) -> tuple[int, ...]:
    """Closed vertex walk: forest path from u to v plus the chord uv."""
    up: list[int] = [u]
    while up[-1] in parent:
        up.append(parent[up[-1]])
    index = {x: i for i, x in enumerate(up)}
    down: list[int] = [v]
    while down[-1] not in index:
        down.append(parent[down[-1]])
    meet = index[down[-1]]
    return tuple(up[: meet + 1] + list(reversed(down[:-1])))


@dataclass(frozen=True)
class SwitchingResult:
    """Decision plus certificate: a switching set when equivalent, otherwise a
    cycle whose parity distinguishes the two signings."""

    equivalent: bool
    witness: frozenset[int] | None = None
    distinguishing_cycle: tuple[int, ...] | None = None


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> SwitchingResult:
    """Decide equivalence of two signings; O(n + m) via forest normalization."""
    if g1.n != g2.n:
        raise ValueError("vertex counts differ")
    if g1.edges != g2.edges:
        return SwitchingResult(False)
    parent, _, _ = _spanning_forest(g1)
    s1 = _normalizing_switch_set(g1)
    s2 = _normalizing_switch_set(g2)
    h1 = switch_at(g1, s1)
    h2 = switch_at(g2, s2)
    for e in sorted(g1.edges):
        if (e in h1.odd) != (e in h2.odd):
            return SwitchingResult(False, None, _fundamental_cycle(parent, *e))
    return SwitchingResult(True, s1 ^ s2, None)


def _check_pair(g: SignedGraph, v: int, w: int) -> None:
    if v == w:
        raise ValueError("v and w must be distinct")
    if g.has_edge(v, w):
        raise ValueError(f"vertices {v} and {w} are adjacent")


def is_centered(g: SignedGraph, v: int, w: int) -> bool:
    """All v-edges even and every odd w-edge ends in a common neighbor."""
    if v == w or g.has_edge(v, w):
        return False
    return not g.odd_neighbors(v) and g.odd_neighbors(w) <= (
        g.neighbors(v) & g.neighbors(w)
    )


def make_centered(g: SignedGraph, v: int, w: int) -> tuple[SignedGraph, frozenset[int]]:
    """Switch to an equivalent (v,w)-centered signing; returns graph and set."""
    _check_pair(g, v, w)
    s = frozenset(g.odd_neighbors(v) | (g.odd_neighbors(w) - g.neighbors(v)))
    return switch_at(g, s), s


@dataclass(frozen=True)
class NeighborhoodSplit:
    """Partition of V - {v,w} by adjacency pattern in a (v,w)-centered graph.

    A: neighbors of v only; B: neighbors of w only; C: common neighbors with
    both edges even; D: common neighbors with odd w-edge; E: the rest.
    """

    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]
    D: tuple[int, ...]
    E: tuple[int, ...]

    def blocks(self) -> tuple[tuple[str, tuple[int, ...]], ...]:
        return (("A", self.A), ("B", self.B), ("C", self.C), ("D", self.D), ("E", self.E))


def neighborhood_split(g: SignedGraph, v: int, w: int) -> NeighborhoodSplit:
    if not is_centered(g, v, w):
        raise ValueError(f"graph is not ({v},{w})-centered")
    nv, nw = g.neighbors(v), g.neighbors(w)
    common = nv & nw
    rest = set(g.vertices) - nv - nw - {v, w}
    return NeighborhoodSplit(
        A=tuple(sorted(nv - nw)),
        B=tuple(sorted(nw - nv)),
        C=tuple(sorted(x for x in common if not g.is_odd_edge(w, x))),
        D=tuple(sorted(x for x in common if g.is_odd_edge(w, x))),
        E=tuple(sorted(rest)),
    )


@dataclass(frozen=True)
class EdgeQuantities:
    """Neighborhood counts around a non-adjacent pair: a private to v, b to w,
    c same-sign common, d opposite-sign common, t = c - d, degrees d1, d2."""

    a: int
    b: int
    c: int
    d: int
    t: int
    d1: int
    d2: int


def edge_quantities(g: SignedGraph, v: int, w: int) -> EdgeQuantities:
    _check_pair(g, v, w)
    nv, nw = g.neighbors(v), g.neighbors(w)
    ov, ow = g.odd_neighbors(v), g.odd_neighbors(w)
    common = nv & nw
    c = sum(1 for x in common if (x in ov) == (x in ow))
    d = len(common) - c
    return EdgeQuantities(
        a=len(nv - nw),
        b=len(nw - nv),
        c=c,
        d=d,
        t=c - d,
        d1=len(nv),
        d2=len(nw),
    )
