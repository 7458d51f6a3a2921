"""Triangle-parity structure of signed complete graphs and completion planning.

For a target signed complete graph, the edge set splits into the edges whose
triangles are all even (they form complete components), at most one edge
whose triangles are all odd with balanced counts at every third vertex, and
the rest.  Those two sets decide exactly which spanning subgraphs can be
grown back to the target one integral-variation edge at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .graphs import EVEN, ODD, Edge, SignedGraph, edge, switch_at
from .polynomials import IntPoly
from .spectra import (
    NONE,
    IntMatrix,
    PolyCache,
    SivVerdict,
    char_poly,
    signed_laplacian,
    siv_oracle,
)


@dataclass(frozen=True)
class SignedComplete:
    """Complete graph on 1..n where exactly the listed pairs are odd."""

    n: int
    odd: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        object.__setattr__(self, "odd", frozenset(self.odd))
        for u, v in self.odd:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"odd pair ({u},{v}) is not a canonical pair in range")

    @classmethod
    def of(cls, n: int, odd: Iterable[Edge] = ()) -> SignedComplete:
        return cls(n, frozenset(edge(u, v) for u, v in odd))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def all_edges(self) -> list[Edge]:
        return list(combinations(self.vertices, 2))

    def parity(self, u: int, v: int) -> str:
        return ODD if edge(u, v) in self.odd else EVEN

    def to_signed_graph(self) -> SignedGraph:
        return SignedGraph.complete(self.n, self.odd)


def triangle_parity(t: SignedComplete | SignedGraph, u: int, v: int, w: int) -> str:
    """Parity of the number of odd edges among uv, uw, vw."""
    if len({u, v, w}) < 3:
        raise ValueError("triangle needs three distinct vertices")
    if isinstance(t, SignedComplete):
        for x in (u, v, w):
            if not 1 <= x <= t.n:
                raise ValueError(f"vertex {x} out of range 1..{t.n}")
        count = sum(1 for e in (edge(u, v), edge(u, w), edge(v, w)) if e in t.odd)
    else:
        count = sum(1 for a, b in ((u, v), (u, w), (v, w)) if t.is_odd_edge(a, b))
    return ODD if count % 2 else EVEN


def _require_order_at_least_four(t: SignedComplete) -> None:
    if t.n < 4:
        raise ValueError("at least four vertices required")


def _odd_triangle_pair_counts(t: SignedComplete) -> dict[Edge, int]:
    """Number of odd triangles through each vertex pair."""
    counts: dict[Edge, int] = {e: 0 for e in t.all_edges()}
    for u, v, w in combinations(t.vertices, 3):
        odd = sum(1 for e in ((u, v), (u, w), (v, w)) if e in t.odd)
        if odd % 2:
            counts[(u, v)] += 1
            counts[(u, w)] += 1
            counts[(v, w)] += 1
    return counts


def x_set(t: SignedComplete) -> frozenset[Edge]:
    """Edges all of whose triangles are even."""
    _require_order_at_least_four(t)
    counts = _odd_triangle_pair_counts(t)
    return frozenset(e for e, c in counts.items() if c == 0)


def _balanced_at(counts: dict[Edge, int], n: int, v: int, w: int) -> bool:
    """Odd triangles through (u, v) exceed even ones by exactly one, for all u."""
    return all(
        2 * counts[edge(u, v)] == n - 1 for u in range(1, n + 1) if u != v and u != w
    )


def y_set(t: SignedComplete) -> frozenset[Edge]:
    """Edges all of whose triangles are odd, with the one-more-odd balance at
    every third vertex.

    The balance count is taken toward one endpoint; an edge qualifies when
    either orientation does (given the all-odd condition the two orientations
    agree, so the disjunction is a safe literal reading).
    """
    _require_order_at_least_four(t)
    counts = _odd_triangle_pair_counts(t)
    n = t.n
    out = set()
    for v, w in t.all_edges():
        if counts[(v, w)] != n - 2:
            continue
        if _balanced_at(counts, n, v, w) or _balanced_at(counts, n, w, v):
            out.add((v, w))
    return frozenset(out)


def swap_y(t: SignedComplete) -> SignedComplete:
    """Flip the parity of the balanced all-odd edge, if there is one.

    Afterwards that edge joins the all-even set and no balanced all-odd edge
    remains, so the operation is idempotent.
    """
    _require_order_at_least_four(t)
    return SignedComplete(t.n, t.odd ^ y_set(t))


def part_blocks(
    quotient: SignedGraph, parts: Mapping[int, SignedGraph]
) -> dict[int, tuple[int, ...]]:
    """Consecutive label blocks assigned to each quotient vertex."""
    if set(parts) != set(quotient.vertices):
        raise ValueError("every quotient vertex needs exactly one replacement graph")
    blocks: dict[int, tuple[int, ...]] = {}
    offset = 0
    for q in quotient.vertices:
        size = parts[q].n
        blocks[q] = tuple(range(offset + 1, offset + size + 1))
        offset += size
    return blocks


def substitute(quotient: SignedGraph, parts: Mapping[int, SignedGraph]) -> SignedGraph:
    """Blow each quotient vertex up into its replacement graph.

    Replacement graphs keep their internal edges and signs; each quotient
    edge becomes a complete bipartite join whose edges all copy its parity.
    """
    blocks = part_blocks(quotient, parts)
    edges: set[Edge] = set()
    odd: set[Edge] = set()
    for q in quotient.vertices:
        block = blocks[q]
        for u, v in parts[q].edges:
            e = edge(block[u - 1], block[v - 1])
            edges.add(e)
            if (u, v) in parts[q].odd:
                odd.add(e)
    for q1, q2 in quotient.edges:
        is_odd = (q1, q2) in quotient.odd
        for a in blocks[q1]:
            for b in blocks[q2]:
                e = edge(a, b)
                edges.add(e)
                if is_odd:
                    odd.add(e)
    total = sum(parts[q].n for q in quotient.vertices)
    return SignedGraph(total, frozenset(edges), frozenset(odd))


@dataclass(frozen=True)
class SubstitutionSpectrum:
    """Spectrum of a substituted graph, split into the join-level factor
    (characteristic polynomial of the small coupling matrix) and the
    mass-shifted leftover eigenvalues of each replacement graph."""

    m_matrix: IntMatrix
    m_poly: IntPoly
    shifted_poly: IntPoly
    part_sizes: tuple[int, ...]
    part_eigenvalues: tuple[int, ...]
    masses: tuple[int, ...]

    @property
    def total_poly(self) -> IntPoly:
        return self.m_poly * self.shifted_poly


def substitution_spectrum(
    quotient: SignedGraph, parts: Mapping[int, SignedGraph]
) -> SubstitutionSpectrum:
    """Exact spectrum of substitute(quotient, parts) via the coupling matrix.

    Requires the all-ones vector to be an eigenvector of every replacement
    graph's Laplacian, i.e. each replacement graph must have a constant
    number of odd neighbors at every vertex.
    """
    if set(parts) != set(quotient.vertices):
        raise ValueError("every quotient vertex needs exactly one replacement graph")
    order = list(quotient.vertices)
    sizes: dict[int, int] = {}
    lams: dict[int, int] = {}
    for q in order:
        part = parts[q]
        row_sums = {2 * len(part.odd_neighbors(u)) for u in part.vertices}
        if len(row_sums) != 1:
            raise ValueError(
                f"all-ones vector is not a Laplacian eigenvector of part {q}"
            )
        sizes[q] = part.n
        lams[q] = row_sums.pop()
    masses = {
        q: sum(sizes[x] for x in quotient.neighbors(q)) for q in order
    }
    rows = []
    for i, qi in enumerate(order):
        row = []
        for j, qj in enumerate(order):
            if i == j:
                row.append(lams[qi] + masses[qi])
            elif quotient.has_edge(qi, qj):
                row.append(sizes[qj] if quotient.is_odd_edge(qi, qj) else -sizes[qj])
            else:
                row.append(0)
        rows.append(tuple(row))
    m_matrix = IntMatrix(tuple(rows))
    shifted = IntPoly.one()
    for q in order:
        poly = char_poly(signed_laplacian(parts[q]))
        shifted_poly = poly.shifted(-masses[q])
        shifted = shifted * shifted_poly.div_exact(
            IntPoly((-(lams[q] + masses[q]), 1))
        )
    return SubstitutionSpectrum(
        m_matrix=m_matrix,
        m_poly=char_poly(m_matrix),
        shifted_poly=shifted,
        part_sizes=tuple(sizes[q] for q in order),
        part_eigenvalues=tuple(lams[q] for q in order),
        masses=tuple(masses[q] for q in order),
    )


@dataclass(frozen=True)
class QuotientDecomposition:
    """Decomposition of a signed complete graph along its all-even-triangle
    edges: the complete components those edges induce, a switching set making
    them all even, and the small signed complete graph they contract to."""

    k: int
    parts: tuple[tuple[int, ...], ...]
    quotient: SignedComplete
    switching_set: frozenset[int]


def quotient_decomposition(t: SignedComplete) -> QuotientDecomposition:
    _require_order_at_least_four(t)
    x = x_set(t)
    adjacency: dict[int, set[int]] = {v: set() for v in t.vertices}
    for u, v in x:
        adjacency[u].add(v)
        adjacency[v].add(u)
    parts: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for root in t.vertices:
        if root in seen:
            continue
        stack, comp = [root], {root}
        seen.add(root)
        while stack:
            u = stack.pop()
            for x_ in adjacency[u]:
                if x_ not in comp:
                    comp.add(x_)
                    seen.add(x_)
                    stack.append(x_)
        parts.append(tuple(sorted(comp)))
    for part in parts:
        for pair in combinations(part, 2):
            if pair not in x:
                raise RuntimeError("all-even-triangle components are not complete")
    switching: set[int] = set()
    for part in parts:
        root = part[0]
        switching.update(u for u in part[1:] if edge(root, u) in t.odd)
    switched = switch_at(t.to_signed_graph(), switching)
    quotient_odd: set[Edge] = set()
    for i, j in combinations(range(len(parts)), 2):
        parities = {
            switched.is_odd_edge(a, b) for a in parts[i] for b in parts[j]
        }
        if len(parities) != 1:
            raise RuntimeError("cross parities between components are not uniform")
        if parities.pop():
            quotient_odd.add((i + 1, j + 1))
    return QuotientDecomposition(
        k=len(parts),
        parts=tuple(parts),
        quotient=SignedComplete(len(parts), frozenset(quotient_odd)),
        switching_set=frozenset(switching),
    )


def is_plain_integrally_completable(n: int, edges: Iterable[Edge]) -> bool:
    """No four vertices induce a path or a perfect matching on two edges."""
    es = {edge(u, v) for u, v in edges}
    for quad in combinations(range(1, n + 1), 4):
        sub = [pair for pair in combinations(quad, 2) if pair in es]
        if len(sub) == 2 and not set(sub[0]) & set(sub[1]):
            return False
        if len(sub) == 3:
            degrees = sorted(sum(1 for e in sub if v in e) for v in quad)
            if degrees == [1, 1, 2, 2]:
                return False
    return True


def _sign_restriction_matches(g: SignedGraph, target: SignedComplete) -> bool:
    return g.odd == target.odd & g.edges


def is_sigma_completable(g: SignedGraph, target: SignedComplete) -> bool:
    """Decide whether g can be grown to the target by integral-variation
    edge additions.

    For four or more vertices: every missing edge must be an all-even or the
    balanced all-odd edge of the target, signs must agree with the target,
    and the complete graph minus the not-yet-present all-even-triangle edges
    must be plainly completable.  On at most three vertices only the sign
    restriction matters.
    """
    if g.n != target.n:
        raise ValueError("vertex counts differ")
    if not _sign_restriction_matches(g, target):
        return False
    if g.n <= 3:
        return True
    all_pairs = set(target.all_edges())
    missing = all_pairs - g.edges
    x = x_set(target)
    if not missing <= x | y_set(target):
        return False
    return is_plain_integrally_completable(g.n, all_pairs - (x - g.edges))


@dataclass(frozen=True)
class PlanStep:
    edge: Edge
    parity: str
    verdict: SivVerdict

    def to_json_dict(self) -> dict:
        out = {"edge": list(self.edge), "parity": self.parity}
        out.update(self.verdict.to_json_dict())
        return out


@dataclass(frozen=True)
class CompletionPlan:
    """Ordered, oracle-certified edge additions from start to target."""

    start: SignedGraph
    target: SignedComplete
    steps: tuple[PlanStep, ...]

    def final_graph(self) -> SignedGraph:
        g = self.start
        for step in self.steps:
            g = g.add_edge(*step.edge, step.parity)
        return g


def plan_completion(
    g: SignedGraph, target: SignedComplete, cache: PolyCache | None = None
) -> CompletionPlan:
    """Build a certified addition sequence from g to the target.

    The balanced all-odd edge (when missing) goes first; the remaining
    missing edges are all-even-triangle edges and are added greedily, each
    chosen so the completability predicate stays true.  Every step carries
    its own oracle certificate.
    """
    if not is_sigma_completable(g, target):
        raise ValueError("graph is not integrally completable toward the target")
    if cache is None:
        cache = {}
    missing = sorted(set(target.all_edges()) - g.edges)
    if target.n >= 4:
        y_first = sorted(set(missing) & y_set(target))
        ordered_front = y_first
        pool = sorted(set(missing) - set(y_first))
    else:
        ordered_front = missing
        pool = []
    steps: list[PlanStep] = []
    current = g

    def commit(e: Edge) -> None:
        nonlocal current
        parity = target.parity(*e)
        verdict = siv_oracle(current, *e, parity, cache)
        if verdict.kind == NONE:
            raise RuntimeError(f"planned addition of {e} is not an integral step")
        steps.append(PlanStep(e, parity, verdict))
        current = current.add_edge(*e, parity)

    for e in ordered_front:
        commit(e)
    while pool:
        for e in pool:
            candidate = current.add_edge(*e, target.parity(*e))
            if is_sigma_completable(candidate, target):
                commit(e)
                pool.remove(e)
                break
        else:
            raise RuntimeError("no admissible edge addition found")
    if current != target.to_signed_graph():
        raise RuntimeError("plan did not reach the target")
    return CompletionPlan(start=g, target=target, steps=tuple(steps))


def brute_force_completable(
    g: SignedGraph,
    target: SignedComplete,
    cache: PolyCache | None = None,
    memo: dict[frozenset[Edge], bool] | None = None,
) -> bool:
    """Independent search oracle for completability: depth-first over edge
    supersets, recursing only through additions the spectral oracle certifies.

    States are memoized by their edge set (signs are pinned by the target).
    A memo table may be shared across calls with the same target.
    """
    if g.n != target.n:
        raise ValueError("vertex counts differ")
    if not _sign_restriction_matches(g, target):
        return False
    if cache is None:
        cache = {}
    if memo is None:
        memo = {}
    full = frozenset(target.all_edges())
    n = g.n
    odd = target.odd

    def reach(edges: frozenset[Edge]) -> bool:
        if edges == full:
            return True
        known = memo.get(edges)
        if known is not None:
            return known
        state = SignedGraph(n, edges, odd & edges)
        result = False
        for e in sorted(full - edges):
            parity = ODD if e in odd else EVEN
            if siv_oracle(state, *e, parity, cache).kind != NONE and reach(
                edges | {e}
            ):
                result = True
                break
        memo[edges] = result
        return result

    return reach(g.edges)
