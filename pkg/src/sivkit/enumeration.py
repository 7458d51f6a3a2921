"""Exhaustive and randomized generators over small signed graphs."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .completion import SignedComplete
from .graphs import Edge, SignedGraph


def all_pairs(n: int) -> list[Edge]:
    return list(combinations(range(1, n + 1), 2))


def iter_subsets(items: list) -> Iterator[frozenset]:
    for mask in range(1 << len(items)):
        yield frozenset(items[i] for i in range(len(items)) if mask >> i & 1)


def iter_signings(n: int, edges: frozenset[Edge]) -> Iterator[SignedGraph]:
    """All 2^|E| signings of one underlying graph."""
    ordered = sorted(edges)
    for odd in iter_subsets(ordered):
        yield SignedGraph(n, edges, odd)


def iter_signed_graphs(n: int) -> Iterator[SignedGraph]:
    """All signed graphs on n labeled vertices (3^C(n,2) of them)."""
    for edges in iter_subsets(all_pairs(n)):
        yield from iter_signings(n, edges)


def iter_signed_completes(n: int) -> Iterator[SignedComplete]:
    for odd in iter_subsets(all_pairs(n)):
        yield SignedComplete(n, odd)


def random_signed_graph(
    rng: random.Random, n: int, edge_prob: float = 0.5
) -> SignedGraph:
    edges = frozenset(e for e in all_pairs(n) if rng.random() < edge_prob)
    odd = frozenset(e for e in edges if rng.random() < 0.5)
    return SignedGraph(n, edges, odd)


def random_signed_complete(rng: random.Random, n: int) -> SignedComplete:
    odd = frozenset(e for e in all_pairs(n) if rng.random() < 0.5)
    return SignedComplete(n, odd)
