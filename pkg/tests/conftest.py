"""Shared helpers for the test suite: seeded random objects and tiny oracles."""

from __future__ import annotations

import itertools
import random

from meklerkit import Graph, Perm


def random_graph(rng: random.Random, n: int, edge_prob: float = 0.5) -> Graph:
    edges = [
        (x, y)
        for x, y in itertools.combinations(range(n), 2)
        if rng.random() < edge_prob
    ]
    return Graph.from_edges(n, edges)


def all_graphs(n: int):
    """Every graph on n labelled vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def random_perm(rng: random.Random, degree: int) -> Perm:
    images = list(range(degree))
    rng.shuffle(images)
    return Perm(tuple(images))


def subgroup_sets_by_subsets(group):
    """Literal oracle: non-empty subsets closed under the product.

    In a finite group closure under multiplication forces the identity and
    inverses, so these are exactly the subgroups.  Exponential; order <= 12.
    """
    els = list(group.elements())
    assert len(els) <= 12
    found = []
    for r in range(1, len(els) + 1):
        for combo in itertools.combinations(els, r):
            s = set(combo)
            if all(a * b in s for a in s for b in s):
                found.append(frozenset(s))
    return found
