"""Brute-force reference implementations and random-graph generation.

Everything here trades speed for being obviously correct: paths are
enumerated outright, contesting sets are tried exhaustively. The fast
implementations elsewhere in the package are tested against these on small
graphs. Walks and simple paths agree for every question asked here, because
any walk between two nodes contains a simple path between them using a
subset of its nodes, so intersections over all walks equal intersections
over all simple paths.
"""
from __future__ import annotations

import random
from itertools import combinations

from .errors import GraphError, SizeGuardExceeded
from .graph import DirectedGraph

_PATH_NODE_LIMIT = 12
_SUBSET_NODE_LIMIT = 10


def _guard(g: DirectedGraph, limit: int, what: str) -> None:
    if g.n > limit:
        raise SizeGuardExceeded(
            f"{what} is exhaustive and limited to {limit} nodes; graph has {g.n}"
        )


def enumerate_simple_paths(
    g: DirectedGraph, source: str, target: str
) -> list[tuple[str, ...]]:
    """All simple directed paths from source to target via depth-first
    search, branching in node order."""
    _guard(g, _PATH_NODE_LIMIT, "path enumeration")
    i, j = g._idx(source), g._idx(target)
    if i == j:
        raise GraphError("path enumeration needs two distinct nodes")
    labels = g.nodes
    paths: list[tuple[str, ...]] = []
    path = [i]
    on_path = {i}

    def walk(v: int) -> None:
        for w in sorted(g._succ[v]):
            if w == j:
                paths.append(tuple(labels[k] for k in path) + (labels[j],))
            elif w not in on_path:
                path.append(w)
                on_path.add(w)
                walk(w)
                path.pop()
                on_path.remove(w)

    walk(i)
    return paths


def middleman_set_oracle(g: DirectedGraph, source: str, target: str) -> frozenset[str]:
    """Nodes on every simple path from source to target, endpoints
    excluded; empty when no path exists."""
    paths = enumerate_simple_paths(g, source, target)
    if not paths:
        return frozenset()
    common = set(paths[0])
    for p in paths[1:]:
        common &= set(p)
        if len(common) <= 2:
            break
    return frozenset(common - {source, target})


def brokerage_oracle(g: DirectedGraph, node: str) -> int:
    """How many ordered pairs have ``node`` on all of their paths."""
    _guard(g, _PATH_NODE_LIMIT, "brokerage enumeration")
    g._idx(node)
    count = 0
    for a in g.nodes:
        for b in g.nodes:
            if a == b or node in (a, b):
                continue
            if node in middleman_set_oracle(g, a, b):
                count += 1
    return count


def contesting_oracle(g: DirectedGraph, node: str) -> bool:
    """Whether any subset of the other nodes covers the node's full
    coverage in the node-deleted graph; tried exhaustively by size."""
    _guard(g, _SUBSET_NODE_LIMIT, "contesting-set search")
    g._idx(node)
    coverage = g.coverage(node)
    if not coverage:
        return True
    others = [v for v in g.nodes if v != node]
    deleted = g.remove_node(node)
    pair_sets = {}
    for j in others:
        covered_from = deleted.predecessor_set(j) | {j}
        covered_to = deleted.successor_set(j)
        pair_sets[j] = frozenset((a, b) for a in covered_from for b in covered_to)
    for size in range(1, len(others) + 1):
        for combo in combinations(others, size):
            union: set[tuple[str, str]] = set()
            for j in combo:
                union |= pair_sets[j]
            if coverage <= union:
                return True
    return False


def random_digraph(n: int, p: float, seed: int) -> DirectedGraph:
    """Random digraph where each ordered non-diagonal pair becomes an arc
    independently with probability p; identical seeds give identical
    graphs across runs."""
    if n < 0:
        raise GraphError("node count must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise GraphError("arc probability must lie in [0, 1]")
    rng = random.Random(seed)
    labels = [str(i) for i in range(1, n + 1)]
    arcs = []
    for a in labels:
        for b in labels:
            if a != b and rng.random() < p:
                arcs.append((a, b))
    return DirectedGraph(labels, arcs)
