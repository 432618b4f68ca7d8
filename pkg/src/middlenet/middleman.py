"""Middleman identification, classification, and brokerage power.

A node is a middleman when it lies on every directed walk between at least
one ordered pair of other nodes, so deleting it severs that pair. Brokerage
counts the severed third-party pairs through the connectivity differential

    b(i) = sum_j |S_j(D)| - sum_{j != i} |S_j(D - i)| - |S_i(D)| - |P_i(D)|

where S/P are full successor/predecessor sets. Middleman power divides by
the network's total count of indirect-successor relations, clamped to 1.

Two independent routes compute the same quantities: the set route walks
the graph per node, while power_all/classify_all run an adjacency-matrix
closure pipeline. They must agree exactly; the tests enforce it.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import GraphError
from .graph import DirectedGraph, _bfs_depths, _reach


class MiddlemanClass(Enum):
    NONE = "none"
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True)
class PowerVectors:
    """Raw brokerage per node, the normalised power, and the normaliser."""

    raw: dict[str, int]
    normalized: dict[str, Fraction]
    normalizer: int


# ---- set route ------------------------------------------------------------


def pair_middleman_set(g: DirectedGraph, source: str, target: str) -> frozenset[str]:
    """Nodes lying on every walk from source to target: target is reachable
    in the full graph but not once the node is deleted. Empty when the pair
    is disconnected, and for directly linked pairs with an alternative
    route."""
    i, j = g._idx(source), g._idx(target)
    if i == j:
        raise GraphError("a middleman set needs two distinct nodes")
    if j not in _reach(g._succ, i):
        return frozenset()
    hits = [
        h
        for h in range(g.n)
        if h != i and h != j and j not in _reach(g._succ, i, skip=h)
    ]
    return frozenset(g.nodes[h] for h in hits)


def brokered_pairs(g: DirectedGraph, node: str) -> frozenset[tuple[str, str]]:
    """All ordered pairs (a, b) whose every walk runs through ``node``."""
    h = g._idx(node)
    labels = g.nodes
    pairs: list[tuple[str, str]] = []
    for a in range(g.n):
        if a == h:
            continue
        before = _reach(g._succ, a)
        if h not in before:
            continue
        after = _reach(g._succ, a, skip=h)
        for b in before - after:
            if b != h:
                pairs.append((labels[a], labels[b]))
    return frozenset(pairs)


def middleman_set(g: DirectedGraph) -> frozenset[str]:
    """Every node that is a middleman for at least one ordered pair."""
    return frozenset(node for node in g.nodes if brokered_pairs(g, node))


def classify(g: DirectedGraph, node: str) -> MiddlemanClass:
    """Strong when deleting the node raises the weak-component count, weak
    for the remaining middlemen, none otherwise."""
    if node not in middleman_set(g):
        g._idx(node)
        return MiddlemanClass.NONE
    before = len(g.weakly_connected_components())
    after = len(g.remove_node(node).weakly_connected_components())
    return MiddlemanClass.STRONG if after > before else MiddlemanClass.WEAK


def _total_reach(g: DirectedGraph, skip: int = -1) -> int:
    return sum(
        len(_reach(g._succ, a, skip=skip)) for a in range(g.n) if a != skip
    )


def brokerage(g: DirectedGraph, node: str) -> int:
    """The connectivity differential of deleting the node, compensated by
    the node's own reach; equals the number of ordered pairs it brokers."""
    i = g._idx(node)
    own = len(_reach(g._succ, i)) + len(_reach(g._pred, i))
    return _total_reach(g) - _total_reach(g, skip=i) - own


def potential_brokerage(g: DirectedGraph) -> tuple[int, int]:
    """Total count of indirect-successor relations, raw and clamped.

    Returns (raw_total, max(raw_total, 1)); the clamp keeps empty and
    complete networks, which offer no brokerage opportunities at all,
    normalisable."""
    raw = sum(
        len(_reach(g._succ, i)) - len(g._succ[i]) for i in range(g.n)
    )
    return raw, max(raw, 1)


def middleman_power(g: DirectedGraph, node: str) -> Fraction:
    """Brokerage normalised into [0, 1]; positive exactly for middlemen."""
    return Fraction(brokerage(g, node), potential_brokerage(g)[1])


def distance_based_power(g: DirectedGraph, node: str) -> Fraction:
    """Brokerage where each brokered pair (a, b) contributes
    1 / (dist(a, node) * dist(node, b)); zero for non-middlemen."""
    h = g._idx(node)
    pairs = brokered_pairs(g, node)
    if not pairs:
        return Fraction(0)
    dist_from = _bfs_depths(g._succ, h)
    dist_to = _bfs_depths(g._pred, h)
    index = g._index
    total = Fraction(0)
    for a, b in pairs:
        da = dist_to[index[a]]
        db = dist_from[index[b]]
        total += Fraction(1, da * db)
    return total


# ---- matrix route -----------------------------------------------------------


def _closure(mat: np.ndarray) -> np.ndarray:
    """Boolean reachability closure (paths of one or more arcs) with the
    diagonal forced off."""
    reach = mat.astype(bool)
    while True:
        extended = reach | ((reach.astype(np.int64) @ reach.astype(np.int64)) > 0)
        if np.array_equal(extended, reach):
            break
        reach = extended
    np.fill_diagonal(reach, False)
    return reach


def _raw_power(mat: np.ndarray) -> tuple[np.ndarray, int]:
    """Raw brokerage for every node plus the raw potential brokerage,
    computed purely from the adjacency matrix."""
    n = mat.shape[0]
    closure = _closure(mat)
    succ_counts = closure.sum(axis=1)
    pred_counts = closure.sum(axis=0)
    total = int(succ_counts.sum())
    b_prime = int((succ_counts - mat.sum(axis=1)).sum())
    raw = np.zeros(n, dtype=np.int64)
    for i in range(n):
        sub = mat.copy()
        sub[i, :] = 0
        sub[:, i] = 0
        removed_total = int(_closure(sub).sum())
        raw[i] = total - removed_total - int(succ_counts[i] + pred_counts[i])
    return raw, b_prime


def _adjacency(g: DirectedGraph) -> np.ndarray:
    return np.array(g.adjacency_matrix(), dtype=np.int64).reshape(g.n, g.n)


def power_all(g: DirectedGraph) -> PowerVectors:
    """Raw and normalised brokerage power for every node via the matrix
    pipeline; agrees node-by-node with brokerage/middleman_power."""
    raw, b_prime = _raw_power(_adjacency(g))
    normalizer = max(b_prime, 1)
    raw_map = {node: int(raw[i]) for i, node in enumerate(g.nodes)}
    normalized = {node: Fraction(value, normalizer) for node, value in raw_map.items()}
    return PowerVectors(raw=raw_map, normalized=normalized, normalizer=normalizer)


def classify_all(g: DirectedGraph) -> dict[str, MiddlemanClass]:
    """Classification for every node via the matrix pipeline: positive
    power in the directed graph makes a middleman, and positive power in
    the arc-direction-blind graph as well makes it strong."""
    directed_raw, _ = _raw_power(_adjacency(g))
    undirected_raw, _ = _raw_power(_adjacency(g.underlying_undirected()))
    result: dict[str, MiddlemanClass] = {}
    for i, node in enumerate(g.nodes):
        if directed_raw[i] > 0:
            result[node] = (
                MiddlemanClass.STRONG if undirected_raw[i] > 0 else MiddlemanClass.WEAK
            )
        else:
            result[node] = MiddlemanClass.NONE
    return result
