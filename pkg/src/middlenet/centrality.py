"""Comparison centralities: degree, closeness, betweenness, Bonacich,
PageRank, and the beta-measure.

Conventions, chosen once and recorded in each vector's normalization tag:
betweenness sums over ordered pairs and, when normalised, divides by
(n-1)(n-2) for directed graphs and by (n-1)(n-2)/2 when every arc is
reciprocated; closeness weights the inverse mean distance by the fraction
of nodes actually reached; PageRank redistributes dangling mass uniformly
and sums to one; Bonacich scales so the squared scores sum to n.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import GraphError, SpectralBoundError
from .graph import DirectedGraph, _bfs_depths


@dataclass(frozen=True)
class CentralityVector:
    measure: str
    scores: dict[str, float]
    params: dict[str, object] = field(default_factory=dict)
    normalization: str = "raw"


def betweenness(g: DirectedGraph, normalized: bool = False) -> CentralityVector:
    """Share of shortest paths running through each node, summed over
    ordered pairs of the other nodes."""
    n = g.n
    raw = [0.0] * n
    for s in range(n):
        dist = [-1] * n
        sigma = [0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[s] = 0
        sigma[s] = 1
        queue = deque([s])
        order: list[int] = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g._succ[v]):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                raw[w] += delta[w]
    if normalized and n >= 3:
        divisor = (n - 1) * (n - 2)
        if g.is_symmetric:
            divisor /= 2
        tag = f"ordered pairs / {divisor:g}"
        scores = {node: raw[i] / divisor for i, node in enumerate(g.nodes)}
    else:
        tag = "raw ordered pairs"
        scores = {node: raw[i] for i, node in enumerate(g.nodes)}
    return CentralityVector("betweenness", scores, {"normalized": normalized}, tag)


def closeness(g: DirectedGraph) -> CentralityVector:
    """Reach-weighted closeness: (r/(n-1)) * (r/total distance) where r is
    the number of reachable nodes; zero for nodes reaching nothing."""
    n = g.n
    scores: dict[str, float] = {}
    for i, node in enumerate(g.nodes):
        depths = _bfs_depths(g._succ, i)
        reached = [d for v, d in enumerate(depths) if v != i and d > 0]
        if not reached or n < 2:
            scores[node] = 0.0
            continue
        r = len(reached)
        scores[node] = (r / (n - 1)) * (r / sum(reached))
    return CentralityVector("closeness", scores, {}, "reach-weighted")


def degree_centrality(
    g: DirectedGraph,
) -> tuple[CentralityVector, CentralityVector, CentralityVector]:
    """In-degree, out-degree, and distinct-neighbour totals."""
    into: dict[str, float] = {}
    out: dict[str, float] = {}
    total: dict[str, float] = {}
    for i, node in enumerate(g.nodes):
        into[node] = float(len(g._pred[i]))
        out[node] = float(len(g._succ[i]))
        total[node] = float(len(g._pred[i] | g._succ[i]))
    return (
        CentralityVector("degree_in", into, {}, "count"),
        CentralityVector("degree_out", out, {}, "count"),
        CentralityVector("degree", total, {}, "distinct neighbours"),
    )


def spectral_bound(g: DirectedGraph) -> float:
    """1 / spectral radius of the adjacency matrix; infinity when the
    radius is zero (e.g. acyclic graphs)."""
    if g.n == 0:
        return math.inf
    eigenvalues = np.linalg.eigvals(np.array(g.adjacency_matrix(), dtype=float))
    radius = float(max(abs(eigenvalues))) if eigenvalues.size else 0.0
    return math.inf if radius == 0.0 else 1.0 / radius


def bonacich(g: DirectedGraph, beta: float) -> CentralityVector:
    """Attenuated influence scores c = alpha (I - beta A)^-1 A 1, with
    alpha > 0 fixed so the squared scores sum to n. Requires |beta| below
    the spectral bound of the adjacency matrix."""
    n = g.n
    if n == 0:
        return CentralityVector("bonacich", {}, {"beta": beta}, "sum of squares = n")
    bound = spectral_bound(g)
    if abs(beta) >= bound:
        raise SpectralBoundError(beta, bound)
    mat = np.array(g.adjacency_matrix(), dtype=float).reshape(n, n)
    base = np.linalg.solve(np.eye(n) - beta * mat, mat @ np.ones(n))
    squared = float(base @ base)
    if squared == 0.0:
        values = np.zeros(n)
        alpha = 0.0
    else:
        alpha = math.sqrt(n / squared)
        values = alpha * base
    scores = {node: float(values[i]) for i, node in enumerate(g.nodes)}
    return CentralityVector(
        "bonacich", scores, {"beta": beta, "alpha": alpha}, "sum of squares = n"
    )


def pagerank(g: DirectedGraph, damping: float = 0.85) -> CentralityVector:
    """Damped random-surfer fixed point; dangling mass is spread uniformly
    and the scores sum to one."""
    if not 0.0 < damping < 1.0:
        raise GraphError(f"damping must lie strictly between 0 and 1, got {damping}")
    n = g.n
    if n == 0:
        return CentralityVector("pagerank", {}, {"damping": damping}, "sum = 1")
    out_degree = [len(s) for s in g._succ]
    ranks = [1.0 / n] * n
    while True:
        dangling = sum(ranks[v] for v in range(n) if out_degree[v] == 0)
        base = (1.0 - damping) / n + damping * dangling / n
        fresh = [
            base + damping * sum(ranks[v] / out_degree[v] for v in sorted(g._pred[i]))
            for i in range(n)
        ]
        if sum(abs(fresh[i] - ranks[i]) for i in range(n)) < 1e-12:
            ranks = fresh
            break
        ranks = fresh
    scores = {node: ranks[i] for i, node in enumerate(g.nodes)}
    return CentralityVector("pagerank", scores, {"damping": damping}, "sum = 1")


def beta_measure(g: DirectedGraph) -> CentralityVector:
    """Dominance shares: each node receives 1/in-degree(j) from every
    direct successor j, so every node with predecessors hands out exactly
    one unit in total."""
    scores: dict[str, float] = {}
    for i, node in enumerate(g.nodes):
        scores[node] = sum(1.0 / len(g._pred[j]) for j in sorted(g._succ[i]))
    return CentralityVector("beta_measure", scores, {}, "dominance shares")
