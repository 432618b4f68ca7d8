"""Node contestability: can other nodes replace an intermediary?

A node set contests node i when every ordered pair i intermediates (its
predecessor-set times successor-set) can still be serviced once i is
deleted, by some member j, counting j itself as one of its own suppliers.
Contestability is monotone in the contesting set, so a single check against
all other nodes decides whether any contesting set exists. Uncontested
intermediaries are exactly the middlemen; duality_audit re-verifies that on
a concrete graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import GraphError, SizeGuardExceeded
from .graph import DirectedGraph
from .middleman import middleman_set

_MINIMAL_SEARCH_NODE_LIMIT = 15


@dataclass(frozen=True)
class ContestResult:
    """Verdict of one contesting-set check.

    ``uncovered`` lists the intermediated pairs the set fails to service
    (empty exactly when contested). ``vacuous`` flags nodes with empty
    coverage, for which the verdict holds trivially.
    """

    contested: bool
    contesting_set: frozenset[str]
    uncovered: tuple[tuple[str, str], ...]
    vacuous: bool


def contests(g: DirectedGraph, candidates: Iterable[str], node: str) -> ContestResult:
    """Check whether ``candidates`` jointly cover the full coverage of
    ``node`` in the node-deleted graph."""
    node_idx = g._idx(node)
    group = frozenset(candidates)
    for j in group:
        g._idx(j)
    if node in group:
        raise GraphError(f"the contested node {node!r} cannot itself contest")
    coverage = g.coverage(node)
    if not coverage:
        return ContestResult(True, group, (), vacuous=True)
    deleted = g.remove_node(node)
    suppliers: dict[str, tuple[frozenset[str], frozenset[str]]] = {}
    for j in group:
        suppliers[j] = (deleted.predecessor_set(j) | {j}, deleted.successor_set(j))
    uncovered = [
        (a, b)
        for a, b in coverage
        if not any(a in preds and b in succs for preds, succs in suppliers.values())
    ]
    order = g._index
    uncovered.sort(key=lambda pair: (order[pair[0]], order[pair[1]]))
    return ContestResult(not uncovered, group, tuple(uncovered), vacuous=False)


def directly_contests(g: DirectedGraph, challenger: str, node: str) -> bool:
    """True when the challenger alone can take over every connection the
    node provides: the node's predecessors and successors are contained in
    the challenger's own (plus itself) once the node is deleted."""
    if challenger == node:
        raise GraphError("a node cannot directly contest itself")
    g._idx(challenger)
    g._idx(node)
    deleted = g.remove_node(node)
    preds_ok = g.predecessor_set(node) <= deleted.predecessor_set(challenger) | {challenger}
    succs_ok = g.successor_set(node) <= deleted.successor_set(challenger) | {challenger}
    return preds_ok and succs_ok


def is_contested(g: DirectedGraph, node: str) -> bool:
    """Whether any node set contests the node; by monotonicity it suffices
    to test the set of all other nodes."""
    others = [v for v in g.nodes if v != node]
    return contests(g, others, node).contested


def minimal_contesting_sets(
    g: DirectedGraph, node: str, max_nodes: int = _MINIMAL_SEARCH_NODE_LIMIT
) -> list[frozenset[str]]:
    """All contesting sets of minimum cardinality, found by exhaustive
    search in increasing size; empty list when the node is uncontested.
    Nodes with empty coverage are contested even by the empty set."""
    if g.n > max_nodes:
        raise SizeGuardExceeded(
            f"minimal-set search is exhaustive and limited to {max_nodes} nodes; "
            f"graph has {g.n}"
        )
    if not g.coverage(node):
        g._idx(node)
        return [frozenset()]
    if not is_contested(g, node):
        return []
    others = [v for v in g.nodes if v != node]
    for size in range(1, len(others) + 1):
        found = [
            frozenset(combo)
            for combo in combinations(others, size)
            if contests(g, combo, node).contested
        ]
        if found:
            return found
    return []


@dataclass(frozen=True)
class DualityAudit:
    """Cross-check of contestedness against middleman status for every
    intermediary; ``counterexamples`` must stay empty."""

    intermediaries: tuple[str, ...]
    counterexamples: tuple[tuple[str, bool, bool], ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def __str__(self) -> str:
        if self.ok:
            return f"duality holds for all {len(self.intermediaries)} intermediaries"
        rows = ", ".join(
            f"{node} (contested={contested}, middleman={mm})"
            for node, contested, mm in self.counterexamples
        )
        return f"duality violated: {rows}"


def duality_audit(g: DirectedGraph) -> DualityAudit:
    """Verify on this graph that an intermediary is uncontested exactly
    when it is a middleman."""
    middlemen = middleman_set(g)
    intermediaries = tuple(
        node for node in g.nodes if g.node_role(node).value == "intermediary"
    )
    counterexamples = []
    for node in intermediaries:
        contested = is_contested(g, node)
        mm = node in middlemen
        if contested == mm:
            counterexamples.append((node, contested, mm))
    return DualityAudit(intermediaries, tuple(counterexamples))
