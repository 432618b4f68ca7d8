"""Built-in benchmark networks used by the CLI and the test-suite."""
from __future__ import annotations

from .errors import GraphError
from .graph import DirectedGraph

_FIG1_ARCS = (
    ("1", "2"), ("1", "3"), ("2", "4"), ("2", "5"),
    ("3", "5"), ("4", "6"), ("5", "6"), ("6", "7"),
)

_FIG2_ARCS = (
    ("1", "3"), ("1", "4"), ("2", "4"), ("2", "5"), ("2", "6"),
    ("3", "5"), ("3", "6"), ("4", "5"), ("4", "6"),
)

_FIG4_ARCS = (
    ("1", "4"), ("2", "5"), ("3", "6"),
    ("4", "7"), ("4", "8"), ("5", "7"), ("5", "8"), ("6", "7"), ("6", "8"),
    ("7", "9"), ("7", "10"), ("8", "9"), ("8", "10"),
)

FIXTURE_NOTES = {
    "fig1": "7-node acyclic network with weak middlemen 2 and 5 and strong middleman 6",
    "fig2": "6-node network with no middlemen; node 4 is contested by the group {2,3}",
    "fig4": "10-node layered network where contested intermediaries out-score the middlemen on betweenness",
    "star6": "undirected star, centre 6 and leaves 1-5; the centre has middleman power 1",
    "cycle6": "directed 6-cycle; every node is a weak middleman with power 5/12",
}


def star_graph(n: int) -> DirectedGraph:
    """Undirected star on n nodes: centre labelled str(n), leaves 1..n-1,
    every spoke reciprocated."""
    if n < 2:
        raise GraphError("a star needs at least 2 nodes")
    centre = str(n)
    labels = [str(i) for i in range(1, n + 1)]
    arcs = []
    for i in range(1, n):
        arcs.append((centre, str(i)))
        arcs.append((str(i), centre))
    return DirectedGraph(labels, arcs)


def cycle_graph(n: int) -> DirectedGraph:
    """Directed cycle 1 -> 2 -> ... -> n -> 1."""
    if n < 2:
        raise GraphError("a cycle needs at least 2 nodes")
    labels = [str(i) for i in range(1, n + 1)]
    arcs = [(labels[i], labels[(i + 1) % n]) for i in range(n)]
    return DirectedGraph(labels, arcs)


def fixture_names() -> tuple[str, ...]:
    return tuple(FIXTURE_NOTES)


def fixture(name: str) -> DirectedGraph:
    """A fresh copy of one of the named benchmark networks."""
    if name == "fig1":
        return DirectedGraph([str(i) for i in range(1, 8)], _FIG1_ARCS)
    if name == "fig2":
        return DirectedGraph([str(i) for i in range(1, 7)], _FIG2_ARCS)
    if name == "fig4":
        return DirectedGraph([str(i) for i in range(1, 11)], _FIG4_ARCS)
    if name == "star6":
        return star_graph(6)
    if name == "cycle6":
        return cycle_graph(6)
    raise GraphError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NOTES)}")
