"""Immutable directed graphs with reachability and connectivity queries.

Node labels are arbitrary text. Label order is preserved from construction
and drives every deterministic ordering in derived output. Arcs are ordered
label pairs; self-loops are rejected and duplicate arcs collapse to one.
Instances never mutate, so every query is a pure read and instances can be
shared freely across threads.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphError, ParseError, SelfLoopError, UnknownNodeError


class NodeRole(Enum):
    """Degree-based role of a node."""

    SOURCE = "source"
    SINK = "sink"
    INTERMEDIARY = "intermediary"
    ISOLATED = "isolated"


@dataclass(frozen=True)
class Neighborhood:
    """Direct successors and predecessors of one node, with degrees."""

    succ: frozenset[str]
    pred: frozenset[str]
    out_degree: int
    in_degree: int


def _reach(adj: Sequence[frozenset[int]], start: int, skip: int = -1) -> set[int]:
    """Indices reachable from ``start`` by one or more arcs, excluding
    ``start`` itself. Traversal never enters ``skip``, which makes the
    node-deleted variant available without building a new graph."""
    seen: set[int] = set()
    stack = [w for w in adj[start] if w != skip]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        for w in adj[v]:
            if w != skip and w not in seen:
                stack.append(w)
    seen.discard(start)
    return seen


def _bfs_depths(adj: Sequence[frozenset[int]], start: int) -> list[int]:
    """Arc-count distance from ``start`` to every index; -1 if unreachable."""
    dist = [-1] * len(adj)
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


class DirectedGraph:
    """A finite directed graph without self-loops.

    Construction takes an ordered collection of node labels plus arcs given
    as ``(source, target)`` label pairs. Arc endpoints must appear in the
    node list; isolated nodes are allowed.
    """

    __slots__ = ("_labels", "_index", "_succ", "_pred")

    def __init__(
        self,
        nodes: Iterable[str] = (),
        arcs: Iterable[tuple[str, str]] = (),
    ):
        labels = tuple(nodes)
        index: dict[str, int] = {}
        for label in labels:
            if label in index:
                raise GraphError(f"duplicate node label {label!r}")
            index[label] = len(index)
        succ: list[set[int]] = [set() for _ in labels]
        pred: list[set[int]] = [set() for _ in labels]
        for a, b in arcs:
            if a == b:
                raise SelfLoopError(f"self-loop {a!r} -> {b!r} is not allowed")
            try:
                ia, ib = index[a], index[b]
            except KeyError as exc:
                raise UnknownNodeError(f"arc endpoint {exc.args[0]!r} is not a node") from None
            succ[ia].add(ib)
            pred[ib].add(ia)
        self._labels = labels
        self._index = index
        self._succ = tuple(frozenset(s) for s in succ)
        self._pred = tuple(frozenset(p) for p in pred)

    # ---- construction helpers -------------------------------------------

    @classmethod
    def from_arcs(
        cls,
        arcs: Iterable[tuple[str, str]],
        nodes: Iterable[str] = (),
    ) -> "DirectedGraph":
        """Build a graph from arcs, collecting node labels in first-mention
        order after any explicitly listed ones."""
        arc_list = list(arcs)
        order: dict[str, None] = {label: None for label in nodes}
        for a, b in arc_list:
            order.setdefault(a)
            order.setdefault(b)
        return cls(order, arc_list)

    @classmethod
    def from_edge_list(cls, text: str) -> "DirectedGraph":
        """Parse ``source,target`` lines into a graph.

        Blank lines and lines starting with ``#`` are skipped. Duplicate
        arcs collapse. Malformed lines and self-loops are rejected with the
        offending line number.
        """
        arcs: list[tuple[str, str]] = []
        order: dict[str, None] = {}
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise ParseError(line_no, f"expected 'source,target', got {raw!r}")
            a, b = parts
            if a == b:
                raise ParseError(
                    line_no, f"self-loop {a!r} -> {b!r} violates the no-loop invariant"
                )
            order.setdefault(a)
            order.setdefault(b)
            arcs.append((a, b))
        return cls(order, arcs)

    @classmethod
    def from_adjacency_matrix(
        cls,
        rows: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
    ) -> "DirectedGraph":
        """Build a graph from an n x n 0/1 grid; entry (i, j) = 1 means an
        arc from node i to node j. Default labels are "1".."n"."""
        grid = [list(row) for row in rows]
        n = len(grid)
        for i, row in enumerate(grid):
            if len(row) != n:
                raise GraphError(
                    f"matrix is not square: row {i + 1} has {len(row)} entries, expected {n}"
                )
        if labels is None:
            labels = [str(i + 1) for i in range(n)]
        else:
            labels = list(labels)
            if len(labels) != n:
                raise GraphError(f"{len(labels)} labels supplied for a {n}x{n} matrix")
        arcs: list[tuple[str, str]] = []
        for i in range(n):
            for j in range(n):
                entry = grid[i][j]
                if entry not in (0, 1):
                    raise GraphError(f"matrix entry ({i + 1},{j + 1}) = {entry!r} is not 0 or 1")
                if entry == 1:
                    if i == j:
                        raise GraphError(f"nonzero diagonal at ({i + 1},{i + 1})")
                    arcs.append((labels[i], labels[j]))
        return cls(labels, arcs)

    # ---- basic structure -------------------------------------------------

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def arcs(self) -> tuple[tuple[str, str], ...]:
        """All arcs as label pairs, ordered by node position."""
        pairs = sorted((i, j) for i, succ in enumerate(self._succ) for j in succ)
        return tuple((self._labels[i], self._labels[j]) for i, j in pairs)

    @property
    def arc_count(self) -> int:
        return sum(len(s) for s in self._succ)

    @property
    def is_symmetric(self) -> bool:
        """True when every arc is reciprocated."""
        return all(i in self._succ[j] for i, succ in enumerate(self._succ) for j in succ)

    def has_node(self, label: str) -> bool:
        return label in self._index

    def has_arc(self, source: str, target: str) -> bool:
        return self._idx(target) in self._succ[self._idx(source)]

    def _idx(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNodeError(f"unknown node {label!r}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self._labels == other._labels and self._succ == other._succ

    def __hash__(self) -> int:
        return hash((self._labels, self._succ))

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, arcs={self.arc_count})"

    def adjacency_matrix(self) -> list[list[int]]:
        """The 0/1 adjacency grid in node order."""
        n = self.n
        grid = [[0] * n for _ in range(n)]
        for i, succ in enumerate(self._succ):
            for j in succ:
                grid[i][j] = 1
        return grid

    # ---- neighbourhoods and roles ----------------------------------------

    def neighborhood(self, label: str) -> Neighborhood:
        """Direct successors/predecessors and degrees of one node."""
        i = self._idx(label)
        succ = frozenset(self._labels[j] for j in self._succ[i])
        pred = frozenset(self._labels[j] for j in self._pred[i])
        return Neighborhood(succ=succ, pred=pred, out_degree=len(succ), in_degree=len(pred))

    def node_role(self, label: str) -> NodeRole:
        i = self._idx(label)
        has_out = bool(self._succ[i])
        has_in = bool(self._pred[i])
        if has_in and has_out:
            return NodeRole.INTERMEDIARY
        if has_out:
            return NodeRole.SOURCE
        if has_in:
            return NodeRole.SINK
        return NodeRole.ISOLATED

    # ---- reachability ------------------------------------------------------

    def successor_set(self, label: str) -> frozenset[str]:
        """All nodes reachable from ``label`` by a directed path, excluding
        the node itself even when it sits on a cycle."""
        i = self._idx(label)
        return frozenset(self._labels[j] for j in _reach(self._succ, i))

    def predecessor_set(self, label: str) -> frozenset[str]:
        """All nodes that reach ``label`` by a directed path, excluding the
        node itself."""
        i = self._idx(label)
        return frozenset(self._labels[j] for j in _reach(self._pred, i))

    def coverage(self, label: str) -> frozenset[tuple[str, str]]:
        """Every ordered pair the node intermediates: predecessor-set times
        successor-set."""
        pred = self.predecessor_set(label)
        succ = self.successor_set(label)
        return frozenset((a, b) for a in pred for b in succ)

    def reach_pairs(self, label: str) -> frozenset[tuple[str, str]]:
        """Pairs (label, j) for every j the node reaches."""
        return frozenset((label, b) for b in self.successor_set(label))

    # ---- whole-graph structure ---------------------------------------------

    def remove_node(self, label: str) -> "DirectedGraph":
        """The graph with one node deleted along with every incident arc."""
        i = self._idx(label)
        labels = tuple(l for l in self._labels if l != label)
        arcs = [
            (self._labels[a], self._labels[b])
            for a, succ in enumerate(self._succ)
            for b in succ
            if a != i and b != i
        ]
        return DirectedGraph(labels, arcs)

    def underlying_undirected(self) -> "DirectedGraph":
        """The graph with every arc reciprocated; idempotent."""
        arcs: set[tuple[str, str]] = set()
        for a, succ in enumerate(self._succ):
            for b in succ:
                arcs.add((self._labels[a], self._labels[b]))
                arcs.add((self._labels[b], self._labels[a]))
        return DirectedGraph(self._labels, sorted(arcs))

    def weakly_connected_components(self) -> tuple[tuple[str, ...], ...]:
        """Components of the arc-direction-blind graph, each a tuple of
        labels in node order; components ordered by first member."""
        n = self.n
        seen = [False] * n
        components: list[tuple[str, ...]] = []
        for start in range(n):
            if seen[start]:
                continue
            member = []
            stack = [start]
            seen[start] = True
            while stack:
                v = stack.pop()
                member.append(v)
                for w in self._succ[v] | self._pred[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            components.append(tuple(self._labels[i] for i in sorted(member)))
        return tuple(components)

    def is_strongly_connected(self) -> bool:
        """True when every ordered pair of nodes is joined by a directed
        path. Empty and single-node graphs count as strongly connected."""
        if self.n <= 1:
            return True
        full = self.n - 1
        return len(_reach(self._succ, 0)) == full and len(_reach(self._pred, 0)) == full

    # ---- geodesics -----------------------------------------------------------

    def geodesic_distance(self, source: str, target: str) -> int | None:
        """Length in arcs of a shortest directed path, ``None`` if the target
        is unreachable; distance from a node to itself is 0."""
        i, j = self._idx(source), self._idx(target)
        if i == j:
            return 0
        dist = _bfs_depths(self._succ, i)[j]
        return None if dist < 0 else dist

    def geodesic_counts(self, source: str, target: str) -> tuple[int, dict[str, int]]:
        """Number of shortest directed paths from source to target, plus a
        map giving, for each interior node on at least one of them, how many
        pass through it."""
        i, j = self._idx(source), self._idx(target)
        if i == j:
            raise GraphError("geodesic counts need two distinct nodes")
        dist, sigma = self._path_counts(self._succ, i)
        if dist[j] < 0:
            return 0, {}
        rdist, rsigma = self._path_counts(self._pred, j)
        total = sigma[j]
        through: dict[str, int] = {}
        for v in range(self.n):
            if v in (i, j) or dist[v] < 0 or rdist[v] < 0:
                continue
            if dist[v] + rdist[v] == dist[j]:
                count = sigma[v] * rsigma[v]
                if count:
                    through[self._labels[v]] = count
        return total, through

    def _path_counts(
        self, adj: Sequence[frozenset[int]], start: int
    ) -> tuple[list[int], list[int]]:
        """BFS distances and shortest-path counts from ``start``."""
        dist = [-1] * self.n
        sigma = [0] * self.n
        dist[start] = 0
        sigma[start] = 1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        return dist, sigma

    # ---- clustering ------------------------------------------------------------

    def local_clustering(self, label: str) -> float:
        """Clustering coefficient of the node in the arc-direction-blind
        graph: realised links among its neighbours over the possible
        k(k-1)/2. Nodes with fewer than two neighbours score 0."""
        i = self._idx(label)
        neighbors = sorted(self._succ[i] | self._pred[i])
        k = len(neighbors)
        if k < 2:
            return 0.0
        links = sum(
            1
            for a, b in combinations(neighbors, 2)
            if b in self._succ[a] or a in self._succ[b]
        )
        return 2.0 * links / (k * (k - 1))


def parse_matrix_text(text: str) -> list[list[int]]:
    """Parse whitespace- or comma-separated 0/1 rows; ``#`` comments and
    blank lines are skipped."""
    rows: list[list[int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        row: list[int] = []
        for token in line.replace(",", " ").split():
            if token == "0":
                row.append(0)
            elif token == "1":
                row.append(1)
            else:
                raise ParseError(line_no, f"matrix entry {token!r} is not 0 or 1")
        rows.append(row)
    return rows
