"""Whole-graph analysis reports in JSON and aligned-text form."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .centrality import (
    beta_measure,
    betweenness,
    bonacich,
    closeness,
    degree_centrality,
    pagerank,
)
from .contest import is_contested, minimal_contesting_sets
from .errors import SpectralBoundError
from .graph import DirectedGraph
from .middleman import (
    MiddlemanClass,
    classify_all,
    distance_based_power,
    potential_brokerage,
    power_all,
)

VERSION = "0.1.0"

_CLASS_MARKERS = {
    MiddlemanClass.NONE: "",
    MiddlemanClass.WEAK: "*",
    MiddlemanClass.STRONG: "**",
}


@dataclass
class NodeReport:
    label: str
    role: str
    middleman_class: MiddlemanClass
    brokerage: int
    nu: Fraction
    nu_star: Fraction
    contested: bool | str
    degree_in: int
    degree_out: int
    closeness: float
    betweenness: float
    bonacich: float | None
    pagerank: float
    beta_measure: float
    min_contesting_sets: list[list[str]] | None = None


@dataclass
class AnalysisReport:
    n: int
    arc_count: int
    weakly_connected: bool
    strongly_connected: bool
    components: int
    b_prime: int
    b: int
    nodes: list[NodeReport]
    parameters: dict[str, object]
    version: str = VERSION

    def ranked_nodes(self) -> list[NodeReport]:
        """Nodes ordered by descending power, then descending brokerage,
        then input order."""
        order = {record.label: i for i, record in enumerate(self.nodes)}
        return sorted(
            self.nodes,
            key=lambda r: (-r.nu, -r.brokerage, order[r.label]),
        )

    def to_dict(self) -> dict:
        nodes = []
        for r in self.nodes:
            entry: dict[str, object] = {
                "label": r.label,
                "role": r.role,
                "middleman_class": r.middleman_class.value,
                "brokerage": r.brokerage,
                "nu": float(r.nu),
                "nu_star": float(r.nu_star),
                "contested": r.contested,
                "degree_in": r.degree_in,
                "degree_out": r.degree_out,
                "closeness": r.closeness,
                "betweenness": r.betweenness,
                "bonacich": r.bonacich,
                "pagerank": r.pagerank,
                "beta_measure": r.beta_measure,
            }
            if r.min_contesting_sets is not None:
                entry["min_contesting_sets"] = r.min_contesting_sets
            nodes.append(entry)
        return {
            "graph": {
                "n": self.n,
                "arcs": self.arc_count,
                "weakly_connected": self.weakly_connected,
                "strongly_connected": self.strongly_connected,
                "components": self.components,
                "B_prime": self.b_prime,
                "B": self.b,
            },
            "nodes": nodes,
            "parameters": self.parameters,
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"nodes: {self.n}  arcs: {self.arc_count}  components: {self.components}  "
            f"weakly connected: {'yes' if self.weakly_connected else 'no'}  "
            f"strongly connected: {'yes' if self.strongly_connected else 'no'}",
            f"potential brokerage: B' = {self.b_prime}  B = {self.b}",
            f"beta = {self.parameters['beta']}  damping = {self.parameters['damping']}",
            "",
        ]
        headers = ("node", "deg-in", "deg-out", "bonacich", "betweenness", "nu", "nu-star")
        rows = []
        for r in self.ranked_nodes():
            marker = _CLASS_MARKERS[r.middleman_class]
            rows.append(
                (
                    f"{r.label}{marker}",
                    str(r.degree_in),
                    str(r.degree_out),
                    "n/a" if r.bonacich is None else f"{r.bonacich:.3f}",
                    f"{r.betweenness:.3f}",
                    f"{float(r.nu):.3f}",
                    f"{float(r.nu_star):.3f}",
                )
            )
        widths = [
            max(len(headers[c]), *(len(row[c]) for row in rows)) if rows else len(headers[c])
            for c in range(len(headers))
        ]
        lines.append("  ".join(h.ljust(widths[c]) for c, h in enumerate(headers)).rstrip())
        for row in rows:
            lines.append("  ".join(row[c].ljust(widths[c]) for c in range(len(row))).rstrip())
        lines.append("")
        lines.append("middleman markers: ** strong, * weak")
        return "\n".join(lines) + "\n"


def build_report(
    g: DirectedGraph,
    beta: float = 0.2,
    damping: float = 0.85,
    include_minimal_sets: bool = False,
) -> AnalysisReport:
    """Run every analysis once and bundle the per-node results."""
    power = power_all(g)
    classes = classify_all(g)
    bc = betweenness(g, normalized=True)
    clo = closeness(g)
    deg_in, deg_out, _ = degree_centrality(g)
    pr = pagerank(g, damping)
    bm = beta_measure(g)
    parameters: dict[str, object] = {
        "beta": beta,
        "damping": damping,
        "betweenness": bc.normalization,
        "closeness": clo.normalization,
    }
    try:
        bon = bonacich(g, beta)
        parameters["bonacich_alpha"] = bon.params["alpha"]
        bon_scores: dict[str, float | None] = dict(bon.scores)
    except SpectralBoundError as exc:
        bon_scores = {node: None for node in g.nodes}
        parameters["bonacich_error"] = str(exc)

    nodes = []
    for node in g.nodes:
        if g.coverage(node):
            contested: bool | str = is_contested(g, node)
        else:
            contested = "vacuous"
        record = NodeReport(
            label=node,
            role=g.node_role(node).value,
            middleman_class=classes[node],
            brokerage=power.raw[node],
            nu=power.normalized[node],
            nu_star=distance_based_power(g, node),
            contested=contested,
            degree_in=len(g.neighborhood(node).pred),
            degree_out=len(g.neighborhood(node).succ),
            closeness=clo.scores[node],
            betweenness=bc.scores[node],
            bonacich=bon_scores[node],
            pagerank=pr.scores[node],
            beta_measure=bm.scores[node],
        )
        if include_minimal_sets:
            record.min_contesting_sets = [
                sorted(s, key=g._index.__getitem__)
                for s in minimal_contesting_sets(g, node)
            ]
        nodes.append(record)

    components = g.weakly_connected_components()
    b_prime, b = potential_brokerage(g)
    return AnalysisReport(
        n=g.n,
        arc_count=g.arc_count,
        weakly_connected=len(components) <= 1,
        strongly_connected=g.is_strongly_connected(),
        components=len(components),
        b_prime=b_prime,
        b=b,
        nodes=nodes,
        parameters=parameters,
    )
