"""The lattice of strongly admissible interpretations and its DOT/JSON export."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .adf import DEFAULT_ENUM_CAP, Adf, grounded
from .errors import JoinConflictError, LatticeViolationError
from .interpretation import Interpretation, join, meet
from .strong import enumerate_strongly_admissible, max_sadm_below


@dataclass(frozen=True)
class SadmLattice:
    nodes: tuple[Interpretation, ...]
    cover_edges: tuple[tuple[int, int], ...]  # (lower, upper)
    bottom: int
    top: int

    def index(self, v: Interpretation) -> int:
        return self.nodes.index(v)

    def to_json(self) -> dict:
        return {
            "nodes": [v.to_dict() for v in self.nodes],
            "cover_edges": [list(e) for e in self.cover_edges],
            "bottom": self.bottom,
            "top": self.top,
        }

    def to_dot(self, name: str = "sadm") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, v in enumerate(self.nodes):
            label = v.to_set_notation().replace('"', '\\"')
            lines.append(f'  n{i} [label="{label}"];')
        for lo, hi in self.cover_edges:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def transitive_reduction(nodes) -> list[tuple[int, int]]:
    """Cover pairs (i, j): nodes[i] < nodes[j] with nothing strictly between."""
    n = len(nodes)
    lt = [[i != j and nodes[i] <= nodes[j] for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(n)):
                edges.append((i, j))
    return edges


def _validate(adf: Adf, nodes: list[Interpretation]):
    n = len(nodes)
    index = {v: i for i, v in enumerate(nodes)}
    leq = [[nodes[i] <= nodes[j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            try:
                sup = join(nodes[i], nodes[j])
            except JoinConflictError as exc:
                raise LatticeViolationError(f"join of nodes {i} and {j} conflicts: {exc}") from None
            k = index.get(sup)
            if k is None:
                raise LatticeViolationError(f"join of nodes {i} and {j} is not strongly admissible")
            if not all(leq[k][m] for m in range(n) if leq[i][m] and leq[j][m]):
                raise LatticeViolationError(f"join of nodes {i} and {j} is not the least upper bound")
            inf = max_sadm_below(adf, meet(nodes[i], nodes[j]))
            k = index.get(inf)
            if k is None or not (leq[k][i] and leq[k][j]):
                raise LatticeViolationError(f"infimum of nodes {i} and {j} is not a lower bound in the set")
            if not all(leq[m][k] for m in range(n) if leq[m][i] and leq[m][j]):
                raise LatticeViolationError(f"infimum of nodes {i} and {j} is not the greatest lower bound")


def build_lattice(adf: Adf, cap: int = DEFAULT_ENUM_CAP, validate: bool = True) -> SadmLattice:
    nodes = enumerate_strongly_admissible(adf, cap=cap)
    bottom_v, top_v = adf.trivial(), grounded(adf)
    if bottom_v not in nodes or top_v not in nodes:
        raise LatticeViolationError("trivial or grounded interpretation missing from the sadm set")
    if not all(bottom_v <= v <= top_v for v in nodes):
        raise LatticeViolationError("sadm set is not bounded by trivial and grounded")
    if validate:
        _validate(adf, nodes)
    return SadmLattice(
        nodes=tuple(nodes),
        cover_edges=tuple(transitive_reduction(nodes)),
        bottom=nodes.index(bottom_v),
        top=nodes.index(top_v),
    )


def lattice_json(lattice: SadmLattice) -> str:
    return json.dumps(lattice.to_json(), indent=2)
