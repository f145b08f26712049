"""Directed semantic network: typed case arcs over an ordered vertex list.

The vertex order is the utterance order and doubles as the topicality
order. Arcs point from a predicate (head) to a case filler (dependent)
and carry the damped unification value that licensed them, so consumers
can explain why an attachment was made. Networks are immutable value
objects; equality ignores the cached per-vertex feature sets, which are
derived data not present in the canonical serialised form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import EmptyNetworkError
from .lexicon import FeatureSet


@dataclass(frozen=True)
class Vertex:
    pos: int
    symbol_id: str
    features: FeatureSet = field(compare=False, default_factory=dict)


@dataclass(frozen=True)
class Arc:
    head: int
    case: str
    dep: int
    value: float


@dataclass(frozen=True)
class SemanticNetwork:
    vertices: tuple[Vertex, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        positions = [v.pos for v in self.vertices]
        if positions != list(range(len(positions))):
            raise ValueError("vertex positions must be contiguous from 0")
        seen: set[tuple[int, str]] = set()
        for arc in self.arcs:
            if arc.head == arc.dep:
                raise ValueError(f"self arc at position {arc.head}")
            if arc.head >= len(positions) or arc.dep >= len(positions):
                raise ValueError(f"arc endpoint outside the network: {arc}")
            key = (arc.head, arc.case)
            if key in seen:
                raise ValueError(f"two arcs for head {arc.head} case {arc.case!r}")
            seen.add(key)

    def __len__(self) -> int:
        return len(self.vertices)

    def topic(self) -> Vertex:
        """The most topical vertex: first in utterance order."""
        if not self.vertices:
            raise EmptyNetworkError("network has no vertices")
        return self.vertices[0]

    def arcs_from(self, pos: int) -> tuple[Arc, ...]:
        return tuple(arc for arc in self.arcs if arc.head == pos)

    def unattached(self) -> list[Vertex]:
        """Vertices that are neither heads nor dependents, in topic order."""
        linked = {arc.head for arc in self.arcs} | {arc.dep for arc in self.arcs}
        return [v for v in self.vertices if v.pos not in linked]


def _sorted_arcs(network: SemanticNetwork) -> list[Arc]:
    return sorted(network.arcs, key=lambda a: (a.head, a.case))


def to_canonical_json(network: SemanticNetwork) -> str:
    """Canonical JSON form: topic-ordered vertices, (head, case)-sorted arcs.

    Deterministic and injective over valid networks: distinct networks
    serialise to distinct text.
    """
    document = {
        "vertices": [{"pos": v.pos, "symbol": v.symbol_id} for v in network.vertices],
        "arcs": [
            {"head": a.head, "case": a.case, "dep": a.dep, "value": a.value}
            for a in _sorted_arcs(network)
        ],
    }
    return json.dumps(document, ensure_ascii=False, separators=(",", ":"))


def network_from_json(text: str) -> SemanticNetwork:
    """Parse the canonical JSON form. Vertex feature sets are not restored."""
    document = json.loads(text)
    vertices = tuple(
        Vertex(pos=node["pos"], symbol_id=node["symbol"])
        for node in document["vertices"]
    )
    arcs = tuple(
        Arc(head=node["head"], case=node["case"], dep=node["dep"], value=node["value"])
        for node in document["arcs"]
    )
    return SemanticNetwork(vertices=vertices, arcs=arcs)


def to_dot(network: SemanticNetwork) -> str:
    """DOT digraph text: vertices labelled by symbol, arcs by case and value."""
    lines = ["digraph semantic_network {"]
    for vertex in network.vertices:
        lines.append(f'  n{vertex.pos} [label="{vertex.symbol_id}"];')
    for arc in _sorted_arcs(network):
        lines.append(f'  n{arc.head} -> n{arc.dep} [label="{arc.case} {arc.value:.3f}"];')
    lines.append("}")
    return "\n".join(lines)


def serialize_network(network: SemanticNetwork, fmt: str = "json") -> str:
    if fmt == "json":
        return to_canonical_json(network)
    if fmt == "graph-text":
        return to_dot(network)
    raise ValueError(f"unknown serialisation format {fmt!r}")
