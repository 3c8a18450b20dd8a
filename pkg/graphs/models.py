"""models.py - Graph models"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from utils.exceptions import InvalidGraph, SelfLoop, VertexOutOfRange

Edge = Tuple[int, int]


class LabelTag(str, Enum):
    """Role of a line-graph vertex, named after the edge it came from"""

    SPOKE = "Spoke"
    RIM = "Rim"
    PENDANT = "Pendant"
    INNER_RIM = "InnerRim"
    OUTER_RIM = "OuterRim"
    BRIDGE = "Bridge"
    GRID_CELL = "GridCell"
    EDGE = "Edge"


_PRIMES = {
    LabelTag.SPOKE: "",
    LabelTag.RIM: "'",
    LabelTag.PENDANT: "''",
    LabelTag.INNER_RIM: "''",
    LabelTag.OUTER_RIM: "'''",
}


@dataclass(frozen=True)
class VertexLabel:
    """Symbolic name of a vertex; GridCell and Edge carry both indices"""

    tag: LabelTag
    i: int
    j: Optional[int] = None

    @property
    def symbol(self) -> str:
        """Printable edge symbol (e_3', e, (1,2), ...)"""
        if self.tag == LabelTag.BRIDGE:
            return "e"
        if self.tag == LabelTag.GRID_CELL:
            return f"({self.i},{self.j})"
        if self.tag == LabelTag.EDGE:
            return f"{self.i}-{self.j}"
        return f"e_{self.i}{_PRIMES[self.tag]}"

    def to_dict(self) -> Dict[str, Any]:
        return {"tag": self.tag.value, "i": self.i, "j": self.j}

    @staticmethod
    def from_dict(data: Mapping[str, Any]) -> "VertexLabel":
        try:
            tag = LabelTag(data["tag"])
            i = int(data["i"])
        except (KeyError, ValueError, TypeError) as e:
            raise InvalidGraph(f"Malformed vertex label {data!r}: {e}")
        j = data.get("j")
        return VertexLabel(tag, i, None if j is None else int(j))


@dataclass(frozen=True)
class FamilyTag:
    """Which family instance a graph (or its line graph) was generated from"""

    name: str
    params: Tuple[Tuple[str, int], ...]
    line: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "params": dict(self.params), "line": self.line}

    @staticmethod
    def from_dict(data: Mapping[str, Any]) -> "FamilyTag":
        try:
            params = tuple((str(key), int(value)) for key, value in data["params"].items())
            return FamilyTag(str(data["name"]), params, bool(data.get("line", False)))
        except (KeyError, AttributeError, ValueError, TypeError) as e:
            raise InvalidGraph(f"Malformed family tag {data!r}: {e}")


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1"""

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[VertexLabel, ...]] = None
    family: Optional[FamilyTag] = field(default=None, compare=False)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(nbrs) for nbrs in self.adjacency), dtype=np.int64, count=self.n)

    def edges(self) -> List[Edge]:
        """Edges as (u, v) with u < v, in lexicographic order"""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def is_complete(self) -> bool:
        return all(len(nbrs) == self.n - 1 for nbrs in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency_masks[u] >> v & 1)

    def label_index(self) -> Dict[VertexLabel, int]:
        """Map each label back to its vertex"""
        if self.labels is None:
            return {}
        return {label: v for v, label in enumerate(self.labels)}

    def vertex_name(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v].symbol

    @cached_property
    def adjacency_masks(self) -> Tuple[int, ...]:
        """Neighbor sets as integer bitmasks"""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        """Closed neighborhoods N[v] as integer bitmasks"""
        return tuple(mask | (1 << v) for v, mask in enumerate(self.adjacency_masks))

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v, self.n)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"n": self.n, "edges": [list(edge) for edge in self.edges()]}
        if self.labels is not None:
            data["labels"] = [label.to_dict() for label in self.labels]
        if self.family is not None:
            data["family"] = self.family.to_dict()
        return data

    @staticmethod
    def from_dict(data: Mapping[str, Any]) -> "Graph":
        try:
            n = int(data["n"])
            edges = [(int(pair[0]), int(pair[1])) for pair in data["edges"]]
        except (KeyError, IndexError, ValueError, TypeError) as e:
            raise InvalidGraph(f"Malformed graph JSON: {e}")
        labels = None
        if data.get("labels") is not None:
            labels = [VertexLabel.from_dict(item) for item in data["labels"]]
        family = FamilyTag.from_dict(data["family"]) if data.get("family") else None
        return build_graph(n, edges, labels=labels, family=family)


def build_graph(n: int, edges: Iterable[Edge],
                labels: Optional[Sequence[VertexLabel]] = None,
                family: Optional[FamilyTag] = None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse"""
    if n < 0:
        raise InvalidGraph(f"Vertex count must be non-negative, got {n}")

    neighbors: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRange(w, n)
        if u == v:
            raise SelfLoop(u)
        neighbors[u].add(v)
        neighbors[v].add(u)

    label_tuple = None
    if labels is not None:
        label_tuple = tuple(labels)
        if len(label_tuple) != n:
            raise InvalidGraph(f"Expected {n} labels, got {len(label_tuple)}")
        if len(set(label_tuple)) != n:
            raise InvalidGraph("Vertex labels must be distinct")

    return Graph(
        n=n,
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in neighbors),
        labels=label_tuple,
        family=family,
    )


def line_graph(g: Graph, labels: Optional[Mapping[Edge, VertexLabel]] = None,
               family: Optional[FamilyTag] = None) -> Graph:
    """Line graph of g; vertex i is the i-th edge of g in lexicographic order.

    Without an explicit label map every vertex is labelled Edge(u, v) after
    its originating edge. Two edges of a simple graph share at most one
    endpoint, so "share an endpoint" and "share exactly one" agree.
    """
    edges = g.edges()
    index = {edge: position for position, edge in enumerate(edges)}

    line_edges: List[Edge] = []
    for w in range(g.n):
        incident = sorted(index[(min(w, u), max(w, u))] for u in g.adjacency[w])
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                line_edges.append((incident[a], incident[b]))

    if labels is None:
        vertex_labels = [VertexLabel(LabelTag.EDGE, u, v) for u, v in edges]
    else:
        missing = [edge for edge in edges if edge not in labels]
        if missing:
            raise InvalidGraph(f"No label for edges {missing[:5]}")
        vertex_labels = [labels[edge] for edge in edges]

    logger.debug(f"Line graph of {g.n}-vertex graph: {len(edges)} vertices, {len(line_edges)} edges")
    return build_graph(len(edges), line_edges, labels=vertex_labels, family=family)


def closed_neighborhood(g: Graph, v: int) -> FrozenSet[int]:
    """N[v] = {v} together with its neighbors"""
    g._check_vertex(v)
    return frozenset(g.adjacency[v]) | {v}
