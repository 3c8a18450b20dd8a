"""families.py - Deterministic generators for the graph families and their line graphs"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from loguru import logger

from graphs.models import Edge, FamilyTag, Graph, LabelTag, VertexLabel, build_graph, line_graph
from utils.exceptions import InvalidGraph, InvalidParams
from utils.helpers import FormatHelper, IndexHelper

EdgeLabels = Dict[Edge, VertexLabel]


class Family(str, Enum):
    """Graph families; values are the CLI names"""

    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    BISTAR = "bistar"
    COMPLETE_BIPARTITE = "kab"
    WHEEL = "wheel"
    HELM = "helm"
    GEAR = "gear"
    SUNLET = "sunlet"
    FRIENDSHIP = "friendship"
    FLOWER = "flower"
    DOUBLE_WHEEL = "doublewheel"


FAMILY_NAMES = [family.value for family in Family]
TWO_PARAMETER = {Family.BISTAR, Family.COMPLETE_BIPARTITE}
SIZED_BY_N = {Family.PATH, Family.CYCLE}

# Smallest parameter each generator accepts
GENERATOR_MINIMUM: Dict[Family, int] = {
    Family.PATH: 2,
    Family.CYCLE: 3,
    Family.STAR: 1,
    Family.BISTAR: 2,
    Family.COMPLETE_BIPARTITE: 1,
    Family.WHEEL: 3,
    Family.HELM: 3,
    Family.GEAR: 3,
    Family.SUNLET: 3,
    Family.FRIENDSHIP: 1,
    Family.FLOWER: 3,
    Family.DOUBLE_WHEEL: 3,
}


@dataclass(frozen=True)
class FamilyInstance:
    """A family together with its size parameters"""

    family: Family
    t: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    n: Optional[int] = None

    @staticmethod
    def of(name: str, t: Optional[int] = None, a: Optional[int] = None,
           b: Optional[int] = None, n: Optional[int] = None) -> "FamilyInstance":
        """Build from CLI-style arguments; path/cycle accept t as a synonym for n"""
        try:
            family = Family(name)
        except ValueError:
            raise InvalidParams(name, "unknown family")
        if family in SIZED_BY_N:
            instance = FamilyInstance(family, n=n if n is not None else t)
        elif family in TWO_PARAMETER:
            instance = FamilyInstance(family, a=a, b=b)
        else:
            instance = FamilyInstance(family, t=t)
        instance.validate()
        return instance

    @property
    def params(self) -> Dict[str, int]:
        if self.family in TWO_PARAMETER:
            return {"a": self.a, "b": self.b}
        if self.family in SIZED_BY_N:
            return {"n": self.n}
        return {"t": self.t}

    def describe(self) -> str:
        return FormatHelper.format_params(self.params)

    def validate(self):
        """Check the generator's parameter range"""
        minimum = GENERATOR_MINIMUM[self.family]
        for key, value in self.params.items():
            if value is None:
                raise InvalidParams(self.family.value, f"missing parameter {key}")
            if value < minimum:
                raise InvalidParams(self.family.value, f"{key}={value} must be >= {minimum}")

    def to_tag(self, line: bool = False) -> FamilyTag:
        return FamilyTag(self.family.value, tuple(self.params.items()), line)

    @staticmethod
    def from_tag(tag: FamilyTag) -> "FamilyInstance":
        return FamilyInstance.of(tag.name, **dict(tag.params))

    def to_dict(self) -> Dict[str, object]:
        return {"family": self.family.value, "params": self.params}


# =============================================================================
# EDGE BUILDERS: vertex count plus the labelled edge list of each family
# =============================================================================

def _put(labels: EdgeLabels, u: int, v: int, label: VertexLabel):
    labels[(min(u, v), max(u, v))] = label


def _path(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    labels: EdgeLabels = {}
    for i in range(1, spec.n):
        _put(labels, i - 1, i, VertexLabel(LabelTag.EDGE, i - 1, i))
    return spec.n, labels


def _cycle(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    labels: EdgeLabels = {}
    for i in range(spec.n):
        u, v = sorted((i, (i + 1) % spec.n))
        _put(labels, u, v, VertexLabel(LabelTag.EDGE, u, v))
    return spec.n, labels


def _star(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    labels: EdgeLabels = {}
    for i in range(1, spec.t + 1):
        _put(labels, 0, i, VertexLabel(LabelTag.SPOKE, i))
    return spec.t + 1, labels


def _bistar(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    # centres u=0 and v=1; leaves u_i = 1+i, v_i = a+1+i
    a, b = spec.a, spec.b
    labels: EdgeLabels = {}
    _put(labels, 0, 1, VertexLabel(LabelTag.BRIDGE, 1))
    for i in range(1, a + 1):
        _put(labels, 0, 1 + i, VertexLabel(LabelTag.SPOKE, i))
    for i in range(1, b + 1):
        _put(labels, 1, a + 1 + i, VertexLabel(LabelTag.RIM, i))
    return a + b + 2, labels


def _complete_bipartite(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    a, b = spec.a, spec.b
    labels: EdgeLabels = {}
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            _put(labels, i - 1, a + j - 1, VertexLabel(LabelTag.GRID_CELL, i, j))
    return a + b, labels


def _wheel(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    t = spec.t
    labels: EdgeLabels = {}
    for i in range(1, t + 1):
        _put(labels, 0, i, VertexLabel(LabelTag.SPOKE, i))
        _put(labels, i, IndexHelper.wrap(i + 1, t), VertexLabel(LabelTag.RIM, i))
    return t + 1, labels


def _helm(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    t = spec.t
    n, labels = _wheel(spec)
    for i in range(1, t + 1):
        _put(labels, i, t + i, VertexLabel(LabelTag.PENDANT, i))
    return n + t, labels


def _gear(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    # v_k' = t+k subdivides the rim edge v_k v_{k+1}
    t = spec.t
    labels: EdgeLabels = {}
    for k in range(1, t + 1):
        _put(labels, 0, k, VertexLabel(LabelTag.SPOKE, k))
        _put(labels, k, t + k, VertexLabel(LabelTag.RIM, 2 * k - 1))
        _put(labels, t + k, IndexHelper.wrap(k + 1, t), VertexLabel(LabelTag.RIM, 2 * k))
    return 2 * t + 1, labels


def _sunlet(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    # cycle v_i = i-1, pendant vertices u_i = t+i-1
    t = spec.t
    labels: EdgeLabels = {}
    for i in range(1, t + 1):
        _put(labels, i - 1, IndexHelper.wrap(i + 1, t) - 1, VertexLabel(LabelTag.SPOKE, i))
        _put(labels, i - 1, t + i - 1, VertexLabel(LabelTag.RIM, i))
    return 2 * t, labels


def _friendship(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    # triangle i is v=0, u_i = 2i-1, v_i = 2i
    t = spec.t
    labels: EdgeLabels = {}
    for i in range(1, t + 1):
        _put(labels, 0, 2 * i - 1, VertexLabel(LabelTag.SPOKE, i))
        _put(labels, 2 * i - 1, 2 * i, VertexLabel(LabelTag.RIM, i))
        _put(labels, 0, 2 * i, VertexLabel(LabelTag.PENDANT, i))
    return 2 * t + 1, labels


def _flower(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    # helm with every pendant vertex u_i = t+i joined back to the centre
    t = spec.t
    labels: EdgeLabels = {}
    for i in range(1, t + 1):
        _put(labels, 0, i, VertexLabel(LabelTag.SPOKE, i))
        _put(labels, 0, t + i, VertexLabel(LabelTag.RIM, i))
        _put(labels, i, IndexHelper.wrap(i + 1, t), VertexLabel(LabelTag.PENDANT, i))
        _put(labels, i, t + i, VertexLabel(LabelTag.OUTER_RIM, i))
    return 2 * t + 1, labels


def _double_wheel(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    # inner cycle v_i = i, outer cycle u_i = t+i, both joined to v=0
    t = spec.t
    labels: EdgeLabels = {}
    for i in range(1, t + 1):
        nxt = IndexHelper.wrap(i + 1, t)
        _put(labels, 0, i, VertexLabel(LabelTag.SPOKE, i))
        _put(labels, 0, t + i, VertexLabel(LabelTag.RIM, i))
        _put(labels, i, nxt, VertexLabel(LabelTag.INNER_RIM, i))
        _put(labels, t + i, t + nxt, VertexLabel(LabelTag.OUTER_RIM, i))
    return 2 * t + 1, labels


_BUILDERS: Dict[Family, Callable[[FamilyInstance], Tuple[int, EdgeLabels]]] = {
    Family.PATH: _path,
    Family.CYCLE: _cycle,
    Family.STAR: _star,
    Family.BISTAR: _bistar,
    Family.COMPLETE_BIPARTITE: _complete_bipartite,
    Family.WHEEL: _wheel,
    Family.HELM: _helm,
    Family.GEAR: _gear,
    Family.SUNLET: _sunlet,
    Family.FRIENDSHIP: _friendship,
    Family.FLOWER: _flower,
    Family.DOUBLE_WHEEL: _double_wheel,
}


def edge_labels(spec: FamilyInstance) -> Tuple[int, EdgeLabels]:
    """Vertex count and labelled edges of the family graph"""
    spec.validate()
    return _BUILDERS[spec.family](spec)


def generate(spec: FamilyInstance) -> Graph:
    """The family graph itself"""
    n, labels = edge_labels(spec)
    g = build_graph(n, labels.keys(), family=spec.to_tag(line=False))
    logger.debug(f"Generated {spec.family.value} {spec.describe()}: {g.n} vertices, {g.edge_count()} edges")
    return g


def generate_line(spec: FamilyInstance) -> Graph:
    """Line graph of the family graph, vertices labelled with the edge symbols"""
    n, labels = edge_labels(spec)
    base = build_graph(n, labels.keys())
    return line_graph(base, labels=labels, family=spec.to_tag(line=True))


def family_of(g: Graph) -> FamilyInstance:
    """The family instance a tagged graph claims to be, once its edges are checked against it"""
    if g.family is None:
        raise InvalidGraph("Graph carries no family tag")
    spec = FamilyInstance.from_tag(g.family)
    expected = generate_line(spec) if g.family.line else generate(spec)
    if g.n != expected.n or g.edges() != expected.edges():
        raise InvalidGraph(
            f"Graph ({g.n} vertices, {g.edge_count()} edges) is not {spec.family.value} {spec.describe()}"
            f"{' line graph' if g.family.line else ''} ({expected.n} vertices, {expected.edge_count()} edges)"
        )
    if g.family.line and g.labels is not None and g.labels != expected.labels:
        raise InvalidGraph(f"Vertex labels do not match {spec.family.value} {spec.describe()} line graph")
    return spec


def labelled_line_graph(g: Graph) -> Graph:
    """line_graph(g), keeping the family's edge symbols when g is a tagged family graph"""
    if g.family is None or g.family.line:
        return line_graph(g)
    spec = family_of(g)
    _, labels = edge_labels(spec)
    return line_graph(g, labels=labels, family=spec.to_tag(line=True))
