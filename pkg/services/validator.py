"""validator.py - Proper, equitable and dominator checks for a coloring"""

from collections import Counter
from typing import List, Set, Tuple

import numpy as np
from loguru import logger

from graphs.coloring import Coloring, ValidationReport
from graphs.models import Edge, Graph
from utils.exceptions import SizeMismatch, VertexOutOfRange
from utils.helpers import FormatHelper


def _check_cover(g: Graph, c: Coloring):
    if c.n != g.n:
        raise SizeMismatch(expected=g.n, got=c.n)


def sizes_by_class(c: Coloring) -> np.ndarray:
    """|V_j| for j = 1..k, in colour order"""
    return np.bincount(np.asarray(c.colors, dtype=np.int64), minlength=c.k + 1)[1:]


def class_sizes(c: Coloring) -> List[int]:
    """Multiset of class sizes, ascending"""
    return sorted(int(size) for size in sizes_by_class(c))


def is_proper(g: Graph, c: Coloring) -> Tuple[bool, List[Edge]]:
    """True iff no edge is monochromatic; also returns every monochromatic edge"""
    _check_cover(g, c)
    clashes = [(u, v) for u, v in g.edges() if c.colors[u] == c.colors[v]]
    return not clashes, clashes


def is_equitable(c: Coloring) -> bool:
    """Class sizes differ by at most one"""
    sizes = sizes_by_class(c)
    if sizes.size == 0:
        return True
    return int(sizes.max() - sizes.min()) <= 1


def dominated_classes(g: Graph, c: Coloring, v: int) -> Set[int]:
    """Colours j whose whole class lies inside N[v]"""
    _check_cover(g, c)
    if not 0 <= v < g.n:
        raise VertexOutOfRange(v, g.n)
    closed = g.closed_masks[v]
    return {j + 1 for j, mask in enumerate(c.class_masks()) if mask & ~closed == 0}


def undominated_vertices(g: Graph, c: Coloring) -> List[int]:
    """Vertices whose closed neighborhood contains no full colour class"""
    _check_cover(g, c)
    masks = c.class_masks()
    return [
        v for v in range(g.n)
        if not any(mask & ~g.closed_masks[v] == 0 for mask in masks)
    ]


def validate_edc(g: Graph, c: Coloring) -> ValidationReport:
    """Full equitable dominator check with witnesses"""
    proper, clashes = is_proper(g, c)
    undominated = undominated_vertices(g, c)
    report = ValidationReport(
        proper=proper,
        monochromatic_edges=clashes,
        equitable=is_equitable(c),
        class_sizes=class_sizes(c),
        dominator=not undominated,
        undominated_vertices=undominated,
    )
    if not report.overall:
        logger.debug(
            f"Coloring with {c.k} colors rejected: proper={report.proper} "
            f"equitable={report.equitable} dominator={report.dominator} "
            f"sizes={FormatHelper.format_sizes(Counter(report.class_sizes))}"
        )
    return report
