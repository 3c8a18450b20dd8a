"""cliques.py - Exact clique number by branch and bound"""

from typing import List, Optional, Tuple

from loguru import logger

from config.settings import Settings
from graphs.models import Graph
from utils.exceptions import BudgetExceeded, InvalidGraph


def _greedy_color_bound(candidates: int, masks: Tuple[int, ...]) -> List[Tuple[int, int]]:
    """Greedy colouring of the candidate set; (vertex, colour) in ascending colour.

    A vertex with colour c can extend the current clique by at most c more.
    """
    result: List[Tuple[int, int]] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            v = (available & -available).bit_length() - 1
            available &= ~masks[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            result.append((v, color))
    return result


def clique_number(g: Graph, max_nodes: Optional[int] = None) -> int:
    """ω(g) via bitset branch and bound with greedy-colouring pruning"""
    if g.n == 0:
        raise InvalidGraph("Clique number of the empty graph is undefined")

    limit = max_nodes or Settings.DEFAULT_MAX_NODES
    masks = g.adjacency_masks
    best = 1
    nodes = 0

    def expand(size: int, candidates: int):
        nonlocal best, nodes
        for v, bound in reversed(_greedy_color_bound(candidates, masks)):
            if size + bound <= best:
                return
            nodes += 1
            if nodes > limit:
                raise BudgetExceeded(lower=best, upper=g.n, nodes=nodes)
            inner = candidates & masks[v]
            if inner:
                expand(size + 1, inner)
            elif size + 1 > best:
                best = size + 1
            candidates &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    logger.debug(f"Clique number {best} on {g.n} vertices after {nodes} nodes")
    return best
