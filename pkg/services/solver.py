"""solver.py - Exact chromatic number and equitable dominator chromatic number"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from config.settings import Settings
from graphs.cliques import clique_number
from graphs.coloring import Coloring
from graphs.models import Graph
from utils.exceptions import BudgetExceeded, InvalidGraph, InvalidParams
from utils.helpers import FormatHelper


@dataclass(frozen=True)
class SolverBudget:
    """Node and wall-clock limits for one solver run"""

    max_nodes: int = Settings.DEFAULT_MAX_NODES
    max_time: float = Settings.DEFAULT_MAX_TIME_S

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_time <= 0:
            raise InvalidParams("budget", "max_nodes and max_time must be positive")


@dataclass(frozen=True)
class SolverOptions:
    prune_dominator: bool = True
    jobs: int = Settings.DEFAULT_JOBS


@dataclass
class SolverResult:
    """Exact value with a witness, search statistics and the refuted k values"""

    value: int
    witness: Coloring
    nodes_explored: int
    lower_bound_used: int
    time_s: float
    refuted: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "witness": self.witness.to_dict(),
            "nodes_explored": self.nodes_explored,
            "lower_bound_used": self.lower_bound_used,
            "time_ms": FormatHelper.format_duration_ms(self.time_s),
        }


class _BudgetHit(Exception):
    """Raised inside a search when the clock runs out"""


class SearchClock:
    """Shared node counter and deadline for every search in one run"""

    TIME_CHECK_INTERVAL = 1024

    def __init__(self, budget: SolverBudget):
        self.budget = budget
        self.started = time.monotonic()
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _BudgetHit()
        if self.nodes % self.TIME_CHECK_INTERVAL == 0 and self.elapsed() > self.budget.max_time:
            raise _BudgetHit()

    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def remaining_time(self) -> float:
        return max(self.budget.max_time - self.elapsed(), 1e-3)

    def remaining_nodes(self) -> int:
        return max(self.budget.max_nodes - self.nodes, 0)


# =============================================================================
# EQUITABLE DOMINATOR SEARCH
# =============================================================================

class EquitableDominatorSearch:
    """Backtracking over equitable k-partitions with dominator pruning.

    Vertices are coloured in (-degree, index) order and colours are tried in
    ascending order; a new colour is only opened as the next unused one. A
    class holds at most ceil(n/k) vertices and at most n mod k classes may
    reach that size. A vertex w stays viable while some used class lies
    inside N[w], or a new class can still be opened at an uncoloured vertex
    of N[w]; a branch with a non-viable vertex is cut.
    """

    def __init__(self, g: Graph, k: int, clock: SearchClock, prune_dominator: bool = True):
        self.g = g
        self.n = g.n
        self.k = k
        self.clock = clock
        self.prune_dominator = prune_dominator

        degrees = g.degrees()
        self.order = sorted(range(self.n), key=lambda v: (-int(degrees[v]), v))
        self.q, self.r = divmod(self.n, k)
        self.cap = self.q + (1 if self.r else 0)
        self.adj = g.adjacency_masks
        self.closed = g.closed_masks

        self.colors = [0] * self.n
        self.class_mask = [0] * k
        self.size = [0] * k
        self.used = 0
        self.big = 0
        self.deficit = k * self.q
        self.uncolored = (1 << self.n) - 1

    def run(self) -> Optional[List[int]]:
        """Colours 1..k per vertex for the first witness, or None"""
        if self.k < 1 or self.k > self.n:
            return None
        return list(self.colors) if self._search(0) else None

    def _viable(self) -> bool:
        can_open = self.used < self.k
        masks = self.class_mask[:self.used]
        for w in range(self.n):
            closed = self.closed[w]
            if can_open and closed & self.uncolored:
                continue
            if any(mask & ~closed == 0 for mask in masks):
                continue
            return False
        return True

    def _search(self, pos: int) -> bool:
        self.clock.tick()
        if pos == self.n:
            return self._viable()

        v = self.order[pos]
        bit = 1 << v
        remaining = self.n - pos - 1
        for c in range(min(self.used + 1, self.k)):
            if self.adj[v] & self.class_mask[c]:
                continue
            s = self.size[c]
            if s >= self.cap:
                continue
            grows_big = bool(self.r) and s == self.q
            if grows_big and self.big >= self.r:
                continue
            deficit = self.deficit - (1 if s < self.q else 0)
            if deficit > remaining:
                continue

            opened = c == self.used
            previous_deficit = self.deficit
            self.colors[v] = c + 1
            self.class_mask[c] |= bit
            self.size[c] += 1
            self.uncolored &= ~bit
            self.used += opened
            self.big += grows_big
            self.deficit = deficit

            if (not self.prune_dominator or self._viable()) and self._search(pos + 1):
                return True

            self.colors[v] = 0
            self.class_mask[c] &= ~bit
            self.size[c] -= 1
            self.uncolored |= bit
            self.used -= opened
            self.big -= grows_big
            self.deficit = previous_deficit
        return False


def _decide(g: Graph, k: int, clock: SearchClock, prune_dominator: bool) -> Optional[Coloring]:
    colors = EquitableDominatorSearch(g, k, clock, prune_dominator).run()
    return Coloring(k, tuple(colors)) if colors is not None else None


def _decide_worker(g: Graph, k: int, max_nodes: int, max_time: float,
                   prune_dominator: bool) -> Tuple[str, Optional[Tuple[int, ...]], int]:
    """Process-pool entry point; returns (status, colours, nodes)"""
    clock = SearchClock(SolverBudget(max_nodes, max_time))
    try:
        colors = EquitableDominatorSearch(g, k, clock, prune_dominator).run()
    except _BudgetHit:
        return "budget", None, max_nodes
    return ("found" if colors is not None else "none"), (tuple(colors) if colors else None), clock.nodes


def _require_vertices(g: Graph):
    if g.n == 0:
        raise InvalidGraph("The solver needs a non-empty graph")


def edcn_decision(g: Graph, k: int, budget: Optional[SolverBudget] = None,
                  options: Optional[SolverOptions] = None) -> Optional[Coloring]:
    """An equitable dominator k-coloring of g, or None if there is none"""
    _require_vertices(g)
    if not 1 <= k <= g.n:
        raise InvalidParams("edcn_decision", f"k={k} outside [1, {g.n}]")
    budget = budget or SolverBudget()
    options = options or SolverOptions()
    clock = SearchClock(budget)
    try:
        witness = _decide(g, k, clock, options.prune_dominator)
    except _BudgetHit:
        logger.warning(f"Decision k={k} ran out of budget after {clock.nodes} nodes")
        raise BudgetExceeded(lower=_lower_bound(g, budget), upper=g.n, nodes=clock.nodes)
    logger.debug(f"Decision k={k}: {'witness' if witness else 'none'} after {clock.nodes} nodes")
    return witness


def _lower_bound(g: Graph, budget: SolverBudget) -> int:
    try:
        return clique_number(g, budget.max_nodes)
    except BudgetExceeded as e:
        logger.warning(f"Clique search ran out of budget; using lower bound {e.lower}")
        return e.lower


def _scan_parallel(g: Graph, omega: int, budget: SolverBudget, options: SolverOptions,
                   clock: SearchClock) -> Tuple[int, Coloring, List[int]]:
    refuted: List[int] = []
    with ProcessPoolExecutor(max_workers=options.jobs) as pool:
        for start in range(omega, g.n + 1, options.jobs):
            batch = list(range(start, min(start + options.jobs, g.n + 1)))
            # Workers split what is left of the node budget
            share = clock.remaining_nodes() // len(batch)
            if share == 0:
                raise BudgetExceeded(lower=start, upper=g.n, nodes=clock.nodes)
            futures = [
                pool.submit(_decide_worker, g, k, share, clock.remaining_time(), options.prune_dominator)
                for k in batch
            ]
            outcomes = [future.result() for future in futures]
            for k, (status, colors, nodes) in zip(batch, outcomes):
                clock.nodes += nodes
                if status == "budget":
                    raise BudgetExceeded(lower=k, upper=g.n, nodes=clock.nodes)
                if status == "found":
                    return k, Coloring(k, colors), refuted
                refuted.append(k)
            if clock.elapsed() > budget.max_time:
                raise BudgetExceeded(lower=batch[-1] + 1, upper=g.n, nodes=clock.nodes)
    raise InvalidGraph("No feasible k found; the all-singleton coloring should always work")


def edcn_exact(g: Graph, budget: Optional[SolverBudget] = None,
               options: Optional[SolverOptions] = None) -> SolverResult:
    """Smallest k admitting an equitable dominator coloring, scanning up from ω(g)"""
    _require_vertices(g)
    budget = budget or SolverBudget()
    options = options or SolverOptions()
    clock = SearchClock(budget)
    omega = _lower_bound(g, budget)

    if options.jobs > 1:
        value, witness, refuted = _scan_parallel(g, omega, budget, options, clock)
    else:
        refuted = []
        value, witness = 0, None
        for k in range(omega, g.n + 1):
            try:
                witness = _decide(g, k, clock, options.prune_dominator)
            except _BudgetHit:
                logger.warning(f"EDCN search ran out of budget at k={k} after {clock.nodes} nodes")
                raise BudgetExceeded(lower=k, upper=g.n, nodes=clock.nodes)
            if witness is not None:
                value = k
                break
            refuted.append(k)
            logger.debug(f"k={k} infeasible ({clock.nodes} nodes so far)")

    result = SolverResult(value, witness, clock.nodes, omega, clock.elapsed(), refuted)
    logger.info(f"EDCN = {value} on {g.n} vertices (omega={omega}, nodes={clock.nodes})")
    return result


# =============================================================================
# CHROMATIC NUMBER
# =============================================================================

def _greedy_dsatur(g: Graph) -> List[int]:
    """DSATUR greedy colouring (0-based colours); an upper bound for χ"""
    colors = [-1] * g.n
    neighbor_colors: List[set] = [set() for _ in range(g.n)]
    uncolored = set(range(g.n))
    while uncolored:
        v = max(uncolored, key=lambda u: (len(neighbor_colors[u]), len(g.adjacency[u]), -u))
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        uncolored.remove(v)
        for u in g.adjacency[v]:
            if u in uncolored:
                neighbor_colors[u].add(c)
    return colors


def chromatic_number(g: Graph, budget: Optional[SolverBudget] = None) -> SolverResult:
    """Exact χ(g) by DSATUR branch and bound, seeded with the greedy bound"""
    _require_vertices(g)
    budget = budget or SolverBudget()
    clock = SearchClock(budget)
    omega = _lower_bound(g, budget)

    best = _greedy_dsatur(g)
    best_k = max(best) + 1

    n = g.n
    degree = [len(nbrs) for nbrs in g.adjacency]
    colors = [-1] * n
    counts = [[0] * n for _ in range(n)]
    saturation = [0] * n

    def pick() -> int:
        chosen = -1
        for v in range(n):
            if colors[v] != -1:
                continue
            if chosen == -1 or (saturation[v], degree[v]) > (saturation[chosen], degree[chosen]):
                chosen = v
        return chosen

    def backtrack(current_k: int, colored: int) -> bool:
        nonlocal best, best_k
        clock.tick()
        if colored == n:
            if current_k < best_k:
                best_k, best = current_k, list(colors)
            return best_k == omega
        v = pick()
        for c in range(min(current_k + 1, best_k - 1)):
            if counts[v][c]:
                continue
            colors[v] = c
            for u in g.adjacency[v]:
                counts[u][c] += 1
                if counts[u][c] == 1:
                    saturation[u] += 1
            done = backtrack(max(current_k, c + 1), colored + 1)
            for u in g.adjacency[v]:
                counts[u][c] -= 1
                if counts[u][c] == 0:
                    saturation[u] -= 1
            colors[v] = -1
            if done:
                return True
        return False

    if best_k > omega:
        try:
            backtrack(0, 0)
        except _BudgetHit:
            logger.warning(f"Chromatic search ran out of budget; value in [{omega}, {best_k}]")
            raise BudgetExceeded(lower=omega, upper=best_k, nodes=clock.nodes)

    witness = Coloring(best_k, tuple(c + 1 for c in best))
    logger.info(f"Chromatic number {best_k} on {n} vertices (omega={omega}, nodes={clock.nodes})")
    return SolverResult(best_k, witness, clock.nodes, omega, clock.elapsed())
