"""Shared fixtures, hypothesis strategies and a brute-force EDCN reference"""

import json
import sys
from pathlib import Path
from typing import Iterator, List, Optional

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st
from loguru import logger

from graphs.coloring import Coloring
from graphs.models import Graph, build_graph
from services.validator import validate_edc

FIXTURES = Path(__file__).parent / "fixtures"
BRUTE_FORCE_MAX_VERTICES = 9
CORPUS_SEED = 20240917


def restricted_growth_strings(n: int) -> Iterator[List[int]]:
    """Every set partition of 0..n-1 as a 1-based restricted growth string"""
    if n == 0:
        yield []
        return
    word = [1] * n

    def extend(pos: int, largest: int):
        if pos == n:
            yield list(word)
            return
        for c in range(1, largest + 2):
            word[pos] = c
            yield from extend(pos + 1, max(largest, c))

    yield from extend(1, 1)


def brute_force_edcn(g: Graph) -> int:
    """Smallest class count over all partitions passing validate_edc"""
    assert g.n <= BRUTE_FORCE_MAX_VERTICES, "brute force is for tiny graphs only"
    best: Optional[int] = None
    for word in restricted_growth_strings(g.n):
        k = max(word)
        if best is not None and k >= best:
            continue
        if validate_edc(g, Coloring(k, tuple(word))).overall:
            best = k
    return best


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@st.composite
def small_graphs(draw, min_vertices: int = 1, max_vertices: int = 7) -> Graph:
    """Random simple graphs on a handful of vertices"""
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def random_graph_corpus(count: int, min_vertices: int, max_vertices: int,
                        seed: int = CORPUS_SEED) -> List[Graph]:
    """Reproducible G(n, p) graphs with n and p drawn per graph"""
    rng = np.random.default_rng(seed)
    corpus = []
    for _ in range(count):
        n = int(rng.integers(min_vertices, max_vertices + 1))
        p = float(rng.uniform(0.15, 0.7))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        keep = rng.random(len(pairs)) < p
        corpus.append(build_graph(n, [pair for pair, kept in zip(pairs, keep) if kept]))
    return corpus


@pytest.fixture(autouse=True)
def quiet_logs():
    """Keep loguru at WARNING during tests"""
    logger.remove()
    logger.add(sys.stderr, level="WARNING")
    yield
    logger.remove()


@pytest.fixture
def load_fixture():
    def _load(name: str) -> dict:
        return json.loads((FIXTURES / name).read_text(encoding="utf-8"))
    return _load


@pytest.fixture
def cycle6() -> Graph:
    return build_graph(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def path3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2)])
