"""Exact EDCN, decision search and chromatic number"""

import pytest
from hypothesis import given, settings

from graphs.families import FamilyInstance, generate_line
from graphs.models import build_graph
from services.constructive import formula_edcn
from services.solver import (
    SolverBudget, SolverOptions, chromatic_number, edcn_decision, edcn_exact,
)
from services.validator import validate_edc
from utils.exceptions import BudgetExceeded, InvalidGraph, InvalidParams
from tests.conftest import brute_force_edcn, random_graph_corpus, small_graphs


def complete(n: int):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestDecision:
    def test_cycle_needs_four(self, cycle6):
        assert edcn_decision(cycle6, 3) is None
        witness = edcn_decision(cycle6, 4)
        assert witness is not None
        assert validate_edc(cycle6, witness).overall

    def test_k_out_of_range(self, cycle6):
        with pytest.raises(InvalidParams):
            edcn_decision(cycle6, 7)
        with pytest.raises(InvalidParams):
            edcn_decision(cycle6, 0)

    def test_empty_graph(self):
        with pytest.raises(InvalidGraph):
            edcn_decision(build_graph(0, []), 1)

    def test_budget_reports_clique_lower_bound(self):
        # ω(K6) takes exactly six clique nodes; a witness needs seven search nodes
        with pytest.raises(BudgetExceeded) as info:
            edcn_decision(complete(6), 6, SolverBudget(max_nodes=6))
        assert info.value.lower == 6
        assert info.value.upper == 6


class TestExact:
    def test_single_vertex(self):
        result = edcn_exact(build_graph(1, []))
        assert result.value == 1
        assert result.witness.colors == (1,)

    def test_cycle(self, cycle6):
        result = edcn_exact(cycle6)
        assert result.value == 4
        assert result.refuted == [2, 3]
        assert result.lower_bound_used == 2

    def test_edgeless_graph_needs_singletons(self):
        assert edcn_exact(build_graph(4, [])).value == 4

    def test_complete_graph(self):
        assert edcn_exact(complete(5)).value == 5

    @pytest.mark.parametrize("name, params, value", [
        ("friendship", {"t": 2}, 4),
        ("friendship", {"t": 3}, 6),
        ("kab", {"a": 2, "b": 2}, 2),
        ("kab", {"a": 2, "b": 3}, 3),
        ("kab", {"a": 3, "b": 2}, 3),
    ])
    def test_family_line_graphs(self, name, params, value):
        g = generate_line(FamilyInstance.of(name, **params))
        result = edcn_exact(g)
        assert result.value == value
        assert validate_edc(g, result.witness).overall

    @pytest.mark.parametrize("t", [4, 5, 6, 7])
    def test_wheel_needs_t_colors(self, t):
        g = generate_line(FamilyInstance.of("wheel", t=t))
        result = edcn_exact(g)
        assert result.value == t
        assert validate_edc(g, result.witness).overall

    @pytest.mark.parametrize("t, value", [(3, 4), (4, 5), (5, 7), (6, 8)])
    def test_sunlet_matches_closed_form(self, t, value):
        instance = FamilyInstance.of("sunlet", t=t)
        assert edcn_exact(generate_line(instance)).value == value == formula_edcn(instance)

    @pytest.mark.parametrize("a", [2, 3, 4])
    @pytest.mark.parametrize("b", [2, 3, 4])
    def test_bistar_needs_one_more_than_larger_star(self, a, b):
        instance = FamilyInstance.of("bistar", a=a, b=b)
        assert edcn_exact(generate_line(instance)).value == max(a, b) + 1 == formula_edcn(instance)

    def test_kab_three_three_exceeds_closed_form(self):
        instance = FamilyInstance.of("kab", a=3, b=3)
        assert formula_edcn(instance) == 3
        assert edcn_exact(generate_line(instance)).value == 5

    def test_result_json(self, cycle6):
        data = edcn_exact(cycle6).to_dict()
        assert list(data) == ["value", "witness", "nodes_explored", "lower_bound_used", "time_ms"]
        assert data["value"] == 4

    def test_budget_reports_bounds(self):
        g = generate_line(FamilyInstance.of("sunlet", t=5))
        with pytest.raises(BudgetExceeded) as info:
            edcn_exact(g, SolverBudget(max_nodes=5))
        assert info.value.details["upper"] == g.n
        assert 1 <= info.value.details["lower"] <= g.n

    def test_invalid_budget(self):
        with pytest.raises(InvalidParams):
            SolverBudget(max_nodes=0)

    def test_parallel_matches_sequential(self, cycle6):
        result = edcn_exact(cycle6, options=SolverOptions(jobs=2))
        assert result.value == 4
        assert validate_edc(cycle6, result.witness).overall

    def test_parallel_workers_share_node_budget(self):
        # 10 vertices need 11 search nodes for any witness, so 8 nodes must run out
        g = generate_line(FamilyInstance.of("sunlet", t=5))
        with pytest.raises(BudgetExceeded) as info:
            edcn_exact(g, SolverBudget(max_nodes=8), SolverOptions(jobs=2))
        assert info.value.nodes <= 8

    @given(small_graphs(max_vertices=7))
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, g):
        assert edcn_exact(g).value == brute_force_edcn(g)

    @given(small_graphs(max_vertices=9))
    @settings(max_examples=60, deadline=None)
    def test_pruning_does_not_change_value(self, g):
        pruned = edcn_exact(g).value
        unpruned = edcn_exact(g, options=SolverOptions(prune_dominator=False)).value
        assert pruned == unpruned

    @given(small_graphs(max_vertices=7))
    @settings(max_examples=40, deadline=None)
    def test_witness_is_valid_and_bounded(self, g):
        result = edcn_exact(g)
        assert validate_edc(g, result.witness).overall
        assert chromatic_number(g).value <= result.value <= g.n


class TestChromaticNumber:
    def test_odd_cycle(self):
        assert chromatic_number(build_graph(5, [(i, (i + 1) % 5) for i in range(5)])).value == 3

    def test_even_cycle(self, cycle6):
        assert chromatic_number(cycle6).value == 2

    def test_wheel_line_graph(self):
        assert chromatic_number(generate_line(FamilyInstance.of("wheel", t=5))).value == 5

    def test_complete_bipartite_line_graph(self):
        assert chromatic_number(generate_line(FamilyInstance.of("kab", a=3, b=4))).value == 4

    def test_witness_is_proper(self):
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
        result = chromatic_number(g)
        assert result.value == 3
        assert validate_edc(g, result.witness).proper


@pytest.mark.slow
@pytest.mark.parametrize("t, value", [(4, 7), (5, 9)])
def test_helm_oracle(t, value):
    instance = FamilyInstance.of("helm", t=t)
    assert edcn_exact(generate_line(instance)).value == value == formula_edcn(instance)


@pytest.mark.slow
class TestNineVertexCorpus:
    CORPUS = random_graph_corpus(20, 8, 9)

    @pytest.mark.parametrize("index", range(20))
    def test_matches_brute_force(self, index):
        g = self.CORPUS[index]
        assert edcn_exact(g).value == brute_force_edcn(g)

    @pytest.mark.parametrize("index", range(20))
    def test_pruning_does_not_change_value(self, index):
        g = self.CORPUS[index]
        assert edcn_exact(g).value == edcn_exact(g, options=SolverOptions(prune_dominator=False)).value
