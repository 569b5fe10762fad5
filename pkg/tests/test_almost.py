"""Almost-clique/IS structures and the acceptable-graph search."""

import itertools
from fractions import Fraction

import pytest

from cliqueis import (
    AlmostStructure,
    CLIQUE,
    EpsMSystem,
    Graph,
    INDEPENDENT_SET,
    ParameterError,
    check_almost,
    check_intersection_bound,
    find_acceptable_graph,
    find_acceptable_independent_set,
    gen_gnp,
    gen_planted,
    max_clique,
    max_clique_bound_in_almost_is,
    max_independent_set,
    max_is_bound_in_almost_clique,
    system_size,
)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


class TestDegreeCondition:
    def test_complete_graph_passes_loose_eps(self):
        ok, violators = check_almost(complete(10), range(10), CLIQUE, 0.1)
        assert ok and violators == ()

    def test_one_missing_edge_names_both_endpoints(self):
        g = Graph.from_edges(
            10, [p for p in itertools.combinations(range(10), 2) if p != (3, 7)]
        )
        # 0.85 * 10 = 8.5: only the endpoints of the missing edge (degree
        # 8) fall short, the rest sit at 9
        ok, violators = check_almost(g, range(10), CLIQUE, 0.15)
        assert not ok
        assert violators == (3, 7)
        # at 0.05 the threshold is 9.5, above every degree in the set
        ok, violators = check_almost(g, range(10), CLIQUE, 0.05)
        assert not ok
        assert violators == tuple(range(10))

    def test_edgeless_is_an_almost_is_for_any_eps(self):
        ok, _ = check_almost(Graph.from_edges(6, []), range(6), INDEPENDENT_SET, 0.01)
        assert ok

    def test_float_eps_goes_through_decimal_form(self):
        # 0.1 must mean exactly 1/10: degree 9 >= (1 - 1/10) * 10 holds with equality
        ok, _ = check_almost(complete(10), range(10), CLIQUE, 0.1)
        assert ok

    def test_bad_kind(self):
        with pytest.raises(ParameterError):
            check_almost(complete(3), range(3), "path", 0.5)


class TestContainmentBounds:
    def test_is_bound_formula(self):
        c = AlmostStructure(CLIQUE, frozenset(range(40)), Fraction(1, 20))
        assert max_is_bound_in_almost_clique(c) == 2

    def test_true_clique_at_eps_zero(self):
        c = AlmostStructure(CLIQUE, frozenset(range(5)), Fraction(0))
        assert max_is_bound_in_almost_clique(c) == 0

    def test_clique_bound_in_almost_is(self):
        i = AlmostStructure(INDEPENDENT_SET, frozenset(range(40)), Fraction(1, 20))
        assert max_clique_bound_in_almost_is(i) == 3

    def test_kind_checked(self):
        i = AlmostStructure(INDEPENDENT_SET, frozenset(range(4)), Fraction(1, 2))
        with pytest.raises(ParameterError):
            max_is_bound_in_almost_clique(i)

    def test_oracle_never_beats_the_is_bound(self):
        for seed in range(5):
            g, _ = gen_planted(60, 0.3, 15, "clique", seed)
            res = find_acceptable_graph(g, 15, Fraction(1, 4))
            assert res.found
            st = res.structure
            sub, _ = g.induced_subgraph(st.vertices)
            found, _ = max_independent_set(sub)
            assert found <= max_is_bound_in_almost_clique(st)


class TestIntersectionBound:
    def test_disjoint_pair(self):
        c = AlmostStructure(CLIQUE, frozenset({0, 1, 2}), Fraction(1, 3))
        i = AlmostStructure(INDEPENDENT_SET, frozenset({3, 4, 5}), Fraction(1, 3))
        assert check_intersection_bound(c, i)

    def test_true_clique_and_is_share_at_most_one(self):
        # overlap 1 <= eps(|C| + |I|) whenever that value reaches 1
        c = AlmostStructure(CLIQUE, frozenset({0, 1, 2, 3}), Fraction(1, 4))
        i = AlmostStructure(INDEPENDENT_SET, frozenset({3, 4, 5, 6}), Fraction(1, 4))
        assert check_intersection_bound(c, i)

    def test_violating_pair_detected(self):
        members = frozenset(range(6))
        c = AlmostStructure(CLIQUE, members, Fraction(1, 100))
        i = AlmostStructure(INDEPENDENT_SET, members, Fraction(1, 100))
        assert not check_intersection_bound(c, i)

    def test_kind_order_enforced(self):
        c = AlmostStructure(CLIQUE, frozenset({0}), Fraction(1, 2))
        with pytest.raises(ParameterError):
            check_intersection_bound(c, c)


class TestSystems:
    def test_disjoint_families_meet_the_bound(self):
        eps = Fraction(1, 10)
        sys = EpsMSystem(
            cliques=(
                AlmostStructure(CLIQUE, frozenset(range(10)), eps),
                AlmostStructure(CLIQUE, frozenset(range(10, 20)), eps),
            ),
            iss=(
                AlmostStructure(INDEPENDENT_SET, frozenset(range(20, 30)), eps),
                AlmostStructure(INDEPENDENT_SET, frozenset(range(30, 40)), eps),
            ),
            eps=eps,
            m=2,
        )
        assert system_size(sys) == 40

    def test_shared_vertex_between_families(self):
        eps = Fraction(1, 5)
        sys = EpsMSystem(
            cliques=(AlmostStructure(CLIQUE, frozenset(range(5)), eps),),
            iss=(AlmostStructure(INDEPENDENT_SET, frozenset(range(4, 9)), eps),),
            eps=eps,
            m=1,
        )
        # union 9 >= (1 - 1/5) * 10
        assert system_size(sys) == 9

    def test_impossible_overlap_fails_the_check(self):
        eps = Fraction(1, 5)
        members = frozenset(range(5))
        sys = EpsMSystem(
            cliques=(AlmostStructure(CLIQUE, members, eps),),
            iss=(AlmostStructure(INDEPENDENT_SET, members, eps),),
            eps=eps,
            m=1,
        )
        with pytest.raises(AssertionError):
            system_size(sys)

    def test_family_disjointness_enforced(self):
        eps = Fraction(1, 4)
        overlapping = (
            AlmostStructure(CLIQUE, frozenset({0, 1}), eps),
            AlmostStructure(CLIQUE, frozenset({1, 2}), eps),
        )
        with pytest.raises(ValueError, match="disjoint"):
            EpsMSystem(cliques=overlapping, iss=(), eps=eps, m=2)

    def test_order_cap_enforced(self):
        eps = Fraction(1, 4)
        with pytest.raises(ValueError, match="m="):
            EpsMSystem(
                cliques=(AlmostStructure(CLIQUE, frozenset({0}), eps),) * 1
                + (AlmostStructure(CLIQUE, frozenset({1}), eps),),
                iss=(),
                eps=eps,
                m=1,
            )


class TestAcceptableSearch:
    def test_complete_graph_is_returned_whole(self):
        res = find_acceptable_graph(complete(10), 10, 0.2)
        assert res.found
        assert res.structure.vertices == frozenset(range(10))

    def test_edgeless_graph_has_no_clique(self):
        res = find_acceptable_graph(Graph.from_edges(20, []), 5, 0.4)
        assert not res.found

    def test_eps_floor_rejection(self):
        with pytest.raises(ParameterError, match="2/k"):
            find_acceptable_graph(complete(10), 10, Fraction(1, 10))
        with pytest.raises(ParameterError):
            find_acceptable_graph(complete(10), 10, Fraction(3, 2))
        with pytest.raises(ParameterError):
            find_acceptable_graph(complete(10), 0, Fraction(1, 2))

    def test_min_degree_ties_break_to_lowest_id(self):
        # degrees 1,2,2,1: vertex 0 must be peeled first, leaving {1,2,3}
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        res = find_acceptable_graph(g, 3, Fraction(2, 3))
        assert res.found
        assert res.structure.vertices == frozenset({1, 2, 3})

    def test_planted_cliques_are_always_found(self):
        for seed in range(25):
            g, _ = gen_planted(100, 0.3, 20, "clique", seed)
            res = find_acceptable_graph(g, 20, Fraction(1, 4))
            assert res.found and res.structure.size >= 20
            ok, _ = check_almost(g, res.structure.vertices, CLIQUE, Fraction(1, 4))
            assert ok

    def test_deterministic(self):
        g, _ = gen_planted(80, 0.25, 15, "clique", 42)
        a = find_acceptable_graph(g, 15, Fraction(1, 4))
        b = find_acceptable_graph(g, 15, Fraction(1, 4))
        assert a.structure.vertices == b.structure.vertices
        assert a.calls == b.calls

    def test_dual_search_flips_the_kind(self):
        g, planted = gen_planted(80, 0.7, 15, "independent_set", 9)
        res = find_acceptable_independent_set(g, 15, Fraction(1, 4))
        assert res.found
        assert res.structure.kind == INDEPENDENT_SET
        ok, _ = check_almost(g, res.structure.vertices, INDEPENDENT_SET, Fraction(1, 4))
        assert ok

    def test_no_clique_answers_agree_with_the_exact_oracle(self):
        answered = 0
        for seed in range(8):
            g = gen_gnp(60, 0.2, seed)
            res = find_acceptable_graph(g, 15, Fraction(1, 4))
            if not res.found:
                answered += 1
                assert max_clique(g)[0] < 15
        assert answered == 8  # sparse instances this size never reach 15

    def test_call_count_stays_inside_the_recurrence_envelope(self):
        # T(s) <= 1 + T(s-1) + T(floor((1-eps)s) + 1), T(s < k) = 1
        eps = Fraction(1, 4)
        k = 12

        def envelope(s: int, cache={}) -> int:
            if s < k:
                return 1
            if s not in cache:
                shrunk = int((1 - eps) * s) + 1
                cache[s] = 1 + envelope(s - 1) + envelope(min(shrunk, s - 1))
            return cache[s]

        for seed in range(10):
            g, _ = gen_planted(48, 0.3, k, "clique", seed)
            res = find_acceptable_graph(g, k, eps)
            assert res.calls <= envelope(g.n)
