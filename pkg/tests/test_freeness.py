import itertools

import pytest

from operad_forge.trees import TreeError, enumerate_trees, parse_tree
from operad_forge.set_operads import compose_max, compose_min, compose_nap
from operad_forge.freeness import (
    OperationTree,
    Witness,
    count_indecomposables,
    decomposition_witnesses,
    evaluate,
    factorize,
    find_collision,
    indecomposables,
    is_indecomposable,
    operation_trees,
    split,
    verify_freeness,
)

X = parse_tree("6(5(1,2,3(4,7)),8)")


class TestWitnesses:
    def test_eight_vertex_example(self):
        ws = decomposition_witnesses(X)
        assert Witness(3, 5, 5) in ws
        assert ws == sorted(ws)

    def test_fork_has_none(self):
        assert decomposition_witnesses(parse_tree("2(1,3)")) == []

    def test_chain_is_decomposable(self):
        ws = decomposition_witnesses(parse_tree("1(2(3))"))
        assert ws == [Witness(2, 3, 2)]
        # cross-check: the chain really is a non-trivial composition
        mu = parse_tree("1(2)")
        assert compose_max(mu, 2, mu) == parse_tree("1(2(3))")

    def test_nontrivial_composition_always_witnessed(self):
        for n, m in itertools.product(range(2, 4), repeat=2):
            for t in enumerate_trees(n):
                for s in enumerate_trees(m):
                    for i in range(1, n + 1):
                        x = compose_max(t, i, s)
                        w = Witness(i, i + m - 1, _block_root(x, i, m))
                        assert w in decomposition_witnesses(x)


def _block_root(x, a, m):
    from operad_forge.trees import restrict

    return restrict(x, range(a, a + m)).components[0].root


class TestIndecomposable:
    def test_arity_two_and_three(self):
        assert is_indecomposable(parse_tree("1(2)"))
        assert is_indecomposable(parse_tree("2(1)"))
        assert is_indecomposable(parse_tree("2(1,3)"))
        assert not is_indecomposable(parse_tree("1(2,3)"))
        assert not is_indecomposable(X)

    def test_rejects_arity_one(self):
        with pytest.raises(TreeError):
            is_indecomposable(parse_tree("1"))

    def test_generator_lists(self):
        assert [str(t) for t in indecomposables(2)] == ["1(2)", "2(1)"]
        assert [str(t) for t in indecomposables(3)] == ["2(1,3)"]

    @pytest.mark.parametrize("n,count", [(4, 14), (5, 146)])
    def test_generator_counts(self, n, count):
        assert count_indecomposables(n) == count

    @pytest.mark.slow
    def test_generator_count_arity_six(self):
        assert count_indecomposables(6) == 1994


class TestSplit:
    def test_golden_factorization(self):
        outer, inner = split(X, Witness(3, 5, 5))
        assert str(outer) == "4(3(1,2,5),6)"
        assert str(inner) == "3(1(2))"
        assert compose_max(outer, 3, inner) == X

    def test_roundtrip_exhaustive(self):
        for n, m in itertools.product(range(2, 4), repeat=2):
            for t in enumerate_trees(n):
                for s in enumerate_trees(m):
                    for i in range(1, n + 1):
                        x = compose_max(t, i, s)
                        w = Witness(i, i + m - 1, _block_root(x, i, m))
                        assert split(x, w) == (t, s)

    def test_every_witness_splits_consistently(self):
        for n in range(2, 6):
            for x in enumerate_trees(n):
                for w in decomposition_witnesses(x):
                    t, s = split(x, w)
                    assert compose_max(t, w.a, s) == x

    def test_invalid_witness_rejected(self):
        with pytest.raises(TreeError):
            split(X, Witness(1, 2, 1))


class TestOperationTrees:
    def test_structural_equality(self):
        mu = parse_tree("1(2)")
        single = OperationTree.leaf_node(mu)
        nested = OperationTree(mu, (None, single))
        assert nested != OperationTree(mu, (single, None))
        assert nested.arity == 3

    def test_text_format(self):
        mu = parse_tree("1(2)")
        fork = parse_tree("2(1,3)")
        word = OperationTree(fork, (None, OperationTree.leaf_node(mu), None))
        assert str(word) == "2(1,3)[_, 1(2), _]"
        assert str(OperationTree.leaf_node(fork)) == "2(1,3)"

    def test_evaluate_single_node_and_slot(self):
        fork = parse_tree("2(1,3)")
        mu = parse_tree("1(2)")
        assert evaluate(OperationTree.leaf_node(fork)) == fork
        word = OperationTree(fork, (None, OperationTree.leaf_node(mu), None))
        assert evaluate(word) == compose_max(fork, 2, mu)

    def test_enumeration_counts_match_cayley(self):
        for n in range(2, 6):
            assert len(operation_trees(n)) == n ** (n - 1)


class TestFactorize:
    def test_indecomposable_is_single_node(self):
        fork = parse_tree("2(1,3)")
        assert factorize(fork) == OperationTree.leaf_node(fork)

    def test_chain_factorization(self):
        mu = parse_tree("1(2)")
        expected = OperationTree(mu, (None, OperationTree.leaf_node(mu)))
        assert factorize(parse_tree("1(2(3))")) == expected

    def test_golden_example_evaluates_back(self):
        word = factorize(X)
        assert evaluate(word) == X

    def test_roundtrip_up_to_arity_five(self):
        for n in range(2, 6):
            for x in enumerate_trees(n):
                assert evaluate(factorize(x)) == x

    def test_scan_order_independence(self):
        for n in range(2, 6):
            for x in enumerate_trees(n):
                assert factorize(x) == factorize(x, reverse_scan=True)


class TestFreeness:
    @pytest.mark.parametrize("n,count", [(2, 2), (3, 9), (4, 64)])
    def test_bijection_small(self, n, count):
        report = verify_freeness(n)
        assert report.ok
        assert report.constructions == report.distinct == report.expected == count

    def test_bijection_arity_five(self):
        assert verify_freeness(5).ok


class TestCollisions:
    def test_min_collision_is_the_known_pair(self):
        pair = find_collision("min", 3)
        assert pair is not None
        texts = {str(w) for w in pair}
        assert texts == {"1(2)[_, 1(2)]", "1(2)[1(2), _]"}
        assert {evaluate(w, compose_min) for w in pair} == {parse_tree("1(2(3))")}

    def test_nap_collision_is_the_known_pair(self):
        pair = find_collision("nap", 3)
        assert pair is not None
        texts = {str(w) for w in pair}
        assert texts == {"1(2)[2(1), _]", "2(1)[_, 1(2)]"}
        assert {evaluate(w, compose_nap) for w in pair} == {parse_tree("2(1,3)")}

    def test_min_with_big_generators_only(self):
        # at arity 4 the generators of arity >= 4 compose trivially:
        # only single-node words exist, so no collision is possible
        assert find_collision("min", 4, min_generator_arity=4) is None

    def test_max_never_collides_at_small_arity(self):
        from operad_forge.trees import TreeError

        with pytest.raises(TreeError):
            find_collision("bogus", 3)
