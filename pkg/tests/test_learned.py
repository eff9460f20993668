import math

import numpy as np
import pytest

from incscc.graph import Edge, EdgeSequence, edge_errors
from incscc.learned import LearnedIncScc
from incscc.oracle import check_equivalence, scc_snapshots
from incscc.synth import dense_fixture, random_edge_sequence, reversed_sequence
from incscc.harness import PerturbConfig, perturb


def drive(algo, sigma):
    for e in sigma:
        algo.insert(e)
    return algo


def test_initial_path_t3(t3):
    ls = LearnedIncScc(3, t3)
    assert [(nd.lo, nd.hi) for nd in ls.path] == [(0, 4), (0, 2)]
    root = ls.path[0]
    assert len(root.left_idx) == 0  # acyclic predicted prefix: no intra edges
    assert len(root.right_idx) == 3


def test_initial_path_single_edge():
    seq = EdgeSequence.from_pairs([(0, 1)])
    ls = LearnedIncScc(2, seq)
    assert [(nd.lo, nd.hi) for nd in ls.path] == [(0, 2)]


def test_path_length_bound_large_instance():
    rng = np.random.default_rng(0)
    n, sigma = random_edge_sequence(10**5, 2 * 10**5, rng,
                                    n_min=10**5, m_min=2 * 10**5)
    ls = LearnedIncScc(n, sigma)
    assert len(ls.path) <= math.ceil(math.log2(sigma.m + 1))


def test_update_prediction_correct_is_noop():
    sigma = EdgeSequence.from_pairs([(0, 1), (1, 2), (2, 3), (3, 4)])
    ls = LearnedIncScc(5, sigma)
    assert ls.update_prediction(sigma.edge_at(1)) == (1, 1)
    assert ls.pred.order_list() == [0, 1, 2, 3]


def test_update_prediction_splices():
    sigma = EdgeSequence.from_pairs([(0, 1), (1, 2), (2, 3), (3, 4)])
    ls = LearnedIncScc(5, sigma)
    b = sigma.edge_at(2)
    assert ls.update_prediction(b) == (1, 2)
    assert ls.pred.order_list() == [1, 0, 2, 3]


def test_two_misses_shift_edge_twice():
    # true arrivals b, c against prediction [a, b, c, d]
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4)]
    sigma_hat = EdgeSequence.from_pairs(pairs)
    true_order = [1, 2, 0, 3]
    sigma = sigma_hat.reordered(true_order)
    ls = LearnedIncScc(5, sigma_hat)
    ls.insert(sigma.edge_at(1))
    ls.insert(sigma.edge_at(2))
    assert ls.pred.order_list() == [1, 2, 0, 3]  # a shifted twice


def test_t3_perfect_run_matches_hand_simulation(t3):
    ls = LearnedIncScc(3, t3, instrument=True)
    edges = list(t3)
    ls.insert(edges[0])
    assert [(nd.lo, nd.hi) for nd in ls.path] == [(0, 4), (0, 2)]
    assert not ls.same_scc(0, 2)
    ls.insert(edges[1])
    assert [(nd.lo, nd.hi) for nd in ls.path] == [(0, 4)]  # root is base at t=2
    assert not ls.same_scc(0, 2)
    ls.insert(edges[2])
    # LCA = root, rebuild root then right child [2,4]; cycle merge fires
    assert [(nd.lo, nd.hi) for nd in ls.path] == [(0, 4), (2, 4)]
    assert ls.same_scc(0, 2) and ls.same_scc(0, 1)
    assert ls.stats()["relabel_count"] == 2


def test_t3_swapped_prediction_rebuilds_root(t3):
    sigma_hat = t3.reordered([1, 0, 2])  # eta = 1
    ls = LearnedIncScc(3, sigma_hat, instrument=True)
    ls.insert(t3.edge_at(1))  # t=1, t_hat=2: leaf [0,2] fails t_hat < 2
    assert [(nd.lo, nd.hi) for nd in ls.path] == [(0, 4), (0, 2)]
    rebuilt = {(ev["lo"], ev["hi"]) for ev in ls.rebuild_events}
    assert (0, 4) in rebuilt
    # a fresh run over the whole sequence stays oracle-correct
    ls2 = LearnedIncScc(3, sigma_hat)
    assert check_equivalence(ls2, 3, t3).ok


def test_base_case_without_cycles_merges_nothing():
    seq = EdgeSequence.from_pairs([(0, 1), (1, 2)])
    ls = drive(LearnedIncScc(3, seq), seq)
    assert ls.stats()["merges"] == 0
    assert ls.labels.n_classes() == 3


def test_path_shape_invariant_after_every_insert(rng):
    for _ in range(10):
        n, sigma = random_edge_sequence(15, 60, rng)
        sigma_hat = perturb(sigma, PerturbConfig(4, int(rng.integers(2**31))))
        ls = LearnedIncScc(n, sigma_hat)
        for t, e in enumerate(sigma, start=1):
            ls.insert(e)
            path = ls.path
            assert path[0].lo == 0 and path[0].hi == sigma.m + 1
            for up, down in zip(path, path[1:]):
                assert (down.lo, down.hi) in (((up.lo, up.mid)), ((up.mid, up.hi)))
            assert path[-1].mid == t
            assert len(path) <= math.ceil(math.log2(sigma.m + 1))


def test_prefix_agreement_and_error_stability(rng):
    for _ in range(8):
        n, sigma = random_edge_sequence(15, 60, rng)
        perm = rng.permutation(sigma.m)
        sigma_hat = sigma.reordered(perm)
        eta, _ = edge_errors(sigma, sigma_hat)
        ls = LearnedIncScc(n, sigma_hat)
        true_ids = sigma.order.tolist()
        for t, e in enumerate(sigma, start=1):
            ls.insert(e)
            assert ls.pred.order_list()[:t] == true_ids[:t]
            # updates never push any edge beyond the initial max error
            drift = np.abs(ls.pred.pos - sigma.pos)
            assert int(drift.max()) <= max(eta, 0)


def test_oracle_equivalence_with_adversarial_prediction(rng):
    for _ in range(5):
        n, sigma = random_edge_sequence(12, 40, rng)
        ls = LearnedIncScc(n, reversed_sequence(sigma))
        assert check_equivalence(ls, n, sigma).ok


def test_same_scc_bounds(t3):
    ls = LearnedIncScc(3, t3)
    assert ls.same_scc(1, 1)
    with pytest.raises(IndexError):
        ls.same_scc(0, 3)


def test_unknown_edge_strict_mode(t3):
    ls = LearnedIncScc(3, t3)
    with pytest.raises(KeyError):
        ls.insert(Edge(1, 0, 99))
    with pytest.raises(KeyError):
        ls.insert(Edge(1, 0, 1))  # id exists but endpoints disagree


def test_duplicate_arrival_rejected(t3):
    ls = LearnedIncScc(3, t3)
    e = t3.edge_at(1)
    ls.insert(e)
    with pytest.raises(ValueError):
        ls.insert(e)


def test_staged_update_must_be_consumed(t3):
    ls = LearnedIncScc(3, t3)
    ls.update_prediction(t3.edge_at(1))
    with pytest.raises(ValueError, match="staged"):
        ls.update_prediction(t3.edge_at(2))
    ls.insert(t3.edge_at(1))  # consuming the staged update is fine
    assert ls.t == 1


def test_restart_mode_handles_unpredicted_edge():
    # prediction misses the closing edge of the triangle entirely
    sigma_hat = EdgeSequence.from_pairs([(0, 1), (1, 2), (3, 0)], n=4)
    ls = LearnedIncScc(4, sigma_hat, on_unknown="restart")
    ls.insert(sigma_hat.edge_at(1))
    ls.insert(sigma_hat.edge_at(2))
    ls.insert(Edge(2, 0, 77))  # not in the prediction
    assert ls.same_scc(0, 2) and ls.same_scc(1, 2)
    ls.insert(Edge(3, 0, 2))  # edge ids keep their slots across the restart
    assert not ls.same_scc(3, 0)


def test_work_counters_monotone(rng):
    n, sigma = random_edge_sequence(15, 50, rng)
    ls = LearnedIncScc(n, sigma)
    prev = ls.stats()["work_edges"]
    assert prev > 0  # initial path build already counted
    for e in sigma:
        ls.insert(e)
        cur = ls.stats()["work_edges"]
        assert cur >= prev
        prev = cur


def test_perfect_prediction_work_bound():
    for seed, n in ((1, 80), (1, 300), (2, 300)):
        nn, sigma = dense_fixture(1000, n, seed)
        ls = drive(LearnedIncScc(nn, sigma), sigma)
        budget = 4 * sigma.m * math.ceil(math.log2(sigma.m + 1))
        assert ls.stats()["work_edges"] <= budget


def test_perturbed_run_costs_more_than_perfect():
    nn, sigma = dense_fixture(1000, 120, 9)
    perfect = drive(LearnedIncScc(nn, sigma), sigma).stats()["work_edges"]
    sigma_hat = perturb(sigma, PerturbConfig(20, 3))
    eta, _ = edge_errors(sigma, sigma_hat)
    assert eta > 10
    noisy = drive(LearnedIncScc(nn, sigma_hat), sigma).stats()["work_edges"]
    assert noisy > perfect
