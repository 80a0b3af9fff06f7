"""Acceptance criteria. Each test prints one PASS/FAIL line, repeated in the
terminal summary under "acceptance criteria"."""

import os
import time

import pytest

from vwmatch import (Side, WeightSpec, brute_force_mvm, generate_random_bipartite,
                     generate_weights, geometric_mean, graph_stats, greedy_half_mvm,
                     lex_compare, match_d, matching_weight, mendelsohn_dulmage_merge,
                     read_matrix_market, restricted_match, two_thirds_mvm, verify_no_augmenting,
                     verify_no_increasing, weight_vector)

from corpus import exhaustive_corpus, random_corpus

TREC10_ENV = "VWMATCH_TREC10"


@pytest.fixture(scope="module")
def corpus_runs():
    """Every corpus instance with its brute-force result and exact-solver matching."""
    t0 = time.perf_counter()
    runs = []
    cases = list(exhaustive_corpus()) + list(random_corpus(1000, max_m=16))
    for g, w in cases:
        runs.append((g, w, brute_force_mvm(g, w), match_d(g, w)))
    return runs, time.perf_counter() - t0


@pytest.fixture(scope="module")
def desk_scale():
    """Weight ratios against the exact solver on 100 graphs, n_s = n_t = 200, m = 2000."""
    t0 = time.perf_counter()
    two, half = [], []
    for seed in range(100):
        g = generate_random_bipartite(200, 200, 2000, seed)
        w = generate_weights(g, WeightSpec("random", 1, 1000, seed))
        opt = matching_weight(match_d(g, w), w)
        two.append(matching_weight(two_thirds_mvm(g, w), w) / opt)
        half.append(matching_weight(greedy_half_mvm(g, w), w) / opt)
    return two, half, time.perf_counter() - t0


def test_c1_oracle_exactness(corpus_runs, acceptance):
    runs, elapsed = corpus_runs
    bad = [(g, w) for g, w, res, m in runs if matching_weight(m, w) != res.best_weight]
    ok = not bad and elapsed < 60
    assert acceptance(1, "exact solver weight equals brute force", ok,
                      f"{len(runs)} instances, {len(bad)} mismatches, {elapsed:.1f}s")


def test_c2_lex_max(corpus_runs, acceptance):
    runs, _ = corpus_runs
    bad = sum(1 for g, w, res, m in runs if lex_compare(weight_vector(m, w), res.lex_max_vector))
    assert acceptance(2, "weight vector is lexicographically maximum", bad == 0,
                      f"{len(runs)} instances, {bad} mismatches")


def test_c3_no_paths(corpus_runs, acceptance):
    runs, _ = corpus_runs
    bad = sum(1 for g, w, _res, m in runs
              if not (verify_no_augmenting(g, m) and verify_no_increasing(g, m, w)))
    assert acceptance(3, "no augmenting and no increasing path after exact solve", bad == 0,
                      f"{bad} violations")


def test_c4_two_thirds_bound(corpus_runs, desk_scale, acceptance):
    runs, _ = corpus_runs
    t0 = time.perf_counter()
    bad = sum(1 for g, w, res, _m in runs
              if 3 * matching_weight(two_thirds_mvm(g, w), w) < 2 * res.best_weight)
    gm = geometric_mean(desk_scale[0])
    elapsed = time.perf_counter() - t0 + desk_scale[2]
    ok = bad == 0 and gm >= 0.95 and elapsed < 60
    assert acceptance(4, "2/3 bound on corpus, desk-scale geometric mean >= 0.95", ok,
                      f"{bad} violations, geo-mean {gm:.4f}, min {min(desk_scale[0]):.4f}, "
                      f"{elapsed:.1f}s")


def test_c5_half_bound(corpus_runs, desk_scale, acceptance):
    runs, _ = corpus_runs
    bad = sum(1 for g, w, res, _m in runs
              if 2 * matching_weight(greedy_half_mvm(g, w), w) < res.best_weight)
    gm = geometric_mean(desk_scale[1])
    ok = bad == 0 and gm >= 0.90
    assert acceptance(5, "1/2 bound on corpus, desk-scale geometric mean >= 0.90", ok,
                      f"{bad} violations, geo-mean {gm:.4f}")


def test_c6_restricted_invariants(corpus_runs, acceptance):
    runs, _ = corpus_runs
    bad = 0
    for g, w, _res, _m in runs:
        for side in Side:
            m = restricted_match(g, side, w, 3)
            failed = [(side, v) for v, x in enumerate(m.mates(side)) if x is None]
            if not (verify_no_augmenting(g, m, 3, failed)
                    and verify_no_increasing(g, m, w.only(side), 2)):
                bad += 1
    assert acceptance(6, "no short augmenting path from failed vertices, no length-2 "
                         "increasing path", bad == 0, f"{2 * len(runs)} runs, {bad} violations")


def test_c7_merge_postcondition(acceptance):
    bad = 0
    for seed in range(1000):
        n_s, n_t = 5 + seed % 23, 5 + (seed * 7) % 29
        g = generate_random_bipartite(n_s, n_t, min(n_s * n_t, 3 * (n_s + n_t)), seed)
        w = generate_weights(g, WeightSpec("random", 1, 1000, seed))
        length = 3 if seed % 2 else 1
        m_s = restricted_match(g, Side.S, w, length)
        m_t = restricted_match(g, Side.T, w, length)
        m = mendelsohn_dulmage_merge(g, m_s, m_t)
        ok = all(m.mate_s[s] is not None for s, t in enumerate(m_s.mate_s) if t is not None)
        ok &= all(m.mate_t[t] is not None for t, s in enumerate(m_t.mate_t) if s is not None)
        ok &= m.edge_set() <= (m_s.edge_set() | m_t.edge_set())
        bad += not ok
    assert acceptance(7, "merge keeps M_S-matched S and M_T-matched T vertices", bad == 0,
                      f"1000 pairs, {bad} violations")


@pytest.mark.slow
def test_c8_near_linear_scaling(acceptance):
    sizes = [100_000, 200_000, 400_000]
    times = []
    for m in sizes:
        g = generate_random_bipartite(m // 10, m // 10, m, m)
        w = generate_weights(g, WeightSpec("random", 1, 1000, m))
        best = float("inf")
        for _ in range(3):
            t0 = time.perf_counter()
            two_thirds_mvm(g, w)
            best = min(best, time.perf_counter() - t0)
        times.append(best)
    ratios = [b / a for a, b in zip(times, times[1:])]
    ok = all(r <= 3.0 for r in ratios)
    assert acceptance(8, "time(2m)/time(m) <= 3.0 at each doubling", ok,
                      "times " + ", ".join(f"{t:.3f}s" for t in times)
                      + "; ratios " + ", ".join(f"{r:.2f}" for r in ratios))


@pytest.mark.network
def test_c9_trec10(acceptance):
    path = os.environ.get(TREC10_ENV)
    if not path or not os.path.exists(path):
        acceptance(9, "Trec10 spot check", False, f"{TREC10_ENV} not set", skipped=True)
        pytest.skip(f"set {TREC10_ENV} to a local copy of SuiteSparse JGD_Kocay/Trec10.mtx")
    g = read_matrix_market(path)
    st = graph_stats(g)
    w = generate_weights(g, WeightSpec("random", 1, 1000, 1))
    card = match_d(g, w).cardinality
    ok = ((g.n_s, g.n_t, g.m) == (106, 478, 8612) and f"{st.s_mean_degree:.2f}" == "81.25"
          and card == 106)
    assert acceptance(9, "Trec10 dims, edges and MVM cardinality", ok,
                      f"{g.n_s} x {g.n_t}, m={g.m}, S mean {st.s_mean_degree:.2f}, card {card}")
