import random
from itertools import combinations

import pytest

from domset.bounds import gamma32, lemma2_rhs
from domset.core import SetFamily, mask_from_elements
from domset.graphs import graph_from_dompair, isomorphic
from domset.hypergraph import dompair_from_wellcovered, verify_dominating, verify_independent
from domset.hypergraph import KGraph
from domset.constructions import (
    fig4_left_dompair,
    fig4_right_dompair,
    k_plus,
    extremal_graphs,
)
from domset.solver import (
    build_instance,
    enumerate_optimal_32,
    exhaustive_graphs_f,
    sample_optimal_32,
    solve,
)


def brute_force_min_dominating(n, l, k, size_range):
    """Exhaustive check over all index subsets of each candidate size."""
    inst = build_instance(n, l, k)
    nv = len(inst.masks)
    full = (1 << nv) - 1
    for size in size_range:
        for combo in combinations(range(nv), size):
            u = full
            for c in combo:
                u &= ~inst.nbhd[c]
            if not u:
                return size
    return None


def test_solve_5_matches_brute_force():
    assert brute_force_min_dominating(5, 3, 2, [5]) is None
    assert brute_force_min_dominating(5, 3, 2, [6]) == 6
    for mode in ("gamma", "i"):
        r = solve(5, 3, 2, mode)
        assert (r.size, r.status, r.lower_bound) == (6, "optimal", 6)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_solve_32_matches_formula_both_modes(n):
    for mode in ("gamma", "i"):
        r = solve(n, 3, 2, mode)
        assert r.size == gamma32(n)
        assert r.status == "optimal"
        assert verify_dominating(r.witness)[0]
        if mode == "i":
            assert verify_independent(r.witness)[0]


def test_solve_deterministic():
    a = solve(6, 3, 2, "gamma")
    b = solve(6, 3, 2, "gamma")
    assert a.size == b.size and a.nodes_explored == b.nodes_explored
    assert a.witness == b.witness


def test_mode_i_at_least_gamma():
    for n, l, k in ((5, 3, 2), (6, 3, 2), (7, 3, 2), (6, 4, 2)):
        assert solve(n, l, k, "i").size >= solve(n, l, k, "gamma").size


def test_solver_witness_valid_under_relabeling():
    rng = random.Random(31)
    r = solve(6, 3, 2, "gamma")
    perm = list(range(1, 7))
    rng.shuffle(perm)
    pmap = {i + 1: perm[i] for i in range(6)}

    def remap(fam):
        return SetFamily.from_masks(
            fam.n, fam.k,
            (mask_from_elements(pmap[e] for e in elements) for elements in fam.as_elements()),
        )

    from domset.graphs import DomPair

    relabeled = DomPair(6, 3, 2, remap(r.witness.lower), remap(r.witness.upper))
    assert relabeled.size == r.size
    assert verify_dominating(relabeled)[0]


def test_warm_start_does_not_change_optimum():
    base = solve(7, 3, 2, "gamma")
    warm = solve(7, 3, 2, "gamma", warm_starts=[base.witness])
    assert warm.size == base.size and warm.status == "optimal"
    assert warm.nodes_explored <= base.nodes_explored


def test_warm_start_must_verify():
    from domset.graphs import DomPair

    bogus = DomPair(
        7, 3, 2,
        SetFamily.from_masks(7, 2, []),
        SetFamily.from_masks(7, 3, []),
    )
    with pytest.raises(ValueError, match="dominate"):
        solve(7, 3, 2, warm_starts=[bogus])
    with pytest.raises(ValueError, match="different instance"):
        solve(6, 3, 2, warm_starts=[fig4_left_dompair()])


def test_warm_start_independence_checked_in_i_mode():
    with pytest.raises(ValueError, match="independent"):
        solve(9, 4, 2, "i", warm_starts=[fig4_right_dompair()])


def test_sandwich_against_construction():
    # K+_{4,2} is well-covered as a 2-graph; its pair attains gamma32(6)
    edges = [mask_from_elements(e) for e in k_plus(4, 6).edges()]
    h = KGraph(6, 2, SetFamily.from_masks(6, 2, edges))
    d = dompair_from_wellcovered(h)
    r = solve(6, 3, 2, "gamma")
    assert d.size == r.size == r.lower_bound == gamma32(6)


def test_budget_expiry_reports_honest_bounds():
    r = solve(8, 3, 2, "gamma", budget_seconds=1e-4)
    assert r.status == "upper_bound_only"
    assert r.lower_bound <= gamma32(8) <= r.size
    assert verify_dominating(r.witness)[0]


def test_search_space_guard():
    with pytest.raises(ValueError, match="guard"):
        solve(64, 5, 2)


def test_bad_mode():
    with pytest.raises(ValueError):
        solve(5, 3, 2, "min")


# ------------------------------------------------------------- enumeration

def test_enumerate_optimal_5():
    pairs = enumerate_optimal_32(5)
    assert len(pairs) > 0
    assert all(d.size == 6 for d in pairs)
    assert all(verify_dominating(d)[0] for d in pairs)
    expected = extremal_graphs(5)
    hit = [False] * len(expected)
    for d in pairs:
        h = graph_from_dompair(d)
        matches = [i for i, g in enumerate(expected) if isomorphic(h, g)[0]]
        assert matches, "optimum outside the characterization"
        for i in matches:
            hit[i] = True
    assert all(hit), "some characterized graph was never realized"


def test_enumerate_guard():
    with pytest.raises(ValueError, match="sample_optimal_32"):
        enumerate_optimal_32(7)


# ---------------------------------------------------------------- sampling

@pytest.mark.parametrize("n", [6, 7])
def test_sample_optimal_asserts_characterization(n):
    pairs = sample_optimal_32(n, 10, seed=2026)
    assert 1 <= len(pairs) <= 10
    assert all(d.size == gamma32(n) for d in pairs)
    again = sample_optimal_32(n, 10, seed=2026)
    assert [d.lower.members for d in pairs] == [d.lower.members for d in again]


def test_sample_guard():
    with pytest.raises(ValueError):
        sample_optimal_32(10, 1, seed=1)


# ------------------------------------------------------------- exhaustive f

@pytest.mark.parametrize("n, expected_f", [(5, 4), (6, 6)])
def test_exhaustive_max_f(n, expected_f):
    best2f, reps = exhaustive_graphs_f(n)
    assert best2f == 2 * expected_f == 2 * lemma2_rhs(n)
    assert len(reps) >= 1


def test_exhaustive_n5_classes():
    _, reps = exhaustive_graphs_f(5)
    assert len(reps) == 5
    expected = extremal_graphs(5)
    for g in reps:
        assert any(isomorphic(g, e)[0] for e in expected)


def test_exhaustive_guard():
    with pytest.raises(ValueError):
        exhaustive_graphs_f(8)
