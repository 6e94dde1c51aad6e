"""Exact minimum (independent) dominating sets on the implicit G_{l,k}.

The universe is the union of the two levels, indexed in global colex order
(ascending mask value; k-sets and l-sets interleave).  The search proves
optimality by an ascending target loop: for t = root lower bound, ..., it
asks the branch-and-bound kernel whether a (independent) dominating set of
size <= t exists.  A refutation at t certifies the lower bound t+1, so a
budget abort still reports an honest proven bound; the first success is the
optimum because every smaller target was refuted.

Warm starts and an internal greedy cover provide the initial incumbent;
they can only shorten the loop, never change the reported optimum.
"""

from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass
from itertools import combinations

from . import _accel
from .bounds import gamma32, lemma2_rhs
from .constructions import extremal_graphs
from .core import (
    SetFamily,
    binomial,
    elements_of,
    enumerate_ksubsets,
    mask_from_elements,
)
from .graphs import DomPair, Graph, certificate, graph_from_dompair, isomorphic
from .hypergraph import verify_dominating, verify_independent

SEARCH_SPACE_GUARD = 200_000


@dataclass(frozen=True)
class Instance:
    """The two levels of G_{l,k} flattened into one indexed universe."""

    n: int
    l: int
    k: int
    masks: tuple[int, ...]
    nbhd: tuple[int, ...]
    kmask: int
    index: dict[int, int]


@dataclass(frozen=True)
class SolveResult:
    size: int
    witness: DomPair
    status: str  # optimal | upper_bound_only | infeasible
    lower_bound: int
    nodes_explored: int
    elapsed: float


def build_instance(n: int, l: int, k: int) -> Instance:
    if not 1 <= k < l <= n <= 64:
        raise ValueError(f"need 1 <= k < l <= n <= 64, got n={n} l={l} k={k}")
    km = list(enumerate_ksubsets(n, k))
    lm = list(enumerate_ksubsets(n, l))
    masks = sorted(km + lm)
    index = {m: i for i, m in enumerate(masks)}
    nbhd = [1 << i for i in range(len(masks))]
    kbits = 0
    for m in km:
        kbits |= 1 << index[m]
    for bm in lm:
        bi = index[bm]
        belems = elements_of(bm)
        for sub in combinations(belems, k):
            ai = index[mask_from_elements(sub)]
            nbhd[ai] |= 1 << bi
            nbhd[bi] |= 1 << ai
    return Instance(n, l, k, tuple(masks), tuple(nbhd), kbits, index)


def _greedy_cover(inst: Instance, independent: bool) -> list[int]:
    """Deterministic max-coverage greedy; always yields a valid (independent)
    dominating index set."""
    nv = len(inst.masks)
    full = (1 << nv) - 1
    U = full
    chosen = []
    while U:
        best_c = -1
        best_cov = -1
        m = U if independent else full
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            cov = (inst.nbhd[c] & U).bit_count()
            if cov > best_cov:
                best_cov, best_c = cov, c
        chosen.append(best_c)
        U &= ~inst.nbhd[best_c]
    return sorted(chosen)


def _lower_bound(inst: Instance, U: int, independent: bool) -> int:
    """Admissible bound: max of the two-level counting bound and a greedy
    packing of pairwise-disjoint closed neighborhoods."""
    nv = len(inst.masks)
    full = (1 << nv) - 1
    kmask = inst.kmask
    lmask = full & ~kmask
    rk = (U & kmask).bit_count()
    rl = (U & lmask).bit_count()
    if rk == 0 and rl == 0:
        return 0
    mkl = mlk = 0
    m = U if independent else full
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if kmask >> v & 1:
            c = (inst.nbhd[v] & U & lmask).bit_count()
            if c > mlk:
                mlk = c
        else:
            c = (inst.nbhd[v] & U & kmask).bit_count()
            if c > mkl:
                mkl = c
    if mlk == 0 and rl > 0:
        counting = rl + max(0, rk - rl * mkl)
    else:
        counting = None
        y = 0
        while counting is None or y < counting:
            x = rk - y * mkl
            if x < 0:
                x = 0
            rem = rl - y
            if rem > 0:
                x = max(x, -(-rem // mlk))
            f = x + y
            if counting is None or f < counting:
                counting = f
            y += 1

    blocked = 0
    packing = 0
    order = sorted(range(nv), key=lambda v: (inst.nbhd[v].bit_count(), v))
    for v in order:
        if U >> v & 1 and not inst.nbhd[v] & blocked:
            packing += 1
            blocked |= inst.nbhd[v]
    return max(counting, packing)


def _dompair_from_indices(inst: Instance, indices) -> DomPair:
    lows, ups = [], []
    for i in indices:
        mask = inst.masks[i]
        (lows if mask.bit_count() == inst.k else ups).append(mask)
    return DomPair(
        inst.n,
        inst.l,
        inst.k,
        SetFamily.from_masks(inst.n, inst.k, lows),
        SetFamily.from_masks(inst.n, inst.l, ups),
    )


def solve(
    n: int,
    l: int,
    k: int,
    mode: str = "gamma",
    budget_seconds: float | None = None,
    warm_starts=(),
) -> SolveResult:
    """Minimum dominating (mode='gamma') or independent dominating (mode='i')
    set of G_{l,k}, with a proof of optimality unless the budget expires."""
    if mode not in ("gamma", "i"):
        raise ValueError(f"mode must be 'gamma' or 'i', got {mode!r}")
    if binomial(n, k) + binomial(n, l) > SEARCH_SPACE_GUARD:
        raise ValueError(
            f"search space C({n},{k}) + C({n},{l}) exceeds the guard {SEARCH_SPACE_GUARD}"
        )
    independent = mode == "i"
    start = time.monotonic()
    deadline = start + budget_seconds if budget_seconds is not None else None
    inst = build_instance(n, l, k)

    incumbent = _greedy_cover(inst, independent)
    for d in warm_starts:
        if (d.n, d.l, d.k) != (n, l, k):
            raise ValueError("warm start built for a different instance")
        ok, _ = verify_dominating(d)
        if not ok:
            raise ValueError("warm start does not dominate")
        if independent:
            ok, _ = verify_independent(d)
            if not ok:
                raise ValueError("warm start is not independent")
        indices = sorted(
            inst.index[m] for m in list(d.lower.members) + list(d.upper.members)
        )
        if len(indices) < len(incumbent):
            incumbent = indices

    full = (1 << len(inst.masks)) - 1
    root_lb = _lower_bound(inst, full, independent)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * len(incumbent) + 500))

    nodes_total = 0
    status = "optimal"
    lower = len(incumbent)
    nbhd_list = list(inst.nbhd)
    ground_list = list(inst.masks)
    memo = _accel.make_memo((len(inst.masks) + 63) // 64)
    t = root_lb
    while t < len(incumbent):
        wit, nodes, completed = _accel.search_leq(
            nbhd_list, inst.kmask, ground_list, t, independent, deadline, None, memo
        )
        nodes_total += nodes
        if not completed:
            status = "upper_bound_only"
            lower = t
            break
        if wit is not None:
            assert len(wit) == t, "solution below an admissible lower bound"
            incumbent = wit
            lower = t
            break
        t += 1
    else:
        lower = len(incumbent)

    witness = _dompair_from_indices(inst, incumbent)
    ok, _ = verify_dominating(witness)
    assert ok, "solver witness must dominate"
    if independent:
        ok, _ = verify_independent(witness)
        assert ok, "solver witness must be independent"
    return SolveResult(
        size=len(incumbent),
        witness=witness,
        status=status,
        lower_bound=lower,
        nodes_explored=nodes_total,
        elapsed=time.monotonic() - start,
    )


def enumerate_optimal_32(n: int) -> list[DomPair]:
    """Every dominating set of G_{3,2} of exactly the optimal size (n <= 6)."""
    if n > 6:
        raise ValueError("exhaustive enumeration supports n <= 6; use sample_optimal_32")
    inst = build_instance(n, 3, 2)
    target = solve(n, 3, 2, "gamma").size
    full = (1 << len(inst.masks)) - 1
    solutions: set[frozenset[int]] = set()

    def dfs(U: int, chosen: list[int]) -> None:
        if not U:
            if len(chosen) < target:
                raise AssertionError("dominating set below the proven optimum")
            solutions.add(frozenset(chosen))
            return
        q = target - len(chosen)
        if q <= 0:
            return
        if _lower_bound(inst, U, False) > q:
            return
        v = (U & -U).bit_length() - 1
        m = inst.nbhd[v]
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            chosen.append(c)
            dfs(U & ~inst.nbhd[c], chosen)
            chosen.pop()

    dfs(full, [])
    ordered = sorted(solutions, key=lambda s: tuple(sorted(s)))
    return [_dompair_from_indices(inst, sorted(s)) for s in ordered]


def sample_optimal_32(n: int, count: int, seed: int) -> list[DomPair]:
    """Up to `count` distinct optimal dominating sets of G_{3,2} collected by
    deterministic searches over seeded random relabelings of [n].

    Each sample is verified and its associated graph checked against the
    characterization for the residue class of n.
    """
    if n > 9:
        raise ValueError("sampling supports n <= 9")
    rng = random.Random(seed)
    inst = build_instance(n, 3, 2)
    target = gamma32(n)
    expected = extremal_graphs(n)
    nv = len(inst.masks)
    out: dict[tuple, DomPair] = {}
    attempts = 0
    while len(out) < count and attempts < 8 * count:
        attempts += 1
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        pmap = {i + 1: perm[i] for i in range(n)}
        sigma = [0] * nv
        for v, mask in enumerate(inst.masks):
            pm = mask_from_elements(pmap[e] for e in elements_of(mask))
            sigma[v] = inst.index[pm]
        nbhd_p = [0] * nv
        for v in range(nv):
            bits = inst.nbhd[v]
            nb = 0
            while bits:
                low = bits & -bits
                nb |= 1 << sigma[low.bit_length() - 1]
                bits ^= low
            nbhd_p[sigma[v]] = nb
        wit, _, _ = _accel.search_leq(
            nbhd_p, inst.kmask, list(inst.masks), target, False, None, 20_000_000
        )
        if wit is None:
            continue
        inv = {p: v for v, p in enumerate(sigma)}
        indices = sorted(inv[p] for p in wit)
        d = _dompair_from_indices(inst, indices)
        ok, _ = verify_dominating(d)
        assert ok and d.size == target
        h = graph_from_dompair(d)
        assert any(
            isomorphic(h, g)[0] for g in expected
        ), "sampled optimum outside the characterization"
        key = (frozenset(d.lower.members), frozenset(d.upper.members))
        out.setdefault(key, d)
    return list(out.values())


def exhaustive_graphs_f(n: int) -> tuple[int, list[Graph]]:
    """Scan all labeled graphs on [n] (n <= 7): the maximum of 2f and the
    maximizers up to isomorphism.  When the maximum meets the bound
    2*floor((n+1)^2/8), every maximizer is checked against the equality
    clause (no uncovered edges, or n = 1 mod 4 with evenly many)."""
    if not 1 <= n <= 7:
        raise ValueError("exhaustive graph scan supports n <= 7")
    pair_masks = list(enumerate_ksubsets(n, 2))
    slot = {m: i for i, m in enumerate(pair_masks)}
    tri_masks = []
    edge_tri = [0] * len(pair_masks)
    for ti, tmask in enumerate(enumerate_ksubsets(n, 3)):
        bits = 0
        m = tmask
        while m:
            low = m & -m
            e = slot[tmask ^ low]
            bits |= 1 << e
            edge_tri[e] |= 1 << ti
            m ^= low
        tri_masks.append(bits)
    best2f, gmasks = _accel.scan_max_f(len(pair_masks), tri_masks, edge_tri)
    bound_hit = best2f == 2 * lemma2_rhs(n)
    reps: list[Graph] = []
    for gm in gmasks:
        edges = []
        mm = gm
        while mm:
            low = mm & -mm
            edges.append(elements_of(pair_masks[low.bit_length() - 1]))
            mm ^= low
        g = Graph.from_edges(n, edges)
        if bound_hit:
            e0 = len(certificate(g).uncovered_edges)
            assert e0 == 0 or (n % 4 == 1 and e0 % 2 == 0), "equality clause violated"
        if not any(isomorphic(g, r)[0] for r in reps):
            reps.append(g)
    return best2f, reps
