"""Pure-Python kernels: the hot inner loops behind the solver and the
exhaustive graph scan.

domset._ckernels is the compiled twin; domset._accel picks whichever is
available.  Both implement the same entry points with identical semantics
(branching order, pruning, returned answers):

scan_max_f(m, tri_masks, edge_tri_masks)
    Walk all 2^m graphs on m edge slots and maximize 2f = 2|E| - 2|T| - |E_0|.
    tri_masks[i] is the edge-slot mask of triangle i; edge_tri_masks[e] is
    the mask (over triangle indices) of triangles through edge slot e.
    Two passes: find the maximum, then collect every maximizer mask.

search_leq(nbhd, kmask, ground, t, independent, deadline, max_nodes, memo)
    Decide whether the implicit domination instance has a (independent)
    dominating set of size <= t.  Universe vertices are bits 0..nv-1 in
    global colex order; nbhd[v] is the closed-neighborhood mask, kmask the
    mask of lower-level vertices, ground[v] the vertex's subset of [n] as a
    ground-element mask.  Branches on the lowest undominated index over its
    closed neighborhood (restricted to undominated vertices in independent
    mode), candidates ordered by decreasing coverage of the undominated set
    with colex tie-break.

    Tree reductions, all exact:
    * counting bound: each lower-level addition dominates at most one lower
      vertex and at most max-coverage upper vertices, and dually; infeasible
      (x, y) budgets prune the node;
    * greedy packing of pairwise-disjoint closed neighborhoods (each one
      needs its own dominator);
    * coverage subsumption (non-independent mode only): a candidate whose
      coverage of U is contained in another candidate's is skipped;
    * symmetry: candidates with the same intersection-cardinality signature
      on the Venn atoms of the chosen ground sets are interchangeable under
      a ground permutation fixing every chosen set, so only the colex-least
      one is explored;
    * memoization: the subproblem depends only on U, so refuted budgets are
      cached per U (the table can be shared across calls — facts of the form
      "no completion of size <= q covers U" do not depend on the target).

    Returns (witness | None, nodes, completed); completed is False only
    when the deadline or node budget interrupted the proof.
"""

from __future__ import annotations

import time

import numpy as np

_POP16 = None
_MEMO_CAP = 2_000_000
_MAX_SIG_ATOMS = 16


def _popcount_u32(arr):
    global _POP16
    if _POP16 is None:
        _POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)
    return _POP16[arr & np.uint32(0xFFFF)].astype(np.int32) + _POP16[arr >> np.uint32(16)]


def _scan_values(start: int, stop: int, tri_masks, edge_tri_masks):
    masks = np.arange(start, stop, dtype=np.uint32)
    values = 2 * _popcount_u32(masks)
    present = np.zeros(masks.shape, dtype=np.uint64)
    for ti, tm in enumerate(tri_masks):
        sel = (masks & np.uint32(tm)) == np.uint32(tm)
        values -= 2 * sel
        present |= sel.astype(np.uint64) << np.uint64(ti)
    for e, etm in enumerate(edge_tri_masks):
        uncovered = ((masks >> np.uint32(e)) & np.uint32(1)).astype(bool)
        uncovered &= (present & np.uint64(etm)) == np.uint64(0)
        values -= uncovered
    return masks, values


def scan_max_f(m: int, tri_masks, edge_tri_masks):
    if m > 28:
        raise ValueError(f"edge-slot count {m} too large for the exhaustive scan")
    if len(tri_masks) > 64:
        raise ValueError("more than 64 triangles; scan assumes one presence word")
    total = 1 << m
    chunk = 1 << 18
    best = None
    for start in range(0, total, chunk):
        _, values = _scan_values(start, min(start + chunk, total), tri_masks, edge_tri_masks)
        top = int(values.max())
        if best is None or top > best:
            best = top
    maximizers = []
    for start in range(0, total, chunk):
        masks, values = _scan_values(start, min(start + chunk, total), tri_masks, edge_tri_masks)
        maximizers.extend(int(g) for g in masks[values == best])
    return best, maximizers


def make_memo(nwords: int = 0):
    """Fresh memo table; pass to search_leq calls that may share facts.

    nwords is accepted for signature parity with the compiled backend."""
    return {}


def _counting_feasible(rk: int, rl: int, mkl: int, mlk: int, q: int) -> bool:
    """Can x lower + y upper additions with x + y <= q dominate rk lower and
    rl upper undominated vertices, given per-addition coverage caps?"""
    for y in range(q + 1):
        x = rk - y * mkl
        if x < 0:
            x = 0
        rem = rl - y
        if rem > 0:
            if mlk == 0:
                continue
            need = -(-rem // mlk)
            if need > x:
                x = need
        if x + y <= q:
            return True
    return False


def search_leq(nbhd, kmask, ground, t, independent,
               deadline=None, max_nodes=None, memo=None):
    nv = len(nbhd)
    full = (1 << nv) - 1
    lmask = full & ~kmask
    if memo is None:
        memo = {}

    static_mkl = 0
    static_mlk = 0
    for v in range(nv):
        if kmask >> v & 1:
            c = (nbhd[v] & lmask).bit_count()
            if c > static_mlk:
                static_mlk = c
        else:
            c = (nbhd[v] & kmask).bit_count()
            if c > static_mkl:
                static_mkl = c
    pack_order = sorted(range(nv), key=lambda v: (nbhd[v].bit_count(), v))

    nodes = 0
    chosen = []
    aborted = False

    def prune(U, q):
        rk = (U & kmask).bit_count()
        rl = (U & lmask).bit_count()
        if rk == 0 and rl == 0:
            return False
        if not _counting_feasible(rk, rl, static_mkl, static_mlk, q):
            return True
        mkl = mlk = 0
        if independent:
            m = U
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                if kmask >> v & 1:
                    c = (nbhd[v] & U & lmask).bit_count()
                    if c > mlk:
                        mlk = c
                else:
                    c = (nbhd[v] & U & kmask).bit_count()
                    if c > mkl:
                        mkl = c
        else:
            for v in range(nv):
                if kmask >> v & 1:
                    c = (nbhd[v] & U & lmask).bit_count()
                    if c > mlk:
                        mlk = c
                else:
                    c = (nbhd[v] & U & kmask).bit_count()
                    if c > mkl:
                        mkl = c
        if not _counting_feasible(rk, rl, mkl, mlk, q):
            return True
        blocked = 0
        count = 0
        for v in pack_order:
            if U >> v & 1 and not nbhd[v] & blocked:
                count += 1
                if count > q:
                    return True
                blocked |= nbhd[v]
        return False

    def dfs(U, depth, atoms):
        nonlocal nodes, aborted
        nodes += 1
        if nodes & 1023 == 0:
            if deadline is not None and time.monotonic() > deadline:
                aborted = True
                return -1
            if max_nodes is not None and nodes > max_nodes:
                aborted = True
                return -1
        if not U:
            return 1
        q = t - depth
        if q <= 0:
            return 0
        if memo.get(U, -1) >= q:
            return 0
        if prune(U, q):
            if len(memo) < _MEMO_CAP:
                memo[U] = q
            return 0
        v = (U & -U).bit_length() - 1
        cand_bits = nbhd[v] & U if independent else nbhd[v]
        cands = []
        m = cand_bits
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            cands.append((c, nbhd[c] & U))
        if len(atoms) <= _MAX_SIG_ATOMS and len(cands) > 1:
            seen = {}
            kept = []
            for c, cov in cands:  # ascending index: first kept is colex-least
                g = ground[c]
                sig = tuple((g & a).bit_count() for a in atoms)
                if sig not in seen:
                    seen[sig] = True
                    kept.append((c, cov))
            cands = kept
        if not independent and len(cands) > 1:
            kept = []
            for i, (ci, mi) in enumerate(cands):
                subsumed = False
                for j, (cj, mj) in enumerate(cands):
                    if i != j and mi | mj == mj and (mi != mj or cj < ci):
                        subsumed = True
                        break
                if not subsumed:
                    kept.append((ci, mi))
            cands = kept
        cands.sort(key=lambda cm: (-cm[1].bit_count(), cm[0]))
        for c, _ in cands:
            g = ground[c]
            child_atoms = []
            for a in atoms:
                inter = a & g
                diff = a & ~g
                if inter:
                    child_atoms.append(inter)
                if diff:
                    child_atoms.append(diff)
            chosen.append(c)
            r = dfs(U & ~nbhd[c], depth + 1, child_atoms)
            if r == 1:
                return 1
            chosen.pop()
            if r == -1:
                return -1
        if len(memo) < _MEMO_CAP:
            memo[U] = q
        return 0

    ground_full = 0
    for g in ground:
        ground_full |= g
    r = dfs(full, 0, [ground_full])
    if r == 1:
        return sorted(chosen), nodes, True
    return None, nodes, not aborted
