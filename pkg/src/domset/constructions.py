"""Builders for the explicit extremal objects.

* k_plus(s, n): complete bipartite [s] x [s+1,n] plus a maximum matching
  inside [s] (fixed labeling: matched pairs {2i-1, 2i}; for odd s vertex s
  stays unmatched).
* the three sporadic graphs H5a, H5b, H9 (fixed labelings below),
* the star-completed dominating pair for n = 1 mod 4,
* Steiner triple systems (Bose for v = 3 mod 6, Skolem for v = 1 mod 6),
* greedy packings of k-sets with pairwise intersections <= k-2,
* the single-layer well-covered construction
  E(H) = S  union  {X + b : X in shadow(S), b in B},
* its recursive layered version with the geometric partition of [n],
* the two explicit n = 9 witnesses for G_{4,2} (independent of size 17,
  non-independent of size 15).

All builders use fixed vertex labelings so serialized outputs are
byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor

from .core import (
    SetFamily,
    binomial,
    elements_of,
    enumerate_ksubsets,
    mask_from_elements,
    shadow,
)
from .graphs import DomPair, Graph, triangles
from .hypergraph import KGraph, cliques, is_well_covered


def k_plus(s: int, n: int) -> Graph:
    """K+_{s,n-s}: matching {2i-1,2i} inside [s], all edges [s] x [s+1,n]."""
    if not 1 < s < n or n > 64:
        raise ValueError(f"need 1 < s < n <= 64, got s={s} n={n}")
    edges = [(2 * i - 1, 2 * i) for i in range(1, s // 2 + 1)]
    edges += [(u, v) for u in range(1, s + 1) for v in range(s + 1, n + 1)]
    return Graph.from_edges(n, edges)


_H5A_EDGES = [(1, 2), (1, 4), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)]
_H5B_EDGES = [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
_H9_EDGES = [
    (1, 2), (2, 3), (3, 4), (4, 6), (3, 6), (3, 7), (2, 7), (2, 5), (1, 5),
    (1, 9), (8, 9), (7, 8), (7, 9), (6, 9), (1, 6), (4, 5), (5, 8), (4, 8),
]

_SMALL_GRAPHS = {
    "H5a": (5, _H5A_EDGES),
    "H5b": (5, _H5B_EDGES),
    "H9": (9, _H9_EDGES),
}


def small_graph(name: str) -> Graph:
    """One of the sporadic extremal graphs H5a, H5b, H9 (fixed labeling)."""
    key = {n.lower(): n for n in _SMALL_GRAPHS}.get(name.lower())
    if key is None:
        raise ValueError(f"unknown graph {name!r}; choose from {sorted(_SMALL_GRAPHS)}")
    n, edges = _SMALL_GRAPHS[key]
    return Graph.from_edges(n, edges)


def star_completed_dompair(n: int) -> DomPair:
    """Optimal (3,2) dominating pair whose graph is K+_{(n+1)/2,(n-1)/2}.

    Only this shape has uncovered edges: they form the star at the unmatched
    vertex c = (n+1)/2.  Pairing leaf i with leaf (n-1)/2 + 1 - i covers every
    star edge exactly once with (n-1)/4 extra triples {c, x, y}; D_2 is the
    set of non-edges.  The result dominates, is not independent, and has size
    C(n,2) - floor((n+1)^2/8).
    """
    if n % 4 != 1 or not 9 <= n <= 64:
        raise ValueError(f"need n = 1 (mod 4) with 9 <= n <= 64, got {n}")
    s = (n + 1) // 2
    h = k_plus(s, n)
    center = s
    extra = []
    for i in range(1, (n - 1) // 4 + 1):
        x, y = s + i, n + 1 - i
        extra.append(mask_from_elements((center, x, y)))
    upper = SetFamily.from_masks(n, 3, list(triangles(h).members) + extra)
    edge_masks = {mask_from_elements(e) for e in h.edges()}
    lower = SetFamily.from_masks(
        n, 2, (m for m in enumerate_ksubsets(n, 2) if m not in edge_masks)
    )
    d = DomPair(n, 3, 2, lower, upper)
    assert d.size == binomial(n, 2) - (n + 1) ** 2 // 8
    return d


def _bose_sts(t: int) -> list[tuple[int, int, int]]:
    """Steiner triple system on v = 6t+3 points via an idempotent quasigroup."""
    q = 2 * t + 1
    half = t + 1  # inverse of 2 mod q

    def label(i, r):
        return 1 + i + r * q

    triples = [(label(i, 0), label(i, 1), label(i, 2)) for i in range(q)]
    for i in range(q):
        for j in range(i + 1, q):
            m = (i + j) * half % q
            for r in range(3):
                triples.append((label(i, r), label(j, r), label(m, (r + 1) % 3)))
    return triples


def _skolem_sts(t: int) -> list[tuple[int, int, int]]:
    """Steiner triple system on v = 6t+1 points via a half-idempotent quasigroup."""
    q = 2 * t
    inf = 6 * t + 1

    def h(x):
        return x // 2 if x % 2 == 0 else x // 2 + t

    def label(i, r):
        return 1 + i + r * q

    triples = [(label(i, 0), label(i, 1), label(i, 2)) for i in range(t)]
    for i in range(t):
        triples.append((inf, label(t + i, 0), label(i, 1)))
        triples.append((inf, label(t + i, 1), label(i, 2)))
        triples.append((inf, label(t + i, 2), label(i, 0)))
    for i in range(q):
        for j in range(i + 1, q):
            m = h((i + j) % q)
            for r in range(3):
                triples.append((label(i, r), label(j, r), label(m, (r + 1) % 3)))
    return triples


def steiner_triple_system(v: int) -> SetFamily:
    """An STS(v): v(v-1)/6 triples covering every pair of [v] exactly once."""
    if v % 6 not in (1, 3) or not 7 <= v <= 64:
        raise ValueError(f"no STS on {v} points (need v = 1 or 3 mod 6, 7 <= v <= 64)")
    triples = _bose_sts(v // 6) if v % 6 == 3 else _skolem_sts(v // 6)
    family = SetFamily.from_sets(v, 3, triples)
    assert len(family) == v * (v - 1) // 6
    seen = set()
    for mask in family.members:
        m = mask
        while m:
            low = m & -m
            pair = mask ^ low
            assert pair not in seen, "pair covered twice"
            seen.add(pair)
            m ^= low
    assert len(seen) == binomial(v, 2), "pair missed"
    return family


def greedy_packing(m: int, k: int) -> SetFamily:
    """Maximal family of k-subsets of [m] with pairwise intersections <= k-2.

    Greedy in colex order; equivalently, accept a set iff none of its
    (k-1)-subsets is already covered.  The size is reported by the caller
    against the Graham target ceil(C(m,k)/m) but never guaranteed to meet it.
    """
    if not 1 <= k <= m <= 64:
        raise ValueError(f"need 1 <= k <= m <= 64, got m={m} k={k}")
    covered = set()
    kept = []
    for mask in enumerate_ksubsets(m, k):
        subs = []
        mm = mask
        ok = True
        while mm:
            low = mm & -mm
            sub = mask ^ low
            if sub in covered:
                ok = False
                break
            subs.append(sub)
            mm ^= low
        if ok:
            kept.append(mask)
            covered.update(subs)
    return SetFamily.from_masks(m, k, kept)


def graham_target(m: int, k: int) -> int:
    """ceil(C(m,k)/m), the guaranteed packing size from Graham's theorem."""
    return -(-binomial(m, k) // m)


def _validate_packing(packing: SetFamily, a_size: int, k: int) -> None:
    if packing.n != a_size or packing.k != k:
        raise ValueError(
            f"packing must be {k}-uniform on [{a_size}], got k={packing.k} n={packing.n}"
        )
    if len(packing) and len(shadow(packing)) != k * len(packing):
        raise ValueError("packing has two members sharing k-1 elements")


def base_wellcovered(a_size: int, b_size: int, k: int, packing: SetFamily) -> KGraph:
    """Single layer: edges S + {X + b : X in shadow(S), b in B} on [a_size + b_size].

    Every edge has at most one vertex in B = [a_size+1, a_size+b_size]; the
    (k+1)-cliques are exactly {Y + b : Y in S, b in B}, so
    e - c = |S| + (k-1) |S| |B|.
    """
    if b_size < 1 or a_size + b_size > 64:
        raise ValueError(f"need b >= 1 and a + b <= 64, got a={a_size} b={b_size}")
    _validate_packing(packing, a_size, k)
    n = a_size + b_size
    edges = list(packing.members)
    if len(packing):
        for x in shadow(packing).members:
            for b in range(a_size + 1, n + 1):
                edges.append(x | 1 << (b - 1))
    h = KGraph(n, k, SetFamily.from_masks(n, k, edges))
    assert h.edge_count() == len(packing) * (1 + k * b_size)
    return h


@dataclass(frozen=True)
class LayeredPlan:
    """Partition [n] = A_0 + ... + A_r into consecutive integer intervals.

    Rule-built plans use |A_i| = floor((1-alpha) * remaining tail) while that
    stays >= k, and A_r absorbs the rest; split_ratio is None for explicit
    override plans (such as the 19/7/4 split of the n=30 example).
    """

    n: int
    k: int
    split_ratio: float | None
    parts: tuple[tuple[int, int], ...]  # inclusive intervals (lo, hi)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(hi - lo + 1 for lo, hi in self.parts)


def layered_plan(n: int, k: int, split_ratio: float) -> LayeredPlan:
    """Partition per the geometric rules; the last part absorbs the remainder."""
    if not 0 < split_ratio < 1:
        raise ValueError(f"split ratio must be in (0,1), got {split_ratio}")
    sizes = []
    tail = n
    while floor((1 - split_ratio) * tail) >= k:
        part = floor((1 - split_ratio) * tail)
        sizes.append(part)
        tail -= part
    if not sizes:
        raise ValueError(
            f"rule (iii) unsatisfiable: first part floor((1-a)*{n}) < k = {k}"
        )
    sizes.append(tail)
    parts = []
    lo = 1
    for s in sizes:
        parts.append((lo, lo + s - 1))
        lo += s
    return LayeredPlan(n, k, split_ratio, tuple(parts))


def explicit_plan(sizes: list[int], k: int) -> LayeredPlan:
    """Override plan from explicit part sizes (must partition [sum(sizes)])."""
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise ValueError("need at least two positive parts")
    if any(s < k for s in sizes[:-1]):
        raise ValueError(f"every part but the last must have at least k = {k} points")
    parts = []
    lo = 1
    for s in sizes:
        parts.append((lo, lo + s - 1))
        lo += s
    return LayeredPlan(lo - 1, k, None, tuple(parts))


def default_packer(a_size: int, k: int) -> SetFamily:
    """Steiner triple system when admissible (k=3), greedy packing otherwise."""
    if k == 3 and a_size >= 7 and a_size % 6 in (1, 3):
        return steiner_triple_system(a_size)
    return greedy_packing(a_size, k)


def layered_wellcovered(plan: LayeredPlan, packer=default_packer) -> KGraph:
    """Union of one base layer per part A_0..A_{r-1} (A_r is packing-free).

    Per-layer e - c values are added up and checked against a direct clique
    count of the union: cross-layer cliques would break the sum, so the
    equality is asserted rather than assumed.
    """
    n, k = plan.n, plan.k
    edges = []
    expected_e_minus_c = 0
    for lo, hi in plan.parts[:-1]:
        a_size = hi - lo + 1
        b_size = n - hi
        packing = packer(a_size, k)
        layer = base_wellcovered(a_size, b_size, k, packing)
        offset = lo - 1
        edges.extend(m << offset for m in layer.edges.members)
        expected_e_minus_c += len(packing) * (1 + (k - 1) * b_size)
    h = KGraph(n, k, SetFamily.from_masks(n, k, edges))
    assert h.edge_count() - len(cliques(h)) == expected_e_minus_c, (
        "cross-layer cliques detected; layer sum does not match the union"
    )
    ok, witness = is_well_covered(h)
    assert ok, f"layered construction left edge {elements_of(witness)} uncovered"
    return h


# Figure-derived n = 9 witnesses for G_{4,2}.  The left graph has 25 edges
# and exactly six K4s; the right pattern is the complete tripartite K_{3,3,3}.

_FIG4_LEFT_EDGES = [
    (1, 2), (6, 7), (8, 9), (5, 9), (3, 4), (4, 5),
    (1, 6), (2, 6), (2, 7), (3, 7), (3, 6), (4, 6), (4, 7), (1, 7),
    (1, 8), (2, 8), (2, 9), (1, 9), (5, 7), (5, 6), (5, 8),
    (3, 8), (3, 9), (4, 9), (4, 8),
]

_FIG4_LEFT_CLIQUES = [
    (1, 2, 6, 7), (3, 4, 6, 7), (4, 5, 6, 7),
    (1, 2, 8, 9), (3, 4, 8, 9), (4, 5, 8, 9),
]

_FIG4_RIGHT_PARTS = ((1, 2, 3), (4, 5, 6), (7, 8, 9))

_FIG4_RIGHT_4SETS = [
    (1, 2, 4, 7), (1, 2, 5, 8), (1, 2, 6, 9),
    (3, 4, 5, 9), (3, 6, 7, 8), (4, 5, 7, 8),
]


def fig4_left_graph() -> Graph:
    return Graph.from_edges(9, _FIG4_LEFT_EDGES)


def fig4_left_dompair() -> DomPair:
    """Independent dominating pair of size 17 in G_{4,2} at n = 9."""
    g = fig4_left_graph()
    for quad in _FIG4_LEFT_CLIQUES:
        for i, u in enumerate(quad):
            for v in quad[i + 1:]:
                assert g.has_edge(u, v), f"{quad} does not induce a K4"
    edge_masks = {mask_from_elements(e) for e in g.edges()}
    lower = SetFamily.from_masks(
        9, 2, (m for m in enumerate_ksubsets(9, 2) if m not in edge_masks)
    )
    upper = SetFamily.from_sets(9, 4, _FIG4_LEFT_CLIQUES)
    d = DomPair(9, 4, 2, lower, upper)
    assert d.size == 17
    return d


def fig4_right_dompair() -> DomPair:
    """Non-independent dominating pair of size 15 in G_{4,2} at n = 9."""
    pairs = []
    for part in _FIG4_RIGHT_PARTS:
        for i, u in enumerate(part):
            for v in part[i + 1:]:
                pairs.append((u, v))
    lower = SetFamily.from_sets(9, 2, pairs)
    upper = SetFamily.from_sets(9, 4, _FIG4_RIGHT_4SETS)
    d = DomPair(9, 4, 2, lower, upper)
    assert d.size == 15
    return d


def extremal_graphs(n: int) -> list[Graph]:
    """Graphs that can arise as H(D) of an optimal (3,2) pair, by residue of n."""
    if n % 4 == 0:
        return [k_plus(n // 2, n)]
    if n % 4 == 2:
        return [k_plus((n + 2) // 2, n)]
    if n % 4 == 3:
        return [k_plus((n + 1) // 2, n)]
    graphs = [k_plus((n - 1) // 2, n), k_plus((n + 1) // 2, n), k_plus((n + 3) // 2, n)]
    if n == 5:
        graphs += [small_graph("H5a"), small_graph("H5b")]
    if n == 9:
        graphs.append(small_graph("H9"))
    return graphs


def example1_wellcovered() -> KGraph:
    """n=11, k=3: STS(7) on A=[7], B=[8,11]; 91 edges and 28 cliques."""
    return base_wellcovered(7, 4, 3, steiner_triple_system(7))


def example2_wellcovered() -> KGraph:
    """n=30, k=3: layers [1..19] / [20..26] / [27..30]; 2029 edges, 655 cliques."""
    return layered_wellcovered(explicit_plan([19, 7, 4], 3))
