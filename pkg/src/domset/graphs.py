"""Simple-graph analytics for the domination translation.

A graph on [n] is stored as per-vertex neighbor masks (bit j-1 of adj[i-1]
is set iff ij is an edge).  The central objective is

    f(H) = |E| - |T| - |E_0|/2,

where T is the set of triangles and E_0 the set of edges in no triangle.
All derived quantities that are halves or quarters of integers are kept in
scaled integers (2f, 2*beta, 4*gamma) so equality checks are exact:

    alpha   = sum over triangles xyz of #{vertices with 0 or 3 neighbors in xyz}
    2*beta  = sum over covered edges of (t(xy)-1) * (d(x)+d(y) - 2 t(xy) - 2)
    4*gamma = sum over vertices of (n + 1 - 2 d(x))^2

The doubled counting identity

    sum d(x)^2 + sum_{xy in E} (t(xy)-1)(d(x)+d(y)-2t(xy)-2)
        = 2 n |T| + 2 |E| - 2 alpha

holds for every graph, and the cross-multiplied inequality

    8n(|E|-|T|) - 4n|E_0| <= n(n+1)^2 - 8|E_0| - 8 alpha - 8 beta - 4 gamma

bounds f by floor((n+1)^2 / 8).

File format ".g": first line `n=<n>`, then one edge `u v` (u < v) per line,
sorted lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import (
    MAX_GROUND,
    ParseError,
    SetFamily,
    elements_of,
    shadow,
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on [n] via adjacency bit masks."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_GROUND}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length differs from n")
        for i, mask in enumerate(self.adj):
            if mask >> self.n:
                raise ValueError("neighbor bit above vertex n")
            if mask >> i & 1:
                raise ValueError(f"self-loop at vertex {i + 1}")
            m = mask
            while m:
                low = m & -m
                j = low.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency {i + 1},{j + 1}")
                m ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v or not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"bad edge ({u},{v}) on [{n}]")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(1, self.n + 1):
            m = self.adj[u - 1] >> u  # neighbors above u
            while m:
                low = m & -m
                out.append((u, u + low.bit_length()))
                m ^= low
        return sorted(out)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def permuted(self, perm: dict[int, int]) -> "Graph":
        """Relabel vertices by the bijection perm: old -> new (1-based)."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


@dataclass(frozen=True)
class DomPair:
    """Candidate dominating set of G_{l,k}, split into its two levels."""

    n: int
    l: int
    k: int
    lower: SetFamily
    upper: SetFamily

    def __post_init__(self):
        if not 1 <= self.k < self.l <= self.n <= MAX_GROUND:
            raise ValueError(f"need 1 <= k < l <= n <= {MAX_GROUND}")
        if self.lower.k != self.k or self.lower.n != self.n:
            raise ValueError("lower family must be k-uniform over [n]")
        if self.upper.k != self.l or self.upper.n != self.n:
            raise ValueError("upper family must be l-uniform over [n]")

    @property
    def size(self) -> int:
        return len(self.lower) + len(self.upper)


@dataclass(frozen=True)
class GraphCertificate:
    """Exact scaled-integer audit of the f-objective for one graph."""

    n: int
    edge_count: int
    triangle_count: int
    uncovered_edges: tuple[tuple[int, int], ...]
    covered_edge_count: int
    f_times_2: int
    alpha: int
    beta_times_2: int
    gamma_times_4: int
    first_step_holds: bool
    final_inequality_holds: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edge_count": self.edge_count,
            "triangle_count": self.triangle_count,
            "uncovered_edges": [list(e) for e in self.uncovered_edges],
            "uncovered_edge_count": len(self.uncovered_edges),
            "covered_edge_count": self.covered_edge_count,
            "f_times_2": self.f_times_2,
            "alpha": self.alpha,
            "beta_times_2": self.beta_times_2,
            "gamma_times_4": self.gamma_times_4,
            "first_step_holds": self.first_step_holds,
            "final_inequality_holds": self.final_inequality_holds,
        }


def triangles(g: Graph) -> SetFamily:
    """All triangle vertex sets {x,y,z}, as a colex-sorted 3-set family."""
    out = []
    for u in range(1, g.n + 1):
        m = g.adj[u - 1] >> u << u  # neighbors v > u
        while m:
            low = m & -m
            v = low.bit_length()
            m ^= low
            common = g.adj[u - 1] & g.adj[v - 1]
            ww = common >> v << v  # w > v keeps each triangle once
            base = (1 << (u - 1)) | (1 << (v - 1))
            while ww:
                lw = ww & -ww
                out.append(base | lw)
                ww ^= lw
    return SetFamily.from_masks(g.n, 3, out)


def edge_stats(g: Graph) -> tuple[dict[tuple[int, int], int], tuple[int, ...]]:
    """t(xy) = |N(x) cap N(y)| per edge, and the per-vertex count t(x)."""
    t_edge = {}
    for u, v in g.edges():
        t_edge[(u, v)] = (g.adj[u - 1] & g.adj[v - 1]).bit_count()
    doubled = [0] * g.n
    for (u, v), t in t_edge.items():
        doubled[u - 1] += t
        doubled[v - 1] += t
    assert all(d % 2 == 0 for d in doubled), "t(x) must be integral"
    return t_edge, tuple(d // 2 for d in doubled)


def uncovered_edges(g: Graph) -> tuple[tuple[int, int], ...]:
    """E_0: the edges contained in no triangle."""
    return tuple(
        (u, v) for u, v in g.edges() if not g.adj[u - 1] & g.adj[v - 1]
    )


def certificate(g: Graph) -> GraphCertificate:
    """Compute every audit quantity exactly and check both counting relations."""
    n = g.n
    tris = triangles(g)
    num_t = len(tris)
    degs = [m.bit_count() for m in g.adj]
    num_e = sum(degs) // 2

    alpha = 0
    for tmask in tris.members:
        x, y, z = elements_of(tmask)
        ax, ay, az = g.adj[x - 1], g.adj[y - 1], g.adj[z - 1]
        inter = ax & ay & az & ~tmask
        union = (ax | ay | az) & ~tmask
        a3 = inter.bit_count()
        a0 = (n - 3) - union.bit_count()
        alpha += a0 + a3

    e0 = []
    beta2 = 0
    lhs_edge_term = 0
    for u, v in g.edges():
        t = (g.adj[u - 1] & g.adj[v - 1]).bit_count()
        term = (t - 1) * (degs[u - 1] + degs[v - 1] - 2 * t - 2)
        lhs_edge_term += term
        if t == 0:
            e0.append((u, v))
        else:
            beta2 += term
    e0 = tuple(e0)

    gamma4 = sum((n + 1 - 2 * d) ** 2 for d in degs)
    f2 = 2 * num_e - 2 * num_t - len(e0)

    lhs = sum(d * d for d in degs) + lhs_edge_term
    rhs = 2 * n * num_t + 2 * num_e - 2 * alpha
    first_step = lhs == rhs

    final = (
        8 * n * (num_e - num_t) - 4 * n * len(e0)
        <= n * (n + 1) ** 2 - 8 * len(e0) - 8 * alpha - 4 * beta2 - gamma4
    )

    return GraphCertificate(
        n=n,
        edge_count=num_e,
        triangle_count=num_t,
        uncovered_edges=e0,
        covered_edge_count=num_e - len(e0),
        f_times_2=f2,
        alpha=alpha,
        beta_times_2=beta2,
        gamma_times_4=gamma4,
        first_step_holds=first_step,
        final_inequality_holds=final,
    )


def f_times_2(g: Graph) -> int:
    return 2 * g.edge_count() - 2 * len(triangles(g)) - len(uncovered_edges(g))


def f_value(g: Graph) -> Fraction:
    """|E| - |T| - |E_0|/2, exactly."""
    return Fraction(f_times_2(g), 2)


def graph_from_dompair(d: DomPair) -> Graph:
    """The associated graph H(D) with edge set shadow(D_3) minus D_2."""
    if (d.l, d.k) != (3, 2):
        raise ValueError("H(D) is defined for (l,k) = (3,2)")
    lower = set(d.lower.members)
    adj = [0] * d.n
    if len(d.upper):
        for pair_mask in shadow(d.upper).members:
            if pair_mask in lower:
                continue
            u, v = elements_of(pair_mask)
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
    return Graph(d.n, tuple(adj))


def matching_set_M(g: Graph) -> list[tuple[int, int]]:
    """Edges xy with N(x) - y = N(y) - x (equivalently t(xy) = (d(x)+d(y))/2 - 1)."""
    out = []
    for u, v in g.edges():
        bits_uv = (1 << (u - 1)) | (1 << (v - 1))
        if g.adj[u - 1] ^ g.adj[v - 1] == bits_uv:
            t = (g.adj[u - 1] & g.adj[v - 1]).bit_count()
            du, dv = g.degree(u), g.degree(v)
            assert 2 * t == du + dv - 2, "matched edge fails the t(xy) characterization"
            out.append((u, v))
    return out


def is_minimal_dominating(d: DomPair) -> bool:
    """True iff removing any single member of the dominating pair breaks domination."""
    from .hypergraph import verify_dominating

    ok, _ = verify_dominating(d)
    if not ok:
        raise ValueError("input pair is not dominating")
    for level in ("lower", "upper"):
        family = getattr(d, level)
        for mask in family.members:
            rest = SetFamily.from_masks(d.n, family.k, (m for m in family.members if m != mask))
            trimmed = DomPair(
                d.n, d.l, d.k,
                rest if level == "lower" else d.lower,
                rest if level == "upper" else d.upper,
            )
            ok, _ = verify_dominating(trimmed)
            if ok:
                return False
    return True


def _iso_invariants(g: Graph) -> list[tuple]:
    _, t_vertex = edge_stats(g)
    degs = [g.degree(v) for v in range(1, g.n + 1)]
    out = []
    for v in range(1, g.n + 1):
        nbr_degs = tuple(sorted(degs[w - 1] for w in elements_of(g.adj[v - 1])))
        out.append((degs[v - 1], t_vertex[v - 1], nbr_degs))
    return out


def isomorphic(g1: Graph, g2: Graph) -> tuple[bool, dict[int, int] | None]:
    """Exact isomorphism test by invariant-pruned backtracking.

    Returns (True, mapping) with mapping a verified bijection g1 -> g2,
    or (False, None).  Intended regime is n <= 16; larger inputs are
    accepted and still answered exactly, just without speed guarantees.
    """
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False, None
    inv1, inv2 = _iso_invariants(g1), _iso_invariants(g2)
    if sorted(inv1) != sorted(inv2):
        return False, None

    n = g1.n
    from collections import Counter

    rarity = Counter(inv1)
    order = sorted(range(1, n + 1), key=lambda v: (rarity[inv1[v - 1]], -g1.degree(v), v))
    cands = {v: [w for w in range(1, n + 1) if inv2[w - 1] == inv1[v - 1]] for v in order}

    mapping: dict[int, int] = {}
    used = [False] * (n + 1)

    def assign(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for u, img in mapping.items():
                if g1.has_edge(v, u) != g2.has_edge(w, img):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if assign(pos + 1):
                return True
            del mapping[v]
            used[w] = False
        return False

    if not assign(0):
        return False, None
    edges_mapped = sorted(tuple(sorted((mapping[u], mapping[v]))) for u, v in g1.edges())
    assert edges_mapped == g2.edges(), "mapping failed verification"
    return True, dict(mapping)


def write_graph(g: Graph, stream) -> None:
    stream.write(f"n={g.n}\n")
    for u, v in g.edges():
        stream.write(f"{u} {v}\n")


def parse_graph(text: str) -> Graph:
    lines = text.splitlines()
    n = None
    edges = []
    header_seen = False
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if not line.startswith("n="):
                raise ParseError(f"expected 'n=<n>' header, got {line!r}", line_no)
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError("bad vertex count", line_no) from None
            if not 1 <= n <= MAX_GROUND:
                raise ParseError(f"vertex count {n} outside 1..{MAX_GROUND}", line_no)
            header_seen = True
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected edge 'u v', got {line!r}", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer edge endpoint in {line!r}", line_no) from None
        if not (1 <= u < v <= n):
            raise ParseError(f"edge ({u},{v}) needs 1 <= u < v <= n", line_no)
        if (u, v) in edges:
            raise ParseError(f"duplicate edge ({u},{v})", line_no)
        edges.append((u, v))
    if not header_seen:
        raise ParseError("missing 'n=<n>' header", 1)
    return Graph.from_edges(n, edges)


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
