"""k-uniform hypergraph analytics and the implicit-G_{l,k} verifiers.

The bipartite inclusion graph G_{l,k} (k-sets vs l-sets of [n], adjacency by
containment) is never materialized: the verifiers walk the two levels with
bit-mask containment tests.  For a k-set the candidate dominators above it
are enumerated as supersets (C(n-k, l-k) many) or by scanning the upper
family, whichever is cheaper; dually for l-sets.

Correspondence (l = k+1):  a k-graph H is well-covered when every edge lies
in a (k+1)-clique.  D(H) takes the (k+1)-cliques as upper members and the
non-edges as lower members; it is an independent dominating set of size
C(n,k) - e(H) + c(H).  Conversely the complement of the lower level of an
independent dominating set is a well-covered k-graph, and the two maps are
mutually inverse.

DomPair file format ".dp": two ".sf" sections separated by a line `---`,
lower (k-sets) first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    MAX_GROUND,
    ParseError,
    SetFamily,
    _parse_family_lines,
    binomial,
    elements_of,
    enumerate_ksubsets,
    mask_from_elements,
    write_setfamily,
)
from .graphs import DomPair


@dataclass(frozen=True)
class KGraph:
    """k-uniform hypergraph on [n] with a constant-time edge test."""

    n: int
    k: int
    edges: SetFamily

    def __post_init__(self):
        if not 2 <= self.k <= self.n <= MAX_GROUND:
            raise ValueError(f"need 2 <= k <= n <= {MAX_GROUND}")
        if self.edges.k != self.k or self.edges.n != self.n:
            raise ValueError("edge family must be k-uniform over [n]")
        object.__setattr__(self, "_edge_set", frozenset(self.edges.members))

    @classmethod
    def from_edge_sets(cls, n: int, k: int, sets) -> "KGraph":
        return cls(n, k, SetFamily.from_sets(n, k, sets))

    def is_edge(self, mask: int) -> bool:
        return mask in self._edge_set

    def edge_count(self) -> int:
        return len(self.edges)


def cliques(h: KGraph) -> SetFamily:
    """All (k+1)-sets whose k-subsets are all edges of h."""
    n, k = h.n, h.k
    found = set()
    full = (1 << n) - 1
    for e in h.edges.members:
        outside = full & ~e
        m = outside
        while m:
            low = m & -m
            m ^= low
            cand = e | low
            if cand in found:
                continue
            ok = True
            inner = e
            while inner:
                bit = inner & -inner
                inner ^= bit
                if not h.is_edge(cand ^ bit):
                    ok = False
                    break
            if ok:
                found.add(cand)
    return SetFamily.from_masks(n, k + 1, found)


def is_well_covered(h: KGraph) -> tuple[bool, int | None]:
    """Every edge extendable to a (k+1)-clique?  Witness: colex-least bad edge."""
    full = (1 << h.n) - 1
    for e in h.edges.members:
        covered = False
        outside = full & ~e
        m = outside
        while m and not covered:
            low = m & -m
            m ^= low
            inner = e
            good = True
            while inner:
                bit = inner & -inner
                inner ^= bit
                if not h.is_edge((e ^ bit) | low):
                    good = False
                    break
            covered = good
        if not covered:
            return False, e
    return True, None


def e_minus_c(h: KGraph) -> int:
    """e(H) - c(H), the quantity maximized by optimal well-covered k-graphs."""
    return h.edge_count() - len(cliques(h))


def _dominated_from_above(mask: int, n: int, k: int, l: int, upper_set, upper_members) -> bool:
    """Is some member of the upper family a superset of this k-set mask?"""
    if binomial(n - k, l - k) <= len(upper_members):
        free = [i for i in range(n) if not mask >> i & 1]
        for extra in combinations(free, l - k):
            sup = mask
            for i in extra:
                sup |= 1 << i
            if sup in upper_set:
                return True
        return False
    return any(b & mask == mask for b in upper_members)


def _dominated_from_below(mask: int, k: int, l: int, lower_set, lower_members) -> bool:
    """Does this l-set mask contain a member of the lower family?"""
    if binomial(l, k) <= len(lower_members):
        elems = elements_of(mask)
        for sub in combinations(elems, k):
            if mask_from_elements(sub) in lower_set:
                return True
        return False
    return any(a & mask == a for a in lower_members)


def verify_dominating(d: DomPair) -> tuple[bool, int | None]:
    """Check the domination condition on the implicit G_{l,k}.

    Returns (True, None) or (False, witness) where the witness is the
    colex-least undominated vertex (as a mask; its popcount tells the level).
    """
    n, k, l = d.n, d.k, d.l
    lower_set = frozenset(d.lower.members)
    upper_set = frozenset(d.upper.members)

    lower_witness = None
    for mask in enumerate_ksubsets(n, k):
        if mask in lower_set:
            continue
        if not _dominated_from_above(mask, n, k, l, upper_set, d.upper.members):
            lower_witness = mask
            break

    upper_witness = None
    for mask in enumerate_ksubsets(n, l):
        if mask in upper_set:
            continue
        if not _dominated_from_below(mask, k, l, lower_set, d.lower.members):
            upper_witness = mask
            break

    if lower_witness is None and upper_witness is None:
        return True, None
    witnesses = [w for w in (lower_witness, upper_witness) if w is not None]
    return False, min(witnesses)


def verify_independent(d: DomPair) -> tuple[bool, tuple[int, int] | None]:
    """No lower member contained in an upper member; witness is the first
    violating pair in (lower colex, upper colex) scan order."""
    for a in d.lower.members:
        for b in d.upper.members:
            if a & b == a:
                return False, (a, b)
    return True, None


def dompair_from_wellcovered(h: KGraph) -> DomPair:
    """D(H): cliques on the upper level, non-edges on the lower level."""
    ok, witness = is_well_covered(h)
    if not ok:
        raise ValueError(
            f"hypergraph is not well-covered; uncovered edge {elements_of(witness)}"
        )
    lower = SetFamily.from_masks(
        h.n, h.k, (m for m in enumerate_ksubsets(h.n, h.k) if not h.is_edge(m))
    )
    upper = cliques(h)
    d = DomPair(h.n, h.k + 1, h.k, lower, upper)
    assert d.size == binomial(h.n, h.k) - h.edge_count() + len(upper)
    ok, _ = verify_dominating(d)
    assert ok, "D(H) must dominate"
    ok, _ = verify_independent(d)
    assert ok, "D(H) must be independent"
    return d


def wellcovered_from_dompair(d: DomPair) -> KGraph:
    """H(D): the k-sets outside the lower level as edges.

    Requires d to be independent and dominating.  For l = k+1 the result is
    certified well-covered and round-trips with dompair_from_wellcovered;
    for l > k+1 only the complement construction applies.
    """
    ok, witness = verify_dominating(d)
    if not ok:
        raise ValueError(f"pair is not dominating; witness {elements_of(witness)}")
    ok, pair = verify_independent(d)
    if not ok:
        a, b = pair
        raise ValueError(
            f"pair is not independent; {elements_of(a)} inside {elements_of(b)}"
        )
    lower_set = frozenset(d.lower.members)
    edges = SetFamily.from_masks(
        d.n, d.k, (m for m in enumerate_ksubsets(d.n, d.k) if m not in lower_set)
    )
    h = KGraph(d.n, d.k, edges)
    if d.l == d.k + 1:
        ok, _ = is_well_covered(h)
        assert ok, "complement of an independent dominating pair must be well-covered"
    return h


def write_dompair(d: DomPair, stream) -> None:
    write_setfamily(d.lower, stream)
    stream.write("---\n")
    write_setfamily(d.upper, stream)


def parse_dompair(text: str) -> DomPair:
    lines = text.splitlines()
    sep_line = None
    for i, raw in enumerate(lines, start=1):
        if raw.strip() == "---":
            sep_line = i
            break
    if sep_line is None:
        raise ParseError("missing '---' separator between the two families", len(lines) or 1)
    lower, after = _parse_family_lines(lines[: sep_line - 1], 1)
    for extra in range(after, sep_line):
        if lines[extra - 1].strip():
            raise ParseError("unexpected content before '---'", extra)
    upper, after = _parse_family_lines(lines, sep_line + 1)
    for extra in range(after, len(lines) + 1):
        if lines[extra - 1].strip():
            raise ParseError("unexpected content after upper family", extra)
    if lower.n != upper.n:
        raise ParseError("the two sections disagree on n", sep_line + 1)
    if not lower.k < upper.k:
        raise ParseError("lower section must have smaller cardinality", sep_line + 1)
    return DomPair(lower.n, upper.k, lower.k, lower, upper)


def read_dompair(path) -> DomPair:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_dompair(fh.read())
