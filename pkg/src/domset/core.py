"""Exact bit-mask combinatorics over a ground set [n] with n <= 64.

Conventions used by the whole package:

* An element i of [n] = {1, ..., n} is stored as bit i-1 of a Python int,
  so a subset of [n] is a single machine-word sized mask.
* Families of subsets are deduplicated and sorted by mask value.  For sets
  of equal cardinality this is exactly colexicographic order, and comparing
  masks of different cardinality extends colex to a total order on all
  finite subsets (the largest element of the symmetric difference decides).
* All arithmetic in this module is exact integer arithmetic.

File format ".sf" (see `write_setfamily` / `parse_setfamily`):
    # optional comment lines
    n=<n> k=<k> count=<m>
    <m lines, each a set as strictly increasing 1-based elements>
Lines are emitted in colex order so serialized families are byte-stable.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

MAX_GROUND = 64

# Largest binomial on the supported ground set must fit one unsigned word.
assert comb(MAX_GROUND, MAX_GROUND // 2) < 2**64


class ParseError(ValueError):
    """Malformed input file; carries the 1-based offending line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 for k outside 0..n.

    Total on 0 <= n <= 64; raises only if n itself is out of range.
    """
    if not 0 <= n <= MAX_GROUND:
        raise ValueError(f"ground size {n} outside 0..{MAX_GROUND}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def mask_from_elements(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    """1-based elements of a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class VertexSet:
    """A subset of [n] as a bit mask (bit i-1 <=> element i present)."""

    bits: int
    n: int

    def __post_init__(self):
        if not 2 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground size {self.n} outside 2..{MAX_GROUND}")
        if self.bits >> self.n:
            raise ValueError("set bit above ground position n")

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "VertexSet":
        return cls(mask_from_elements(elements), n)

    def cardinality(self) -> int:
        return self.bits.bit_count()

    def elements(self) -> tuple[int, ...]:
        return elements_of(self.bits)

    def __contains__(self, element: int) -> bool:
        return bool(self.bits >> (element - 1) & 1)


def enumerate_ksubsets(n: int, k: int) -> Iterator[int]:
    """Yield the masks of all k-subsets of [n] in colex (= numeric) order.

    Uses Gosper's hack: the numerically-next mask with the same popcount.
    """
    if not 0 <= k <= n <= MAX_GROUND:
        raise ValueError(f"need 0 <= k <= n <= {MAX_GROUND}, got n={n} k={k}")
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def colex_rank(s) -> int:
    """Colex rank of a k-set among all k-subsets (of any ground set).

    Accepts a VertexSet or a raw mask.  rank({c_1 < ... < c_k}) =
    sum_i C(c_i - 1, i).
    """
    mask = s.bits if isinstance(s, VertexSet) else s
    rank = 0
    for i, c in enumerate(elements_of(mask), start=1):
        rank += comb(c - 1, i)
    return rank


def colex_unrank(rank: int, n: int, k: int) -> int:
    """Inverse of colex_rank: the mask of the k-subset of [n] with this rank."""
    total = binomial(n, k)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} outside 0..{total - 1} for (n,k)=({n},{k})")
    mask = 0
    c = n
    for i in range(k, 0, -1):
        while comb(c - 1, i) > rank:
            c -= 1
        rank -= comb(c - 1, i)
        mask |= 1 << (c - 1)
        c -= 1
    return mask


@dataclass(frozen=True)
class SetFamily:
    """Deduplicated family of uniform-cardinality subsets of [n], colex-sorted."""

    n: int
    k: int
    members: tuple[int, ...]

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "SetFamily":
        members = tuple(sorted(set(masks)))
        for m in members:
            if m >> n:
                raise ValueError(f"member {elements_of(m)} exceeds ground [{n}]")
            if m.bit_count() != k:
                raise ValueError(
                    f"member {elements_of(m)} has cardinality {m.bit_count()}, expected {k}"
                )
        return cls(n, k, members)

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls.from_masks(n, k, (mask_from_elements(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def as_elements(self) -> list[tuple[int, ...]]:
        return [elements_of(m) for m in self.members]


def shadow(family: SetFamily) -> SetFamily:
    """The (k-1)-shadow: all (k-1)-subsets of members, deduplicated."""
    if family.k < 1:
        raise ValueError("shadow undefined for a family of empty sets")
    out = set()
    for mask in family.members:
        m = mask
        while m:
            low = m & -m
            out.add(mask ^ low)
            m ^= low
    return SetFamily.from_masks(family.n, family.k - 1, out)


_HEADER_RE = re.compile(r"^n=(\d+)\s+k=(\d+)\s+count=(\d+)\s*$")


def write_setfamily(family: SetFamily, stream) -> None:
    stream.write(f"n={family.n} k={family.k} count={len(family)}\n")
    for mask in family.members:
        stream.write(" ".join(str(e) for e in elements_of(mask)) + "\n")


def setfamily_to_text(family: SetFamily) -> str:
    buf = io.StringIO()
    write_setfamily(family, buf)
    return buf.getvalue()


def _parse_family_lines(lines, start_line: int) -> tuple[SetFamily, int]:
    """Parse one family section from (line_number, text) pairs.

    Returns the family and the line number after the section.
    """
    idx = start_line
    header = None
    for idx in range(start_line, len(lines) + 1):
        if idx > len(lines):
            break
        text = lines[idx - 1].strip()
        if not text or text.startswith("#"):
            continue
        header = text
        break
    if header is None:
        raise ParseError("missing family header", start_line)
    m = _HEADER_RE.match(header)
    if not m:
        raise ParseError(f"bad header {header!r}, expected 'n=<n> k=<k> count=<m>'", idx)
    n, k, count = (int(g) for g in m.groups())
    if not 2 <= n <= MAX_GROUND:
        raise ParseError(f"ground size {n} outside 2..{MAX_GROUND}", idx)
    masks = []
    line_no = idx
    for _ in range(count):
        line_no += 1
        if line_no > len(lines):
            raise ParseError(f"expected {count} member lines, file ended early", line_no)
        text = lines[line_no - 1].strip()
        parts = text.split()
        try:
            elems = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer token in {text!r}", line_no) from None
        if len(elems) != k:
            raise ParseError(f"set has {len(elems)} elements, expected k={k}", line_no)
        if any(not 1 <= e <= n for e in elems):
            raise ParseError("element outside 1..n", line_no)
        if sorted(elems) != elems or len(set(elems)) != len(elems):
            raise ParseError("elements must be strictly increasing", line_no)
        mask = mask_from_elements(elems)
        if mask in masks:
            raise ParseError("duplicate member", line_no)
        masks.append(mask)
    family = SetFamily.from_masks(n, k, masks)
    return family, line_no + 1


def parse_setfamily(text: str) -> SetFamily:
    lines = text.splitlines()
    family, next_line = _parse_family_lines(lines, 1)
    for extra in range(next_line, len(lines) + 1):
        if lines[extra - 1].strip():
            raise ParseError("unexpected content after family", extra)
    return family


def read_setfamily(path) -> SetFamily:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_setfamily(fh.read())
