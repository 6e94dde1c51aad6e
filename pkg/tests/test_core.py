import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import MANIFEST
from domset.core import (
    ParseError,
    SetFamily,
    VertexSet,
    binomial,
    colex_rank,
    colex_unrank,
    elements_of,
    enumerate_ksubsets,
    mask_from_elements,
    parse_setfamily,
    setfamily_to_text,
    shadow,
)


def test_binomial_small_values():
    assert binomial(5, 2) == 10
    assert binomial(30, 3) == 4060  # 4060 - 2029 = 2031 non-edges in the n=30 build
    assert binomial(4, 0) == 1
    assert binomial(6, -1) == 0
    assert binomial(6, 7) == 0


def test_binomial_brute_force_oracle():
    assert binomial(11, 3) == sum(1 for _ in combinations(range(11), 3))


def test_binomial_fits_one_word():
    assert binomial(64, 32) < 2**64


def test_binomial_rejects_bad_ground():
    with pytest.raises(ValueError):
        binomial(65, 2)


def test_enumerate_explicit():
    got = [elements_of(m) for m in enumerate_ksubsets(3, 2)]
    assert got == [(1, 2), (1, 3), (2, 3)]


def test_enumerate_empty_set_boundary():
    assert list(enumerate_ksubsets(4, 0)) == [0]


def test_enumerate_count():
    assert sum(1 for _ in enumerate_ksubsets(9, 4)) == 126


def test_enumerate_strictly_increasing():
    masks = list(enumerate_ksubsets(8, 3))
    assert all(a < b for a, b in zip(masks, masks[1:]))


def test_colex_rank_minimum():
    assert colex_rank(mask_from_elements([1, 2])) == 0


def test_colex_unrank_maximum():
    n, k = 9, 4
    top = colex_unrank(binomial(n, k) - 1, n, k)
    assert elements_of(top) == (6, 7, 8, 9)


def test_rank_unrank_roundtrip_seeded():
    cfg = MANIFEST["rank_roundtrip"]
    rng = random.Random(cfg["seed"])
    for _ in range(cfg["count"]):
        n = rng.randint(2, 64)
        k = rng.randint(0, n)
        r = rng.randrange(binomial(n, k))
        assert colex_rank(colex_unrank(r, n, k)) == r


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 40), st.data())
def test_rank_unrank_roundtrip_property(n, data):
    k = data.draw(st.integers(0, n))
    r = data.draw(st.integers(0, binomial(n, k) - 1))
    mask = colex_unrank(r, n, k)
    assert mask.bit_count() == k
    assert colex_rank(mask) == r


def test_unrank_out_of_range():
    with pytest.raises(ValueError):
        colex_unrank(binomial(6, 3), 6, 3)


def test_enumerate_rank_unrank_consistent_exhaustive():
    for n in range(0, 21):
        for k in range(0, min(5, n) + 1):
            for r, mask in enumerate(enumerate_ksubsets(n, k)):
                assert colex_rank(mask) == r
                assert colex_unrank(r, n, k) == mask


def test_vertexset_invariants():
    v = VertexSet.of([1, 3, 5], 6)
    assert v.cardinality() == 3
    assert 3 in v and 2 not in v
    with pytest.raises(ValueError):
        VertexSet(1 << 6, 6)


def test_shadow_single_set():
    fam = SetFamily.from_sets(5, 3, [[1, 2, 3]])
    assert shadow(fam).as_elements() == [(1, 2), (1, 3), (2, 3)]


def test_shadow_of_steiner_system_covers_each_pair_once():
    from domset.constructions import steiner_triple_system

    sts = steiner_triple_system(7)
    sh = shadow(sts)
    assert len(sh) == 21
    for pair in enumerate_ksubsets(7, 2):
        preimages = [t for t in sts.members if t & pair == pair]
        assert len(preimages) == 1


def test_shadow_size_of_packing():
    from domset.constructions import greedy_packing

    for m, k in ((7, 3), (10, 4), (9, 2)):
        fam = greedy_packing(m, k)
        assert len(shadow(fam)) == k * len(fam)


def test_shadow_rejects_empty_sets():
    fam = SetFamily.from_masks(4, 0, [0])
    with pytest.raises(ValueError):
        shadow(fam)


def _random_family(rng, n, k):
    pool = list(enumerate_ksubsets(n, k))
    rng.shuffle(pool)
    return SetFamily.from_masks(n, k, pool[: rng.randint(0, len(pool))])


def test_shadow_monotone_and_size_bound():
    cfg = MANIFEST["family_corpus"]
    rng = random.Random(cfg["seed"])
    for _ in range(cfg["count"]):
        n = rng.randint(4, 10)
        k = rng.randint(2, min(4, n))
        fam = _random_family(rng, n, k)
        sub = SetFamily.from_masks(n, k, list(fam.members)[: len(fam) // 2])
        if len(fam) == 0:
            continue
        sub_shadow = set(shadow(sub).members) if len(sub) else set()
        assert sub_shadow <= set(shadow(fam).members)
        assert len(shadow(fam)) <= k * len(fam)
        pairwise_small = all(
            (a & b).bit_count() <= k - 2
            for i, a in enumerate(fam.members)
            for b in fam.members[i + 1:]
        )
        assert (len(shadow(fam)) == k * len(fam)) == pairwise_small


def test_setfamily_rejects_bad_members():
    with pytest.raises(ValueError):
        SetFamily.from_sets(5, 2, [[1, 2, 3]])
    with pytest.raises(ValueError):
        SetFamily.from_sets(4, 2, [[4, 5]])


def test_sf_roundtrip():
    fam = SetFamily.from_sets(6, 2, [[1, 2], [2, 5], [4, 6]])
    text = setfamily_to_text(fam)
    assert text.splitlines()[0] == "n=6 k=2 count=3"
    assert parse_setfamily(text) == fam


def test_sf_accepts_leading_comments():
    text = "# a comment\nn=4 k=2 count=1\n1 3\n"
    fam = parse_setfamily(text)
    assert fam.as_elements() == [(1, 3)]


@pytest.mark.parametrize(
    "text, line",
    [
        ("n=4 k=2 count=2\n1 2\n1 2\n", 3),  # duplicate
        ("n=4 k=2 count=1\n1 2 3\n", 2),  # wrong cardinality
        ("n=4 k=2 count=2\n1 2\n", 3),  # count too large
        ("n=4 k=2 count=1\n1 2\n3 4\n", 3),  # trailing content
        ("n=4 k=2 count=1\n2 1\n", 2),  # not increasing
        ("k=2 n=4 count=1\n1 2\n", 1),  # bad header
    ],
)
def test_sf_rejects_malformed(text, line):
    with pytest.raises(ParseError) as exc:
        parse_setfamily(text)
    assert exc.value.line == line
