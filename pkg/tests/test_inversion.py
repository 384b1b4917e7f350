import pytest

from arcdiagrams import (
    NotAWord,
    TooLarge,
    all_cyclic_perms,
    canonical_half,
    classes_from_word,
    cycle_word,
    neighbor_candidates,
    parse_perm,
    perms_from_word,
    perms_from_word_oracle,
)

MIXED_WORD = "rkrRkR"
MIXED_PERMS = (
    "1 2 4 3 5 6",
    "1 2 4 3 6 5",
    "1 2 5 6 3 4",
    "1 2 6 5 3 4",
    "1 4 3 5 6 2",
    "1 4 3 6 5 2",
    "1 5 6 3 4 2",
    "1 6 5 3 4 2",
)

DYCK_WORD = "rrRrRR"
DYCK_PERMS = (
    "1 3 2 5 4 6",
    "1 3 2 6 4 5",
    "1 5 4 6 2 3",
    "1 6 4 5 2 3",
)


class TestNeighborCandidates:
    def test_mixed_word(self):
        table = neighbor_candidates(classes_from_word(MIXED_WORD))
        assert table == {
            1: frozenset({2, 4, 5, 6}),
            2: frozenset({1, 4, 5, 6}),
            3: frozenset({4, 5, 6}),
            4: frozenset({1, 2, 3}),
            5: frozenset({1, 2, 3, 6}),
            6: frozenset({1, 2, 3, 5}),
        }

    def test_dyck_word(self):
        table = neighbor_candidates(classes_from_word(DYCK_WORD))
        assert table == {
            1: frozenset({3, 5, 6}),
            2: frozenset({3, 5, 6}),
            3: frozenset({1, 2}),
            4: frozenset({5, 6}),
            5: frozenset({1, 2, 4}),
            6: frozenset({1, 2, 4}),
        }

    def test_smallest_word(self):
        table = neighbor_candidates(classes_from_word("rkR"))
        assert table == {
            1: frozenset({2, 3}),
            2: frozenset({1, 3}),
            3: frozenset({1, 2}),
        }


class TestPermsFromWord:
    def test_fig6(self):
        assert tuple(map(str, perms_from_word(MIXED_WORD))) == MIXED_PERMS

    def test_fig7(self):
        assert tuple(map(str, perms_from_word(DYCK_WORD))) == DYCK_PERMS

    def test_smallest(self):
        assert tuple(map(str, perms_from_word("rkR"))) == ("1 2 3", "1 3 2")

    def test_not_a_word(self):
        for bad in ("rR", "rrkR", "rkRrkR"):
            with pytest.raises(NotAWord):
                perms_from_word(bad)

    def test_sound_and_reverse_closed(self):
        for word in (MIXED_WORD, DYCK_WORD, "rrkkRR"):
            result = perms_from_word(word)
            for p in result:
                assert cycle_word(p) == word
                assert p.reverse() in result

    def test_partition_of_universe(self):
        # distinct words chop the universe into disjoint pieces that cover it
        for n in range(3, 7):
            universe = list(all_cyclic_perms(n))
            seen = []
            for word in sorted({cycle_word(p) for p in universe}):
                seen.extend(perms_from_word(word))
            assert sorted(seen) == universe


class TestOracle:
    def test_matches_search(self):
        for n in range(3, 7):
            for word in sorted({cycle_word(p) for p in all_cyclic_perms(n)}):
                assert perms_from_word(word) == perms_from_word_oracle(word)

    def test_matches_search_sampled_large(self):
        # a few words sampled from the bigger universes
        import random

        rng = random.Random(7)
        for n in (8, 9):
            words = sorted({cycle_word(p) for p in all_cyclic_perms(n)})
            for word in rng.sample(words, 3):
                assert perms_from_word(word) == perms_from_word_oracle(word)

    def test_flat_pair_word(self):
        found = set(map(str, perms_from_word_oracle("rrkkRR")))
        assert {"1 4 6 2 3 5", "1 3 5 2 4 6"} <= found

    def test_too_large(self):
        with pytest.raises(TooLarge):
            perms_from_word_oracle("r" * 11)


class TestCanonicalHalf:
    def test_halves_and_covers(self):
        full = perms_from_word(MIXED_WORD)
        half = canonical_half(full)
        assert len(half) * 2 == len(full)
        assert sorted(list(half) + [p.reverse() for p in half]) == sorted(full)

    def test_second_below_last(self):
        for p in canonical_half(perms_from_word(DYCK_WORD)):
            assert p.seq[1] < p.seq[-1]


def test_fig6_list_is_the_true_one():
    # the eighth member is 1 4 3 6 5 2 (the reverse of 1 2 5 6 3 4); the
    # variant 1 4 3 6 2 5 sometimes quoted has a different word entirely
    assert cycle_word(parse_perm("1 4 3 6 5 2")) == MIXED_WORD
    assert cycle_word(parse_perm("1 4 3 6 2 5")) == "rrrRRR"
