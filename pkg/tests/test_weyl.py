"""Window arithmetic, length, covers, and the code bijection."""

import pytest
from hypothesis import given, settings, strategies as st

from affine_schubert.cartan import simple_root
from affine_schubert.symfunc import partitions
from affine_schubert.weyl import (
    AffinePermutation,
    NotGrassmannian,
    bruhat_covers_down,
    elements_by_length,
    from_word,
    grassmannian_to_partition,
    grassmannians_by_length,
    identity,
    length_via_formula,
    orbit_cosets,
    parse_partition,
    parse_word,
    partition_text,
    partition_to_grassmannian,
    reduced_word,
    simple_reflection,
    translation,
)

words = st.lists(st.integers(min_value=0, max_value=3), max_size=8)
ranks = st.integers(min_value=2, max_value=4)


class TestWindows:
    def test_identity(self):
        assert from_word(3, ()).window == (1, 2, 3)

    def test_involution(self):
        assert from_word(3, (1, 1)).window == (1, 2, 3)

    def test_s1s0_window(self):
        assert from_word(3, (1, 0)).window == (0, 1, 5)

    def test_translation_windows(self):
        assert translation((1, -1)).window == (3, 0)
        assert translation((0, 1, -1)).window == (1, 5, 0)
        assert from_word(2, reduced_word(translation((1, -1)))).window == (3, 0)

    def test_translation_needs_zero_sum(self):
        with pytest.raises(ValueError):
            translation((1, 0))

    def test_window_validation(self):
        with pytest.raises(ValueError):
            AffinePermutation(3, (1, 1, 4))
        with pytest.raises(ValueError):
            AffinePermutation(3, (2, 3, 4))

    def test_text(self):
        assert from_word(3, (1, 0)).text() == "[0,1,5]"


class TestLength:
    def test_basics(self):
        assert identity(3).length() == 0
        assert simple_reflection(3, 0).length() == 1
        assert translation((1, -1, 0)).length() == 4

    def test_formula_examples(self):
        assert length_via_formula((1, 2), (0, 0)) == 0
        assert length_via_formula((1, 2), (1, -1)) == 2
        assert length_via_formula((2, 1, 3), (0, 0, 0)) == 1

    def test_formula_agrees_with_inversions(self):
        for d, level in enumerate(elements_by_length(3, 5)):
            for w in level:
                u, lam = w.finite_and_coroot()
                assert length_via_formula(u, lam) == d == w.length()


class TestGroupLaw:
    def test_inverse(self):
        w = from_word(4, (0, 2, 1, 3, 0))
        assert (w * w.inverse()).is_identity()

    def test_translation_lattice(self):
        lam, mu = (1, -1, 0), (0, 2, -2)
        assert translation(lam) * translation(mu) == translation((1, 1, -2))

    def test_translation_conjugation(self):
        w = from_word(3, (1, 2))
        lam = (1, 0, -1)
        u, _ = w.finite_and_coroot()
        conj = [0] * 3
        for i in range(3):
            conj[u[i] - 1] = lam[i]  # (w.lam)_{w(i)} = lam_i
        assert w * translation(lam) * w.inverse() == translation(tuple(conj))


class TestWords:
    def test_reduced_word_roundtrip(self):
        for level in elements_by_length(3, 5):
            for w in level:
                word = reduced_word(w)
                assert len(word) == w.length()
                assert from_word(3, word) == w

    def test_parse_forms(self):
        assert parse_word("s1 s0 s2") == (1, 0, 2)
        assert parse_word("") == ()
        assert parse_partition("(2,1)") == (2, 1)
        assert parse_partition("()") == ()
        assert partition_text((2, 1)) == "(2,1)"


class TestCovers:
    def test_identity(self):
        assert bruhat_covers_down(identity(3)) == []

    def test_simple(self):
        [(v, alpha)] = bruhat_covers_down(simple_reflection(3, 1))
        assert v.is_identity()
        assert alpha == simple_root(3, 1)

    def test_s1s0_two_covers(self):
        covers = bruhat_covers_down(from_word(3, (1, 0)))
        assert {v for v, _ in covers} == {
            simple_reflection(3, 0),
            simple_reflection(3, 1),
        }

    def test_deletion_oracle(self):
        # independently enumerate deletions from every reduced word found
        # by descent stripping variants is overkill; the canonical word
        # already determines the cover set, checked against lengths
        for level in elements_by_length(3, 4):
            for w in level:
                covers = bruhat_covers_down(w)
                for v, _alpha in covers:
                    assert v.length() == w.length() - 1
                word = reduced_word(w)
                seen = set()
                for j in range(len(word)):
                    v = from_word(3, word[:j] + word[j + 1 :])
                    if v.length() == len(word) - 1:
                        seen.add(v)
                assert {v for v, _ in covers} == seen


class TestGrassmannian:
    def test_examples(self):
        assert identity(3).is_grassmannian()
        assert simple_reflection(3, 0).is_grassmannian()
        assert not simple_reflection(3, 1).is_grassmannian()

    def test_antidominant_translations(self):
        # W^0 cap Q^vee = antidominant coroots
        for lam in orbit_cosets((1, 0, -1)):
            assert translation(lam).is_grassmannian() == (
                list(lam) == sorted(lam)
            )

    def test_code_bijection_examples(self):
        assert grassmannian_to_partition(identity(3)) == ()
        assert grassmannian_to_partition(simple_reflection(3, 0)) == (1,)
        assert grassmannian_to_partition(from_word(3, (1, 0))) == (2,)
        assert grassmannian_to_partition(from_word(3, (2, 0))) == (1, 1)
        assert partition_to_grassmannian(3, (2,)) == from_word(3, (1, 0))

    def test_bijection_counts(self):
        for n in (2, 3, 4):
            levels = grassmannians_by_length(n, 6)
            for d in range(7):
                assert len(levels[d]) == len(partitions(d, n - 1))
                seen = {grassmannian_to_partition(w) for w in levels[d]}
                assert seen == set(partitions(d, n - 1))
                for w in levels[d]:
                    assert partition_to_grassmannian(
                        n, grassmannian_to_partition(w)
                    ) == w

    def test_rejects_non_grassmannian(self):
        with pytest.raises(NotGrassmannian):
            grassmannian_to_partition(simple_reflection(3, 1))


class TestOrbits:
    def test_examples(self):
        assert orbit_cosets((0, 0)) == [(0, 0)]
        assert set(orbit_cosets((1, -1))) == {(1, -1), (-1, 1)}
        assert len(orbit_cosets((1, 1, -2))) == 3


@given(ranks, words)
@settings(max_examples=80, deadline=None)
def test_word_products_consistent(n, word):
    word = tuple(i % n for i in word)
    w = from_word(n, word)
    assert w.length() <= len(word)
    assert (w.length() - len(word)) % 2 == 0
    assert from_word(n, reduced_word(w)) == w


@given(ranks, words)
@settings(max_examples=50, deadline=None)
def test_inverse_is_involution(n, word):
    w = from_word(n, tuple(i % n for i in word))
    assert w.inverse().inverse() == w
    assert w.inverse().length() == w.length()
