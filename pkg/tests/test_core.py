"""Value types: words, permutations, labels, composition, word streams."""

import itertools

import pytest

from shiish import BudgetError, Label, Permutation, Word, all_words, compose


def test_word_validation():
    Word((1, 2, 3))
    with pytest.raises(ValueError):
        Word(())
    with pytest.raises(ValueError):
        Word((0, 1))
    with pytest.raises(ValueError):
        Word((1, 4, 2))  # 4 > n = 3
    with pytest.raises(ValueError):
        Word((1, "2", 3))


def test_word_access_is_one_based():
    w = Word((4, 2, 1, 3))
    assert w[1] == 4 and w[4] == 3
    assert w.n == 4
    with pytest.raises(IndexError):
        w[0]
    with pytest.raises(IndexError):
        w[5]


def test_word_parse_forms():
    assert Word.parse("4213").values == (4, 2, 1, 3)
    assert Word.parse("4,2,1,3").values == (4, 2, 1, 3)
    assert Word.parse("[4, 2, 1, 3]").values == (4, 2, 1, 3)
    with pytest.raises(ValueError):
        Word.parse("12345678910")  # digit strings stop at n = 9
    with pytest.raises(ValueError):
        Word.parse("not a word")


def test_word_compact_and_json():
    w = Word((4, 2, 1, 3))
    assert w.compact() == "4213"
    assert w.to_json() == [4, 2, 1, 3]
    big = Word(tuple([1] * 10))
    assert big.compact() is None


def test_permutation_validation_and_calls():
    p = Permutation((2, 3, 1))
    assert p(1) == 2 and p(3) == 1
    assert p.inverse().images == (3, 1, 2)
    assert Permutation.identity(3).is_identity()
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((0, 1, 2))


def test_permutation_compose_order():
    u = Permutation((2, 3, 1))
    v = Permutation((3, 1, 2))
    uv = u.compose(v)
    assert uv.images == tuple(u(v(i)) for i in (1, 2, 3))
    assert uv.is_identity()


def test_label_validation():
    assert Label((1, 2, 1)).n == 3
    assert str(Label((2, 3, 1, 1))) == "2311"
    with pytest.raises(ValueError):
        Label((1, 0))
    with pytest.raises(ValueError):
        Label(())


def test_compose_worked_example():
    # tail-sorted word composed with its witness permutation
    a = Word((2, 6, 6, 3, 1, 4, 6, 1))
    w = Permutation((8, 5, 4, 1, 2, 3, 6, 7))
    assert compose(a, w).values == (1, 1, 3, 2, 6, 6, 4, 6)


def test_compose_identity_and_direct_substitution():
    a = Word((4, 2, 1, 3))
    assert compose(a, Permutation.identity(4)) == a
    assert compose(Word((1, 2, 3)), Permutation((3, 2, 1))).values == (3, 2, 1)


def test_compose_dimension_mismatch():
    with pytest.raises(ValueError):
        compose(Word((1, 2)), Permutation.identity(3))


def test_compose_is_an_action():
    # a o identity = a and (a o u) o v = a o (u o v), exhaustively for n = 3
    perms = [Permutation(p) for p in itertools.permutations((1, 2, 3))]
    for a in all_words(3):
        assert compose(a, Permutation.identity(3)) == a
        for u in perms:
            for v in perms:
                assert compose(compose(a, u), v) == compose(a, u.compose(v))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_all_words_counts_and_order(n):
    words = list(all_words(n))
    assert len(words) == n**n
    assert len(set(words)) == n**n
    values = [w.values for w in words]
    assert values == sorted(values)  # lexicographic


def test_all_words_edges():
    assert [w.values for w in all_words(1)] == [(1,)]
    assert [w.values for w in all_words(2)] == [(1, 1), (1, 2), (2, 1), (2, 2)]
    with pytest.raises(BudgetError):
        list(all_words(8))
    assert next(all_words(8, cap=8)).values == (1,) * 8  # cap is adjustable
    with pytest.raises(ValueError):
        list(all_words(0))
