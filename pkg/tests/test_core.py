import pytest
from hypothesis import given, strategies as st

from ogsbn import CoxeterWord, RankError, SignedPermutation, compose, embed, eval_word, generator, identity, inverse
from ogsbn.ogs import OgsExponents, from_ogs

from conftest import signed_perms


def test_window_validation():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))
    with pytest.raises(ValueError):
        SignedPermutation((0, 1))
    with pytest.raises(ValueError):
        SignedPermutation(())


def test_call_extends_oddly():
    w = SignedPermutation((-2, 1))
    assert [w(j) for j in (-2, -1, 0, 1, 2)] == [-1, 2, 0, -2, 1]


def test_compose_is_left_to_right():
    a = generator(1, 2)
    b = generator(0, 2)
    w = compose(a, b)
    assert all(w(j) == b(a(j)) for j in (1, 2))
    assert w.window == (2, -1)


def test_compose_identity_left():
    w = SignedPermutation((3, -1, 2))
    assert compose(identity(3), w) == w


def test_compose_rank_mismatch():
    with pytest.raises(RankError):
        compose(identity(2), identity(3))


def test_compose_worked_example_rank4():
    a = from_ogs(OgsExponents.from_factors(4, [(1, -1), (2, 1), (3, -1)]))
    b = from_ogs(OgsExponents.from_factors(4, [(4, -3)]))
    assert compose(a, b).window == (-2, -1, -4, -3)


def test_compose_worked_example_rank5():
    a = from_ogs(OgsExponents.from_factors(5, [(3, -2), (4, -1)]))
    b = from_ogs(OgsExponents.from_factors(5, [(5, 3)]))
    assert compose(a, b).window == (1, 4, 5, 3, 2)


def test_inverse_examples():
    assert inverse(identity(3)) == identity(3)
    s0 = SignedPermutation((-1, 2, 3))
    assert inverse(s0) == s0
    w = SignedPermutation((-2, -1, -4, -3))
    assert compose(w, inverse(w)) == identity(4)


def test_eval_word_examples():
    assert eval_word([], 3) == identity(3)
    assert eval_word([0, 1, 2], 3).window == (-3, 1, 2)
    assert eval_word([0, 1, 0, 1], 2) == eval_word([1, 0, 1, 0], 2)


def test_eval_word_rejects_bad_letter():
    with pytest.raises(ValueError):
        eval_word([3], 3)
    with pytest.raises(ValueError):
        CoxeterWord(2, (2,))


def test_word_concat_and_str():
    w = CoxeterWord(3, (0, 1)) + CoxeterWord(3, (2,))
    assert str(w) == "s0 s1 s2"
    assert w.evaluate() == eval_word([0, 1, 2], 3)
    with pytest.raises(RankError):
        CoxeterWord(2, ()) + CoxeterWord(3, ())


def test_embed():
    assert embed(SignedPermutation((-1,)), 3).window == (-1, 2, 3)
    with pytest.raises(RankError):
        embed(identity(3), 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_coxeter_relations(n):
    e = identity(n)
    s = [generator(i, n) for i in range(n)]
    for i in range(n):
        assert s[i] * s[i] == e
    x = s[0] * s[1]
    assert x * x * x * x == e
    for i in range(1, n - 1):
        y = s[i] * s[i + 1]
        assert y * y * y == e
    for i in range(n):
        for j in range(i + 2, n):
            z = s[i] * s[j]
            assert z * z == e


@given(signed_perms(), st.data())
def test_compose_associative(a, data):
    b = data.draw(signed_perms(a.n, a.n))
    c = data.draw(signed_perms(a.n, a.n))
    assert (a * b) * c == a * (b * c)
    assert a * identity(a.n) == a == identity(a.n) * a
    assert a * ~a == identity(a.n)


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(0, n - 1), max_size=12), st.lists(st.integers(0, n - 1), max_size=12))))
def test_eval_word_is_homomorphism(args):
    n, u, v = args
    assert eval_word(u + v, n) == compose(eval_word(u, n), eval_word(v, n))


@given(signed_perms())
def test_unsigned_is_permutation(w):
    assert sorted(w.unsigned()) == list(range(1, w.n + 1))
