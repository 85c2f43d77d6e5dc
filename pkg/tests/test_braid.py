import pytest
from hypothesis import given, strategies as st

from alexfoam.braid import BraidWord, MarkedClosure, ParseError, markov_stabilize, parse_closure, rectify


@pytest.mark.parametrize(
    "text, strands, word, bp",
    [
        ("strands=2; word=1 1 1; bp=2", 2, [1, 1, 1], 2),
        ("strands=3; word=1 -2 1 -2; bp=3", 3, [1, -2, 1, -2], 3),
        ("strands=1; word=; bp=1", 1, [], 1),
    ],
)
def test_parse_examples(text, strands, word, bp):
    c = parse_closure(text)
    assert (c.strands, c.word.to_ints(), c.strand, c.height) == (strands, word, bp, 0)
    assert parse_closure(str(c)) == c


@pytest.mark.parametrize(
    "text, token",
    [
        ("strands=2; word=1 1 1; bp=5", "'5'"),
        ("strands=2; word=1 x 1; bp=2", "'x'"),
        ("strands=2; word=1 2; bp=2", "'2'"),
        ("strands=2; word=1 1 1", "'bp'"),
        ("strands=2; wurd=1; bp=2", "'wurd'"),
        ("strands=2; word=1 0; bp=2", "'0'"),
        ("strands=two; word=; bp=1", "'two'"),
    ],
)
def test_parse_errors_name_token(text, token):
    with pytest.raises(ParseError, match=token):
        parse_closure(text)


def test_parse_base_point_height():
    c = parse_closure("strands=2; word=1 1 1; bp=1@2")
    assert (c.strand, c.height) == (1, 2)


def test_word_statistics():
    w = BraidWord.from_ints(3, [1, -2, 1, -2])
    assert (w.n_plus, w.n_minus, w.writhe) == (2, 2, 0)
    assert w.components() == 1
    assert BraidWord.from_ints(2, [1, 1]).components() == 2


def test_rectify_already_rightmost_is_identity():
    c = parse_closure("strands=2; word=1 1 1; bp=2")
    assert rectify(c) is c
    u = parse_closure("strands=1; word=; bp=1")
    assert rectify(u) is u


def test_rectify_adds_cancelling_pair():
    r = rectify(parse_closure("strands=2; word=1 1 1; bp=1"))
    assert r.strand == 2 and r.height == 0
    assert r.word.to_ints() == [-1, 1, 1, 1, 1]
    assert len(r.word) == 5


def test_rectify_deeper_base_point():
    r = rectify(parse_closure("strands=3; word=1 -2 1 -2; bp=1"))
    assert r.word.to_ints() == [-2, -1, 1, -2, 1, -2, 1, 2]
    assert r.strand == 3


words = st.integers(1, 4).flatmap(
    lambda k: st.tuples(
        st.just(k),
        st.lists(st.integers(1, max(k - 1, 1)).flatmap(lambda i: st.sampled_from([i, -i])), max_size=6)
        if k > 1
        else st.just([]),
        st.integers(1, k),
    )
)


@given(words)
def test_rectify_idempotent_and_writhe(data):
    k, word, bp = data
    c = MarkedClosure(BraidWord.from_ints(k, word), bp)
    r = rectify(c)
    assert rectify(r) == r
    assert r.strand == k
    assert r.word.writhe == c.word.writhe
    assert r.word.components() == c.word.components()
    assert r.depth == 0


@pytest.mark.parametrize(
    "text, sign, strands, word, bp",
    [
        ("strands=1; word=; bp=1", 1, 2, [1], 2),
        ("strands=2; word=1 1 1; bp=2", -1, 3, [1, 1, 1, -2], 3),
    ],
)
def test_markov_stabilize_examples(text, sign, strands, word, bp):
    s = markov_stabilize(parse_closure(text), sign)
    assert (s.strands, s.word.to_ints(), s.strand) == (strands, word, bp)


def test_double_stabilization():
    u = parse_closure("strands=1; word=; bp=1")
    s = markov_stabilize(markov_stabilize(u, 1), 1)
    assert (s.strands, s.word.to_ints(), s.strand) == (3, [1, 2], 3)


def test_markov_requires_rightmost_base_point():
    with pytest.raises(ValueError):
        markov_stabilize(parse_closure("strands=2; word=1; bp=1"), 1)
