import pytest
from hypothesis import given, settings, strategies as st

from skewgentle import corpus
from skewgentle.algebra import InputError
from skewgentle.verify import verify_successor
from skewgentle.words import HatQuiver, TaggedWord, Trivial, WordError, primitive_period, validate_word

EX6_WORDS = HatQuiver(corpus.algebra("ex6")).enumerate_admissible(7)


def test_letter_sets_are_ordered(ex6_hq):
    assert [l.text() for l in ex6_hq.qset("2", 1)] == ["a^-", "z(2,+)", "b"]
    for v in ex6_hq.triple.vertices:
        for th in (1, -1):
            kinds = [l.kind for l in ex6_hq.qset(v, th)]
            assert kinds.count("end") == 1
            assert kinds.index("end") == sum(k == "inv" for k in kinds)


def test_letter_compare_across_sets_is_undefined(ex6_hq):
    a = ex6_hq.parse_letter("a")
    h = ex6_hq.parse_letter("h")
    assert ex6_hq.letter_cmp(a, h) is None


def test_validate_word_errors(ex6_hq):
    with pytest.raises(WordError):
        validate_word([ex6_hq.parse_letter("a"), ex6_hq.parse_letter("c")])
    with pytest.raises(WordError):
        validate_word([])
    with pytest.raises(InputError):
        ex6_hq.parse_letter("z(1,*)")


def test_trivial_word(ex6_hq):
    w = ex6_hq.parse_word("1@3")
    assert w.trivial and w.anchor == "3"


def test_primitive_period():
    assert primitive_period("abab") == 2
    assert primitive_period("abc") == 3
    assert primitive_period("aaaa") == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(EX6_WORDS))
def test_inverse_and_canonical(tw):
    hq = HatQuiver(corpus.algebra("ex6"))
    w = tw.word
    assert hq.inverse(hq.inverse(w)) == w
    assert hq.canonical(tw) == tw
    flipped = TaggedWord(hq.inverse(w), (tw.tags[1], tw.tags[0]))
    assert hq.canonical(flipped) == tw
    assert hq.parse_tagged(tw.text()) == tw


def test_inadmissible_words_are_detected(ex6_hq):
    rep = ex6_hq.admissibility(ex6_hq.parse_word("z(1,+)^- e1^- z(1,+)"))
    assert not rep.ok and rep.clause == "A1"
    assert ex6_hq.is_admissible(ex6_hq.parse_word("z(1,-)^- b^- z(2,-)"))


def test_completion_of_one_special_end(ex6_hq):
    w = ex6_hq.parse_word("z(1,-)^- b^- z(2,-)")
    assert ex6_hq.completion(w).text() == "z(2,-)^- b e1 b^- z(2,-)"


def test_successor_example(ex6_hq):
    w = ex6_hq.parse_word("z(1,-)^- b^- z(2,-)")
    assert ex6_hq.successor(w).text() == "z(1,-)^- b^- h g^- z(6,+)"


@pytest.mark.parametrize("name", ["gamma1", "gamma2", "gamma3"])
def test_rotation_of_example_curves(ex6_hq, name):
    r = ex6_hq.tagged_rotation(corpus.ex6_word(ex6_hq, name))
    assert r == ex6_hq.canonical(corpus.ex6_word(ex6_hq, "rho_" + name))


def test_projective_rotation_is_trivial():
    hq = HatQuiver(corpus.algebra("a2"))
    for tw in hq.enumerate_admissible(4):
        if hq.is_projective(tw):
            assert isinstance(hq.tagged_rotation(tw), Trivial)


def test_toy1_has_two_tagged_words():
    hq = HatQuiver(corpus.algebra("toy1"))
    ws = hq.enumerate_admissible(2)
    assert len(ws) == 2
    assert {tw.tags for tw in ws} == {(0, None), (1, None)}


@pytest.mark.parametrize("name", corpus.ALGEBRAS)
def test_successor_matches_search(name):
    rep = verify_successor(HatQuiver(corpus.algebra(name)), 5)
    assert rep.ok, rep.failures[:3]
