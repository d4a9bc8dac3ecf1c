import pytest
from hypothesis import given, settings, strategies as st

from skewgentle import corpus
from skewgentle.intersections import Intersector, common_pairs, hom_dim_words
from skewgentle.modules import build_module, hom_dim_linear
from skewgentle.randgen import random_corpus
from skewgentle.words import HatQuiver


@pytest.mark.parametrize("pair,total", sorted(corpus.EX6_INTERSECTIONS.items()))
def test_example_intersection_numbers(ex6_hq, pair, total):
    a, b = (corpus.ex6_word(ex6_hq, n) for n in pair)
    assert Intersector(ex6_hq).int_number(a, b).total == total


@pytest.mark.parametrize("pair,black", sorted(corpus.EX6_BLACK.items()))
def test_example_black_numbers(ex6_hq, pair, black):
    a, b = (corpus.ex6_word(ex6_hq, n) for n in pair)
    assert Intersector(ex6_hq).black_int(a, b) == black


def test_int_is_symmetric(ex6_hq):
    X = Intersector(ex6_hq)
    ws = ex6_hq.enumerate_admissible(5)
    for a in ws[:20]:
        for b in ws[:20]:
            assert X.int_number(a, b).total == X.int_number(b, a).total


def test_identity_is_a_common_pair(ex6_hq):
    tw = corpus.ex6_word(ex6_hq, "gamma3")
    assert hom_dim_words(ex6_hq, tw, tw) >= 1
    spans = [(p.left, p.right) for p in common_pairs(ex6_hq, tw.word, tw.word)]
    m = len(tw.word)
    assert ((0, m + 1), (0, m + 1)) in spans


def test_gentle_formula_guard():
    hq = HatQuiver(corpus.algebra("a3"))
    ws = hq.enumerate_admissible(4)
    X = Intersector(hq)
    assert X.int_number_gentle(ws[0], ws[-1]) == X.int_number(ws[0], ws[-1]).total
    with pytest.raises(ValueError):
        Intersector(HatQuiver(corpus.algebra("toy1"))).int_number_gentle(*HatQuiver(corpus.algebra("toy1")).enumerate_admissible(2))


def _pairs():
    out = []
    for t in [corpus.algebra("ex6")] + random_corpus(8, 3):
        hq = HatQuiver(t)
        ws = hq.enumerate_admissible(5)
        out += [(hq, a, b) for a in ws for b in ws]
    return out


PAIRS = _pairs()


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(PAIRS))
def test_hom_formula_matches_linear_algebra(item):
    hq, a, b = item
    assert hom_dim_words(hq, a, b) == hom_dim_linear(build_module(hq, a), build_module(hq, b))
