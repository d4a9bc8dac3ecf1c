import pytest
from hypothesis import given, settings, strategies as st

from skewgentle import corpus
from skewgentle.algebra import Idempotent
from skewgentle.modules import (
    Prober,
    TransposeOracle,
    build_module,
    hom_dim_linear,
    hom_from_projective,
    is_indecomposable,
    is_isomorphic,
    simple_rep,
)
from skewgentle.randgen import random_corpus
from skewgentle.words import HatQuiver


@pytest.mark.parametrize("name", corpus.EX6_REFERENCE_NAMES)
def test_example_modules_match_displays(ex6, ex6_hq, name):
    M = build_module(ex6_hq, corpus.ex6_word(ex6_hq, name))
    R = corpus.ex6_reference(ex6, name)
    assert M.dim_vector() == corpus.EX6_DIMS[name]
    assert R.relation_violations() == []
    assert Prober(ex6).same(M, R)
    assert is_isomorphic(M, R)


def test_toy1_simples():
    t = corpus.algebra("toy1")
    hq = HatQuiver(t)
    mods = [build_module(hq, tw) for tw in hq.enumerate_admissible(2)]
    assert [M.dim_vector() for M in mods] == [(1,), (1,)]
    assert hom_dim_linear(mods[0], mods[1]) == 0
    flags = sorted(hom_from_projective(Idempotent("1", 1), M) for M in mods)
    assert flags == [0, 1]


def _small_words():
    out = []
    for t in [corpus.algebra("ex6")] + random_corpus(6, 1):
        hq = HatQuiver(t)
        out += [(hq, tw) for tw in hq.enumerate_admissible(5)]
    return out


SMALL = _small_words()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL))
def test_word_modules_are_indecomposable_representations(item):
    hq, tw = item
    M = build_module(hq, tw)
    assert M.relation_violations() == []
    assert is_indecomposable(M)


def test_distinct_words_give_distinct_modules(ex6, ex6_hq):
    P = Prober(ex6)
    prints = [P.fingerprint(build_module(ex6_hq, tw)) for tw in ex6_hq.enumerate_admissible(5)]
    assert len(set(prints)) == len(prints)


def test_oracle_projectives_and_injectives(ex6):
    o = TransposeOracle(ex6)
    for e in ex6.idempotents():
        P = o.projective(e)
        I = o.injective(e).rep
        assert P.relation_violations() == [] and I.relation_violations() == []
        assert is_indecomposable(P) and is_indecomposable(I)
        S = simple_rep(ex6, e)
        assert hom_dim_linear(P, S) == 1
        assert hom_dim_linear(S, I) == 1
        assert o.tau(P).dim == 0


def test_tau_of_simple_at_vertex_three(ex6, ex6_hq):
    # a simple whose radical-closure needed the special idempotent
    S3 = ex6_hq.parse_tagged("z(3,-)^- z(3,+)")
    M = build_module(ex6_hq, S3)
    T = TransposeOracle(ex6).tau(M)
    assert T.dim_vector() == (2, 2, 2, 1, 0, 1, 0)
