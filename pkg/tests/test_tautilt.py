import pytest

from skewgentle import corpus
from skewgentle.algebra import Idempotent, path_basis
from skewgentle.modules import TransposeOracle, build_module, hom_dim_linear
from skewgentle.tautilt import (
    Curve,
    DissectionCollection,
    Shifted,
    TauTilting,
    brute_force_air_oracle,
    compare_with_oracle,
    exhaustive_within,
    tagged_triangulation,
)
from skewgentle.words import HatQuiver


@pytest.mark.parametrize("name,size", [("toy1", 2), ("a2", 2), ("ex6", 8)])
def test_tagged_triangulation_size(name, size):
    assert len(tagged_triangulation(corpus.algebra(name))) == size


def test_gamma3_is_rigid(ex6, ex6_hq):
    tt = TauTilting(ex6_hq)
    g3 = corpus.ex6_word(ex6_hq, "gamma3")
    assert tt.is_tau_rigid(g3)
    M = build_module(ex6_hq, g3)
    assert hom_dim_linear(M, TransposeOracle(ex6).tau(M)) == 0


def test_projective_words_are_rigid(ex6_hq):
    tt = TauTilting(ex6_hq)
    for tw in ex6_hq.enumerate_admissible(6):
        if ex6_hq.is_projective(tw):
            assert tt.is_tau_rigid(tw)


def test_compatibility_examples(ex6_hq):
    tt = TauTilting(ex6_hq)
    g2 = Curve(corpus.ex6_word(ex6_hq, "gamma2"))
    assert tt.compatible(Shifted(Idempotent("4")), g2)
    assert not tt.compatible(Shifted(Idempotent("1", 1)), g2)
    assert tt.compatible(Shifted(Idempotent("1", 0)), g2)
    assert tt.compatible(Shifted(Idempotent("2")), Shifted(Idempotent("1", 1)))


def test_enumerate_tau_rigid_small():
    hq = HatQuiver(corpus.algebra("toy1"))
    assert len(TauTilting(hq).enumerate_tau_rigid(2)) == 2
    hq = HatQuiver(corpus.algebra("a2"))
    assert len(TauTilting(hq).enumerate_tau_rigid(3)) == 3


@pytest.mark.parametrize("name,L,count", [("toy1", 3, 4), ("a1", 2, 2), ("a2", 4, 5), ("a3", 6, 14)])
def test_catalan_counts(name, L, count):
    hq = HatQuiver(corpus.algebra(name))
    assert exhaustive_within(hq, L)
    assert len(TauTilting(hq).enumerate_dissections(L)) == count
    assert len(brute_force_air_oracle(hq, L)) == count
    assert compare_with_oracle(hq, L).agree


def test_extremal_dissections():
    t = corpus.algebra("a3")
    hq = HatQuiver(t)
    tt = TauTilting(hq)
    ds = tt.enumerate_dissections(6)
    all_shifted = [R for R in ds if not R.curves]
    assert len(all_shifted) == 1
    assert tt.support_tau_tilting_module(all_shifted[0]).module.dim == 0
    proj = [R for R in ds if all(hq.is_projective(tw) for tw in R.curves) and len(R.curves) == t.rank()]
    assert len(proj) == 1
    assert tt.support_tau_tilting_module(proj[0]).module.dim == path_basis(t).dim


def test_invalid_collection_rejected():
    hq = HatQuiver(corpus.algebra("a2"))
    tt = TauTilting(hq)
    with pytest.raises(ValueError):
        tt.support_tau_tilting_module(DissectionCollection((Shifted(Idempotent("1")),)))


def test_every_dissection_has_rank_many_compatible_elements():
    t = corpus.algebra("a3")
    tt = TauTilting(HatQuiver(t))
    for R in tt.enumerate_dissections(6):
        assert len(R.elements) == t.rank()
        for i, a in enumerate(R.elements):
            for b in R.elements[i + 1:]:
                assert tt.compatible(a, b)
