import pytest

from skewgentle import corpus
from skewgentle.algebra import InputError, validate_skew_gentle
from skewgentle.surface import (
    classify_regions,
    parse_surface,
    relation_report,
    tiling_algebra,
    validate_admissible,
)


def _arrows(t):
    return {(a.name, a.source, a.target) for a in t.sp_arrows}


def test_ex6_surface_gives_ex6_algebra():
    s, tri = corpus.surface("ex6")
    assert validate_admissible(s, tri).ok
    t = tiling_algebra(s, tri)
    ref = corpus.algebra("ex6")
    assert set(t.vertices) == set("1234567")
    assert t.special == ("1",)
    assert _arrows(t) == _arrows(ref)
    assert set(t.sp_relations_written()) == set(ref.sp_relations_written())
    assert set(relation_report(t)) == {"e1^2-e1", "e5^2", "ab", "ba", "ed", "hc"}


def test_ex6_regions_cover_all_types():
    s, tri = corpus.surface("ex6")
    rep = classify_regions(s, tri)
    assert {r.kind for r in rep.regions} == {"I", "II", "III", "IV"}
    assert rep.count("IV") == len(s.punctures)
    assert rep.notes == ()


def test_punctured_monogon_is_toy1():
    s, tri = corpus.surface("toy1")
    t = tiling_algebra(s, tri)
    assert t.vertices == ("1",) and t.special == ("1",) and not t.quiver.arrows
    rep = classify_regions(s, tri)
    assert rep.count("IV") == 1 and len(rep.regions) == 2


def test_annulus_loop_is_nilpotent():
    s, tri = corpus.surface("annulus")
    t = tiling_algebra(s, tri)
    assert t.special == ()
    assert [a.name for a in t.quiver.arrows] == ["e1"]
    assert t.is_zero_pair("e1", "e1")
    assert classify_regions(s, tri).count("II") == 1


def test_disc_with_chord():
    s, tri = corpus.surface("disc_chord")
    t = tiling_algebra(s, tri)
    assert not t.sp_arrows
    rep = classify_regions(s, tri)
    assert len(rep.regions) == 2 and all(r.kind in ("I", "other") for r in rep.regions)


def test_unenclosed_puncture():
    s, tri = parse_surface(corpus.read_data("bad_unenclosed.surf"))
    rep = validate_admissible(s, tri)
    assert any("unenclosed" in v for v in rep.violations)
    with pytest.raises(InputError):
        tiling_algebra(s, tri)


def test_dangling_and_duplicated_ends():
    text = "boundary B m1 m2\narc 1 m1 m2\nfan m1 : 1\n"
    s, tri = parse_surface(text)
    assert any("dangling" in v for v in validate_admissible(s, tri).violations)
    with pytest.raises(InputError):
        parse_surface("boundary B m\narc 1 m m\nfan m : 1\n")  # loop ends need .endK


def test_arc_at_puncture_rejected():
    with pytest.raises(InputError):
        parse_surface("boundary B m\npuncture p\narc 1 m p\n")


@pytest.mark.parametrize("name", corpus.SURFACES)
def test_tiling_algebras_are_skew_gentle(name):
    s, tri = corpus.surface(name)
    t = tiling_algebra(s, tri)
    assert validate_skew_gentle(t).ok
    assert len(t.special) == len(s.punctures)
    rep = classify_regions(s, tri)
    loops = [a for a in t.sp_arrows if a.is_loop]
    if rep.typed:
        assert len(loops) == rep.count("II") + rep.count("IV")


def test_default_arrow_names():
    s, tri = parse_surface("boundary B m1 m2 m3 m4\narc 1 m1 m3\narc 2 m1 m4\nfan m1 : 1 2\nfan m3 : 1\nfan m4 : 2\n")
    t = tiling_algebra(s, tri)
    assert [(a.source, a.target) for a in t.sp_arrows] == [("1", "2")]
