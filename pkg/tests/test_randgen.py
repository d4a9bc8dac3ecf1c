from skewgentle.algebra import format_algebra, validate_skew_gentle
from skewgentle.randgen import RandomTripleConfig, random_corpus


def test_seeded_corpus_is_deterministic():
    a = [format_algebra(t) for t in random_corpus(10, 0)]
    b = [format_algebra(t) for t in random_corpus(10, 0)]
    assert a == b
    assert len(set(a)) == 10


def test_generated_triples_are_valid_and_bounded():
    cfg = RandomTripleConfig(max_vertices=4)
    for t in random_corpus(15, 7, cfg):
        assert validate_skew_gentle(t).ok
        assert 1 <= len(t.vertices) <= 4
