import pytest

from skewgentle import corpus
from skewgentle.config import CorpusConfig
from skewgentle.randgen import RandomTripleConfig, random_corpus
from skewgentle.verify import Workbench
from skewgentle.words import HatQuiver

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def ex6():
    return corpus.algebra("ex6")


@pytest.fixture(scope="session")
def ex6_hq(ex6):
    return HatQuiver(ex6)


@pytest.fixture(scope="session")
def random_triples():
    cfg = CorpusConfig()
    return random_corpus(cfg.random_count, cfg.seed, RandomTripleConfig(max_vertices=cfg.max_vertices))


@pytest.fixture(scope="session")
def differential_corpus(random_triples):
    """(label, triple) for TOY1, A2, EX6 and the seeded random triples."""
    cfg = CorpusConfig()
    named = [(n, corpus.algebra(n)) for n in cfg.bundled]
    return named + [(f"random{k}", t) for k, t in enumerate(random_triples)]


@pytest.fixture(scope="session")
def benches(differential_corpus):
    return {label: Workbench(t) for label, t in differential_corpus}
