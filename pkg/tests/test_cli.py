import io

import pytest

from skewgentle import corpus
from skewgentle.cli import run

EX6 = corpus.data_path("ex6.alg")
G2 = "z(1,-)^- b^- z(2,-)"
G3 = "z(1,-)^- a h g^- f d^- c b z(1,-)"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def rows(text, key):
    return [line.split("\t")[1:] for line in text.splitlines() if line.startswith(key + "\t")]


def test_from_surface_ex6():
    code, out, _ = call("algebra", "from-surface", corpus.data_path("ex6.surf"))
    assert code == 0
    arrows = {r[0] for r in rows(out, "arrow")}
    assert arrows == set("abcdefgh") | {"e1", "e5"}
    assert {r[0] for r in rows(out, "relation")} == {"e1^2-e1", "e5^2", "ab", "ba", "ed", "hc"}


def test_module_tau_gamma2():
    code, out, _ = call("module", "tau", "--algebra", EX6, "--word", G2, "--tags", "1", "--oracle")
    assert code == 0
    assert rows(out, "dims") == [["(1,1,0,0,0,1,1)"]]
    assert rows(out, "oracle_agrees") == [["1"]]


def test_words_enumerate_toy1():
    code, out, _ = call("words", "enumerate", "--algebra", corpus.data_path("toy1.alg"), "--max-len", "2")
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + 2


def test_int_and_hom():
    code, out, _ = call("int", "--algebra", EX6, "--word", G2, "--tags", "1", "--word2", G3, "--tags2", "0,0")
    assert code == 0 and rows(out, "int") == [["2"]] and rows(out, "black_12") == [["1"]]
    code, out, _ = call("module", "hom", "--algebra", EX6, "--word", G3, "--tags", "0,0", "--word2", G3, "--tags2", "0,0")
    assert code == 0 and rows(out, "hom_words") == rows(out, "hom_linear")


def test_module_build_dump():
    code, out, _ = call("module", "build", "--algebra", EX6, "--word", G3, "--tags", "1,1")
    assert code == 0 and "(2,2,1,1,0,1,1)" in out and "arrow e1" in out


def test_algebra_check_exit_codes(tmp_path):
    assert call("algebra", "check", EX6)[0] == 0
    bad = tmp_path / "inf.alg"
    bad.write_text("vertices 1 2\narrow a 1 2\narrow b 2 1\n")
    assert call("algebra", "check", str(bad))[0] == 1
    broken = tmp_path / "broken.alg"
    broken.write_text("vertices 1\narrow a 1 7\n")
    code, _, err = call("algebra", "check", str(broken))
    assert code == 2 and "line 2" in err


def test_usage_errors():
    assert call("nonsense")[0] == 2
    assert call("words", "enumerate")[0] == 2
    assert call("words", "enumerate", "--algebra", EX6, "--max-len", "-1")[0] == 2
    assert call("module", "tau", "--algebra", EX6, "--word", "a b c")[0] == 2


def test_unenclosed_puncture_is_validation_failure():
    assert call("algebra", "from-surface", corpus.data_path("bad_unenclosed.surf"))[0] == 1


def test_tautilt_with_oracle():
    code, out, _ = call("tautilt", "enumerate", "--algebra", corpus.data_path("a3.alg"), "--max-len", "6", "--oracle")
    assert code == 0
    assert "# dissections: 14" in out and "agree=1" in out


def test_verify_commands(tmp_path):
    report = tmp_path / "r.tsv"
    code, out, _ = call("verify", "int-dim", "--algebra", corpus.data_path("a3.alg"), "--max-len", "5", "--report", str(report))
    assert code == 0 and report.read_text().startswith("checked")
    assert call("verify", "tau", "--algebra", EX6, "--max-len", "5")[0] == 0


def test_export_dot():
    code, out, _ = call("export", "dot", "--algebra", EX6)
    assert code == 0 and out.startswith("digraph") and '"1" -> "2" [label="a"]' in out
    code, out, _ = call("export", "dot", "--algebra", corpus.data_path("a2.alg"), "--graph", "compat")
    assert code == 0 and out.startswith("graph")


@pytest.mark.parametrize(
    "argv",
    [
        ("words", "enumerate", "--algebra", EX6, "--max-len", "5"),
        ("tautilt", "enumerate", "--algebra", corpus.data_path("a3.alg"), "--max-len", "6"),
    ],
)
def test_output_is_deterministic(argv):
    assert call(*argv)[1] == call(*argv)[1]
