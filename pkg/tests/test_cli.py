import json

import pytest

from multikoszul import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_notcoprodcasi_by_basename(capsys):
    code, out, _ = run(["analyze", "examples/notcoprodcasi.alg"], capsys)
    assert code == 0
    assert "NotMultiKoszul(i=3, n=4, tor=1, J=0) [tor_vs_J]  witness y*y*x*z" in out


def test_analyze_difkos_json(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(["analyze", "difkos", "--json", str(path)], capsys)
    assert code == 0 and "global dimension: Exactly(3)" in out
    rep = json.loads(path.read_text())
    assert rep["betti"] == {"0,0": 1, "1,1": 3, "2,2": 1, "2,3": 1, "3,4": 1}
    assert rep["global_dimension"] == "Exactly(3)"
    for v in rep["verdicts"].values():
        assert v["method"] and (v["bounds"] or v["certificate"] == "exact")


def test_analyze_x2y3_all_green(capsys):
    code, out, _ = run(["analyze", "x2_y3", "--checks", "all", "--nmax", "8", "--imax", "5",
                        "--json", "-"], capsys)
    rep = json.loads(out)
    assert code == 0
    statuses = {k: v["status"] for k, v in rep["verdicts"].items()}
    assert statuses.pop("monomial_exact") == "MultiKoszul"
    assert set(statuses.values()) == {"MultiKoszulUpTo"}
    assert rep["k2_generation"]["generated"] and rep["hochschild"]["valid"]


def test_json_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert cli.main(["analyze", "notcoprodcasi_2", "--json", str(p)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_text_input_and_field(capsys):
    code, out, _ = run(["analyze", "--text", "gens x y; rel x*x; rel y*y*y", "--field", "GF:3",
                        "--checks", "betti,monomial"], capsys)
    assert code == 0 and "GF(3)" in out and "MultiKoszul [monomial_exact, exact]" in out


def test_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("gens x y\nrel x*q\n")
    code, _, err = run(["analyze", str(bad)], capsys)
    assert code == 2 and ":2:" in err and "unknown generator" in err


def test_missing_file_and_bad_field(capsys):
    assert run(["analyze", "no/such/algebra.alg"], capsys)[0] == 2
    assert run(["analyze", "difkos", "--field", "GF:4"], capsys)[0] == 2


def test_cap_exit(capsys):
    code, _, err = run(["analyze", "--text", "gens x y z w; rel x*y", "--ambient-cap", "1000"], capsys)
    assert code == 3 and "degree" in err


def test_lattice_skipped_for_one_degree(capsys):
    code, out, _ = run(["analyze", "--text", "gens x; rel x*x*x", "--checks", "lattice,monomial"], capsys)
    assert code == 0 and "lattice criteria skipped" in out and "monomial certificate skipped" in out


def test_corpus_empty(capsys):
    code, out, _ = run(["corpus", "--count", "0", "--json", "-"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["count"] == 0 and rep["instances"] == [] and rep["disagreements"] == []


@pytest.mark.parametrize("seed, text", [
    (613, "field Q; gens x y z; rel x*z; rel y*y*x"),
    (2, "field Q; gens x y; rel x*y; rel y*y*x"),
])
def test_corpus_reproduces_examples(seed, text):
    rep = cli.run_corpus(seed, 1)
    (row,) = rep["instances"]
    assert row["presentation"] == text
    assert len(row["verdicts"]) == 4
    assert all(v.startswith("NotMultiKoszul") for v in row["verdicts"].values())
    assert rep["disagreements"] == []


@pytest.mark.slow
def test_corpus_seed1_agrees():
    rep = cli.run_corpus(1, 100)
    assert rep["disagreements"] == []
