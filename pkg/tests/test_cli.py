import json

import pytest

from smckit.cli import build_parser, main
from smckit.formats import load_smc, save_complex


@pytest.fixture(scope="session")
def golden_file(tmp_path_factory, golden):
    path = tmp_path_factory.mktemp("cli") / "golden.json"
    save_complex(str(path), golden)
    return str(path)


def run_json(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    assert rc == 0, out
    return json.loads(out)


def test_parser_covers_all_subcommands():
    p = build_parser()
    names = {a.dest for a in p._subparsers._group_actions[0].choices.values()
             for a in []}  # smoke only: choices exist
    choices = p._subparsers._group_actions[0].choices
    assert set(choices) == {"roots", "restrict", "arrangement", "hom", "bounds",
                            "brick-scan", "mutate", "narrow", "complete", "verify"}


def test_roots(capsys):
    rep = run_json(capsys, ["roots", "A3"])
    assert rep["command"] == "roots"
    assert rep["field"] == "Q"
    assert rep["results"]["count"] == 6
    assert [1, 1, 1] in rep["results"]["positive_roots"]


def test_restrict_example(capsys):
    rep = run_json(capsys, ["restrict", "D5:I=1,3,5"])
    got = {tuple(r["coords"]) for r in rep["results"]["restricted"]}
    assert got == {(0, 1), (1, 0), (1, 1), (2, 1), (2, 2)}
    prim = {tuple(r) for r in rep["results"]["primitives"]}
    assert prim == {(0, 1), (1, 0), (1, 1), (2, 1)}


def test_arrangement_example(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    rep = run_json(capsys, ["arrangement", "A2:I=", "--dot", str(dot)])
    res = rep["results"]
    assert len(res["hyperplanes"]) == 3
    assert len(res["chambers"]) == 6
    assert len(res["atoms_from_plus_chamber"]) == 6
    assert res["longest_atom"]["length"] == 3
    assert dot.read_text().startswith("graph chambers {")
    assert str(dot) in rep["report_files"]


def test_arrangement_report_dir(capsys, tmp_path):
    rep = run_json(capsys, ["arrangement", "D4:I=3,4",
                            "--report-dir", str(tmp_path / "out")])
    files = rep["report_files"]
    assert any(f.endswith("chambers.csv") for f in files)
    assert any(f.endswith("graph.dot") for f in files)
    assert any(f.endswith("arrangement.png") for f in files)
    import os
    for f in files:
        assert os.path.exists(f)


def test_hom_single_shift(capsys, golden_file):
    rep = run_json(capsys, ["hom", "preproj:A3", golden_file, golden_file,
                            "--shift", "0"])
    assert rep["results"]["dims"] == {"0": 2}
    assert rep["inputs"]["x"]["sha256"] == rep["inputs"]["y"]["sha256"]


def test_hom_table_window(capsys, golden_file):
    rep = run_json(capsys, ["hom", "preproj:A3", golden_file, golden_file,
                            "--lo", "-1", "--hi", "2"])
    assert rep["results"]["dims"] == {"-1": 0, "0": 2, "1": 1, "2": 1}


def test_bounds(capsys, golden_file):
    rep = run_json(capsys, ["bounds", "preproj:A3", golden_file])
    assert rep["results"]["bounds"] == [-1, 0]
    assert rep["inputs"]["smc"] == "standard"


def test_brick_scan(capsys):
    rep = run_json(capsys, ["brick-scan", "preproj:A2",
                            "--bound", "2,2", "--field", "3"])
    assert rep["field"] == "F3"
    census = [(tuple(c["dim_vector"]), c["count"]) for c in rep["results"]["census"]]
    assert census == [((0, 1), 1), ((1, 0), 1), ((1, 1), 2)]


def test_brick_scan_uniform_bound_and_corner(capsys):
    rep = run_json(capsys, ["brick-scan", "preproj:A3:I=2", "--bound", "2"])
    vecs = [tuple(c["dim_vector"]) for c in rep["results"]["census"]]
    assert vecs == [(0, 1), (1, 0), (1, 1)]


def test_mutate_save_and_reload(capsys, tmp_path, alg3):
    out = tmp_path / "v.json"
    rep = run_json(capsys, ["mutate", "preproj:A3", "standard",
                            "--at", "2", "--dir", "L", "--save", str(out)])
    assert rep["results"]["valid"] is True
    V = load_smc(str(out), alg3)
    assert V.path == ((2, "L"),)
    rep2 = run_json(capsys, ["mutate", "preproj:A3", str(out),
                             "--at", "2", "--dir", "R"])
    assert rep2["results"]["valid"] is True
    assert rep2["results"]["collection"]["provenance"]["path"] == [[2, "L"], [2, "R"]]


def test_narrow(capsys, golden_file):
    rep = run_json(capsys, ["narrow", "preproj:A3", golden_file])
    assert rep["results"]["path"] == {"steps": [[3, "L"], [2, "L"], [1, "L"]],
                                      "shift": 0}
    assert rep["results"]["bounds"] == [0, 0]


def test_complete(capsys, golden_file):
    rep = run_json(capsys, ["complete", "preproj:A3", golden_file])
    assert rep["results"]["members"] == 3
    assert rep["results"]["containing_members"] == [1, 3]


def test_verify_suite(capsys):
    assert main(["verify", "root-counts"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS root-counts")
    assert "OK: 1 suite(s)" in out


def test_exit_codes(capsys, golden_file, tmp_path):
    assert main(["roots", "Q7"]) == 2
    assert main(["mutate", "preproj:A3", "standard", "--at", "9", "--dir", "L"]) == 3
    assert main(["narrow", "preproj:A3", golden_file, "--budget", "1"]) == 4
    assert main(["hom", "preproj:A3", str(tmp_path / "nope.json"), golden_file]) == 2
    assert main(["verify", "bogus"]) == 3
    capsys.readouterr()


def test_byte_stability(capsys, golden_file):
    main(["narrow", "preproj:A3", golden_file])
    a = capsys.readouterr().out
    main(["narrow", "preproj:A3", golden_file])
    b = capsys.readouterr().out
    assert a == b


def test_output_file_and_timings(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert main(["-o", str(out), "roots", "A2"]) == 0
    assert capsys.readouterr().out == ""
    rep = json.loads(out.read_text())
    assert rep["results"]["count"] == 3
    assert "elapsed" not in rep
    assert main(["--timings", "roots", "A2"]) == 0
    rep2 = json.loads(capsys.readouterr().out)
    assert isinstance(rep2["elapsed"], str)


def test_algebra_file_input(capsys, tmp_path, alg2):
    from smckit.formats import save_algebra
    algf = tmp_path / "alg.json"
    save_algebra(str(algf), alg2)
    rep = run_json(capsys, ["brick-scan", str(algf), "--bound", "1"])
    vecs = [tuple(c["dim_vector"]) for c in rep["results"]["census"]]
    assert vecs == [(0, 1), (1, 0), (1, 1)]
    assert rep["inputs"]["algebra"]["file"] == str(algf)
