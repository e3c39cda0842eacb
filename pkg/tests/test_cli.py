import os

import pytest

from cuspcoh.cli import export_text, main
from cuspcoh.cusped import import_edge_list, import_simplex_list
from cuspcoh.errors import InputError
from cuspcoh.homology import import_triplets
from cuspcoh.scenarios import REGISTRY, load_scenario, parse_scenario

LINE = REGISTRY["line-ends"]


def test_registry_size_and_provenance():
    assert len(REGISTRY) >= 6
    for name in REGISTRY:
        s = load_scenario(name)
        assert set(s.expected) <= set(s.provenance)


def test_list_prints_every_scenario(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for name in REGISTRY:
        assert f"{name}:" in out


def test_run_line_writes_csv(tmp_path, capsys):
    assert main(["run", "line-ends", "--out", str(tmp_path)]) == 0
    text = (tmp_path / "hc_1.csv").read_text()
    assert text.splitlines()[0] == "stage_radius,rank,torsion,image_rank_next"
    assert "all expectations met" in (tmp_path / "report.txt").read_text()


def test_wrong_expectation_fails(tmp_path, capsys):
    bad = LINE.replace("hc.1 = stable(1)", "hc.1 = growing")
    path = tmp_path / "bad.ini"
    path.write_text(bad)
    assert main(["run", str(path)]) == 1
    out = capsys.readouterr().out
    assert "hc.1: expected growing, observed stable(1)" in out


def test_deterministic_outputs(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert main(["run", "free-tree", "--out", str(d), "--seed", "3"]) == 0
    for name in os.listdir(a):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_parse_error_has_line_number():
    text = LINE.replace("kind = cayley-only", "kind = teapot")
    with pytest.raises(InputError, match=r":\d+: unknown space kind"):
        parse_scenario(text, "x.ini")


def test_missing_provenance_rejected():
    text = LINE.replace("hc.1 = oracle: hand computation of H1 of the line rel two rays, "
                        "rank 1 at every stage\n", "")
    with pytest.raises(InputError, match="provenance"):
        parse_scenario(text, "x.ini")


def test_guard_violation_aborts(capsys):
    text = LINE.replace("radii = 1-6", "radii = 1-9")
    with pytest.raises(InputError, match="safe radius"):
        parse_scenario(text, "x.ini")


def test_stages_flag_limits_schedule(capsys):
    assert main(["run", "line-ends", "--stages", "3"]) == 1
    assert "inconclusive" in capsys.readouterr().out


def test_export_hand_counts():
    s = load_scenario("small-cusped-graph")
    text = export_text(s, "edge-list")
    lines = text.splitlines()
    assert sum(ln.startswith("V ") for ln in lines) == 34
    assert sum(ln.startswith("E ") for ln in lines) == 46
    G = import_edge_list(text)
    assert len(G) == 34 and G.num_edges() == 46


def test_simplex_list_round_trip():
    s = load_scenario("free-rel-a")
    s.params["R"], s.params["T"] = 3, 3
    text = export_text(s, "simplex-list")
    X = import_simplex_list(text)
    from cuspcoh.cli import _complex_of
    from cuspcoh.scenarios import build_space
    assert X == _complex_of(build_space(s))


def test_sparse_matrix_export():
    s = load_scenario("cylinder")
    text = export_text(s, "sparse-matrix")
    blocks = [b for b in text.split("# boundary ") if b]
    assert len(blocks) == 2
    M = import_triplets(blocks[0].split("\n", 1)[1])
    assert M.nrows > 0


def test_unknown_format():
    with pytest.raises(InputError):
        export_text(load_scenario("line-ends"), "png")
    with pytest.raises(SystemExit):
        main(["export", "line-ends", "--format", "png"])


def test_delta_command(tmp_path):
    assert main(["delta", "small-cusped-graph", "--out", str(tmp_path), "--samples", "300"]) == 0
    assert "delta_thin=" in (tmp_path / "delta.txt").read_text()


def test_probe_command(tmp_path):
    assert main(["probe", "punctured-torus", "--out", str(tmp_path)]) == 0
    rows = (tmp_path / "regularity.csv").read_text().splitlines()
    assert rows[0] == "depth,mode,status,primitive_radius" and len(rows) == 9


def test_unknown_scenario(capsys):
    assert main(["run", "no-such-thing"]) == 2
