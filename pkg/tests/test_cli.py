"""End-to-end checks of the command-line surface and file formats."""
import csv
import json
import math

import pytest

from kdisperse.cli import main
from kdisperse.generators import regular_polygon
from kdisperse.io import BadInstance, dump_instance, load_instance, load_result, points_from_obj
from kdisperse.render import packing_svg

SQUARE = {"points": [[0, 0], [0, 1], [1, 1], [1, 0]]}


@pytest.fixture
def square_file(tmp_path):
    p = tmp_path / "square.json"
    p.write_text(json.dumps(SQUARE))
    return p


def read_json(capsys):
    return json.loads(capsys.readouterr().out)


# ------------------------------------------------------------------------ io


def test_points_from_obj_rejects_garbage():
    for bad in (
        [],                                   # not an object
        {},                                   # no points
        {"points": [[0, 0], [1]]},            # not a pair
        {"points": [[0, 0], [1, "x"]]},       # not numeric
        {"points": [[0, 0], [1, float("inf")]]},
    ):
        with pytest.raises(BadInstance):
            points_from_obj(bad)


def test_instance_round_trip(tmp_path):
    pts = [(0.1, 0.2), (1 / 3, -7.25), (0.30000000000000004, 2.0)]
    p = tmp_path / "inst.json"
    p.write_text(dump_instance(pts, name="trip", seed=9))
    assert load_instance(p) == pts


def test_load_result_round_trip(tmp_path, square_file, capsys):
    out = tmp_path / "res.json"
    assert main(["solve", str(square_file), "--k", "2", "--out", str(out)]) == 0
    rec = load_result(out)
    assert rec.algorithm == "exact[fast]"
    assert rec.k == 2
    assert rec.radius_sq4 == 2.0
    assert rec.radius == math.sqrt(rec.radius_sq4) / 2
    assert rec.centers == (0, 2)
    assert rec.wall_time >= 0.0


# --------------------------------------------------------------------- solve


def test_solve_square_k3(square_file, capsys):
    assert main(["solve", str(square_file), "--k", "3"]) == 0
    rec = read_json(capsys)
    assert rec["radius"] == 0.5
    assert rec["centers"] == [0, 1, 2]


def test_solve_hexagon_k3(tmp_path, capsys):
    P = regular_polygon(6)
    p = tmp_path / "hex.json"
    p.write_text(dump_instance(list(zip(P.xs.tolist(), P.ys.tolist()))))
    assert main(["solve", str(p), "--k", "3"]) == 0
    rec = read_json(capsys)
    assert rec["radius"] == pytest.approx(math.sqrt(3) / 2, rel=1e-12)


def test_solve_engine_flag(square_file, capsys):
    assert main(["solve", str(square_file), "--k", "3", "--engine", "naive"]) == 0
    rec = read_json(capsys)
    assert rec["algorithm"] == "exact[naive]"
    assert rec["centers"] == [0, 1, 2]


def test_solve_bad_k(square_file, capsys):
    assert main(["solve", str(square_file), "--k", "5"]) == 3
    assert main(["solve", str(square_file), "--k", "1"]) == 3


def test_solve_bad_instances(tmp_path, capsys):
    collinear = tmp_path / "col.json"
    collinear.write_text(json.dumps({"points": [[0, 0], [1, 0], [2, 0], [1, 2]]}))
    assert main(["solve", str(collinear), "--k", "2"]) == 2
    junk = tmp_path / "junk.json"
    junk.write_text("notjson{")
    assert main(["solve", str(junk), "--k", "2"]) == 2
    assert main(["solve", str(tmp_path / "missing.json"), "--k", "2"]) == 2


# -------------------------------------------------------------------- approx


def test_approx_square(square_file, capsys):
    assert main(["approx", str(square_file)]) == 0
    rec = read_json(capsys)
    assert rec["algorithm"] == "approx3"
    assert rec["radius"] == 0.5
    assert rec["accesses"] > 0


def test_approx_triangle(tmp_path, capsys):
    p = tmp_path / "tri.json"
    p.write_text(json.dumps({"points": [[0, 0], [4, 0], [1, 3]]}))
    assert main(["approx", str(p)]) == 0
    assert read_json(capsys)["centers"] == [0, 1, 2]


def test_approx_collinear_rejected(tmp_path, capsys):
    p = tmp_path / "col.json"
    p.write_text(json.dumps({"points": [[0, 0], [1, 0], [2, 0]]}))
    assert main(["approx", str(p)]) == 2


# -------------------------------------------------------------------- decide


def test_decide_radius_flag(square_file, capsys):
    assert main(["decide", str(square_file), "--k", "3", "--r", "0.5"]) == 0
    rec = read_json(capsys)
    assert rec["feasible"] is True
    assert rec["four_r_sq"] == 1.0
    assert rec["centers"] == [0, 1, 2]


def test_decide_four_r_sq_flag_wins(square_file, capsys):
    argv = ["decide", str(square_file), "--k", "3", "--r", "99", "--four-r-sq", "1.0"]
    assert main(argv) == 0
    assert read_json(capsys)["feasible"] is True


def test_decide_infeasible(square_file, capsys):
    assert main(["decide", str(square_file), "--k", "3", "--four-r-sq", "2.0"]) == 0
    rec = read_json(capsys)
    assert rec["feasible"] is False
    assert rec["centers"] is None


def test_decide_needs_a_threshold(square_file, capsys):
    assert main(["decide", str(square_file), "--k", "3"]) == 3


# -------------------------------------------------------------------- oracle


def test_oracle_square(square_file, capsys):
    assert main(["oracle", str(square_file), "--k", "2"]) == 0
    rec = read_json(capsys)
    assert rec["radius_sq4"] == 2.0
    assert rec["centers"] == [0, 2]


def test_oracle_too_large(tmp_path, capsys):
    gen = tmp_path / "big.json"
    assert main(["gen", "--shape", "valtr", "--n", "40", "--seed", "0", "--out", str(gen)]) == 0
    capsys.readouterr()
    assert main(["oracle", str(gen), "--k", "20"]) == 3


# ----------------------------------------------------------------------- gen


def test_gen_regular_hexagon(tmp_path, capsys):
    out = tmp_path / "hex.json"
    assert main(["gen", "--shape", "regular", "--n", "6", "--out", str(out)]) == 0
    pts = load_instance(out)
    P = regular_polygon(6)
    assert pts == list(zip(P.xs.tolist(), P.ys.tolist()))


def test_gen_valtr_reproducible(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for out in (a, b):
        assert main(["gen", "--shape", "valtr", "--n", "100", "--seed", "7", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_too_small(capsys):
    assert main(["gen", "--shape", "valtr", "--n", "2", "--seed", "0"]) == 3


def test_gen_million_vertex_circle(tmp_path, capsys):
    out = tmp_path / "big.json"
    assert main(["gen", "--shape", "circle", "--n", "1048576", "--seed", "1", "--out", str(out)]) == 0
    pts = load_instance(out)
    assert len(pts) == 1048576


# -------------------------------------------------------------------- render


def test_packing_svg_disk_radii():
    svg = packing_svg([(0, 0), (0, 1), (1, 1), (1, 0)], (0, 1, 2), 0.5)
    assert svg.startswith("<svg")
    assert svg.count("<polygon") == 1
    assert svg.count('r="0.5"') == 3  # one exact-radius disk per center


def test_render_cli_round_trip(tmp_path, square_file, capsys):
    res = tmp_path / "res.json"
    svg = tmp_path / "pack.svg"
    assert main(["solve", str(square_file), "--k", "3", "--out", str(res)]) == 0
    capsys.readouterr()
    assert main(["render", "--in", str(square_file), "--result", str(res), "--out", str(svg)]) == 0
    text = svg.read_text()
    assert text.count("<circle") >= 3


def test_render_mismatched_files(tmp_path, square_file, capsys):
    hexf = tmp_path / "hex.json"
    P = regular_polygon(6)
    hexf.write_text(dump_instance(list(zip(P.xs.tolist(), P.ys.tolist()))))
    res = tmp_path / "res.json"
    svg = tmp_path / "pack.svg"
    assert main(["solve", str(hexf), "--k", "3", "--out", str(res)]) == 0
    capsys.readouterr()
    # result computed for the hexagon, rendered against the square: reject
    assert main(["render", "--in", str(square_file), "--result", str(res), "--out", str(svg)]) == 2


# --------------------------------------------------------------------- bench


def test_bench_csv_and_budgets(tmp_path, capsys):
    spec = tmp_path / "suite.json"
    spec.write_text(json.dumps([
        {"n": 16, "k": 3, "seed": 1},
        {"n": 12, "k": 4, "seed": 2, "shape": "regular"},
        {"n": 20, "k": 2, "seed": 3, "shape": "circle"},
    ]))
    out = tmp_path / "rows.csv"
    assert main(["bench", "--spec", str(spec), "--out", str(out)]) == 0
    with out.open() as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 3
    for row in rows:
        assert row["status"] == "ok"
        assert int(row["decide_calls"]) <= int(row["decide_call_budget"])
        assert int(row["nodes_max"]) <= int(row["node_budget"])
    assert (tmp_path / "rows_time.png").exists()
    assert (tmp_path / "rows_nodes.png").exists()
