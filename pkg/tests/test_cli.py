import json
import subprocess
import sys

import pytest

from slimhex import catalog
from slimhex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_writes_loadable_file(capsys, tmp_path):
    path = tmp_path / "hex_xi.json"
    code, _, _ = run(capsys, "generate", "hex_xi", "-o", str(path))
    assert code == 0
    assert catalog.load(path) == catalog.build("hex_xi")


def test_generate_to_stdout(capsys):
    code, out, _ = run(capsys, "generate", "gq21")
    assert code == 0 and json.loads(out)["num_points"] == 9


def test_group_hex_xi_json(capsys):
    code, out, _ = run(capsys, "group", "hex_xi", "--json")
    data = json.loads(out)
    assert code == 0
    assert (data["group_order_log2"], data["minimal_order_log2"], data["type"]) == (9, 9, "plus")
    assert set(data) >= {"dim_v", "npdim", "good_subset"}


@pytest.mark.slow
def test_group_hex_i_reports_obstruction(capsys):
    code, out, _ = run(capsys, "group", "hex_i", "--json")
    data = json.loads(out)
    assert code == 1
    assert data["group_order_log2"] is None and data["obstruction"]["size"] == 24
    assert len(data["good_subset"]["X"]) == 10


def test_verify_gq22(capsys):
    code, out, _ = run(capsys, "verify", "gq22")
    assert code == 0
    assert "FAIL " not in out
    assert out.strip().splitlines()[-1].startswith("pass=")


def test_verify_json_is_byte_identical(capsys):
    outs = [run(capsys, "verify", "hex_x", "--json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    data = json.loads(outs[0])
    assert data["summary"]["fail"] == 0
    assert all("millis" not in c for c in data["certificates"])
    timed = json.loads(run(capsys, "verify", "hex_xi", "--json", "--timings")[1])
    assert all(isinstance(c["millis"], int) for c in timed["certificates"])


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "gq22", "--check", "lemma_3_8_to_use", "--json")
    data = json.loads(out)
    assert code == 0 and len(data["certificates"]) == 1


def test_params_exit_codes(capsys):
    assert run(capsys, "params", "hex_xi")[0] == 0
    # the table's unstarred (2,1)-quads in row (vii) are big here
    assert run(capsys, "params", "hex_vii")[0] == 1


def test_params_on_file_with_row(capsys, tmp_path):
    p = tmp_path / "g.json"
    catalog.save(catalog.build("hex_xi"), p)
    assert run(capsys, "params", str(p), "--row", "xi")[0] == 0
    assert run(capsys, "params", str(p), "--row", "viii")[0] == 1
    code, out, _ = run(capsys, "params", str(p), "--json")
    assert code == 0 and json.loads(out)["npdim"] == 8


def test_repdim_arcs_quads_good_subset(capsys):
    code, out, _ = run(capsys, "repdim", "hex_x", "--json")
    assert code == 0 and json.loads(out) == {"dim_v": 10, "npdim": 8}
    code, out, _ = run(capsys, "arcs", "gq22", "--json")
    assert code == 0 and json.loads(out)["max_arc_size"] == 5 and len(json.loads(out)["ovoids"]) == 6
    code, out, _ = run(capsys, "arcs", "gq24", "--k", "4", "--json")
    assert code == 0 and json.loads(out)["complete"] == 0
    code, out, _ = run(capsys, "quads", "hex_x", "--json")
    assert code == 0 and json.loads(out)["count"] == 18
    code, out, _ = run(capsys, "good-subset", "hex_vii", "--json")
    assert code == 0 and json.loads(out)["size"] == 5


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["params", "no_such_key"],
        ["verify"],
        ["verify", "gq22", "--all"],
        ["verify", "gq22", "--check", "nope"],
        ["arcs", "hex_x"],
        ["good-subset", "hex_x", "--a", "0"],
        ["quads", "gq22"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_file_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"num_points": 3, "lines": [[2, 1, 0]]}')
    assert run(capsys, "repdim", str(p))[0] == 2
    p.write_text("nope")
    assert run(capsys, "repdim", str(p))[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "slimhex", "repdim", "gq21", "--json"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["dim_v"] == 4
