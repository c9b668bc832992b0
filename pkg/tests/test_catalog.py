import json

import pytest

from slimhex import catalog
from slimhex.errors import ParseError, ValidationError

FROZEN_SIZES = {
    "gq21": (9, 6), "gq22": (15, 15), "gq24": (27, 45),
    "hex_xi": (27, 27), "hex_x": (45, 60), "hex_vii": (81, 162), "hex_viii": (135, 315),
    "hex_ii": (729, 2916), "hex_i": (759, 3795), "hex_vi_glued": (243, 729),
}


@pytest.mark.parametrize("key", list(catalog.CATALOG))
def test_sizes_and_round_trip(geometry, key, tmp_path):
    g = geometry(key)
    if g is None:
        pytest.skip(f"{key} not constructed")
    assert (g.num_points, len(g.lines)) == FROZEN_SIZES[key]
    assert g.name == key
    path = tmp_path / f"{key}.json"
    catalog.save(g, path)
    back = catalog.load(path)
    assert back == g and back.name == key
    assert catalog.to_json(back) == catalog.to_json(g)


def test_build_is_memoised():
    assert catalog.build("hex_x") is catalog.build("hex_x")
    with pytest.raises(KeyError):
        catalog.build("hex_zz")


@pytest.mark.parametrize(
    "payload,exc",
    [
        ([], ParseError),
        ({"lines": []}, ParseError),
        ({"num_points": "3", "lines": []}, ParseError),
        ({"num_points": 3, "lines": [[0, 1, "2"]]}, ParseError),
        ({"num_points": 3, "lines": [[0, 1, 2]], "name": 5}, ParseError),
        ({"num_points": 3, "lines": [[2, 1, 0]]}, ValidationError),
        ({"num_points": 5, "lines": [[2, 3, 4], [0, 1, 2]]}, ValidationError),
        ({"num_points": 3, "lines": [[0, 1, 2], [0, 1, 2]]}, ValidationError),
        ({"num_points": 3, "lines": [[0, 1, 3]]}, ValidationError),
        ({"num_points": 4, "lines": [[0, 1, 2], [0, 1, 3]]}, ValidationError),
    ],
)
def test_bad_json_rejected(payload, exc):
    with pytest.raises(exc):
        catalog.from_json_dict(payload)


def test_load_rejects_malformed_text(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        catalog.load(p)


def test_table_json_is_serialisable():
    data = catalog.table_json()
    assert set(data) == {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi"}
    json.dumps(data)
    assert data["i"]["num_points"] == 759 and data["i"]["a2"] == 35


@pytest.mark.parametrize("key", ["hex_xi", "hex_viii", "gq22", "gq24"])
def test_params_match_where_table_is_consistent(geometry, key):
    report = catalog.verify_params(geometry(key), catalog.expected_for(key))
    assert report["ok"], report


@pytest.mark.parametrize("key,row", [("hex_vii", "vii"), ("hex_x", "x")])
def test_starred_rows_differ_only_in_bigness(geometry, key, row):
    # every (2,1)-quad of Q x L is big (the inequality for big quads is an equality here),
    # while the table lists them without a star
    report = catalog.verify_params(geometry(key), catalog.expected_for(row))
    bad = [k for k, f in report["fields"].items() if not f["pass"]]
    assert bad == ["t2_set"]
    measured = {tuple(p) for p in report["fields"]["t2_set"]["measured"]}
    expected = {tuple(p) for p in report["fields"]["t2_set"]["expected"]}
    assert {t2 for t2, _ in measured} == {t2 for t2, _ in expected}
    assert (1, True) in measured


def test_ingest_dir_rows(ingest_dir):
    if ingest_dir is None:
        pytest.skip("no --ingest-dir given")
    from pathlib import Path

    found = 0
    for row in catalog.TABLE:
        path = Path(ingest_dir) / f"hex_{row}.json"
        if path.exists():
            found += 1
            report = catalog.verify_params(catalog.load(path), catalog.expected_for(row))
            assert report["ok"], (row, report)
    if not found:
        pytest.skip("ingest dir has no hex_<row>.json files")
