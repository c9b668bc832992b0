import json

import pytest

from slimhex import catalog, verify
from slimhex.geometry import build_geometry

KEYS = [
    "gq21", "gq22", "gq24", "hex_xi", "hex_x", "hex_vii", "hex_viii",
    pytest.param("hex_ii", marks=pytest.mark.slow),
    pytest.param("hex_i", marks=pytest.mark.slow),
    "hex_vi_glued",
]

GQ_SECTION = [
    "prop_3_1_abelian", "prop_3_2_orders", "prop_3_3_converse", "cor_3_4_subgq_span", "prop_3_5_triad",
    "cor_3_6_line_or_complete", "lemma_3_7_arc_product", "lemma_3_8_to_use", "prop_3_9_expression",
]


@pytest.fixture(scope="module")
def suites():
    return {}


def _suite(suites, key):
    if key not in suites:
        g = catalog.build(key)
        suites[key] = None if g is None else verify.run_suite(g)
    if suites[key] is None:
        pytest.skip(f"{key} not constructed")
    return suites[key]


@pytest.mark.parametrize("key", KEYS)
def test_no_check_fails_on_builtins(suites, key):
    certs = _suite(suites, key)
    fails = [(c.check, c.status.witness) for c in certs if c.status.kind == verify.FAIL]
    assert fails == []
    assert [c.check for c in certs] == verify.CHECK_IDS
    assert any(c.status.passed for c in certs)


def test_gq_section_three_applicable_checks_pass(suites):
    by_key = {k: {c.check: c.status.kind for c in _suite(suites, k)} for k in catalog.GQ_KEYS}
    for i in GQ_SECTION:
        kinds = {by_key[k][i] for k in catalog.GQ_KEYS}
        assert kinds <= {verify.PASS, verify.SKIPPED} and verify.PASS in kinds, i
    # on GQ(2,2) only the GQ(2,4) statement is out of scope
    assert [i for i in GQ_SECTION if by_key["gq22"][i] != verify.PASS] == ["cor_3_4_subgq_span"]
    lemma = next(c for c in _suite(suites, "gq22") if c.check == "lemma_3_8_to_use")
    assert lemma.status.witness["size"] == 4


def test_hexagon_xi_section_four_passes(suites):
    by_id = {c.check: c for c in _suite(suites, "hex_xi")}
    for i in verify.CHECK_IDS:
        if i.startswith(("prop_4", "cor_4", "lemma_4", "lemma_2_1")):
            assert by_id[i].status.kind in (verify.PASS, verify.SKIPPED), i
    assert by_id["prop_4_1_commutation"].status.kind == verify.PASS
    assert by_id["lemma_2_1_big_quad"].status.kind == verify.PASS


def test_prop_2_3_on_hexagon_viii(suites):
    by_id = {c.check: c for c in _suite(suites, "hex_viii")}
    assert by_id["prop_2_3_quadrangle"].status.kind == verify.PASS


def test_certificate_json_shape(suites):
    c = _suite(suites, "gq22")[0]
    d = c.to_json_dict(False)
    assert set(d) == {"check", "geometry", "status", "witness"}
    assert set(c.to_json_dict(True)) == {"check", "geometry", "status", "witness", "millis"}
    assert d["status"] in (verify.PASS, verify.FAIL, verify.SKIPPED)
    json.dumps(d)


def test_unknown_check_id():
    with pytest.raises(KeyError):
        verify.run_check("prop_9_9", catalog.build("gq21"))


def test_checks_do_not_mutate_geometry():
    g = catalog.build("hex_x")
    before = (g.num_points, g.lines, g.dist.copy())
    verify.run_suite(g)
    assert (g.num_points, g.lines) == before[:2] and (g.dist == before[2]).all()


def test_out_of_scope_geometry_is_all_skipped():
    g = build_geometry(6, [(0, 1, 2), (2, 3, 4), (4, 5, 0)], name="triangle")
    assert {c.status.kind for c in verify.run_suite(g)} == {verify.SKIPPED}


def test_unconstructed_hexagon_vi_is_skipped(monkeypatch):
    real = catalog.build
    monkeypatch.setattr(catalog, "build", lambda key, **kw: None if key == "hex_vi_glued" else real(key, **kw))
    report = verify.full_report(keys=["gq21", "hex_vi_glued"])
    vi = [c for c in report["certificates"] if c["geometry"] == "hex_vi_glued"]
    assert len(vi) == len(verify.CHECK_IDS)
    q8 = next(c for c in vi if c["check"] == "sec_5_3_q8")
    assert q8["status"] == verify.SKIPPED
    assert q8["witness"] == {"reason": "hex_vi not constructed"}
    assert report["summary"]["fail"] == 0


def test_report_is_deterministic():
    a = verify.dumps(verify.full_report(keys=["gq22", "hex_xi"]))
    b = verify.dumps(verify.full_report(keys=["gq22", "hex_xi"]))
    assert a == b
