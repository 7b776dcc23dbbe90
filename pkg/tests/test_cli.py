from __future__ import annotations

import json

import jsonschema

from deltaring import cli, core, schemas


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_z12(capsys):
    code, out, _ = run(capsys, "info", "Z12")
    assert code == 0
    assert "delta-set (2): {0:0, 6:6}" in out
    assert "2-delta-u: true" in out


def test_info_matrix_ring_shows_false_verdict(capsys):
    code, out, _ = run(capsys, "check", "2-delta-u", "M(2,Z2)")
    assert code == 1
    assert "[[0,1],[1,1]]" in out  # the witness unit


def test_info_json_schema(capsys):
    code, out, _ = run(capsys, "info", "Z6", "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schemas.INFO_SCHEMA)
    assert payload["sets"]["units"]["indices"] == [1, 5]


def test_info_dump_round_trips(capsys):
    code, out, _ = run(capsys, "info", "GR(Z2,C2)", "--dump")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schemas.RING_DUMP_SCHEMA)
    back = core.ring_from_dict(data)
    assert core.ring_to_json(back) == out.strip()


def test_check_exit_codes(capsys):
    assert run(capsys, "check", "2-delta-u", "Z18")[0] == 0
    assert run(capsys, "check", "delta-u", "Z3")[0] == 1
    assert run(capsys, "check", "tripotent", "Z6")[0] == 0
    code, _, err = run(capsys, "check", "bogus-class", "Z6")
    assert code == 2 and "error" in err


def test_check_json_schema(capsys):
    code, out, _ = run(capsys, "check", "2-delta-u", "Z5", "--json")
    assert code == 1
    payload = json.loads(out)
    jsonschema.validate(payload, schemas.CHECK_REPORT_SCHEMA)
    assert payload["witness"][0]["element-index"] == 2


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "info", "M(2 Z3)")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "info", "GF(6)")
    assert code == 2


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "T3.8")
    assert code == 0
    assert "T3.8" in out and "pass" in out


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "bogus-id")
    assert code == 2 and "unknown check id" in err


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "T3.8", "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schemas.VERIFY_SCHEMA)


def test_verify_threads_flag_keeps_output_stable(capsys):
    _, serial, _ = run(capsys, "verify", "T3.8", "--json")
    _, threaded, _ = run(capsys, "verify", "T3.8", "--json", "--threads", "3")
    assert serial == threaded


def test_verify_max_order_restricts_scope(capsys):
    code, out, _ = run(capsys, "verify", "T2.8", "--max-order", "30", "--json")
    assert code == 0
    payload = json.loads(out)
    scope = payload["checks"][0]["scope_size"]
    assert 0 < scope < 100  # only the catalog rings of order <= 30 remain


def test_search_examples(capsys):
    code, out, _ = run(capsys, "search", "--include", "2-delta-u",
                       "--exclude", "delta-u", "--max-order", "16")
    assert code == 0 and "Z3" in out

    code, out, _ = run(capsys, "search", "--include", "delta-u",
                       "--exclude", "uj", "--max-order", "64")
    assert code == 0 and "(none)" in out


def test_info_z2_is_boolean(capsys):
    code, out, _ = run(capsys, "info", "Z2")
    assert code == 0
    assert "boolean: true" in out and "delta-u: true" in out


def test_search_open_problem_classes(capsys):
    # no pinned expectation: the scan reports whatever separation exists
    code, out, _ = run(capsys, "search", "--include", "2-uq",
                       "--exclude", "2-uj", "--max-order", "32")
    assert code == 0
    assert "rings in" in out


def test_search_json_schema(capsys):
    code, out, _ = run(capsys, "search", "--include", "2-delta-u,uuc",
                       "--max-order", "8", "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schemas.SEARCH_SCHEMA)
    assert "Z2" in payload["matches"]


def test_classes_listing(capsys):
    code, out, _ = run(capsys, "classes")
    assert code == 0
    assert "2-delta-u" in out and "semi-tripotent" in out
    code, out, _ = run(capsys, "classes", "--json")
    payload = json.loads(out)
    jsonschema.validate(payload, schemas.CLASSES_SCHEMA)
    assert payload["2-delta-u"]["category"] == "unit-class"


def test_env_order_guard(capsys, monkeypatch):
    monkeypatch.setenv("DELTA_RING_MAX_ORDER", "10")
    code, _, err = run(capsys, "info", "Z12")
    assert code == 2 and "guard" in err
    # the flag wins over the environment
    code, _, _ = run(capsys, "info", "Z12", "--max-order", "100")
    assert code == 0
