"""Command-line interface: dispatch, exit codes, round trips, stability."""

import io
import json

from brauerkit.cli import run

QUAT_23 = json.dumps({
    "center": {"poly": ["0", "1"]},
    "inv": [
        {"place": {"p": 2, "factor": ["0", "1"]}, "num": 1, "den": 2},
        {"place": {"p": 3, "factor": ["0", "1"]}, "num": 1, "den": 2},
    ],
})
IND4 = json.dumps({
    "center": {"poly": ["0", "1"]},
    "inv": [
        {"place": {"p": 2, "factor": ["0", "1"]}, "num": 1, "den": 4},
        {"place": {"p": 3, "factor": ["0", "1"]}, "num": 3, "den": 4},
    ],
})


def invoke(*args):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(args), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_field_info():
    code, out, _ = invoke("field", "info", "--field", '{"poly": ["1","0","1"]}',
                          "--primes", "2,5")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == 2 and doc["r1"] == 0 and doc["r2"] == 1
    assert len(doc["places"]["5"]) == 2 and len(doc["places"]["2"]) == 1


def test_brauer_index_and_errors():
    code, out, _ = invoke("brauer", "index", "--class", QUAT_23)
    assert code == 0 and json.loads(out) == {"schur_index": 2}
    bad = json.dumps({"center": {"poly": ["0", "1"]},
                      "inv": [{"place": {"p": 2, "factor": ["0", "1"]},
                               "num": 1, "den": 2}]})
    code, _, err = invoke("brauer", "index", "--class", bad)
    assert code == 1
    assert json.loads(err)["error"]["code"] == "ReciprocityViolation"
    code, _, err = invoke("brauer", "index", "--class", "{oops")
    assert code == 2
    assert json.loads(err)["error"]["code"] == "MalformedInput"


def test_brauer_add_round_trip():
    code, out, _ = invoke("brauer", "add", "--a", QUAT_23, "--b", IND4)
    assert code == 0
    code2, out2, _ = invoke("brauer", "index", "--class", out.strip())
    assert code2 == 0 and json.loads(out2) == {"schur_index": 4}
    # subtraction undoes addition
    code3, out3, _ = invoke("brauer", "add", "--a", out.strip(), "--b", IND4,
                            "--sign", "-1")
    assert json.loads(out3) == json.loads(QUAT_23.replace(" ", ""))


def test_brauer_restrict():
    code, out, _ = invoke("brauer", "restrict", "--class", QUAT_23,
                          "--field", '{"poly": ["1","0","1"]}')
    assert code == 0
    doc = json.loads(out)
    assert doc["inv"] == []


def test_embed_decide():
    code, out, _ = invoke("embed", "decide", "--d", QUAT_23, "--b", IND4)
    assert code == 0
    doc = json.loads(out)
    assert doc["embeddable"] is False
    assert doc["candidates"][0]["verdict"]["failing_condition"] == "Condition1"
    code, out, _ = invoke("embed", "decide", "--d", QUAT_23, "--b", QUAT_23)
    assert json.loads(out)["embeddable"] is True


def test_weil_subcommands(tmp_path):
    code, out, _ = invoke("weil", "check", "--poly", '["5","-1","1"]', "--q", "5")
    assert code == 0 and json.loads(out) == {"is_weil": True}
    code, out, _ = invoke("weil", "check", "--poly", '["5","-5","1"]', "--q", "5")
    assert json.loads(out) == {"is_weil": False}
    code, out, _ = invoke("weil", "invariants",
                          "--weil", '{"poly": ["-3","1"], "q": {"p": 3, "m": 2}}')
    doc = json.loads(out)
    assert doc["schur_index"] == 2 and doc["dimension"] == 1
    code, out, _ = invoke("weil", "enumerate", "--q", "2", "--degree", "2")
    assert json.loads(out)["count"] == 6
    csv_path = tmp_path / "weil.csv"
    csv_path.write_text("p,m,coeffs\n5,1,5 -1 1\nx,1,1\n", encoding="utf-8")
    code, out, _ = invoke("weil", "import", "--csv", str(csv_path))
    doc = json.loads(out)
    assert len(doc["imported"]) == 1 and doc["skipped"][0]["line"] == 3


def test_reduce_obstruction_and_qm():
    weil = json.dumps({"poly": ["5", "-1", "1"], "q": {"p": 5, "m": 1}})
    code, out, _ = invoke("reduce", "obstruction", "--endo", QUAT_23,
                          "--ell", "2", "--d", QUAT_23, "--weil", weil)
    assert code == 0 and json.loads(out)["verdict"] == "MustSplit"
    code, out, _ = invoke("reduce", "qm-surface", "--ram", "2,3", "--q", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_must_split"] and len(doc["rows"]) == 10
    assert all(r["verdict"] == "MustSplit" for r in doc["rows"])
    code, _, err = invoke("reduce", "qm-surface", "--ram", "2,3", "--q", "9")
    assert code == 1
    assert json.loads(err)["error"]["code"] == "RamifiedAtP"


def test_json_output_is_stable_and_reparses():
    args = ("reduce", "qm-surface", "--ram", "2,3", "--q", "5")
    _, out1, _ = invoke(*args)
    _, out2, _ = invoke(*args)
    assert out1 == out2
    doc = json.loads(out1)
    assert out1 == json.dumps(doc, sort_keys=True) + "\n"


def test_text_format():
    code, out, _ = invoke("--format", "text", "reduce", "qm-surface",
                          "--ram", "2,3", "--q", "5")
    assert code == 0 and "MustSplit" in out and "{" not in out


def test_degree_limit_env(monkeypatch):
    monkeypatch.setenv("BRAUERKIT_DEGREE_LIMIT", "1")
    d_gauss = json.dumps({
        "center": {"poly": ["1", "0", "1"]},
        "inv": [
            {"place": {"p": 5, "factor": ["2", "1"]}, "num": 1, "den": 2},
            {"place": {"p": 5, "factor": ["3", "1"]}, "num": 1, "den": 2},
        ],
    })
    code, _, err = invoke("embed", "decide", "--d", d_gauss, "--b", QUAT_23)
    assert code == 1
    assert json.loads(err)["error"]["code"] == "DegreeLimitExceeded"
    monkeypatch.delenv("BRAUERKIT_DEGREE_LIMIT")
    code, out, _ = invoke("embed", "decide", "--d", d_gauss, "--b", QUAT_23)
    assert code == 0


def test_junk_typed_values_exit_2():
    doc = json.dumps({"center": {"poly": ["0", "1"]},
                      "inv": [{"place": {"p": 2, "factor": ["0", "1"]},
                               "num": {}, "den": 2}]})
    code, _, err = invoke("brauer", "index", "--class", doc)
    assert code == 2
    assert json.loads(err)["error"]["code"] == "MalformedInput"


def test_missing_subcommand_exits_2(capsys):
    assert invoke("brauer")[0] == 2
    assert invoke()[0] == 2
