import json

import pytest

from etaforge.cli import load_config, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_integrate_k_irrational(capsys):
    code, out = run(capsys, "integrate-k", "--a", "0,0,0")
    assert code == 0
    cert = json.loads(out.out)
    assert cert["rational"] is False and cert["g"] is None


def test_integrate_k_rational(capsys):
    code, out = run(capsys, "integrate-k", "--a", "0,-2,1")
    cert = json.loads(out.out)
    assert code == 0 and cert["rational"] and cert["g"] is not None


def test_expand(capsys):
    code, out = run(capsys, "expand", "--e", "8,-7,0,3", "--terms", "8", "--json")
    s = json.loads(out.out)
    assert code == 0
    assert s["offset"] == "1" and s["coeffs"][:4] == ["1", "-8", "27", "-56"]


def test_expand_pairs(capsys):
    code, out = run(capsys, "expand", "--e", "2:20,1:-16", "--terms", "4")
    assert code == 0 and "offset 1" in out.out


def test_verify_rp(capsys):
    code, out = run(capsys, "verify", "--suite", "rp")
    assert code == 0 and json.loads(out.out)["passed"]


def test_search_json_lines(capsys):
    code, out = run(capsys, "search", "--emax", "8", "--b", "1", "--terms", "400")
    lines = [json.loads(x) for x in out.out.splitlines()]
    assert code == 0
    assert [8, -7, 0, 3] in [h["e"] for h in lines]


def test_scan(capsys):
    code, out = run(capsys, "scan-a", "--range", "3")
    assert code == 0 and json.loads(out.out)["diff"] == "EMPTY-DIFF"


def test_eval_row(capsys):
    code, out = run(capsys, "eval", "--what", "row:3.1", "--prec", "256")
    checks = json.loads(out.out)
    assert code == 0 and all(c["passed"] for c in checks)


def test_eval_k(capsys):
    code, out = run(capsys, "eval", "--what", "k")
    assert code == 0 and json.loads(out.out)[0]["check"].startswith("(iv)")


def test_eval_integral(capsys):
    code, _ = run(capsys, "eval", "--what", "fine0")
    assert code == 0


def test_bad_input_exit_code(capsys):
    code, out = run(capsys, "integrate-k", "--a", "1,2")
    assert code == 2 and "error" in out.err


def test_out_file_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    main(["search", "--emax", "6", "--b", "2", "--terms", "100", "--out", str(a)])
    main(["search", "--emax", "6", "--b", "2", "--terms", "100", "--out", str(b), "--jobs", "2"])
    assert a.read_bytes() == b.read_bytes()


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# scan settings\nrange = 2\n")
    code, out = run(capsys, "scan-a", "--config", str(cfg))
    assert code == 0 and json.loads(out.out)["range"] == 2
    # flags override the file
    code, out = run(capsys, "scan-a", "--config", str(cfg), "--range", "1")
    assert json.loads(out.out)["range"] == 1


def test_config_rejects_unknown(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = blue\n")
    with pytest.raises(ValueError):
        load_config(str(cfg))


def test_nonpositive_rejected(capsys):
    code, _ = run(capsys, "scan-a", "--range", "0")
    assert code == 2
