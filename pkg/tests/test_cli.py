import json

from liecert import cli


def run(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr().out
    return code, out


def run_json(args, capsys):
    code, out = run(args, capsys)
    return code, json.loads(out)


def test_decompose_entry(capsys):
    code, rep = run_json(["decompose", "g2-so0-7-in-so8"], capsys)
    assert code == 0
    dims = rep["decomposition"]["dims"]
    assert (dims["h"], dims["m"], dims["s"]) == (14, 7, 7)
    assert rep["schema_version"] == 1


def test_decompose_sp_series(capsys):
    code, rep = run_json(["decompose", "sp-series:p=1"], capsys)
    assert code == 0
    assert rep["decomposition"]["dims"]["m1"] == 2


def test_certify_exit_codes(capsys):
    code, rep = run_json(
        ["certify", "su3-su4-spin7", "--restarts", "40", "--iters", "120"], capsys
    )
    assert code == 0
    assert rep["verdict"]["kind"] == "CertifiedBracketIntersection"

    code, rep = run_json(["certify", "f4-case"], capsys)
    assert code == 30
    assert rep["verdict"]["kind"] == "UnrealizableFamily"


def test_certify_curvature_route(capsys):
    # the quaternionic family certifies by either route; the CLI tries the
    # bracket cones first and must end certified either way
    code, rep = run_json(["certify", "sp-series-rank4:p=1"], capsys)
    assert code == 0
    assert rep["verdict"]["kind"].startswith("Certified")


def test_refute_witness(capsys):
    code, rep = run_json(["refute", "spin-octonion-case1:p=0"], capsys)
    assert code == 10
    assert rep["verdict"]["kind"] == "ViolationWitness"
    assert rep["verdict"]["data"]["bracket_norm"] <= rep["verdict"]["data"]["bracket_tol"]


def test_refute_sequence(capsys):
    code, rep = run_json(["refute", "remark-limit"], capsys)
    assert code == 10
    assert rep["verdict"]["kind"] == "SequenceViolation"


def test_estimate(capsys):
    code, rep = run_json(
        ["estimate", "sp-series:p=1", "--restarts", "30", "--iters", "80"], capsys
    )
    assert code == 0
    assert rep["verdict"]["kind"] == "NumericalEstimate"
    assert rep["verdict"]["data"]["rho_inf"] > 1e-4


def test_catalog_listing(capsys):
    code, rep = run_json(["catalog"], capsys)
    assert code == 0
    ids = [e["id"] for e in rep["entries"]]
    assert ids == sorted(ids)
    code, rep = run_json(["catalog", "--rank", "8", "--realizable", "true"], capsys)
    listed = {e["id"] for e in rep["entries"]}
    assert {"spin7plus-so8", "g2-spin7", "su3-su4-spin7"} <= listed


def test_config_file(tmp_path, capsys):
    cfg = {
        "name": "tiny",
        "ambient_dim": 4,
        "g": [[[0, 1, 1.0]], [[0, 2, 1.0]], [[1, 2, 1.0]], [[0, 3, 1.0]], [[1, 3, 1.0]], [[2, 3, 1.0]]],
        "k": [[[0, 1, 1.0]], [[0, 2, 1.0]], [[1, 2, 1.0]]],
        "h": [[[1, 2, 1.0]]],
    }
    path = tmp_path / "triple.json"
    path.write_text(json.dumps(cfg))
    code, rep = run_json(["decompose", "--config", str(path)], capsys)
    assert code == 0
    assert rep["triple"]["dims"] == {"g": 6, "k": 3, "h": 1}


def test_malformed_config(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"ambient_dim": 4, "g": [[[0, 1, 1.0]]], "k": [[[0, 1, 1.0]]]}))
    code = cli.main(["decompose", "--config", str(path)])
    err = capsys.readouterr().err
    assert code == 2
    assert "h" in err  # diagnostic names the missing field


def test_bad_entry_field_indices(tmp_path, capsys):
    path = tmp_path / "bad2.json"
    path.write_text(
        json.dumps(
            {"ambient_dim": 3, "g": [[[0, 7, 1.0]]], "k": [[[0, 1, 1.0]]], "h": [[[0, 1, 1.0]]]}
        )
    )
    code = cli.main(["decompose", "--config", str(path)])
    err = capsys.readouterr().err
    assert code == 2
    assert "g" in err


def test_missing_entry_is_usage_error(capsys):
    code = cli.main(["certify"])
    assert code == 2


def test_unknown_entry_is_usage_error(capsys):
    code = cli.main(["decompose", "not-a-family"])
    assert code == 2


def test_determinism_byte_identical(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    args = ["estimate", "sp-series:p=1", "--seed", "0", "--restarts", "20", "--iters", "50"]
    assert cli.main(args + ["--out", str(out1)]) == 0
    assert cli.main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_markdown_output(capsys):
    code, out = run(["decompose", "g2-so4-rank3", "--format", "markdown"], capsys)
    assert code == 0
    assert out.startswith("# decompose report")
    assert "component" in out
