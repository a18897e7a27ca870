import json

import pytest

from qmwrt.cli import UsageError, main, parse_args


def invoke(capsys, args):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_wrt_job():
    job = parse_args(["wrt", "--manifold", "brieskorn:2,3,7", "--r", "29",
                      "--s", "5", "--exact", "--json"])
    assert job.command == "wrt"
    assert job.manifold == "brieskorn:2,3,7"
    assert (job.r, job.s, job.exact, job.output) == (29, 5, True, "json")


def test_parse_verify_sweep_job():
    job = parse_args(["verify", "modularity", "--manifold", "brieskorn:2,3,7",
                      "--s", "5", "--r-range", "101:501:50", "--order", "3"])
    assert job.suite == "modularity"
    assert job.r_range == (101, 501, 50)
    assert job.order == 3


def test_parse_rejects_even_r():
    with pytest.raises(UsageError, match="odd"):
        parse_args(["wrt", "--manifold", "lens:3", "--r", "4"])


def test_even_r_exit_code(capsys):
    code, _out, err = invoke(capsys, ["wrt", "--manifold", "brieskorn:2,3,5",
                                      "--r", "4"])
    assert code == 2
    assert "odd" in err


def test_non_coprime_s_rejected(capsys):
    code, _out, err = invoke(capsys, ["wrt", "--manifold", "brieskorn:2,3,5",
                                      "--r", "9", "--s", "3"])
    assert code == 2


def test_wrt_json_roundtrip(capsys):
    args = ["wrt", "--manifold", "brieskorn:2,3,7", "--r", "7", "--s", "1",
            "--exact", "--json"]
    code, out, _err = invoke(capsys, args)
    assert code == 0
    data = json.loads(out)
    assert data["manifold"] == "brieskorn:2,3,7"
    assert data["ctx"] == {"r": 7, "s": 1}
    names = [row["name"] for row in data["results"]]
    assert names[:2] == ["tau", "W"]
    exact = data["results"][0]["exact"]
    assert set(exact) == {"conductor", "coeffs"}
    assert all(len(t) == 3 for t in exact["coeffs"])
    # the JobSpec-relevant fields survive re-parsing the payload
    job2 = parse_args(["wrt", "--manifold", data["manifold"],
                       "--r", str(data["ctx"]["r"]), "--s", str(data["ctx"]["s"]),
                       "--exact", "--json"])
    assert (job2.manifold, job2.r, job2.s) == ("brieskorn:2,3,7", 7, 1)


def test_gauss_json(capsys):
    code, out, _ = invoke(capsys, ["gauss", "--s", "1", "--r", "5", "--json"])
    assert code == 0
    data = json.loads(out)
    assert abs(data["brute_re"] - 5 ** 0.5) < 1e-10
    assert data["match"] is True
    assert data["closed"]["sqrt_radicand"] == 5


def test_gauss_allows_even_modulus(capsys):
    code, out, _ = invoke(capsys, ["gauss", "--s", "1", "--r", "4", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["match"] is True and data["closed"]["phase"] == "1+i"


def test_verify_pass_and_fields(capsys):
    code, out, _ = invoke(capsys, ["verify", "geometric", "--manifold",
                                   "brieskorn:2,3,5", "--r", "7", "--s", "5",
                                   "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["results"][0]["check"] == "geometric_relation"
    assert data["results"][0]["status"] == "pass"


def test_verify_all_brieskorn(capsys):
    code, out, _ = invoke(capsys, ["verify", "all", "--manifold",
                                   "brieskorn:2,3,5", "--r", "5", "--s", "1",
                                   "--json"])
    assert code == 0
    data = json.loads(out)
    checks = {row["check"]: row["status"] for row in data["results"]}
    assert checks["poincare_identity"] == "pass"
    assert checks["geometric_relation"] == "pass"


def test_exit_code_is_one_on_failure(capsys):
    # an impossible tolerance forces the modularity check to fail
    code, _out, err = invoke(capsys, [
        "verify", "modularity", "--manifold", "brieskorn:2,3,7", "--s", "1",
        "--r-range", "101:301:100", "--order", "2", "--slope-tol", "1e-9"])
    assert code == 1
    assert "modularity_slope" in err


def test_sweep_csv_format(capsys):
    code, out, _ = invoke(capsys, ["sweep", "--manifold", "brieskorn:2,3,7",
                                   "--r-range", "101:301:100", "--s", "1",
                                   "--order", "2", "--jobs", "2"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,s,quantity,re,im,exact"
    rows = [line.split(",") for line in lines[1:]]
    assert [int(row[0]) for row in rows] == [101, 201, 301]  # ordered by r
    assert all(len(row[3]) >= 17 for row in rows)            # 17 significant digits


def test_sweep_rejects_bad_range(capsys):
    code, _out, err = invoke(capsys, ["sweep", "--manifold", "brieskorn:2,3,7",
                                      "--r-range", "100:200:50"])
    assert code == 2


def test_flatconn_and_falsetheta(capsys):
    code, out, _ = invoke(capsys, ["flatconn", "--manifold", "lens:3",
                                   "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["results"][0]["kind"] == "abelian"
    code, out, _ = invoke(capsys, ["falsetheta", "--basis", "psi", "--p", "6",
                                   "--a", "3", "--r", "7", "--s", "1",
                                   "--json", "--exact"])
    assert code == 0
    data = json.loads(out)
    assert data["results"][0]["name"] == "eichler_limit"
    assert "exact" in data["results"][0]


def test_wrt_lens_selector(capsys):
    code, out, _ = invoke(capsys, ["wrt", "--manifold", "lens:3", "--r", "5",
                                   "--json", "--exact"])
    assert code == 0
    data = json.loads(out)
    names = [row["name"] for row in data["results"]]
    assert names == ["W", "W_sector_0", "W_sector_1"]
    assert "exact" in data["results"][0]


def test_unknown_manifold_selector(capsys):
    code, _out, err = invoke(capsys, ["wrt", "--manifold", "mystery:1",
                                      "--r", "5"])
    assert code == 2


def test_output_file(tmp_path, capsys):
    out_file = tmp_path / "result.json"
    code, out, _ = invoke(capsys, ["gauss", "--s", "2", "--r", "7", "--json",
                                   "--out", str(out_file)])
    assert code == 0
    assert out == ""
    data = json.loads(out_file.read_text())
    assert data["match"] is True
