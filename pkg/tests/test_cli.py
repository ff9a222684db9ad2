import json
import subprocess
import sys

import pytest

from lpmrep.cli import main

U23 = '{"n": 3, "intervals": [[1, 3], [1, 3]]}'
P4 = '{"n": 4, "intervals": [[1, 2], [1, 4]]}'
U24 = '{"n": 4, "intervals": [[1, 4], [1, 4]], "partition": [1, 3]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_uniform(capsys):
    code, out, err = run(capsys, "info", U23)
    assert code == 0
    assert err.strip() == "n=3 r=2 bases=3 nested=true"
    data = json.loads(out)
    assert data["clonal_classes"] == [[1, 2, 3]]
    assert data["column_intervals"] == [[1, 2], [1, 2], [1, 2]]


def test_info_not_nested(capsys):
    code, out, err = run(capsys, "info", P4)
    assert code == 0 and "nested=false" in err
    assert json.loads(out)["nested"] is False


@pytest.mark.parametrize(
    "pres,needle",
    [('{"n": 3, "intervals": []}', "empty"), ('{"n": 5, "intervals": [[1, 2], [4, 5]]}', "column 3 uncovered"), ("{not json", "input")],
)
def test_info_rejects_bad_input(capsys, pres, needle):
    code, out, err = run(capsys, "info", pres)
    assert code == 2 and out == ""
    lines = err.strip().splitlines()
    assert len(lines) == 1 and lines[0].startswith("error: ") and needle in lines[0]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["represent", U23])
    assert info.value.code == 2
    assert capsys.readouterr().err.startswith("error: usage:")
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_represent_modes(capsys):
    code, out, _ = run(capsys, "represent", U23, "--mode", "ext", "--p", "2")
    data = json.loads(out)
    assert code == 0
    assert data["field"] == {"p": "2", "s": 3, "modulus": [1, 1, 0, 1]}
    assert data["entries"] == [[[1, 0, 0]] * 3, [[0, 0, 1], [0, 1, 0], [1, 0, 0]]]
    code, out, _ = run(capsys, "represent", U23, "--mode", "prime")
    data = json.loads(out)
    assert data["field"] == {"p": "37", "s": 1}
    assert data["entries"] == [["1", "1", "1"], ["4", "2", "1"]]
    code, out, _ = run(capsys, "represent", U24, "--mode", "muniform", "--q", "3")
    data = json.loads(out)
    assert code == 0 and data["field"]["p"] == "3" and data["field"]["s"] == 2


def test_represent_muniform_needs_params(capsys):
    assert run(capsys, "represent", U23, "--mode", "muniform", "--q", "3")[0] == 2
    assert run(capsys, "represent", U24, "--mode", "muniform")[0] == 2
    code, _, err = run(capsys, "represent", U24, "--mode", "muniform", "--q", "2")
    assert code == 2 and "q=2" in err


def test_verify_pass_and_fail(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    assert run(capsys, "represent", P4, "--mode", "ext", "-o", str(rep))[0] == 0
    for mode in ("bases", "all-subsets"):
        code, out, _ = run(capsys, "verify", P4, str(rep), "--mode", mode)
        assert code == 0 and json.loads(out)["ok"]
    data = json.loads(rep.read_text())
    data["entries"][0][2] = [1] + [0] * (data["field"]["s"] - 1)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, err = run(capsys, "verify", P4, str(bad))
    result = json.loads(out)
    assert code == 1 and not result["ok"] and result["witness"]
    assert "verification failed" in err
    code, _, err = run(capsys, "verify", U23, str(rep))
    assert code == 2 and "error:" in err


def test_isolating_check(capsys):
    code, out, err = run(capsys, "isolating-check", P4)
    assert code == 0 and err.strip() == "isolating: true"
    data = json.loads(out)
    assert data["isolating"] and data["witness"] is None
    assert [b["multiplicity"] for b in data["bases"]] == [1] * 5


def test_port(capsys):
    code, out, _ = run(capsys, "port", U23, "--po", "1")
    assert code == 0 and json.loads(out)["minimal_qualified_sets"] == [[2, 3]]
    code, out, _ = run(capsys, "port", P4, "--po", "4")
    assert [3] in json.loads(out)["minimal_qualified_sets"]
    assert run(capsys, "port", U23, "--po", "9")[0] == 2


def test_share_reconstruct_round_trip(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    shares = tmp_path / "shares.json"
    run(capsys, "represent", U23, "--mode", "prime", "-o", str(rep))
    code, _, _ = run(capsys, "share", str(rep), "--secret", "5", "--free", '["11"]', "-o", str(shares))
    assert code == 0
    data = json.loads(shares.read_text())
    assert data["p_o"] == 1 and sorted(data["shares"]) == ["2", "3"]
    code, out, err = run(capsys, "reconstruct", str(shares))
    assert code == 0 and json.loads(out) == {"secret": "5"}
    code, out, err = run(capsys, "reconstruct", str(shares), "--players", "2")
    assert code == 2 and out == "" and err.startswith("error: unqualified")


def test_share_with_os_randomness(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    shares = tmp_path / "shares.json"
    run(capsys, "represent", P4, "--mode", "ext", "-o", str(rep))
    assert run(capsys, "share", str(rep), "--secret", "[1, 0, 1, 1]", "-o", str(shares))[0] == 0
    code, out, _ = run(capsys, "reconstruct", str(shares), "--rep", str(rep), "--players", "2,3,4")
    assert code == 0 and json.loads(out)["secret"] == [1, 0, 1, 1]


def test_share_relative_scheme_reference(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    run(capsys, "represent", U23, "--mode", "prime", "-o", "rep.json")
    (tmp_path / "out").mkdir()
    run(capsys, "share", "rep.json", "--secret", "7", "--free", '["2"]', "-o", "out/s.json")
    (tmp_path / "out" / "rep.json").write_text((tmp_path / "rep.json").read_text())
    monkeypatch.chdir(tmp_path / "out")
    code, out, _ = run(capsys, "reconstruct", "s.json")
    assert code == 0 and json.loads(out)["secret"] == "7"


def test_share_rejects_bad_free(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    run(capsys, "represent", U23, "--mode", "prime", "-o", str(rep))
    assert run(capsys, "share", str(rep), "--secret", "5", "--free", '"3"')[0] == 2
    assert run(capsys, "share", str(rep), "--secret", "5", "--free", '["1", "2"]')[0] == 2
    assert run(capsys, "share", str(rep), "--secret", "99")[0] == 2


def test_limit_n_scale_error(capsys):
    code, out, err = run(capsys, "info", U23, "--limit-n", "2")
    assert code == 3 and out == "" and err.startswith("error: scale")


def test_prime_range_exit_code(capsys):
    pres = json.dumps({"n": 20, "intervals": [[j, 14 + j] for j in range(1, 7)]})
    code, _, err = run(capsys, "represent", pres, "--mode", "prime")
    assert code == 3 and "error:" in err


def test_sweep_small(capsys):
    code, out, err = run(capsys, "sweep", "--limit-n", "3")
    data = json.loads(out)
    assert code == 0 and data["max_n"] == 3
    assert [c["criterion"] for c in data["criteria"]] == list(range(1, 9))
    assert all(c["passed"] for c in data["criteria"])
    assert err.count("PASS") == 8


@pytest.mark.parametrize(
    "argv",
    [
        ["info", P4],
        ["represent", P4, "--mode", "ext"],
        ["represent", P4, "--mode", "prime"],
        ["represent", U24, "--mode", "muniform", "--q", "3"],
        ["isolating-check", P4],
        ["port", P4, "--po", "4"],
    ],
)
def test_byte_identical_across_processes(argv):
    runs = [subprocess.run([sys.executable, "-m", "lpmrep", *argv], capture_output=True) for _ in range(2)]
    assert runs[0].returncode == 0
    assert runs[0].stdout == runs[1].stdout and runs[0].stderr == runs[1].stderr
