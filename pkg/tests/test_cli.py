import json
import subprocess
import sys

import pytest

from cosetlab.cli import main


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_irreps_sym3(capsys):
    code, d = run_json(capsys, ["irreps", "--group", "sym:3"])
    assert code == 0
    assert d["schema"] == 1
    assert [r["label"] for r in d["irreps"]] == ["[3]", "[2,1]", "[1,1,1]"]
    assert sorted(r["dim"] for r in d["irreps"]) == [1, 1, 2]
    assert d["all_pass"]


def test_irreps_wreath2(capsys):
    code, d = run_json(capsys, ["irreps", "--group", "wreath:2"])
    assert code == 0
    assert len(d["irreps"]) == 5
    assert sum(r["dim"] ** 2 for r in d["irreps"]) == 8
    assert d["checks"]["orthogonality"]


def test_irreps_sym0(capsys):
    code, d = run_json(capsys, ["irreps", "--group", "sym:0"])
    assert code == 0
    assert len(d["irreps"]) == 1
    assert d["irreps"][0]["dim"] == 1


def test_irreps_unknown_group(capsys):
    assert main(["irreps", "--group", "foo:3"]) == 2


def test_weak_sample_values(capsys):
    code, d = run_json(capsys, ["sample", "--group", "sym:3", "--weak", "--m", "(01)"])
    assert code == 0
    probs = {o["label"]: o["exact"] for o in d["outcomes"]}
    assert probs == {"[3]": "1/3", "[2,1]": "2/3", "[1,1,1]": "0"}


def test_weak_tuple_sample(capsys):
    code, d = run_json(
        capsys, ["sample", "--group", "sym:3", "--weak", "--m", "(01)", "--k", "2"]
    )
    assert code == 0
    assert len(d["outcomes"]) == 9
    from fractions import Fraction

    assert sum(Fraction(o["exact"]) for o in d["outcomes"]) == 1


def test_strong_pinned(capsys):
    code, d = run_json(capsys, [
        "sample", "--group", "sym:3", "--strong", "--label", "[2,1]", "--m", "(01)",
    ])
    assert code == 0
    assert [o["probability"] for o in d["outcomes"]] == ["1", "0"]


def test_strong_trivial_uniform(capsys):
    code, d = run_json(capsys, [
        "sample", "--group", "sym:3", "--strong", "--label", "[2,1]",
        "--trivial", "--basis", "haar", "--seed", "3",
    ])
    assert code == 0
    assert [o["exact"] for o in d["outcomes"]] == ["1/2", "1/2"]


def test_strong_zero_rank_exit3(capsys):
    assert main(["sample", "--group", "wreath:2", "--strong",
                 "--label", "([2],-)"]) == 3


def test_strong_needs_label(capsys):
    assert main(["sample", "--group", "sym:3", "--strong"]) == 2


def test_tuple_report(capsys):
    code, d = run_json(capsys, [
        "sample", "--group", "wreath:2", "--k", "2", "--basis", "haar",
        "--seed", "7",
    ])
    assert code == 0
    assert d["outcome_sets"] == 25
    assert d["weak_total"] == "1"
    zero = [e for e in d["entries"] if e["zero_rank"]]
    assert len(zero) == 16
    for e in d["entries"]:
        if e["conditional"] is not None:
            assert sum(e["conditional"]) == pytest.approx(1.0, abs=1e-9)
        else:
            assert e["zero_rank"] or e["weak"]["exact"] == "0"


def test_sample_flag_conflicts(capsys):
    assert main(["sample", "--group", "sym:3", "--weak", "--strong"]) == 2
    assert main(["sample", "--group", "sym:3", "--weak", "--trivial",
                 "--m", "(01)"]) == 2
    assert main(["sample", "--group", "wreath:2", "--weak",
                 "--m-index", "99"]) == 2


def test_non_involution_m_rejected(capsys):
    assert main(["sample", "--group", "sym:3", "--weak", "--m", "(012)"]) == 2


def test_verify_rank(capsys):
    code, d = run_json(capsys, ["verify", "--lemma", "rank"])
    assert code == 0
    assert d["fail_count"] == 0
    assert d["pass_count"] == 14


def test_verify_expectation(capsys):
    code, d = run_json(capsys, [
        "verify", "--lemma", "expectation", "--group", "wreath:2",
        "--k", "2", "--trials", "5", "--seed", "1",
    ])
    assert code == 0
    assert d["all_pass"]
    assert d["pass_count"] == 10


def test_verify_claim_average_sym3(capsys):
    code, d = run_json(capsys, ["verify", "--lemma", "claim-average",
                                "--group", "sym:3", "--trials", "3"])
    assert code == 0
    assert d["all_pass"]


def test_verify_all_small(capsys):
    code, d = run_json(capsys, ["verify", "--lemma", "all", "--trials", "2",
                                "--k", "2"])
    assert code == 0
    assert d["all_pass"]
    assert d["pass_count"] > 150


def test_verify_csv(capsys):
    code = main(["verify", "--lemma", "rank", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    header = out.split("\r\n")[0]
    assert header.startswith("name,kind,formula,oracle")


def test_bounds_cutoff_example(capsys):
    code, d = run_json(capsys, ["bounds", "--n", "2", "--k", "1",
                                "--cutoff", "paper", "--trials", "4"])
    assert code == 0
    assert d["bad_set"]["lambda"]["exact"] == "0"
    assert d["all_pass"]


def test_bounds_lambda_all(capsys):
    code, d = run_json(capsys, ["bounds", "--n", "2", "--k", "1",
                                "--lambda-all", "--trials", "3"])
    assert code == 0
    assert d["bad_set"]["lambda"]["exact"] == "1"
    assert d["bounds"]["full_tvd_undefined"]


def test_bounds_full_tvd_undefined_exit3(capsys):
    assert main(["bounds", "--n", "2", "--k", "1", "--lambda-all",
                 "--full-tvd", "--trials", "2"]) == 3


def test_bounds_explicit_labels(capsys):
    code, d = run_json(capsys, [
        "bounds", "--n", "2", "--k", "1", "--trials", "3",
        "--labels", "([2],+);([2],-);([1,1],+);([1,1],-)",
    ])
    assert code == 0
    assert d["bad_set"]["rule"] == "explicit"
    assert d["bad_set"]["plancherel_mass"]["exact"] == "1/2"


def test_bounds_out_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["bounds", "--n", "2", "--k", "1", "--trials", "3",
                 "--out", str(out)])
    assert code == 0
    d = json.loads(out.read_text())
    assert d["schema"] == 1


def test_reports_byte_identical_across_threads(tmp_path, capsys):
    paths = []
    for i, threads in enumerate(("1", "4", "1")):
        p = tmp_path / f"r{i}.json"
        assert main(["bounds", "--n", "2", "--k", "2", "--seed", "9",
                     "--trials", "4", "--threads", threads,
                     "--out", str(p)]) == 0
        paths.append(p.read_bytes())
    assert paths[0] == paths[1] == paths[2]


def test_verify_byte_identical(tmp_path, capsys):
    blobs = []
    for i in range(2):
        p = tmp_path / f"v{i}.json"
        assert main(["verify", "--lemma", "multiregister", "--trials", "4",
                     "--seed", "2", "--out", str(p)]) == 0
        blobs.append(p.read_bytes())
    assert blobs[0] == blobs[1]


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "cosetlab.cli", "bounds", "--n", "2",
         "--k", "1", "--trials", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["all_pass"]
