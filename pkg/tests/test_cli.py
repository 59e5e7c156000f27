import json
import subprocess
import sys

from yangian2 import cli
from yangian2.report import Report


def reorder(args, tmp_path, name):
    """CLI wants global flags before the subcommand; splice --out in front."""
    out = tmp_path / name
    return ["--out", str(out)] + args, out


def run(args, tmp_path, name="report.json"):
    argv, out = reorder(args, tmp_path, name)
    code = cli.main(argv)
    doc = json.loads(out.read_text()) if out.exists() else None
    return code, doc


def test_verify_drinfeld_exit_zero(tmp_path, capsys):
    code, doc = run(["--m", "1", "--n", "1", "-L", "3", "-K", "3",
                     "verify", "drinfeld"], tmp_path)
    assert code == 0
    payload = doc["report"]
    assert payload["suite"] == "drinfeld-relations"
    assert payload["totals"]["failures"] == 0
    families = payload["totals"]["by_id"]
    for fam in [f"D{k}" for k in range(1, 18)]:
        assert fam in families
    assert families["D16"]["vacuous"] is True
    captured = capsys.readouterr()
    assert "drinfeld-relations" in captured.out


def test_report_schema(tmp_path):
    code, doc = run(["--m", "1", "--n", "1", "-L", "2", "quotient-dim"], tmp_path)
    assert code == 0
    assert set(doc) == {"header", "report"}
    assert "generated_at" in doc["header"]
    payload = doc["report"]
    assert set(payload) == {"suite", "config", "instances", "totals"}
    inst = payload["instances"][0]
    assert inst["id"] == "dimension"
    assert inst["pass"] is True
    assert inst["params"] == {"dim_full": 19, "ideal_rank": 2,
                              "dim_super": 17, "expected": 17}


def test_nf_output(tmp_path, capsys):
    code, doc = run(["--m", "1", "--n", "1", "-L", "3",
                     "nf", "t[2,1,2]*t[1,2,1]"], tmp_path)
    assert code == 0
    out = capsys.readouterr().out
    assert "t[1,1,2] + t[1,2,1]*t[2,1,2] + t[2,2,2]" in out


def test_determinism(tmp_path):
    args = ["--m", "1", "--n", "1", "-L", "3", "--seed", "5", "fuzz",
            "--samples", "25"]
    _, doc1 = run(args, tmp_path, "a.json")
    _, doc2 = run(args, tmp_path, "b.json")
    assert json.dumps(doc1["report"], sort_keys=True) == \
        json.dumps(doc2["report"], sort_keys=True)


def test_gauss_command(tmp_path):
    code, doc = run(["--m", "1", "--n", "1", "-L", "2", "gauss"], tmp_path)
    assert code == 0
    values = {(i["id"], json.dumps(i["params"], sort_keys=True)): i.get("value")
              for i in doc["report"]["instances"]}
    assert values[("d", json.dumps({"i": 1, "r": 1}, sort_keys=True))] == "t[1,1,1]"
    assert ("e", json.dumps({"i": 1, "j": 2, "r": 2}, sort_keys=True)) in values


def test_pbw_command(tmp_path):
    code, doc = run(["--m", "1", "--n", "1", "-L", "2", "pbw"], tmp_path)
    assert code == 0
    ranks = [i for i in doc["report"]["instances"] if i["id"] == "rank"]
    assert ranks[0]["params"]["rank"] == 19
    code2, doc2 = run(["--m", "1", "--n", "1", "-L", "2", "pbw", "--super"],
                      tmp_path, "super.json")
    assert code2 == 0
    ranks2 = [i for i in doc2["report"]["instances"] if i["id"] == "rank"]
    assert ranks2[0]["params"]["rank"] == 17


def test_verify_centers_and_classical(tmp_path):
    code, _ = run(["--m", "1", "--n", "1", "-L", "3", "verify", "centers"],
                  tmp_path)
    assert code == 0
    code2, _ = run(["--m", "1", "--n", "1", "-L", "2", "-T", "4",
                    "verify", "classical"], tmp_path, "cl.json")
    assert code2 == 0


def test_usage_errors(tmp_path):
    # K > L violates the coupling constraint
    code = cli.main(["--m", "1", "--n", "1", "-L", "2", "-K", "3",
                     "--out", str(tmp_path / "x.json"), "gauss"])
    assert code == 2
    # unknown subcommand
    code2 = cli.main(["--m", "1", "nonsense"])
    assert code2 == 2
    # parse errors surface as usage errors
    code3 = cli.main(["--m", "1", "--n", "1", "--out", str(tmp_path / "y.json"),
                      "nf", "t[1,2,0]"])
    assert code3 == 2


def test_failure_exit_code(tmp_path, monkeypatch):
    def fake_run(cfg, args):
        report = Report("forced")
        report.add("always-fails", {}, False, witness="witness")
        return report
    monkeypatch.setattr(cli, "run_command", fake_run)
    code = cli.main(["--m", "1", "--n", "1",
                     "--out", str(tmp_path / "f.json"), "gauss"])
    assert code == 1


def test_config_file_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("m=1\nn=1\nL=2\nseed=9\n# comment\n")
    out = tmp_path / "from_file.json"
    code = cli.main(["--config", str(cfg), "--out", str(out), "quotient-dim"])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["report"]["config"]["L"] == 2
    # flags override the file
    out2 = tmp_path / "override.json"
    code2 = cli.main(["--config", str(cfg), "-L", "1", "--out", str(out2),
                      "quotient-dim"])
    assert code2 == 0
    doc2 = json.loads(out2.read_text())
    assert doc2["report"]["config"]["L"] == 1


def test_bad_config_file(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("bogus=1\n")
    code = cli.main(["--config", str(cfg), "gauss"])
    assert code == 2


def test_module_invocation_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "yangian2.cli", "--help"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "verify" in proc.stdout
