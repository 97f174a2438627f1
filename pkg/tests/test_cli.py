import json
import subprocess
import sys

from origami_census.cli import main


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCensusCommand:
    def test_degree5_prints_forty(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "census", "--degree", "5", "--mu", "4",
            "--cache-dir", str(tmp_path),
        )
        assert code == 0
        assert "N=40" in out

    def test_empty_census_succeeds(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "census", "--degree", "2", "--mu", "2",
            "--cache-dir", str(tmp_path),
        )
        assert code == 0
        assert "N=0" in out

    def test_invalid_mu_is_usage_error(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "census", "--degree", "5", "--mu", "0",
            "--cache-dir", str(tmp_path),
        )
        assert code == 2
        assert "invalid mu" in err

    def test_json_format(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "census", "--degree", "5", "--mu", "4",
            "--cache-dir", str(tmp_path), "--format", "json",
        )
        assert code == 0
        assert json.loads(out) == {
            "degree": 5, "mu": [4], "n": 40, "m": "258/5",
        }

    def test_budget_exceeded_exits_one_without_partial_file(
        self, capsys, tmp_path
    ):
        code, _, err = run(
            capsys, "census", "--degree", "5", "--mu", "4",
            "--cache-dir", str(tmp_path), "--budget", "10",
        )
        assert code == 1
        assert "budget" in err
        assert not list(tmp_path.rglob("*.jsonl"))
        assert not list(tmp_path.rglob("*.tmp"))


class TestOrbitsCommand:
    def test_four_components(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "orbits", "--degree", "5", "--mu", "4",
            "--cache-dir", str(tmp_path), "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        comps = doc["components"]
        assert sorted(c["size"] for c in comps) == [3, 10, 12, 15]
        slopes = sorted(c["slope"] for c in comps)
        assert slopes == ["28/3", "28/3", "9/1", "9/1"]
        for c in comps:
            assert set(c) == {
                "component_id", "size", "n", "m", "slope", "hyperelliptic",
                "parity", "cusp_count", "member_keys",
            }
            assert len(c["member_keys"]) == c["size"]

    def test_csv_format(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "orbits", "--degree", "3", "--mu", "2",
            "--cache-dir", str(tmp_path), "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("component_id,size,n,m_num")
        assert len(lines) >= 2

    def test_warm_cache_identical_bytes(self, capsys, tmp_path):
        args = (
            "orbits", "--degree", "5", "--mu", "4",
            "--cache-dir", str(tmp_path),
        )
        code1, out1, err1 = run(capsys, *args)
        code2, out2, err2 = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert "cache write" in err1
        assert "cache hit" in err2

    def test_worker_count_does_not_change_output(self, capsys, tmp_path):
        _, out1, _ = run(
            capsys, "orbits", "--degree", "5", "--mu", "4",
            "--cache-dir", str(tmp_path / "a"), "--workers", "1",
        )
        _, out2, _ = run(
            capsys, "orbits", "--degree", "5", "--mu", "4",
            "--cache-dir", str(tmp_path / "b"), "--workers", "2",
        )
        assert out1 == out2
        cache_a = (tmp_path / "a" / "v1" / "census-d5-mu4.jsonl").read_bytes()
        cache_b = (tmp_path / "b" / "v1" / "census-d5-mu4.jsonl").read_bytes()
        assert cache_a == cache_b


class TestClassifyCommand:
    def test_genus2_octagon(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "classify",
            "--alpha", "(1,2,3,4)(5)", "--beta", "(1,5)(2)(3)(4)",
            "--cache-dir", str(tmp_path), "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["mu"] == [2]
        assert doc["genus"] == 2
        assert doc["weight"] == "5/4"
        assert doc["hyperelliptic"] is True
        assert doc["parity"] == 1
        assert len(doc["involutions"]) == 1
        assert doc["involutions"][0]["total_fixed"] == 6

    def test_disconnected_is_usage_error(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "classify",
            "--alpha", "(1,2)(3)(4)", "--beta", "(3,4)(1)(2)",
            "--cache-dir", str(tmp_path),
        )
        assert code == 2
        assert "disconnected" in err


class TestLimitsCommand:
    def test_sweep_shows_forced_ratio(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "limits", "--mu", "2", "--dmax", "5",
            "--cache-dir", str(tmp_path), "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert [r["ratio"] for r in doc["rows"]] == ["10/9"] * 3
        assert [r["slope"] for r in doc["rows"]] == ["10/1"] * 3

    def test_reference_table_genus3(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "limits", "--genus", "3", "--table",
            "--cache-dir", str(tmp_path), "--format", "json",
        )
        assert code == 0
        rows = json.loads(out)
        assert [r["slope"] for r in rows] == [
            "28/3", "9/1", "28/3", "44/5", "9/1", "98/11", "468/53",
        ]

    def test_genus_outside_table(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "limits", "--genus", "9", "--table",
            "--cache-dir", str(tmp_path),
        )
        assert code == 2
        assert "outside table range" in err

    def test_csv_columns(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "limits", "--mu", "2", "--dmax", "4",
            "--cache-dir", str(tmp_path), "--format", "csv",
        )
        assert code == 0
        header = out.splitlines()[0]
        assert header == "stratum,component_label,d,N,M_num,M_den,slope_num,slope_den"


class TestTableCommand:
    def test_genus4_filter(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "table", "--genus", "4", "--mu", "6",
            "--cache-dir", str(tmp_path), "--format", "json",
        )
        assert code == 0
        rows = json.loads(out)
        assert [r["label"] for r in rows] == ["hyp", "even", "odd"]
        assert rows[0]["slope"] == "9/1"


class TestEntryPoint:
    def test_module_invocation(self, tmp_path):
        proc = subprocess.run(
            [
                sys.executable, "-m", "origami_census", "census",
                "--degree", "4", "--mu", "2", "--cache-dir", str(tmp_path),
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "N=9" in proc.stdout

    def test_usage_error_from_argparse(self):
        proc = subprocess.run(
            [sys.executable, "-m", "origami_census", "nonsense"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2
