import json
import subprocess
import sys

import pytest

from invdiam.cli import main

K2_ONE = "2 1\n0 1 1\n"
C4 = "4 4\n0 1 1\n1 2 0\n2 3 1\n0 3 0\n"  # opposite edges labeled
K4 = "4 6\n" + "\n".join(
    f"{u} {v} 0" for u, v in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
) + "\n"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def k2_file(tmp_path):
    p = tmp_path / "k2.ilg"
    p.write_text(K2_ONE)
    return str(p)


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.ilg"
    p.write_text(C4)
    return str(p)


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.ilg"
    p.write_text(K4)
    return str(p)


class TestAssign:
    def test_sat(self, capsys, k2_file):
        code, doc = run_cli(capsys, "assign", k2_file, "--t", "1", "--no-meta")
        assert code == 0
        assert doc["verdict"] == "sat" and doc["assignment"] == ["1", "1"]

    def test_unsat(self, capsys, c4_file):
        code, doc = run_cli(capsys, "assign", c4_file, "--t", "1", "--no-meta")
        assert code == 0 and doc["verdict"] == "unsat" and doc["assignment"] is None

    def test_parse_error_exit_2(self, capsys, tmp_path):
        p = tmp_path / "bad.ilg"
        p.write_text("2 1\n0 1\n")
        code = main(["assign", str(p), "--t", "1"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 2 and doc["kind"] == "error"


class TestMindim:
    def test_c4(self, capsys, c4_file):
        code, doc = run_cli(capsys, "mindim", c4_file, "--no-meta")
        assert code == 0 and doc["verdict"] == "sat" and doc["t"] == 2

    def test_exceeds(self, capsys, k2_file):
        code, doc = run_cli(capsys, "mindim", k2_file, "--t-max", "0", "--no-meta")
        assert code == 0 and doc["verdict"] == "exceeds"


class TestDistance:
    def test_identical(self, capsys, c4_file, tmp_path):
        o = tmp_path / "o.txt"
        o.write_text("0000\n")
        code, doc = run_cli(capsys, "distance", c4_file, str(o), str(o), "--no-meta")
        assert code == 0 and doc["distance"] == 0

    def test_single_flip(self, capsys, c4_file, tmp_path):
        o1 = tmp_path / "o1.txt"
        o2 = tmp_path / "o2.txt"
        o1.write_text("0000\n")
        o2.write_text("1000\n")
        code, doc = run_cli(capsys, "distance", c4_file, str(o1), str(o2), "--no-meta")
        assert code == 0 and doc["distance"] == 1

    def test_oracle_agreement(self, capsys, c4_file, tmp_path):
        o1 = tmp_path / "o1.txt"
        o2 = tmp_path / "o2.txt"
        o1.write_text("0000\n")
        # Canonical edge order (0,1),(0,3),(1,2),(2,3): flip the opposite pair.
        o2.write_text("1001\n")
        code, doc = run_cli(
            capsys, "distance", c4_file, str(o1), str(o2), "--oracle", "--no-meta"
        )
        assert code == 0 and doc["distance"] == 2
        assert doc["oracle"] == {"bfs_distance": 2, "agree": True}


class TestDiameter:
    def test_k4_both_engines(self, capsys, k4_file):
        code, doc = run_cli(
            capsys, "diameter", k4_file, "--engine", "both", "--no-meta"
        )
        assert code == 0
        assert doc["assign"]["diameter"] == 3 and doc["bfs"]["diameter"] == 3
        assert doc["agree"] is True

    def test_k2(self, capsys, k2_file):
        code, doc = run_cli(capsys, "diameter", k2_file, "--no-meta")
        assert code == 0 and doc["assign"]["diameter"] == 1

    def test_p3(self, capsys, tmp_path):
        p = tmp_path / "p3.ilg"
        p.write_text("3 2\n0 1 0\n1 2 0\n")
        code, doc = run_cli(capsys, "diameter", str(p), "--no-meta")
        assert code == 0 and doc["assign"]["diameter"] == 1

    def test_bfs_budget_exit_3(self, capsys, tmp_path):
        edges = "\n".join(f"{i} {i+1} 0" for i in range(13))
        p = tmp_path / "long.ilg"
        p.write_text(f"14 13\n{edges}\n")
        code = main(["bfs-diameter", str(p)])
        doc = json.loads(capsys.readouterr().out)
        assert code == 3 and doc["category"] == "budget"


class TestFamily:
    def test_k1_m2(self, capsys, tmp_path):
        gout = tmp_path / "fam.ilg"
        lout = tmp_path / "fam.levels"
        code, doc = run_cli(
            capsys,
            "family", "--k", "1", "--m", "2",
            "--graph-out", str(gout), "--levels-out", str(lout), "--no-meta",
        )
        assert code == 0 and doc["vertices"] == 9 and doc["edges"] == 8
        assert gout.read_text().startswith("9 8\n")
        assert lout.read_text().splitlines()[0] == "0 0"

    def test_k2_m1(self, capsys):
        code, doc = run_cli(capsys, "family", "--k", "2", "--m", "1", "--no-meta")
        assert code == 0 and doc["vertices"] == 6 and doc["edges"] == 9

    def test_guard_exit_3(self, capsys):
        code = main(["family", "--k", "2", "--m", "6"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 3 and doc["category"] == "budget"


class TestProbeFlow:
    def test_family_mindim_probe_check(self, capsys, tmp_path):
        gout = tmp_path / "fam.ilg"
        lout = tmp_path / "fam.levels"
        assert main(
            ["family", "--k", "2", "--m", "1",
             "--graph-out", str(gout), "--levels-out", str(lout),
             "--out", str(tmp_path / "fam.json"), "--no-meta"]
        ) == 0
        capsys.readouterr()
        # Probes demand dimension 2k-1 = 3, so solve at that fixed dimension.
        cert = tmp_path / "assign3.json"
        assert main(["assign", str(gout), "--t", "3", "--out", str(cert), "--no-meta"]) == 0
        probe_out = tmp_path / "probe.json"
        code = main(
            ["probe", str(gout), "--levels", str(lout), "--assignment", str(cert),
             "--out", str(probe_out), "--no-meta"]
        )
        assert code == 0
        doc = json.loads(probe_out.read_text())
        assert doc["clique_independence"]["passed"]
        assert doc["extension_dichotomy"]["passed"]
        code, check_doc = run_cli(capsys, "check", str(probe_out), "--no-meta")
        assert code == 0 and check_doc["valid"]


class TestReduce:
    def test_single_config(self, capsys):
        code, doc = run_cli(capsys, "reduce", "--config", "P3", "--no-meta")
        assert code == 0 and doc["suite_pass"]
        assert doc["configs"][0]["verdict"] == "reducible"
        assert "wall_s" not in doc["configs"][0]

    def test_unknown_config_exit_2(self, capsys):
        code = main(["reduce", "--config", "nosuch"])
        assert code == 2
        assert json.loads(capsys.readouterr().out)["kind"] == "error"

    def test_mutation_counterexample_and_check(self, capsys, tmp_path):
        out = tmp_path / "reduce.json"
        code = main(
            ["reduce", "--mutate", "p3-drop-min-size", "--out", str(out), "--no-meta"]
        )
        assert code == 1
        doc = json.loads(out.read_text())
        assert not doc["suite_pass"]
        assert doc["configs"][0]["counterexample"]["stage"] == "main"
        code, check_doc = run_cli(capsys, "check", str(out), "--no-meta")
        assert code == 0 and check_doc["valid"]

    def test_jobs_flag(self, capsys):
        code, doc = run_cli(capsys, "reduce", "--config", "P3", "--jobs", "2", "--no-meta")
        assert code == 0 and doc["suite_pass"]

    def test_all_configs_parallel(self, capsys, tmp_path):
        out = tmp_path / "suite.json"
        code = main(["reduce", "--all", "--jobs", "4", "--out", str(out), "--no-meta"])
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["suite_pass"] and len(doc["configs"]) == 7
        assert all(row["verdict"] == "reducible" for row in doc["configs"])
        code, check_doc = run_cli(capsys, "check", str(out), "--no-meta")
        assert code == 0 and check_doc["valid"]


class TestSearchHard:
    def test_k4(self, capsys, tmp_path):
        p = tmp_path / "graphs.ilg"
        p.write_text(K4)
        code, doc = run_cli(
            capsys, "search-hard", str(p), "--budget", "64", "--no-meta"
        )
        assert code == 0
        assert doc["entries"][0]["min_dim"] == 3
        assert doc["entries"][0]["exhaustive"]

    def test_empty_file(self, capsys, tmp_path):
        p = tmp_path / "empty.ilg"
        p.write_text("\n")
        code, doc = run_cli(capsys, "search-hard", str(p), "--no-meta")
        assert code == 0 and doc["entries"] == []


class TestCheckCommand:
    @pytest.mark.parametrize(
        "argv",
        [
            ["assign", "{k2}", "--t", "1"],
            ["assign", "{c4}", "--t", "1"],
            ["mindim", "{c4}"],
            ["diameter", "{k4}", "--engine", "both"],
            ["family", "--k", "1", "--m", "2"],
        ],
    )
    def test_accepts_emitted_certificates(self, capsys, tmp_path, k2_file, c4_file, k4_file, argv):
        paths = {"k2": k2_file, "c4": c4_file, "k4": k4_file}
        argv = [a.format(**paths) for a in argv]
        cert = tmp_path / "cert.json"
        assert main(argv + ["--out", str(cert), "--no-meta"]) == 0
        code, doc = run_cli(capsys, "check", str(cert), "--no-meta")
        assert code == 0 and doc["valid"], doc

    def test_distance_certificate(self, capsys, tmp_path, c4_file):
        o1 = tmp_path / "o1.txt"
        o2 = tmp_path / "o2.txt"
        o1.write_text("0000\n")
        o2.write_text("1010\n")
        cert = tmp_path / "cert.json"
        assert main(
            ["distance", c4_file, str(o1), str(o2), "--oracle", "--out", str(cert), "--no-meta"]
        ) == 0
        code, doc = run_cli(capsys, "check", str(cert), "--no-meta")
        assert code == 0 and doc["valid"]

    def test_tampered_certificate_rejected(self, capsys, tmp_path, k2_file):
        cert = tmp_path / "cert.json"
        assert main(["assign", k2_file, "--t", "1", "--out", str(cert), "--no-meta"]) == 0
        doc = json.loads(cert.read_text())
        doc["assignment"] = ["1", "0"]
        cert.write_text(json.dumps(doc))
        code, check_doc = run_cli(capsys, "check", str(cert), "--no-meta")
        assert code == 1 and not check_doc["valid"]

    def test_search_hard_certificate(self, capsys, tmp_path):
        p = tmp_path / "graphs.ilg"
        p.write_text(K4)
        cert = tmp_path / "cert.json"
        assert main(["search-hard", str(p), "--budget", "64", "--out", str(cert), "--no-meta"]) == 0
        code, doc = run_cli(capsys, "check", str(cert), "--no-meta")
        assert code == 0 and doc["valid"]

    def test_bad_json_exit_2(self, capsys, tmp_path):
        p = tmp_path / "junk.json"
        p.write_text("{")
        assert main(["check", str(p)]) == 2


class TestDeterminism:
    def test_byte_identical_reruns(self, capsys, k4_file, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        for out in (a, b):
            assert main(
                ["diameter", k4_file, "--engine", "both", "--out", str(out), "--no-meta"]
            ) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_search_hard_seeded(self, capsys, tmp_path):
        p = tmp_path / "graphs.ilg"
        lines = [f"{i} {i + 1} 0" for i in range(8)] + ["0 8 0"]
        p.write_text("9 9\n" + "\n".join(lines) + "\n")
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        for out in (a, b):
            assert main(
                ["search-hard", str(p), "--budget", "20", "--seed", "7",
                 "--out", str(out), "--no-meta"]
            ) == 0
        assert a.read_bytes() == b.read_bytes()


class TestEntryPoint:
    def test_module_invocation(self, k2_file):
        proc = subprocess.run(
            [sys.executable, "-m", "invdiam.cli", "assign", k2_file, "--t", "1", "--no-meta"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["verdict"] == "sat"
