import json
import subprocess
import sys

import pytest


def run_cli(fixtures_dir, *args):
    return subprocess.run(
        [sys.executable, "-m", "multicolor", *args],
        cwd=fixtures_dir,
        capture_output=True,
        text=True,
    )


class TestWmax:
    def test_prints_sorted_vectors(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "wmax", "fix_p4.json")
        assert proc.returncode == 0
        assert proc.stdout == "[0, 1, 1, 0]\n[0, 2, 0, 1]\n[1, 0, 2, 0]\n[1, 1, 1, 1]\n"

    def test_prune_dominated_drops_covered_vectors(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "wmax", "fix_p4.json", "--prune-dominated")
        assert proc.returncode == 0
        assert proc.stdout == "[0, 2, 0, 1]\n[1, 0, 2, 0]\n[1, 1, 1, 1]\n"

    def test_emit_certificates(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "wmax", "fix_p3.json", "--emit-certificates")
        lines = [json.loads(line) for line in proc.stdout.splitlines()]
        assert lines[0] == {"vector": [0, 1, 1], "certificate": {"1": ["v2"], "2": ["v3"]}}
        assert [entry["vector"] for entry in lines] == [
            [0, 1, 1],
            [0, 2, 0],
            [1, 0, 1],
            [1, 1, 0],
        ]

    def test_emit_mis_precedes_vectors(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "wmax", "fix_k2.json", "--emit-mis")
        assert proc.stdout == '{"mis": ["v2"]}\n{"mis": ["v1"]}\n[0, 1]\n[1, 0]\n'

    def test_dimacs_with_sidecar(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "wmax", "path3.col", "--sidecar", "path3_sidecar.json")
        assert proc.returncode == 0
        assert proc.stdout == "[0, 1, 1]\n[0, 2, 0]\n[1, 0, 1]\n[1, 1, 0]\n"

    def test_vector_cap_exit_code(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "wmax", "fix_c5.json", "--max-vectors", "2")
        assert proc.returncode == 3
        assert proc.stdout == ""
        assert "intermediate demand vectors" in proc.stderr


class TestCheck:
    def test_permissible_prints_witness(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "check", "fix_p3.json")
        assert proc.returncode == 0
        assert proc.stdout == "[1, 0, 1]\n"

    def test_not_permissible(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "check", "fix_p3_heavy.json")
        assert proc.returncode == 1
        assert proc.stdout == "NOT PERMISSIBLE\n"


class TestColor:
    def test_feasible(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "color", "fix_p3.json")
        assert proc.returncode == 0
        assert proc.stdout == '{"v1": [1], "v2": [], "v3": [2]}\n'

    def test_infeasible(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "color", "fix_p3_heavy.json")
        assert proc.returncode == 1
        assert proc.stdout == ""
        assert "not permissible" in proc.stderr


class TestEnumerate:
    def test_streams_all_colorings(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "enumerate", "fix_sv.json")
        assert proc.returncode == 0
        assert proc.stdout == '{"v1": [1]}\n{"v1": [2]}\n'

    def test_limit(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "enumerate", "fix_sv.json", "--limit", "1")
        assert proc.stdout == '{"v1": [1]}\n'

    def test_infeasible_is_empty_and_exit_one(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "enumerate", "fix_p3_heavy.json")
        assert proc.returncode == 1
        assert proc.stdout == ""


class TestChromatic:
    def test_value_and_witness(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "chromatic", "fix_c5.json")
        assert proc.returncode == 0
        lines = proc.stdout.splitlines()
        assert json.loads(lines[0]) == {"chi": 3, "lower_bound": 3}
        witness = json.loads(lines[1])
        assert sorted(witness) == ["v1", "v2", "v3", "v4", "v5"]
        assert all(len(held) == 1 for held in witness.values())

    def test_warns_that_lists_are_ignored(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "chromatic", "fix_c5.json")
        assert "lists are ignored" in proc.stderr


class TestOncall:
    def test_prints_solution_vectors(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "oncall", "fix_k2.json")
        assert proc.returncode == 0
        assert proc.stdout == "[0, 1]\n[1, 0]\n"

    def test_with_colorings(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "oncall", "fix_p3_heavy.json", "--with-colorings")
        lines = [json.loads(line) for line in proc.stdout.splitlines()]
        assert [entry["vector"] for entry in lines] == [
            [0, 1, 1],
            [0, 2, 0],
            [1, 0, 1],
            [1, 1, 0],
        ]
        assert lines[1]["coloring"] == {"v1": [], "v2": [1, 2], "v3": []}


class TestExtend:
    def test_bound_witness_and_exact(self, fixtures_dir):
        proc = run_cli(
            fixtures_dir,
            "extend",
            "fix_k3.json",
            "--precoloring",
            "pre_k3.json",
            "--base-colors",
            "2",
            "--exact",
        )
        assert proc.returncode == 0
        lines = proc.stdout.splitlines()
        assert json.loads(lines[0]) == {"bound": 2}
        assert json.loads(lines[1]) == {"v1": [1], "v2": [2], "v3": []}
        assert json.loads(lines[2]) == {"exact": 2, "verdict": "EQUALITY"}

    def test_missing_precoloring_file(self, fixtures_dir):
        proc = run_cli(
            fixtures_dir,
            "extend",
            "fix_k3.json",
            "--precoloring",
            "nope.json",
            "--base-colors",
            "2",
        )
        assert proc.returncode == 2


class TestVerify:
    def test_all_checks_pass(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "verify", "fix_k2.json")
        assert proc.returncode == 0
        lines = proc.stdout.splitlines()
        assert lines == [
            "PASS permissibility",
            "PASS enumeration",
            "PASS chromatic",
            "PASS oncall",
        ]


class TestFailureModes:
    def test_missing_instance_file(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "check", "nope.json")
        assert proc.returncode == 2
        assert proc.stdout == ""

    def test_unknown_subcommand(self, fixtures_dir):
        proc = run_cli(fixtures_dir, "frobnicate", "fix_sv.json")
        assert proc.returncode == 2

    def test_malformed_instance(self, fixtures_dir, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        proc = run_cli(fixtures_dir, "check", str(bad))
        assert proc.returncode == 2


@pytest.mark.parametrize(
    "args",
    [
        ("wmax", "fix_p4.json", "--emit-certificates"),
        ("oncall", "fix_p3_heavy.json", "--with-colorings"),
    ],
)
def test_repeated_runs_are_byte_identical(fixtures_dir, args):
    first = run_cli(fixtures_dir, *args)
    second = run_cli(fixtures_dir, *args)
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode
