"""End-to-end command line runs on miniature circuits."""

import json
import os

import pytest

from entforge.cli import main


def run_cli(*argv: str) -> int:
    return main(list(argv))


def read_summary(out_dir) -> dict:
    with open(os.path.join(out_dir, "summary.json")) as fh:
        return json.load(fh)


class TestTopLevel:
    def test_list_presets(self, capsys):
        assert run_cli("--list-presets") == 0
        names = capsys.readouterr().out.splitlines()
        assert "fig_sc_plus1_low_noise_5q_bm" in names
        assert names == sorted(names)

    def test_no_subcommand_prints_help(self, capsys):
        assert run_cli() == 2
        assert "train" in capsys.readouterr().out


class TestTrainCommand:
    def test_tiny_run(self, tmp_path, capsys):
        out = tmp_path / "run"
        code = run_cli(
            "train",
            "--qubits", "3",
            "--topology", "sc",
            "--activation", "sin",
            "--epochs", "5",
            "--seed", "4",
            "--bipartition", "0,1",
            "--out", str(out),
            "--no-plots",
        )
        assert code == 0
        stdout = capsys.readouterr().out
        assert "final loss" in stdout
        assert "negativity [0,1]:" in stdout
        assert "wrote" in stdout
        summary = read_summary(out)
        assert summary["spec"]["train"]["max_epochs"] == 5
        assert summary["spec"]["train"]["seed"] == 4
        assert os.path.exists(out / "trace.csv")
        assert not os.path.exists(out / "trace.png")

    def test_plots_written_by_default(self, tmp_path):
        out = tmp_path / "plots"
        code = run_cli(
            "train", "--qubits", "3", "--topology", "sc", "--epochs", "3",
            "--out", str(out),
        )
        assert code == 0
        assert os.path.exists(out / "trace.png")

    def test_noise_flags_enable_channels(self, tmp_path):
        out = tmp_path / "noisy"
        code = run_cli(
            "train", "--qubits", "3", "--topology", "sc", "--epochs", "2",
            "--damping-gamma", "0.05", "--out", str(out), "--no-plots",
        )
        assert code == 0
        noise = read_summary(out)["spec"]["noise"]
        assert noise["damping"] is True
        assert noise["damping_gamma"] == 0.05
        assert noise["dephasing"] is False

    def test_depth_and_activation_overrides(self, tmp_path):
        out = tmp_path / "bm"
        code = run_cli(
            "train", "--qubits", "3", "--topology", "sc", "--epochs", "2",
            "--activation", "bm", "--t-osc", "4.0", "--t-int", "0.5",
            "--depth", "1", "--out", str(out), "--no-plots",
        )
        assert code == 0
        spec = read_summary(out)["spec"]
        assert spec["activation"] == {"kind": "bm", "t_osc": 4.0, "t_int": 0.5}
        assert spec["depth"] == 1

    def test_t_osc_needs_memristor(self, tmp_path, capsys):
        code = run_cli(
            "train", "--qubits", "3", "--topology", "sc", "--activation", "sin",
            "--t-osc", "2.0", "--out", str(tmp_path), "--no-plots",
        )
        assert code == 2
        assert "--t-osc" in capsys.readouterr().err


class TestSpecAndPresetSources:
    def test_spec_file_with_override(self, tmp_path, capsys):
        spec_path = tmp_path / "spec.json"
        spec_path.write_text(
            json.dumps(
                {
                    "kind": "train",
                    "num_qubits": 3,
                    "topology": "sc",
                    "train": {"max_epochs": 50, "gradient_mode": "finite_difference"},
                }
            )
        )
        out = tmp_path / "from-spec"
        code = run_cli(
            "train", "--spec", str(spec_path), "--epochs", "4",
            "--out", str(out), "--no-plots",
        )
        assert code == 0
        del capsys
        assert read_summary(out)["spec"]["train"]["max_epochs"] == 4

    def test_malformed_spec_reports_line(self, tmp_path, capsys):
        spec_path = tmp_path / "bad.json"
        spec_path.write_text('{"kind": "train",\n broken\n}')
        assert run_cli("train", "--spec", str(spec_path)) == 2
        assert "line 2" in capsys.readouterr().err

    def test_preset_kind_mismatch(self, capsys):
        assert run_cli("train", "--preset", "appendix_montecarlo_5q_sin") == 2
        assert "kind" in capsys.readouterr().err

    def test_unknown_preset(self, capsys):
        assert run_cli("train", "--preset", "fig_unknown") == 2
        assert "unknown name" in capsys.readouterr().err

    def test_preset_with_overrides_runs(self, tmp_path, capsys):
        out = tmp_path / "preset"
        code = run_cli(
            "train", "--preset", "fig_sc_low_noise_5q_bm",
            "--qubits", "3", "--epochs", "2", "--seeds", "2",
            "--grad-mode", "finite_difference", "--bipartition", "0",
            "--out", str(out), "--no-plots",
        )
        assert code == 0
        del capsys
        summary = read_summary(out)
        assert summary["spec"]["depth"] == 1
        assert len(summary["per_seed"]) == 2


class TestOtherCommands:
    def test_montecarlo(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("ENTFORGE_THREADS", "1")
        out = tmp_path / "mc"
        code = run_cli(
            "montecarlo", "--qubits", "3", "--samples", "4", "--epochs", "4",
            "--seed", "11", "--out", str(out), "--no-plots",
        )
        assert code == 0
        assert "4 samples" in capsys.readouterr().out
        assert os.path.exists(out / "records.csv")
        assert os.path.exists(out / "histogram.csv")
        assert read_summary(out)["master_seed"] == 11

    def test_sweep(self, tmp_path, capsys):
        out = tmp_path / "sweep"
        code = run_cli(
            "sweep", "--qubits", "3", "--seeds", "2", "--epochs", "3",
            "--out", str(out), "--no-plots",
        )
        assert code == 0
        stdout = capsys.readouterr().out
        assert "t_osc 0.2:" in stdout
        assert os.path.exists(out / "records.csv")

    def test_measure(self, tmp_path, capsys):
        out = tmp_path / "measure"
        code = run_cli(
            "measure", "--qubits", "4", "--topology", "sc+1",
            "--bipartition", "0,1", "--seed", "2",
            "--out", str(out), "--no-plots",
        )
        assert code == 0
        stdout = capsys.readouterr().out
        assert "mw " in stdout
        assert "negativity [0,1]:" in stdout
        assert "(bound 1.5)" in stdout

    def test_measure_deterministic_params(self, tmp_path):
        summaries = []
        for sub in ("m1", "m2"):
            out = tmp_path / sub
            assert run_cli(
                "measure", "--qubits", "3", "--topology", "sc", "--seed", "9",
                "--out", str(out), "--no-plots",
            ) == 0
            summaries.append(read_summary(out))
        assert summaries[0]["params"] == summaries[1]["params"]
        assert summaries[0]["mw"] == summaries[1]["mw"]


class TestBadInput:
    def test_bad_topology_name(self, tmp_path, capsys):
        code = run_cli(
            "train", "--qubits", "3", "--topology", "mesh", "--epochs", "1",
            "--out", str(tmp_path), "--no-plots",
        )
        assert code == 2
        assert "topology" in capsys.readouterr().err

    def test_bad_bipartition_text(self, tmp_path, capsys):
        code = run_cli(
            "measure", "--qubits", "3", "--topology", "sc",
            "--bipartition", "zero", "--out", str(tmp_path), "--no-plots",
        )
        assert code == 2
        assert "bipartition" in capsys.readouterr().err
