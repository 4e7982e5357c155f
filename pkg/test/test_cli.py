import sys
import os
import json

import numpy as np
import pandas as pd
import pytest

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from tfweyl import __version__
from tfweyl.cli import RunConfig, build_parser, config_from_args, main
from tfweyl.exceptions import ConfigError
from tfweyl.grids import Fixture, Grid, sample, save_field


def wigner_gaussian_config(tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"a": Fixture.gaussian((0.0, 0.0), np.sqrt(0.5)).to_dict()}))
    return str(path)


def read_json(path):
    with open(path) as file:
        return json.load(file)


class TestRunConfig():

    def test_defaults(self):
        config = RunConfig()
        assert (config.n, config.l) == (128, 12.0)
        assert RunConfig(command="diagnose").n == 64
        assert config.mu_grid[-1] == 16.0 and len(config.mu_grid) == 33
        assert config.weight_object().to_dict() == {"kind": "log1p", "a": 1.0, "c": 1.0}

    def test_invalid(self):
        pytest.raises(ConfigError, RunConfig, command="plot")
        pytest.raises(ConfigError, RunConfig, test="sup")
        pytest.raises(ConfigError, RunConfig, mu_step=0.0)
        pytest.raises(ConfigError, RunConfig.from_dict, {"command": "weights", "colour": "red"})
        pytest.raises(ConfigError, RunConfig(weight={"kind": "sinc"}).weight_object)

    def test_flags_override_file(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"n": 32, "l": 6.0, "weight": {"kind": "power", "a": 0.5}, "seed": 3}))
        args = build_parser().parse_args(["diagnose", "--config", str(path), "--n", "64", "--c", "2",
                                          "--lambda", "1,2"])
        config = config_from_args(args)
        assert config.n == 64 and config.l == 6.0 and config.seed == 3
        assert config.weight == {"kind": "power", "a": 0.5, "c": 2.0}
        assert config.lambda_list == [1.0, 2.0]
        assert RunConfig.from_dict(config.to_dict()) == config


class TestMain():

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert __version__ in capsys.readouterr().out

    def test_usage_errors(self, tmp_path):
        assert main(["plot"]) == 2
        assert main(["weights", "--lambda", "one,two", "--out", str(tmp_path)]) == 2
        assert main(["weights", "--weight", "sinc", "--out", str(tmp_path)]) == 2
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["weights", "--config", str(bad)]) == 2
        bad.write_text("[1, 2]")
        assert main(["weights", "--config", str(bad)]) == 2
        assert main(["weights", "--config", str(tmp_path / "missing.json")]) == 3

    def test_weights(self, tmp_path):
        assert main(["weights", "--weight", "power", "--a", "0.5", "--out", str(tmp_path)]) == 0
        data = read_json(tmp_path / "weights.json")
        assert data["weight"] == {"kind": "power", "a": 0.5, "c": 1.0}
        assert data["conditions"]["alpha_ok"] is True
        assert data["config"]["command"] == "weights"
        assert data["version"] == __version__

    def test_operator(self, tmp_path):
        out = str(tmp_path)
        assert main(["operator", "--operator", "multiplication", "--n", "32", "--l", "8", "--out", out]) == 0
        spectrum = pd.read_csv(tmp_path / "operator_multiplication_spectrum.csv")
        assert len(spectrum) == 32
        assert os.path.exists(tmp_path / "operator_multiplication.tfw")
        assert len(read_json(tmp_path / "operator_multiplication.json")["sha256"]) == 64

    def test_file_input(self, tmp_path):
        path = str(tmp_path / "f.tfw")
        digest = save_field(sample(Fixture.hermite(1), Grid(((32, 8.0),))), path)
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"f": {"file": path}}))
        out = str(tmp_path / "out")
        args = ["operator", "--operator", "convolution", "--config", str(config), "--out", out]
        assert main(args + ["--n", "32", "--l", "8"]) == 0
        assert read_json(os.path.join(out, "operator_convolution.json"))["inputs"] == {"f": digest}
        assert main(args + ["--n", "64", "--l", "8"]) == 2

    def test_diagnose(self, tmp_path):
        out = str(tmp_path)
        assert main(["diagnose", "--test", "weyl_compactness", "--lambda", "1,2", "--out", out,
                     "--config", wigner_gaussian_config(tmp_path)]) == 0
        for kind in ("log1p", "power"):
            data = read_json(tmp_path / f"diagnose_weyl_compactness_{kind}.json")
            assert data["verdict"] == "COMPACT_LIKE"
            assert data["config"]["lambda_list"] == [1.0, 2.0]
            assert os.path.exists(tmp_path / f"diagnose_weyl_compactness_{kind}_mu_star.csv")

    def test_diagnose_fail_exit_code(self, tmp_path):
        path = tmp_path / "chirp.json"
        path.write_text(json.dumps({"a": Fixture.chirp_symbol(Fixture.gaussian()).to_dict()}))
        assert main(["diagnose", "--test", "weyl_compactness", "--out", str(tmp_path), "--config", str(path)]) == 1
        for kind in ("log1p", "power"):
            assert read_json(tmp_path / f"diagnose_weyl_compactness_{kind}.json")["verdict"] == "FAIL"

    def test_tail(self, tmp_path):
        assert main(["diagnose", "--test", "tail", "--out", str(tmp_path),
                     "--config", wigner_gaussian_config(tmp_path)]) == 0
        curve = pd.read_csv(tmp_path / "diagnose_tail.csv")
        assert np.all(np.diff(curve["radius"]) > 0)
        assert read_json(tmp_path / "diagnose_tail.json")["passed"] is True

    def test_identities(self, tmp_path):
        assert main(["identities", "--out", str(tmp_path)]) == 0
        data = read_json(tmp_path / "identities.json")
        assert data["passed"] is True
        assert data["config"]["n"] == 128
        frame = pd.read_csv(tmp_path / "identities.csv")
        assert frame["passed"].all()

    def test_demo(self, tmp_path):
        for case in ("rank-one", "localization-identity"):
            assert main(["demo", "--case", case, "--out", str(tmp_path)]) == 0
            assert read_json(tmp_path / f"demo_{case}.json")["passed"] is True
