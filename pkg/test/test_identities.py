import sys
import os
import json

import numpy as np
import pytest

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from tfweyl.grids import Grid
from tfweyl.identities import (IdentityCheck, check_band_limited, check_chirp_constant, check_localization,
                               check_modulation_norms, check_moyal, check_partial_fourier_stft, check_rank_one,
                               check_stft_points, identities_frame, identities_json, run_identities)
from tfweyl.weights import Weight

GRID = Grid(((128, 12.0),))


@pytest.fixture(scope="module")
def checks():
    return run_identities()


class TestSuite():

    def test_all_pass(self, checks):
        failed = [(c.name, c.relative_error) for c in checks if not c.passed]
        assert not failed

    def test_names(self, checks):
        names = {c.name for c in checks}
        for name in ("moyal", "stft_points", "stft_inversion", "weyl_kernel_paths", "weak_pairing",
                     "rank_one_action", "chirp_constant", "localization_identity", "fourier_wigner",
                     "band_limited_support", "stft_energy", "holder_bound", "partial_fourier_stft"):
            assert name in names
        assert len([n for n in names if n.startswith("fourier_bridge")]) == 3

    def test_frame_and_json(self, checks):
        frame = identities_frame(checks)
        assert list(frame.columns) == ["name", "relative_error", "tolerance", "passed"]
        assert len(frame) == len(checks)
        data = json.loads(identities_json(checks, version="x"))
        assert data["passed"] is True
        assert data["version"] == "x"
        assert len(data["checks"]) == len(checks)

    def test_power_weight(self):
        energy, holder = check_modulation_norms(GRID, Weight("power", a=0.5))
        assert energy.passed and holder.passed


class TestChecks():

    def test_check_to_dict(self):
        check = IdentityCheck("c", 1 + 2j, 1.0, 0.5, 0.1, False)
        assert check.to_dict() == {"name": "c", "lhs": [1.0, 2.0], "rhs": 1.0, "relative_error": 0.5,
                                   "tolerance": 0.1, "passed": False}

    def test_moyal(self):
        (check,) = check_moyal(GRID)
        assert check.passed
        assert check.relative_error < 1e-8

    def test_stft_points(self):
        (check,) = check_stft_points(GRID, random_state=0)
        assert check.tolerance == 1e-12
        assert check.passed

    def test_rank_one(self):
        action, eigenvalue = check_rank_one(GRID)
        assert action.passed and eigenvalue.passed

    def test_chirp_constant(self):
        constant, mean = check_chirp_constant(GRID)
        assert constant.lhs < 1e-6
        assert mean.rhs == pytest.approx(np.sqrt(2 * np.pi) * np.sqrt(np.pi / 2.5) / (2 * np.pi))

    def test_localization(self):
        assert all(c.passed for c in check_localization(GRID))

    def test_partial_fourier_stft(self):
        (check,) = check_partial_fourier_stft()
        assert check.passed
        assert check.relative_error < 1e-6

    def test_band_limited(self):
        support, convolution = check_band_limited(GRID, 0.5, 2.0)
        assert support.passed and convolution.passed
