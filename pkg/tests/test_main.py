#
# Copyright 2026 ABSA Group Limited
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
import argparse
import json
import logging
import os

import pandas as pd
import pytest

from main import EXIT_CONFIG_ERROR, EXIT_RUNTIME_ERROR, EXIT_SUCCESS, main, run, window_size
from utils.exceptions import EmptySampleError, ScenarioLoadException


@pytest.fixture(autouse=True)
def mock_setup_logging(mocker):
    yield mocker.patch("main.setup_logging")


def _read(path):
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


# window_size


def test_window_size():
    # Act
    actual = window_size("30x40")

    # Assert
    assert (30, 40) == actual


@pytest.mark.parametrize("text", ["30", "30x", "axb", "0x40", "30x40x2"])
def test_window_size_rejected(text):
    # Act & Assert
    with pytest.raises(argparse.ArgumentTypeError):
        window_size(text)


# main


def test_main_help_exits_successfully(capsys):
    # Act
    actual = main(["--help"])

    # Assert
    assert EXIT_SUCCESS == actual
    assert "sim" in capsys.readouterr().out


def test_main_unknown_flag_is_configuration_error():
    # Act
    actual = main(["sim", "batch", "--no-such-flag"])

    # Assert
    assert EXIT_CONFIG_ERROR == actual


def test_main_missing_scenario_is_configuration_error(tmp_path):
    # Act
    actual = main(["sim", "batch", "--scenario", str(tmp_path / "absent.json"), "--out", str(tmp_path)])

    # Assert
    assert EXIT_CONFIG_ERROR == actual


def test_main_logs_run_phases(mocker, tmp_path):
    # Arrange
    mocker.patch("main.RunInputs.validate_user_configuration", return_value=True)
    mocker.patch("main.CommandRunner")
    mock_log_info = mocker.patch("logging.getLogger").return_value.info

    # Act
    actual = main(["analyze", "bench", "--out", str(tmp_path)])

    # Assert
    assert EXIT_SUCCESS == actual
    mock_log_info.assert_has_calls(
        [
            mocker.call("PORA risk engine - starting."),
            mocker.call("PORA risk engine - root output path set to `%s`.", str(tmp_path)),
            mocker.call("PORA risk engine - ending."),
        ],
        any_order=False,
    )


def test_main_verbose_switches_to_debug(mocker, tmp_path):
    # Arrange
    mocker.patch("main.RunInputs.validate_user_configuration", return_value=True)
    mocker.patch("main.CommandRunner")
    mock_get_logger = mocker.patch("logging.getLogger")

    # Act
    main(["analyze", "bench", "--verbose", "--out", str(tmp_path)])

    # Assert
    mock_get_logger.return_value.setLevel.assert_called_once_with(logging.DEBUG)


def test_main_runtime_failure(mocker, tmp_path):
    # Arrange
    mocker.patch("main.RunInputs.validate_user_configuration", return_value=True)
    mocker.patch("main.CommandRunner").return_value.run.side_effect = EmptySampleError("no crash episodes")

    # Act
    actual = main(["analyze", "separate", "--out", str(tmp_path)])

    # Assert
    assert EXIT_RUNTIME_ERROR == actual


def test_main_unreadable_input_is_configuration_error(mocker, tmp_path):
    # Arrange
    mocker.patch("main.RunInputs.validate_user_configuration", return_value=True)
    mocker.patch("main.CommandRunner").return_value.run.side_effect = ScenarioLoadException("malformed")

    # Act
    actual = main(["sim", "batch", "--out", str(tmp_path)])

    # Assert
    assert EXIT_CONFIG_ERROR == actual


def test_main_bench_alias(mocker, tmp_path):
    # Arrange
    mock_bench = mocker.patch(
        "commands.bench_latency", return_value=pd.DataFrame([{"stage": "pora", "agents": 2, "median_ms": 1.0}])
    )

    # Act
    actual = main(["bench", "--window", "10x20", "--repetitions", "100", "--out", str(tmp_path)])

    # Assert
    assert EXIT_SUCCESS == actual
    mock_bench.assert_called_once_with([(10, 20)], 100, [2, 4, 8, 16], 0)
    assert os.path.isfile(tmp_path / "bench.csv")
    manifest = json.loads(_read(tmp_path / "manifest.json"))
    assert "analyze bench" == manifest["command"]


def test_main_risk_eval_from_grid_files(scenarios_dir, tmp_path):
    # Arrange
    expected = pd.read_csv(os.path.join(scenarios_dir, "stopped_car_scores.csv"))
    argv = [
        "risk",
        "eval",
        "--plan",
        os.path.join(scenarios_dir, "stopped_car_plan.csv"),
        "--participants",
        os.path.join(scenarios_dir, "stopped_car_participants.json"),
        "--predictor",
        "file",
        "--grids",
        os.path.join(scenarios_dir, "grids"),
        "--out",
        str(tmp_path),
    ]

    # Act
    actual = main(argv)

    # Assert
    assert EXIT_SUCCESS == actual
    scores = pd.read_csv(tmp_path / "scores.csv")
    assert ["t", "score", "unadjusted_score"] == list(scores.columns)
    assert len(expected) == len(scores)
    for (_, row), (_, golden) in zip(scores.iterrows(), expected.iterrows()):
        assert golden["t"] == pytest.approx(row["t"])
        assert golden["score"] == pytest.approx(row["score"], abs=1e-3)
    assert scores["score"].iloc[0] == pytest.approx(scores["unadjusted_score"].iloc[0])
    assert (scores["score"] > 0.0).all()

    manifest = json.loads(_read(tmp_path / "manifest.json"))
    assert ["scores.csv"] == manifest["outputs"]
    assert {"command", "configuration", "seeds", "generator", "outputs"} == set(manifest)


def test_main_risk_eval_from_grid_files_without_participants(scenarios_dir, tmp_path):
    # Arrange
    argv = [
        "risk",
        "eval",
        "--plan",
        os.path.join(scenarios_dir, "stopped_car_plan.csv"),
        "--predictor",
        "file",
        "--grids",
        os.path.join(scenarios_dir, "grids"),
        "--out",
        str(tmp_path),
    ]

    # Act
    actual = main(argv)

    # Assert
    assert EXIT_CONFIG_ERROR == actual
    assert not (tmp_path / "scores.csv").exists()


def test_main_risk_eval_with_analytic_predictor(scenarios_dir, tmp_path):
    # Arrange
    argv = [
        "risk",
        "eval",
        "--plan",
        os.path.join(scenarios_dir, "stopped_car_plan.csv"),
        "--participants",
        os.path.join(scenarios_dir, "stopped_car_participants.json"),
        "--format",
        "json",
        "--export-fields",
        "--out",
        str(tmp_path),
    ]

    # Act
    actual = main(argv)

    # Assert
    assert EXIT_SUCCESS == actual
    scores = json.loads(_read(tmp_path / "scores.json"))
    assert 6 == len(scores)
    assert [0.5, 1.0, 1.5, 2.0, 2.5, 3.0] == pytest.approx([row["t"] for row in scores])
    assert os.listdir(tmp_path / "fields")


def test_main_labeled_calibration(scenarios_dir, tmp_path):
    # Arrange
    argv = ["analyze", "calibrate", "--labeled", os.path.join(scenarios_dir, "labeled_example.json")]

    # Act
    actual = main(argv + ["--out", str(tmp_path)])

    # Assert
    assert EXIT_SUCCESS == actual
    calibration = json.loads(_read(tmp_path / "calibration.json"))
    assert 1.5 == calibration["beta"]
    assert calibration["feasible"]
    assert 5 == len(pd.read_csv(tmp_path / "calibration_table.csv"))


def test_main_sim_batch_is_reproducible(scenarios_dir, tmp_path):
    # Arrange
    argv = [
        "sim",
        "batch",
        "--scenario",
        os.path.join(scenarios_dir, "nominal_single_lane.json"),
        "--metric",
        "ttc1",
        "--episodes",
        "2",
    ]

    # Act
    first = main(argv + ["--workers", "1", "--out", str(tmp_path / "first")])
    second = main(argv + ["--workers", "2", "--out", str(tmp_path / "second")])

    # Assert
    assert EXIT_SUCCESS == first == second
    for name in ("episodes.csv", "summary.csv", "manifest.json"):
        assert _read(tmp_path / "first" / name) == _read(tmp_path / "second" / name)
    manifest = json.loads(_read(tmp_path / "first" / "manifest.json"))
    assert [7, 8] == manifest["seeds"]


# run


def test_run_exits_with_main_code(mocker):
    # Arrange
    mocker.patch("main.main", return_value=EXIT_CONFIG_ERROR)
    mock_exit = mocker.patch("sys.exit")

    # Act
    run()

    # Assert
    mock_exit.assert_called_once_with(EXIT_CONFIG_ERROR)
