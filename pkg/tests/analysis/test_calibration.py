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
import numpy as np
import pytest

from analysis.calibration import (
    calibrate_beta_labeled,
    calibrate_beta_sim,
    load_labeled_scenarios,
    risk_traces_over_beta,
    save_labeled_scenarios,
)
from analysis.model.labeled_scenario import LabeledScenario
from core_types.model.oriented_box import OrientedBox
from core_types.model.planned_trajectory import PlannedTrajectory, TrajectorySample
from core_types.model.pose import Pose2, Velocity2
from grid.model.grid_spec import GridSpec
from grid.model.occupancy_grid import OccupancyGrid
from risk_engine.pora import pora_trajectory
from simulator.model.batch_summary import BatchSummary
from simulator.model.scenario_spec import ScenarioSpec
from utils.constants import Behavior, CalibrationProgram
from utils.exceptions import EmptySampleError, InvalidParameterError, ScenarioLoadException

TIMES = [0.5, 1.0, 1.5]


@pytest.fixture
def lone_ego_spec(straight_road, make_spawn):
    return ScenarioSpec(5, straight_road, (make_spawn("ego", 10.0, speed=10.0, behavior=Behavior.EGO),), duration=1.0)


def _summary(collisions_per_100, conflicts):
    return BatchSummary(10, conflicts, collisions_per_100, -10.0, -20.0, collisions_per_100 / 100)


def _approaching_scene():
    spec = GridSpec(Pose2(-30.0, -30.0, 0.0), 0.5, 120, 200)
    xs, ys = spec.cell_centers_world()
    plan = PlannedTrajectory(
        [TrajectorySample(t, Pose2(0.0, 0.0, 0.0), Velocity2(0.0, 0.0)) for t in [0.0] + TIMES]
    )
    grids = [
        OccupancyGrid(spec, t, 0.9 * np.exp(-((xs - x) ** 2 + ys**2) / (2 * 1.2**2)))
        for t, x in zip(TIMES, (9.0, 6.0, 3.0))
    ]
    return plan, grids, [OrientedBox(Pose2(6.0, 0.0, 0.0), 4.5, 2.0)]


# risk_traces_over_beta


def test_risk_traces_over_beta_matches_direct_evaluation(risk_params):
    # Arrange
    plan, grids, others = _approaching_scene()

    # Act
    actual = risk_traces_over_beta("approach", plan, grids, 4.5, 2.0, others, risk_params, 1.5, [0.0, 1.0, 3.0])

    # Assert
    assert (3, 3) == actual.risk.shape
    assert 2 == actual.collision_index
    for row, beta in enumerate([0.0, 1.0, 3.0]):
        expected = [s for _, s, _ in pora_trajectory(plan, grids, 4.5, 2.0, others, risk_params.with_beta(beta))]
        assert pytest.approx(expected, abs=1e-12) == actual.risk[row].tolist()


def test_risk_traces_over_beta_first_step_ignores_beta(risk_params):
    # Arrange
    plan, grids, others = _approaching_scene()

    # Act
    actual = risk_traces_over_beta("approach", plan, grids, 4.5, 2.0, others, risk_params, 1.5, [0.0, 2.0, 5.0])

    # Assert
    assert 1 == len(set(actual.risk[:, 0].tolist()))


def test_risk_traces_over_beta_empty_scene(risk_params):
    # Arrange
    plan, grids, _ = _approaching_scene()

    # Act
    scenario = risk_traces_over_beta("empty", plan, grids, 4.5, 2.0, [], risk_params, 1.0, [0.0, 0.5])
    actual = calibrate_beta_labeled([scenario])

    # Assert
    assert 0.0 == scenario.risk.max()
    assert 0.0 == actual.beta
    assert actual.feasible


# calibrate_beta_labeled


def test_calibrate_beta_labeled_degenerate_feasibility():
    # Arrange
    scenario = LabeledScenario("flat", [0.0, 0.5, 1.0], TIMES, [[0.1, 0.2, 0.5]] * 3, 1.5)

    # Act
    actual = calibrate_beta_labeled([scenario])

    # Assert
    assert CalibrationProgram.LABELED == actual.program
    assert 0.0 == actual.beta
    assert actual.feasible


def test_calibrate_beta_labeled_sharpening_peak():
    # Arrange
    risk = [[0.1, 0.2, 0.3], [0.1, 0.2, 0.4], [0.1, 0.2, 0.6]]
    scenario = LabeledScenario("sharp", [0.0, 0.5, 1.0], TIMES, risk, 1.5)

    # Act
    actual = calibrate_beta_labeled([scenario])

    # Assert
    assert 1.0 == actual.beta
    assert actual.feasible
    assert pytest.approx([0.3, 0.4, 0.6]) == actual.table["objective"].tolist()


def test_calibrate_beta_labeled_prefers_feasible_beta():
    # Arrange
    first = LabeledScenario("a", [0.0, 0.5, 1.0], TIMES, [[0.1, 0.2, 0.9], [0.1, 0.2, 0.5], [0.1, 0.6, 0.5]], 1.5)
    second = LabeledScenario("b", [0.0, 0.5, 1.0], TIMES, [[0.9, 0.2, 0.3], [0.1, 0.2, 0.3], [0.1, 0.2, 0.8]], 1.5)

    # Act
    actual = calibrate_beta_labeled([first, second])

    # Assert
    assert 0.5 == actual.beta
    assert actual.feasible
    assert [0.6, 0.0, 0.1] == pytest.approx(actual.table["violation"].tolist())


def test_calibrate_beta_labeled_infeasible(mocker):
    # Arrange
    mock_log_warning = mocker.patch("analysis.calibration.logger.warning")
    risk = [[0.9, 0.2, 0.3], [0.8, 0.2, 0.3], [0.5, 0.2, 0.3]]
    scenario = LabeledScenario("early", [0.0, 0.5, 1.0], TIMES, risk, 1.5)

    # Act
    actual = calibrate_beta_labeled([scenario])

    # Assert
    assert 1.0 == actual.beta
    assert not actual.feasible
    mock_log_warning.assert_called_once()
    recheck = [scenario.violation(b) == 0 for b in range(3)]
    assert any(recheck) == actual.feasible


def test_calibrate_beta_labeled_empty(mocker):
    # Arrange
    mock_log_error = mocker.patch("analysis.calibration.logger.error")

    # Act
    with pytest.raises(EmptySampleError):
        calibrate_beta_labeled([])

    # Assert
    mock_log_error.assert_called_once()


def test_calibrate_beta_labeled_grid_mismatch(mocker):
    # Arrange
    mocker.patch("analysis.calibration.logger.error")
    first = LabeledScenario("a", [0.0, 1.0], TIMES, [[0.1, 0.2, 0.3]] * 2, 1.5)
    second = LabeledScenario("b", [0.0, 2.0], TIMES, [[0.1, 0.2, 0.3]] * 2, 1.5)

    # Act & Assert
    with pytest.raises(InvalidParameterError):
        calibrate_beta_labeled([first, second])


# calibrate_beta_sim


def test_calibrate_beta_sim_single_beta(lone_ego_spec):
    # Act
    actual = calibrate_beta_sim([lone_ego_spec], [2.5], 1)

    # Assert
    assert CalibrationProgram.SIM == actual.program
    assert 2.5 == actual.beta
    assert actual.feasible
    assert [0.0] == actual.table["objective"].tolist()


def test_calibrate_beta_sim_ties_go_to_smallest_beta(lone_ego_spec, mocker):
    # Arrange
    mock_run_batch = mocker.patch("analysis.calibration.run_batch", return_value=([], _summary(10.0, 2.0)))

    # Act
    actual = calibrate_beta_sim([lone_ego_spec], [1.0, 0.5, 2.0], 2)

    # Assert
    assert 0.5 == actual.beta
    assert 3 == mock_run_batch.call_count


def test_calibrate_beta_sim_minimum_of_recorded_cost(lone_ego_spec, mocker):
    # Arrange
    summaries = [_summary(10.0, 0.0), _summary(0.0, 3.0), _summary(0.0, 1.0), _summary(5.0, 0.0)]
    mock_run_batch = mocker.patch("analysis.calibration.run_batch", side_effect=[([], s) for s in summaries])

    # Act
    actual = calibrate_beta_sim([lone_ego_spec], [0.0, 1.0, 2.0, 3.0], 3)

    # Assert
    table = actual.table
    assert 2.0 == actual.beta
    assert pytest.approx([10.0, 0.3, 0.1, 5.0]) == table["objective"].tolist()
    assert table["objective"].min() == table.loc[table["beta"] == actual.beta, "objective"].iloc[0]
    specs = mock_run_batch.call_args.args[0]
    assert [5, 6, 7] == [s.seed for s in specs]
    assert 3.0 == mock_run_batch.call_args.args[3].cox.beta


def test_calibrate_beta_sim_invalid_grid(lone_ego_spec, mocker):
    # Arrange
    mock_log_error = mocker.patch("analysis.calibration.logger.error")

    # Act
    with pytest.raises(InvalidParameterError):
        calibrate_beta_sim([lone_ego_spec], [0.5, -1.0])

    # Assert
    mock_log_error.assert_called_once()


# load_labeled_scenarios


def test_load_labeled_scenarios_keeps_file_order(tmp_path):
    # Arrange
    path = str(tmp_path / "labeled.json")
    scenarios = [
        LabeledScenario("a", [0.0, 1.0], TIMES, [[0.1, 0.2, 0.3], [0.1, 0.2, 0.4]], 1.5),
        LabeledScenario("b", [0.0, 1.0], TIMES, [[0.3, 0.2, 0.1], [0.3, 0.2, 0.1]], 1.0),
    ]
    save_labeled_scenarios(path, scenarios)

    # Act
    actual = load_labeled_scenarios(path)

    # Assert
    assert ["a", "b"] == [s.scenario_id for s in actual]
    assert np.array_equal(scenarios[1].risk, actual[1].risk)
    assert 1 == actual[1].collision_index


@pytest.mark.parametrize(
    "content",
    [
        "not json",
        '{"id": "a"}',
        '[{"id": "a", "beta_grid": [0.0], "times": [0.5], "risk": [[0.1]]}]',
        '[{"id": "a", "beta_grid": [0.0], "times": [0.5], "risk": [[1.5]], "collision_time": 0.5}]',
    ],
)
def test_load_labeled_scenarios_malformed(tmp_path, content):
    # Arrange
    path = tmp_path / "labeled.json"
    path.write_text(content, encoding="utf-8")

    # Act & Assert
    with pytest.raises(ScenarioLoadException):
        load_labeled_scenarios(str(path))


def test_load_labeled_scenarios_missing_file(tmp_path, mocker):
    # Arrange
    mock_log_error = mocker.patch("analysis.calibration.logger.error")

    # Act & Assert
    with pytest.raises(ScenarioLoadException):
        load_labeled_scenarios(str(tmp_path / "absent.json"))
    mock_log_error.assert_called_once()
