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
import math

import pandas as pd
import pytest

from core_types.model.pose import Pose2
from simulator.episode import run_episode
from simulator.model.road_geometry import Corridor, RoadGeometry, Segment
from simulator.model.scenario_spec import ScenarioSpec
from simulator.trajectory_log import TRAJECTORY_LOG_COLUMNS, trajectory_frame, write_trajectory_log
from utils.constants import Behavior, Metric, SegmentKind


@pytest.fixture
def northbound_report(make_spawn):
    corridor = Corridor("main", Pose2(0.0, 0.0, math.pi / 2), (Segment(SegmentKind.STRAIGHT, 300.0),), 2)
    agents = (
        make_spawn("ego", 10.0, speed=10.0, behavior=Behavior.EGO),
        make_spawn("other", 60.0, lane=1, speed=8.0),
    )
    spec = ScenarioSpec(4, RoadGeometry((corridor,)), agents, duration=1.0)
    return run_episode(spec, Metric.TTC1, record_trajectory=True)


# trajectory_frame


def test_trajectory_frame_layout(northbound_report):
    # Act
    actual = trajectory_frame(northbound_report)

    # Assert
    assert TRAJECTORY_LOG_COLUMNS == list(actual.columns)
    assert 22 == len(actual)
    assert {"ego", "other"} == set(actual["id"])
    assert 0.0 == actual["t"].iloc[0]


def test_trajectory_frame_heading_in_degrees(northbound_report):
    # Act
    actual = trajectory_frame(northbound_report)

    # Assert
    ego = actual[actual["id"] == "ego"]
    assert 90.0 == pytest.approx(ego["heading"].iloc[0])
    assert 10.0 == pytest.approx(ego["vy"].iloc[0])
    assert 0.0 == pytest.approx(ego["vx"].iloc[0], abs=1e-9)


# write_trajectory_log


def test_write_trajectory_log(northbound_report, tmp_path):
    # Arrange
    file_path = str(tmp_path / "trajectory.csv")

    # Act
    write_trajectory_log(file_path, northbound_report)

    # Assert
    actual = pd.read_csv(file_path, float_precision="round_trip")
    expected = trajectory_frame(northbound_report)
    assert TRAJECTORY_LOG_COLUMNS == list(actual.columns)
    assert expected["x"].tolist() == actual["x"].tolist()
    assert expected["heading"].tolist() == actual["heading"].tolist()


def test_write_trajectory_log_without_recording(make_spawn, straight_road, tmp_path, mocker):
    # Arrange
    mock_log_warning = mocker.patch("simulator.trajectory_log.logger.warning")
    spec = ScenarioSpec(4, straight_road, (make_spawn("ego", 10.0, speed=10.0, behavior=Behavior.EGO),), duration=0.5)
    report = run_episode(spec, Metric.TTC1)
    file_path = str(tmp_path / "trajectory.csv")

    # Act
    write_trajectory_log(file_path, report)

    # Assert
    mock_log_warning.assert_called_once()
    assert 0 == len(pd.read_csv(file_path))
