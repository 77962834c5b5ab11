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

import pytest

from core_types.model.planned_trajectory import PlannedTrajectory, TrajectorySample
from core_types.model.pose import Pose2, Velocity2
from utils.exceptions import InvalidGeometryError, ScenarioLoadException


def _sample(t: float, x: float = 0.0) -> TrajectorySample:
    return TrajectorySample(t, Pose2(x, 0.0, 0.25), Velocity2(10.0, 0.0))


# PlannedTrajectory


def test_planned_trajectory_uniform_spacing():
    # Act
    actual = PlannedTrajectory([_sample(0.5), _sample(1.0), _sample(1.5)])

    # Assert
    assert 0.5 == pytest.approx(actual.dt)
    assert 3 == len(actual)


def test_planned_trajectory_single_sample():
    # Act
    actual = PlannedTrajectory([_sample(0.0)])

    # Assert
    assert 0.0 == actual.dt


def test_planned_trajectory_rejects_empty():
    # Act & Assert
    with pytest.raises(InvalidGeometryError):
        PlannedTrajectory([])


def test_planned_trajectory_rejects_non_increasing_times():
    # Act & Assert
    with pytest.raises(InvalidGeometryError):
        PlannedTrajectory([_sample(1.0), _sample(1.0)])


def test_planned_trajectory_rejects_uneven_spacing():
    # Act & Assert
    with pytest.raises(InvalidGeometryError):
        PlannedTrajectory([_sample(0.0), _sample(0.5), _sample(1.1)])


def test_sample_at_within_tolerance():
    # Arrange
    plan = PlannedTrajectory([_sample(0.5, 1.0), _sample(1.0, 2.0)])

    # Act
    actual = plan.sample_at(1.0 + 5e-7)

    # Assert
    assert 2.0 == actual.pose.x
    assert plan.sample_at(1.2) is None


# to_csv / from_csv


def test_csv_round_trip_keeps_heading_in_radians(tmp_path):
    # Arrange
    plan = PlannedTrajectory([_sample(0.5, 1.0), _sample(1.0, 2.0)])
    path = str(tmp_path / "plan.csv")

    # Act
    plan.to_csv(path)
    actual = PlannedTrajectory.from_csv(path)

    # Assert
    assert 2 == len(actual)
    assert 0.25 == pytest.approx(actual.samples[0].pose.heading, abs=1e-12)
    assert 2.0 == actual.samples[1].pose.x
    with open(path, "r", encoding="utf-8") as f:
        assert "t,x,y,heading_deg,vx,vy" == f.readline().strip()
    assert math.degrees(0.25) == pytest.approx(plan.to_frame()["heading_deg"][0])


def test_from_csv_missing_file(tmp_path):
    # Act & Assert
    with pytest.raises(ScenarioLoadException):
        PlannedTrajectory.from_csv(str(tmp_path / "missing.csv"))


def test_from_csv_missing_column(tmp_path):
    # Arrange
    path = tmp_path / "plan.csv"
    path.write_text("t,x,y\n0.5,0,0\n", encoding="utf-8")

    # Act & Assert
    with pytest.raises(ScenarioLoadException):
        PlannedTrajectory.from_csv(str(path))
