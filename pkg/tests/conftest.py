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
import os

import numpy as np
import pytest

from core_types.model.agent_state import AgentState
from core_types.model.oriented_box import OrientedBox
from core_types.model.pose import Pose2, Velocity2
from grid.model.grid_spec import GridSpec
from grid.model.occupancy_grid import OccupancyGrid
from risk_engine.model.risk_params import RiskParams
from simulator.model.spawn_spec import SpawnSpec
from simulator.road import corridor_road
from utils.constants import Behavior, ParticipantKind


@pytest.fixture
def mock_logging_setup(mocker):
    mock_log_config = mocker.patch("logging.basicConfig")
    yield mock_log_config


@pytest.fixture
def unit_grid_spec():
    return GridSpec(Pose2(0.0, 0.0, 0.0), 1.0, 21, 21)


@pytest.fixture
def delta_grid(unit_grid_spec):
    values = np.zeros(unit_grid_spec.shape)
    values[10, 10] = 1.0
    return OccupancyGrid(unit_grid_spec, 0.0, values)


@pytest.fixture
def gaussian_grid():
    spec = GridSpec(Pose2(0.0, 0.0, 0.0), 0.5, 60, 60)
    xs, ys = spec.cell_centers_world()
    sigma = 1.5
    values = np.exp(-((xs - 15.0) ** 2 + (ys - 15.0) ** 2) / (2 * sigma**2))
    return OccupancyGrid(spec, 0.0, values)


@pytest.fixture
def av_box():
    return OrientedBox(Pose2(0.0, 0.0, 0.0), 4.5, 2.0)


@pytest.fixture
def car_box():
    return OrientedBox(Pose2(10.0, 0.0, 0.0), 5.0, 2.0)


@pytest.fixture
def risk_params():
    return RiskParams()


@pytest.fixture
def make_car():
    def _make_car(agent_id: str, x: float, y: float = 0.0, heading: float = 0.0, speed: float = 0.0, **kwargs):
        return AgentState.from_kind(
            agent_id,
            kwargs.pop("kind", ParticipantKind.CAR),
            Pose2(x, y, heading),
            Velocity2(speed * math.cos(heading), speed * math.sin(heading)),
            **kwargs,
        )

    return _make_car


@pytest.fixture
def straight_road():
    return corridor_road(2, 500.0)


@pytest.fixture
def make_spawn():
    def _make_spawn(spawn_id: str, s0: float, lane: int = 0, speed: float = 0.0, **kwargs):
        return SpawnSpec(
            spawn_id,
            kwargs.pop("kind", ParticipantKind.CAR),
            kwargs.pop("corridor", "main"),
            lane,
            s0,
            speed,
            kwargs.pop("desired_speed", speed),
            kwargs.pop("behavior", Behavior.BACKGROUND),
            **kwargs,
        )

    return _make_spawn


@pytest.fixture
def scenarios_dir():
    return os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "scenarios")
