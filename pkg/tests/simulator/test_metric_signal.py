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

from predictor.model.predictor_config import PredictorConfig
from simulator.metric_signal import corridor_plan, local_grid_spec, metric_signal, perceived, pora_signal
from utils.constants import Metric


@pytest.fixture
def predictor_config():
    return PredictorConfig(horizon_steps=4, step_dt=0.5)


# perceived


def test_perceived_keeps_participants_within_radius(make_car):
    # Arrange
    ego = make_car("ego", 0.0)
    others = [make_car("near", 100.0), make_car("far", 130.0)]

    # Act
    actual = perceived(ego, others)

    # Assert
    assert ["near"] == [a.id for a in actual]


# corridor_plan


def test_corridor_plan_samples_now_and_every_step(straight_road, predictor_config):
    # Act
    actual = corridor_plan(straight_road.corridor("main"), 50.0, -1.75, 10.0, 3.0, predictor_config)

    # Assert
    assert [3.0, 3.5, 4.0, 4.5, 5.0] == pytest.approx(list(actual.times))
    assert [50.0, 55.0, 60.0, 65.0, 70.0] == pytest.approx([s.pose.x for s in actual.samples])
    assert all(s.pose.y == pytest.approx(-1.75) for s in actual.samples)
    assert all(s.velocity.speed == pytest.approx(10.0) for s in actual.samples)


# local_grid_spec


def test_local_grid_spec_aligned_with_ego(make_car, risk_params, predictor_config):
    # Arrange
    ego = make_car("ego", 10.0, 5.0, heading=math.pi / 2, speed=0.0)

    # Act
    actual = local_grid_spec(ego, risk_params, predictor_config)

    # Assert
    assert actual.origin.x == pytest.approx(30.0)
    assert actual.origin.y == pytest.approx(-15.0)
    assert actual.origin.heading == pytest.approx(math.pi / 2)
    assert (80, 60) == actual.shape


# pora_signal


def test_pora_signal_empty_scene(straight_road, make_car, risk_params, predictor_config):
    # Arrange
    ego = make_car("ego", 50.0, speed=10.0)
    plan = corridor_plan(straight_road.corridor("main"), 50.0, 0.0, 10.0, 0.0, predictor_config)

    # Act
    actual = pora_signal(ego, [make_car("far", 400.0)], plan, 0.0, risk_params, predictor_config)

    # Assert
    assert 0.0 == actual


def test_pora_signal_vehicle_close_ahead(straight_road, make_car, risk_params, predictor_config):
    # Arrange
    ego = make_car("ego", 50.0, speed=10.0)
    leader = make_car("leader", 58.0, speed=2.0)
    plan = corridor_plan(straight_road.corridor("main"), 50.0, 0.0, 10.0, 0.0, predictor_config)

    # Act
    adjusted = pora_signal(ego, [leader], plan, 0.0, risk_params, predictor_config)
    unadjusted = pora_signal(ego, [leader], plan, 0.0, risk_params, predictor_config, adjusted=False)

    # Assert
    assert 0.0 < adjusted <= 1.0
    assert 0.0 < unadjusted <= 1.0


# metric_signal


def test_metric_signal_ttc1_maps_to_risk(straight_road, make_car, risk_params, predictor_config):
    # Arrange
    ego = make_car("ego", 0.0, speed=10.0)
    leader = make_car("leader", 24.5)
    plan = corridor_plan(straight_road.corridor("main"), 0.0, 0.0, 10.0, 0.0, predictor_config)

    # Act
    actual = metric_signal(Metric.TTC1, ego, [leader], plan, 0.0, risk_params, predictor_config)

    # Assert
    assert 0.8 == pytest.approx(actual)


def test_metric_signal_ttc2_without_contact(straight_road, make_car, risk_params, predictor_config):
    # Arrange
    ego = make_car("ego", 0.0, speed=10.0)
    plan = corridor_plan(straight_road.corridor("main"), 0.0, 0.0, 10.0, 0.0, predictor_config)

    # Act
    actual = metric_signal(Metric.TTC2, ego, [make_car("side", 0.0, y=7.0)], plan, 0.0, risk_params, predictor_config)

    # Assert
    assert 0.0 == actual
