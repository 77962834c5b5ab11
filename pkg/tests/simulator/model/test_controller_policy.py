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
import pytest

from simulator.model.controller_policy import ControllerPolicy, RewardWeights
from utils.constants import PolicyAction
from utils.exceptions import InvalidParameterError


# ControllerPolicy


@pytest.mark.parametrize(
    "risk, expected",
    [
        (0.0, PolicyAction.PROCEED),
        (0.64, PolicyAction.PROCEED),
        (0.65, PolicyAction.REPLAN),
        (0.8, PolicyAction.REPLAN),
        (0.9, PolicyAction.REPLAN),
        (0.91, PolicyAction.BRAKE),
        (1.0, PolicyAction.BRAKE),
    ],
)
def test_decide_threshold_bands(risk, expected):
    # Act
    actual = ControllerPolicy().decide(risk)

    # Assert
    assert expected == actual


@pytest.mark.parametrize(
    "kwargs",
    [
        {"proceed_below": 0.95},
        {"brake_above": 1.2},
        {"proceed_below": -0.1},
        {"replan_decel": 9.0},
        {"max_accel": -1.0},
    ],
)
def test_controller_policy_rejects_invalid_values(kwargs, mocker):
    # Arrange
    mock_log_error = mocker.patch("simulator.model.controller_policy.logger.error")

    # Act & Assert
    with pytest.raises(InvalidParameterError):
        ControllerPolicy(**kwargs)
    mock_log_error.assert_called()


def test_load_from_json_correct_behaviour():
    # Arrange
    policy_json = {"proceed_below": 0.5, "brake_above": 0.8, "replan_decel": 1.5, "max_decel": 7.0, "max_accel": 2.0}

    # Act
    actual = ControllerPolicy.load_from_json(policy_json)

    # Assert
    assert policy_json == actual.to_dict()


def test_load_from_json_defaults():
    # Act
    actual = ControllerPolicy.load_from_json({})

    # Assert
    assert ControllerPolicy().to_dict() == actual.to_dict()


@pytest.mark.parametrize("policy_json", [{"proceed_below": "low"}, []])
def test_load_from_json_malformed(policy_json, mocker):
    # Arrange
    mock_log_error = mocker.patch("simulator.model.controller_policy.logger.error")

    # Act
    actual = ControllerPolicy.load_from_json(policy_json)

    # Assert
    assert actual is None
    mock_log_error.assert_called_once()


# RewardWeights


def test_reward_composition():
    # Act
    actual = RewardWeights().reward(0.1, 1, 0.5)

    # Assert
    assert -55.1 == pytest.approx(actual, abs=1e-12)


def test_reward_weights_reject_negative_weight(mocker):
    # Arrange
    mocker.patch("simulator.model.controller_policy.logger.error")

    # Act & Assert
    with pytest.raises(InvalidParameterError):
        RewardWeights(gamma=-1.0)
