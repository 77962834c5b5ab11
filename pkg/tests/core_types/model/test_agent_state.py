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

from core_types.model.agent_state import AgentState
from core_types.model.pose import Pose2, Velocity2
from utils.constants import ParticipantKind
from utils.exceptions import InvalidAgentStateError


# from_kind


@pytest.mark.parametrize(
    "kind, expected",
    [
        (ParticipantKind.CAR, (4.5, 1.8)),
        (ParticipantKind.TRUCK, (8.0, 2.4)),
        (ParticipantKind.BUS, (12.0, 2.5)),
        (ParticipantKind.BICYCLE, (1.8, 0.6)),
        (ParticipantKind.PEDESTRIAN, (0.5, 0.5)),
    ],
)
def test_from_kind_uses_default_dimensions(kind, expected):
    # Act
    actual = AgentState.from_kind("a1", kind, Pose2(0.0, 0.0, 0.0), Velocity2(0.0, 0.0))

    # Assert
    assert expected == (actual.box.length, actual.box.width)


def test_from_kind_prefers_perceived_dimensions():
    # Act
    actual = AgentState.from_kind(
        "a1", ParticipantKind.CAR, Pose2(0.0, 0.0, 0.0), Velocity2(1.0, 0.0), dimensions=(5.0, 2.0)
    )

    # Assert
    assert (5.0, 2.0) == (actual.box.length, actual.box.width)
    assert 1.0 == actual.speed


def test_agent_state_rejects_non_finite_acceleration():
    # Act & Assert
    with pytest.raises(InvalidAgentStateError):
        AgentState.from_kind(
            "a1", ParticipantKind.CAR, Pose2(0.0, 0.0, 0.0), Velocity2(0.0, 0.0), acceleration=float("nan")
        )


# from_dict


def test_from_dict_minimal_entry_takes_defaults():
    # Act
    actual = AgentState.from_dict({"id": "p1", "x": 3.0, "y": -1.0})

    # Assert
    assert ParticipantKind.CAR == actual.kind
    assert (4.5, 1.8) == (actual.box.length, actual.box.width)
    assert 0.0 == actual.speed
    assert (3.0, -1.0) == (actual.pose.x, actual.pose.y)


def test_from_dict_heading_given_in_degrees():
    # Act
    actual = AgentState.from_dict({"id": "p1", "x": 0.0, "y": 0.0, "heading_deg": 90.0, "kind": "truck"})

    # Assert
    assert actual.pose.heading == pytest.approx(math.pi / 2)
    assert 8.0 == actual.box.length


def test_from_dict_missing_position_raises_key_error():
    # Act & Assert
    with pytest.raises(KeyError):
        AgentState.from_dict({"id": "p1", "x": 0.0})


def test_to_dict_from_dict_keeps_state():
    # Arrange
    state = AgentState.from_kind(
        "b7", ParticipantKind.BUS, Pose2(5.0, 2.0, 0.5), Velocity2(3.0, 1.0), acceleration=-0.5, yaw_rate=0.1
    )

    # Act
    actual = AgentState.from_dict(state.to_dict())

    # Assert
    assert state.id == actual.id
    assert state.kind == actual.kind
    assert state.velocity == actual.velocity
    assert actual.pose.heading == pytest.approx(0.5)
    assert (-0.5, 0.1) == (actual.acceleration, actual.yaw_rate)
