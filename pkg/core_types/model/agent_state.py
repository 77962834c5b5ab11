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

"""
This module contains a data container for the state of one traffic participant.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

from core_types.model.oriented_box import OrientedBox
from core_types.model.pose import Pose2, Velocity2
from utils.constants import ParticipantKind
from utils.exceptions import InvalidAgentStateError
from utils.utils import finite

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AgentState:
    """
    Snapshot of a participant: footprint, velocity, signed acceleration along the heading and yaw rate.
    """

    id: str
    kind: ParticipantKind
    box: OrientedBox
    velocity: Velocity2
    acceleration: float = 0.0
    yaw_rate: float = 0.0

    def __post_init__(self):
        if not finite(self.acceleration, self.yaw_rate):
            logger.error("Agent %s has non-finite acceleration or yaw rate.", self.id)
            raise InvalidAgentStateError(f"Agent {self.id} has a non-finite acceleration or yaw rate.")

    @property
    def pose(self) -> Pose2:
        """Getter of the center pose."""
        return self.box.center

    @property
    def speed(self) -> float:
        """Getter of the speed in m/s."""
        return self.velocity.speed

    @staticmethod
    def from_kind(
        agent_id: str,
        kind: ParticipantKind,
        pose: Pose2,
        velocity: Velocity2,
        acceleration: float = 0.0,
        yaw_rate: float = 0.0,
        dimensions: Optional[tuple[float, float]] = None,
    ) -> "AgentState":
        """
        Build a state, filling the footprint from the kind defaults when no dimensions are perceived.

        @param agent_id: The participant identifier.
        @param kind: The participant kind.
        @param pose: The center pose.
        @param velocity: The world velocity.
        @param acceleration: Signed acceleration along the heading.
        @param yaw_rate: Yaw rate in rad/s.
        @param dimensions: Optional perceived (length, width).
        @return: The agent state.
        """
        length, width = dimensions if dimensions is not None else kind.default_dimensions
        return AgentState(agent_id, kind, OrientedBox(pose, length, width), velocity, acceleration, yaw_rate)

    def to_dict(self) -> dict:
        """Serializable form with the heading in degrees."""
        return {
            "id": self.id,
            "kind": self.kind.value,
            "x": self.pose.x,
            "y": self.pose.y,
            "heading_deg": math.degrees(self.pose.heading),
            "vx": self.velocity.vx,
            "vy": self.velocity.vy,
            "acceleration": self.acceleration,
            "yaw_rate": self.yaw_rate,
            "length": self.box.length,
            "width": self.box.width,
        }

    @staticmethod
    def from_dict(agent_json: dict) -> "AgentState":
        """
        Inverse of to_dict. Only id, x and y are required; the kind defaults to a car, the dimensions to the kind
        defaults and the motion terms to 0.

        @param agent_json: The JSON object.
        @return: The agent state.
        @raise KeyError: When a required key is missing.
        @raise ValueError: When a value cannot be converted.
        """
        kind = ParticipantKind(agent_json.get("kind", ParticipantKind.CAR.value))
        length, width = kind.default_dimensions
        heading = math.radians(float(agent_json.get("heading_deg", 0.0)))
        return AgentState.from_kind(
            str(agent_json["id"]),
            kind,
            Pose2(float(agent_json["x"]), float(agent_json["y"]), heading),
            Velocity2(float(agent_json.get("vx", 0.0)), float(agent_json.get("vy", 0.0))),
            float(agent_json.get("acceleration", 0.0)),
            float(agent_json.get("yaw_rate", 0.0)),
            (float(agent_json.get("length", length)), float(agent_json.get("width", width))),
        )
