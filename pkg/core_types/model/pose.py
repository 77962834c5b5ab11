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
This module contains the planar pose and velocity value types.
"""

import logging
import math
from dataclasses import dataclass

from utils.exceptions import InvalidGeometryError
from utils.utils import finite

logger = logging.getLogger(__name__)


def normalize_heading(heading: float) -> float:
    """
    Wrap an angle into (-pi, pi].

    @param heading: Angle in radians.
    @return: The equivalent angle in (-pi, pi].
    """
    wrapped = math.remainder(heading, math.tau)
    if wrapped <= -math.pi:
        wrapped = math.pi
    return wrapped


@dataclass(frozen=True)
class Pose2:
    """
    A world position with a heading in radians, counterclockwise from world +x.
    """

    x: float
    y: float
    heading: float = 0.0

    def __post_init__(self):
        if not finite(self.x, self.y, self.heading):
            logger.error("Non-finite pose: (%s, %s, %s).", self.x, self.y, self.heading)
            raise InvalidGeometryError(f"Non-finite pose ({self.x}, {self.y}, {self.heading}).")
        object.__setattr__(self, "heading", normalize_heading(float(self.heading)))

    @property
    def unit(self) -> tuple[float, float]:
        """Getter of the heading unit vector."""
        return math.cos(self.heading), math.sin(self.heading)

    def to_world(self, local_x: float, local_y: float) -> tuple[float, float]:
        """
        Map a point given in this pose's frame (x forward, y left) to world coordinates.

        @param local_x: Forward offset.
        @param local_y: Leftward offset.
        @return: World (x, y).
        """
        c, s = self.unit
        return self.x + c * local_x - s * local_y, self.y + s * local_x + c * local_y

    def to_local(self, x: float, y: float) -> tuple[float, float]:
        """
        Map a world point into this pose's frame.

        @param x: World x.
        @param y: World y.
        @return: Local (forward, left).
        """
        c, s = self.unit
        dx, dy = x - self.x, y - self.y
        return c * dx + s * dy, -s * dx + c * dy

    def offset(self, local_x: float, local_y: float, heading_delta: float = 0.0) -> "Pose2":
        """Pose displaced within this pose's frame."""
        x, y = self.to_world(local_x, local_y)
        return Pose2(x, y, self.heading + heading_delta)


@dataclass(frozen=True)
class Velocity2:
    """
    A world-frame velocity vector in m/s.
    """

    vx: float
    vy: float

    def __post_init__(self):
        if not finite(self.vx, self.vy):
            logger.error("Non-finite velocity: (%s, %s).", self.vx, self.vy)
            raise InvalidGeometryError(f"Non-finite velocity ({self.vx}, {self.vy}).")

    @property
    def speed(self) -> float:
        """Getter of the velocity magnitude in m/s."""
        return math.hypot(self.vx, self.vy)

    @staticmethod
    def along(heading: float, speed: float) -> "Velocity2":
        """Velocity of the given speed along a heading."""
        return Velocity2(speed * math.cos(heading), speed * math.sin(heading))
