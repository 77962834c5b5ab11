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
This module contains the oriented rectangle value type.
"""

import logging
from dataclasses import dataclass

import numpy as np

from core_types.model.pose import Pose2
from utils.exceptions import InvalidGeometryError
from utils.utils import finite

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrientedBox:
    """
    A rectangle centered on a pose; length runs along the heading, width across it.
    """

    center: Pose2
    length: float
    width: float

    def __post_init__(self):
        if not finite(self.length, self.width) or self.length <= 0 or self.width <= 0:
            logger.error("Invalid box dimensions: length=%s, width=%s.", self.length, self.width)
            raise InvalidGeometryError(f"Box dimensions must be positive, got {self.length}x{self.width}.")

    @property
    def half_length(self) -> float:
        """Getter of half the length."""
        return self.length / 2.0

    @property
    def half_width(self) -> float:
        """Getter of half the width."""
        return self.width / 2.0

    @property
    def circumradius(self) -> float:
        """Getter of the distance from the center to a corner."""
        return float(np.hypot(self.half_length, self.half_width))

    def corners(self) -> np.ndarray:
        """
        World corners, counterclockwise starting at the front-left corner.

        @return: A 4x2 array.
        """
        hl, hw = self.half_length, self.half_width
        local = np.array([[hl, hw], [-hl, hw], [-hl, -hw], [hl, -hw]])
        c, s = self.center.unit
        rotation = np.array([[c, -s], [s, c]])
        return local @ rotation.T + np.array([self.center.x, self.center.y])

    def moved_to(self, pose: Pose2) -> "OrientedBox":
        """The same rectangle placed at another pose."""
        return OrientedBox(pose, self.length, self.width)

    def contains(self, x: float, y: float) -> bool:
        """Closed containment test of a world point."""
        lx, ly = self.center.to_local(x, y)
        return abs(lx) <= self.half_length and abs(ly) <= self.half_width
