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
This module contains the safety box: the region around the AV where another participant's presence
threatens safety (Phi), together with its guaranteed-collision sub-area (phi).
"""

import logging
import math
from dataclasses import dataclass

from core_types.model.pose import Pose2
from grid.model.grid_spec import GridSpec
from utils.constants import TOUCH_TOLERANCE
from utils.exceptions import InvalidGeometryError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SafetyBox:
    """
    Box dimensions in meters, axis-aligned to the AV heading. The sub-area is centered on the AV body center;
    the box reaches rear_extent behind that center and front_extent ahead of it.
    """

    width: float
    length: float
    sub_length: float
    sub_width: float
    anchor: Pose2
    rear_extent: float

    def __post_init__(self):
        values = (self.width, self.length, self.sub_length, self.sub_width, self.rear_extent)
        if not all(math.isfinite(v) for v in values):
            logger.error("Safety box has non-finite dimensions: %s.", values)
            raise InvalidGeometryError(f"Safety box has non-finite dimensions: {values}.")
        if self.sub_length <= 0 or self.sub_width <= 0:
            logger.error("Safety box sub-area must be positive, got %s x %s.", self.sub_length, self.sub_width)
            raise InvalidGeometryError("Safety box sub-area must be positive.")
        if self.length + TOUCH_TOLERANCE < self.sub_length or self.width + TOUCH_TOLERANCE < self.sub_width:
            logger.error("Safety box %s x %s is smaller than its sub-area.", self.length, self.width)
            raise InvalidGeometryError("Safety box is smaller than its sub-area.")
        half_sub = self.sub_length / 2
        if not half_sub - TOUCH_TOLERANCE <= self.rear_extent <= self.length - half_sub + TOUCH_TOLERANCE:
            logger.error("Safety box rear extent %s does not house the sub-area.", self.rear_extent)
            raise InvalidGeometryError("Safety box rear extent does not house the sub-area.")

    @property
    def front_extent(self) -> float:
        """Distance from the AV body center to the front edge of the box."""
        return self.length - self.rear_extent

    def window_spec(self, cell_size: float) -> GridSpec:
        """
        The AV-centered window covering the box. Rows run forward along the AV heading starting at the rear
        edge, columns run across from the left edge to the right edge, so the grid origin heading is the
        AV heading minus pi/2.

        @param cell_size: Window cell edge in meters.
        @return: The window geometry, ceil(length / cell) x ceil(width / cell) cells.
        """
        if not math.isfinite(cell_size) or cell_size <= 0:
            logger.error("Window cell size must be > 0, got %s.", cell_size)
            raise InvalidGeometryError(f"Window cell size must be > 0, got {cell_size}.")
        rows = max(1, math.ceil(self.length / cell_size - TOUCH_TOLERANCE))
        cols = max(1, math.ceil(self.width / cell_size - TOUCH_TOLERANCE))
        origin = self.anchor.offset(-self.rear_extent, cols * cell_size / 2, -math.pi / 2)
        return GridSpec(origin, cell_size, rows, cols)

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "width": self.width,
            "length": self.length,
            "sub_length": self.sub_length,
            "sub_width": self.sub_width,
            "rear_extent": self.rear_extent,
            "anchor": {"x": self.anchor.x, "y": self.anchor.y, "heading": self.anchor.heading},
        }
