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
This module contains the conditional collision probability P(C|O) over the safety-box window.

Cells inside the sub-area carry 1, cells outside the safety box carry 0, and in between the value falls off
with the cell center's normalized distance from the sub-area edge to the box edge. The distance is normalized
per axis and the two axes are combined by their maximum.
"""

import logging
from functools import lru_cache

import numpy as np

from grid.model.grid_spec import GridSpec
from risk_engine.model.safety_box import SafetyBox
from utils.constants import TOUCH_TOLERANCE, Falloff
from utils.exceptions import WindowMismatchError

logger = logging.getLogger(__name__)


def _axis_distance(offset: np.ndarray, inner: float, outer: float) -> np.ndarray:
    """Normalized distance beyond the inner edge (0 at inner, 1 at outer) for non-negative offsets."""
    span = outer - inner
    if span <= TOUCH_TOLERANCE:
        return np.where(offset > inner + TOUCH_TOLERANCE, 1.0, 0.0)
    return np.clip((offset - inner) / span, 0.0, None)


@lru_cache(maxsize=256)
def _cached_map(  # pylint: disable=too-many-arguments,too-many-positional-arguments
    length: float,
    width: float,
    sub_length: float,
    sub_width: float,
    rear_extent: float,
    cell_size: float,
    rows: int,
    cols: int,
    falloff: Falloff,
) -> np.ndarray:
    front_extent = length - rear_extent
    forward = -rear_extent + (np.arange(rows) + 0.5) * cell_size
    left = cols * cell_size / 2 - (np.arange(cols) + 0.5) * cell_size
    forward, left = np.meshgrid(forward, left, indexing="ij")

    ahead = _axis_distance(forward, sub_length / 2, front_extent)
    behind = _axis_distance(-forward, sub_length / 2, rear_extent)
    d_forward = np.where(forward >= 0, ahead, behind)
    d_lateral = _axis_distance(np.abs(left), sub_width / 2, width / 2)
    distance = np.maximum(d_forward, d_lateral)

    weight = 1.0 - distance if falloff is Falloff.LINEAR else 1.0 - distance * distance
    inside_box = (
        (forward >= -rear_extent - TOUCH_TOLERANCE)
        & (forward <= front_extent + TOUCH_TOLERANCE)
        & (np.abs(left) <= width / 2 + TOUCH_TOLERANCE)
    )
    values = np.clip(np.where(inside_box, weight, 0.0), 0.0, 1.0)
    values.setflags(write=False)
    return values


def collision_map(box: SafetyBox, cell_size: float, falloff: Falloff = Falloff.LINEAR) -> np.ndarray:
    """
    P(C|O) for every cell of the box window. The field depends on the box dimensions only, so it is memoised.

    @param box: The safety box.
    @param cell_size: Window cell edge in meters.
    @param falloff: Linear (1 - d) or quadratic (1 - d^2) weighting.
    @return: A read-only rows x cols array in [0, 1].
    """
    rows, cols = box.window_spec(cell_size).shape
    return _cached_map(
        box.length, box.width, box.sub_length, box.sub_width, box.rear_extent, cell_size, rows, cols, Falloff(falloff)
    )


def clear_collision_map_cache() -> None:
    """Drop the memoised collision maps."""
    _cached_map.cache_clear()


def collision_given_occupancy(box: SafetyBox, spec: GridSpec, falloff: Falloff = Falloff.LINEAR) -> np.ndarray:
    """
    P(C|O) over a window, checking that the window is the one the box defines.

    @param box: The safety box.
    @param spec: The window geometry.
    @param falloff: Linear or quadratic weighting.
    @return: The per-cell conditional collision probability.
    @raise WindowMismatchError: When the spec is not the box window.
    """
    expected = box.window_spec(spec.cell_size)
    if not spec.matches(expected, tolerance=1e-6):
        logger.error("Window %s does not match the safety box window %s.", spec, expected)
        raise WindowMismatchError("The grid window does not match the safety box.")
    return collision_map(box, spec.cell_size, falloff)
