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
This module contains the geometric operations shared by the risk engine, the surrogates and the simulator:
oriented-box overlap (separating axes) and speed conversion.
"""

import logging
import math

import numpy as np

from core_types.model.oriented_box import OrientedBox
from core_types.model.pose import Velocity2
from utils.constants import TOUCH_TOLERANCE

logger = logging.getLogger(__name__)


def box_corners(box: OrientedBox) -> np.ndarray:
    """
    World corners of a box, counterclockwise starting at the front-left corner.

    @param box: The box.
    @return: A 4x2 array.
    """
    return box.corners()


def obb_overlap_many(
    centers_a: np.ndarray,
    headings_a: np.ndarray,
    half_a: np.ndarray,
    centers_b: np.ndarray,
    headings_b: np.ndarray,
    half_b: np.ndarray,
) -> np.ndarray:
    """
    Separating-axis test over the 4 candidate axes for arrays of box pairs.
    Arrays broadcast against each other along the leading dimension.

    @param centers_a: (N, 2) centers of the first boxes.
    @param headings_a: (N,) headings of the first boxes.
    @param half_a: (N, 2) half (length, width) of the first boxes.
    @param centers_b: (N, 2) centers of the second boxes.
    @param headings_b: (N,) headings of the second boxes.
    @param half_b: (N, 2) half (length, width) of the second boxes.
    @return: (N,) booleans, True where the closed rectangles intersect (touching included).
    """
    centers_a, centers_b = np.atleast_2d(centers_a), np.atleast_2d(centers_b)
    half_a, half_b = np.atleast_2d(half_a), np.atleast_2d(half_b)
    headings_a, headings_b = np.atleast_1d(headings_a), np.atleast_1d(headings_b)

    # (N, 2, 2): rows are the box's own axes (along, across)
    def axes(headings: np.ndarray) -> np.ndarray:
        c, s = np.cos(headings), np.sin(headings)
        return np.stack([np.stack([c, s], axis=-1), np.stack([-s, c], axis=-1)], axis=-2)

    axes_a, axes_b = axes(headings_a), axes(headings_b)
    delta = centers_b - centers_a
    separated = np.zeros(np.broadcast_shapes(delta.shape[:-1], headings_a.shape, headings_b.shape), dtype=bool)

    for candidates in (axes_a, axes_b):
        for k in range(2):
            axis = candidates[..., k, :]
            radius_a = half_a[..., 0] * np.abs(np.sum(axis * axes_a[..., 0, :], axis=-1)) + half_a[..., 1] * np.abs(
                np.sum(axis * axes_a[..., 1, :], axis=-1)
            )
            radius_b = half_b[..., 0] * np.abs(np.sum(axis * axes_b[..., 0, :], axis=-1)) + half_b[..., 1] * np.abs(
                np.sum(axis * axes_b[..., 1, :], axis=-1)
            )
            distance = np.abs(np.sum(delta * axis, axis=-1))
            separated |= distance > radius_a + radius_b + TOUCH_TOLERANCE

    return ~separated


def obb_overlap(a: OrientedBox, b: OrientedBox) -> bool:
    """
    Check whether two closed oriented rectangles intersect. Touching boxes count as overlapping.

    @param a: First box.
    @param b: Second box.
    @return: True iff the rectangles intersect.
    """
    result = obb_overlap_many(
        np.array([[a.center.x, a.center.y]]),
        np.array([a.center.heading]),
        np.array([[a.half_length, a.half_width]]),
        np.array([[b.center.x, b.center.y]]),
        np.array([b.center.heading]),
        np.array([[b.half_length, b.half_width]]),
    )
    return bool(result[0])


def speed_kmh(v: Velocity2) -> float:
    """
    Speed magnitude in km/h.

    @param v: Velocity in m/s.
    @return: 3.6 * |v|.
    """
    return 3.6 * math.hypot(v.vx, v.vy)
