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
This module contains the spatial algebra of occupancy grids: world/grid transforms, bilinear sampling
and rotated-window resampling.
"""

import logging

import numpy as np
from scipy import ndimage

from core_types.model.pose import Pose2
from grid.model.grid_spec import GridSpec
from grid.model.occupancy_grid import OccupancyGrid

logger = logging.getLogger(__name__)


def world_to_cell(spec: GridSpec, p: Pose2) -> tuple[float, float]:
    """
    Continuous grid coordinates of a world point. Integer parts index cells; points outside the grid
    yield coordinates outside [0, rows) x [0, cols).

    @param spec: The grid geometry.
    @param p: The world point (heading ignored).
    @return: (row, col).
    """
    rows, cols = world_to_cell_many(spec, np.array([p.x]), np.array([p.y]))
    return float(rows[0]), float(cols[0])


def world_to_cell_many(spec: GridSpec, xs: np.ndarray, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized world_to_cell."""
    c, s = spec.origin.unit
    dx, dy = np.asarray(xs) - spec.origin.x, np.asarray(ys) - spec.origin.y
    local_x = c * dx + s * dy
    local_y = -s * dx + c * dy
    return local_y / spec.cell_size, local_x / spec.cell_size


def cell_to_world(spec: GridSpec, row: float, col: float) -> Pose2:
    """
    World point of continuous grid coordinates; the exact inverse of world_to_cell.

    @param spec: The grid geometry.
    @param row: Continuous row coordinate.
    @param col: Continuous column coordinate.
    @return: The world pose, carrying the grid heading.
    """
    return spec.origin.offset(col * spec.cell_size, row * spec.cell_size)


def cell_center_to_world(spec: GridSpec, row: int, col: int) -> Pose2:
    """World pose of the center of cell (row, col)."""
    return cell_to_world(spec, row + 0.5, col + 0.5)


def sample_bilinear_many(g: OccupancyGrid, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """
    Bilinear interpolation between cell centers. Beyond the outer cell centers the field blends towards 0,
    and coordinates outside [0, rows) x [0, cols) read exactly 0 (unknown space is unoccupied).

    @param g: The source grid.
    @param rows: Continuous row coordinates.
    @param cols: Continuous column coordinates.
    @return: Sampled probabilities, same shape as the coordinates.
    """
    rows, cols = np.asarray(rows, dtype=float), np.asarray(cols, dtype=float)
    sampled = ndimage.map_coordinates(
        g.values,
        [rows - 0.5, cols - 0.5],
        order=1,
        mode="grid-constant",
        cval=0.0,
        prefilter=False,
    )
    inside = (rows >= 0) & (rows < g.spec.rows) & (cols >= 0) & (cols < g.spec.cols)
    return np.clip(np.where(inside, sampled, 0.0), 0.0, 1.0)


def sample_bilinear(g: OccupancyGrid, row: float, col: float) -> float:
    """
    Bilinear interpolation of the 4 surrounding cell values; outside the grid returns 0.

    @param g: The source grid.
    @param row: Continuous row coordinate.
    @param col: Continuous column coordinate.
    @return: The interpolated probability.
    """
    return float(sample_bilinear_many(g, np.array([row]), np.array([col]))[0])


def resample_window(src: OccupancyGrid, window: GridSpec) -> OccupancyGrid:
    """
    Translate, rotate, resample and trim a grid into another grid geometry. Every output cell takes the
    bilinear sample of the source at the output cell's world center.

    @param src: The source grid.
    @param window: The output geometry.
    @return: The resampled grid, stamped with the source timestamp.
    """
    xs, ys = window.cell_centers_world()
    rows, cols = world_to_cell_many(src.spec, xs, ys)
    return OccupancyGrid(window, src.t, sample_bilinear_many(src, rows, cols))


def grid_total_mass(g: OccupancyGrid) -> float:
    """
    Sum of all cell values.

    @param g: The grid.
    @return: The total occupancy mass in cell units.
    """
    return float(np.sum(g.values))
