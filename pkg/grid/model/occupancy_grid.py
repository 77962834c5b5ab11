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
This module contains a data container for a timestamped occupancy probability field.
"""

import logging

import numpy as np

from grid.model.grid_spec import GridSpec
from utils.exceptions import InvalidGridError

logger = logging.getLogger(__name__)


class OccupancyGrid:
    """
    Probabilities that each cell is occupied by any participant at time t. Values are read-only after construction.
    """

    def __init__(self, spec: GridSpec, t: float, values: np.ndarray):
        array = np.array(values, dtype=float)
        if array.shape != spec.shape:
            logger.error("Grid values have shape %s, spec expects %s.", array.shape, spec.shape)
            raise InvalidGridError(f"Grid values have shape {array.shape}, expected {spec.shape}.")
        if not np.all(np.isfinite(array)):
            logger.error("Grid values at t=%s contain non-finite entries.", t)
            raise InvalidGridError("Grid values must be finite.")
        if array.size and (array.min() < 0.0 or array.max() > 1.0):
            logger.error("Grid values at t=%s leave [0, 1]: min=%s, max=%s.", t, array.min(), array.max())
            raise InvalidGridError("Grid values must lie in [0, 1].")
        array.setflags(write=False)

        self.__spec: GridSpec = spec
        self.__t: float = float(t)
        self.__values: np.ndarray = array

    @property
    def spec(self) -> GridSpec:
        """Getter of the grid geometry."""
        return self.__spec

    @property
    def t(self) -> float:
        """Getter of the prediction timestamp."""
        return self.__t

    @property
    def values(self) -> np.ndarray:
        """Getter of the read-only rows x cols probabilities."""
        return self.__values

    @staticmethod
    def zeros(spec: GridSpec, t: float = 0.0) -> "OccupancyGrid":
        """An all-zero grid."""
        return OccupancyGrid(spec, t, np.zeros(spec.shape))

    def __repr__(self):
        return f"OccupancyGrid(t={self.__t}, shape={self.__spec.shape}, cell_size={self.__spec.cell_size})"
