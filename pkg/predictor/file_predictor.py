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
This module contains the file-backed predictor, which serves pre-computed grids (for example the output of a
learned heatmap generator) through the same interface as the analytic predictor.
"""

import logging
import os
from typing import Optional, Protocol, Sequence

from core_types.model.agent_state import AgentState
from grid.grid_io import GRID_FILE_EXTENSIONS, read_grid
from grid.model.grid_spec import GridSpec
from grid.model.occupancy_grid import OccupancyGrid
from utils.constants import TIMESTAMP_TOLERANCE
from utils.exceptions import GridFormatError, TimestepOrderError

logger = logging.getLogger(__name__)


class OccupancyPredictor(Protocol):  # pylint: disable=too-few-public-methods
    """Anything that turns current agent states into future occupancy grids."""

    def predict(self, agents: Sequence[AgentState], spec: GridSpec, t0: float = 0.0) -> list[OccupancyGrid]:
        """Predict future grids for the given states."""


def load_grid_directory(directory: str) -> list[OccupancyGrid]:
    """
    Read every grid file of a directory, one file per timestep, ordered by timestamp.

    @param directory: Directory holding `.csv` or `.json` grid files.
    @return: The grids in time order.
    @raise GridFormatError: When the directory is missing, empty or holds a malformed file.
    @raise TimestepOrderError: When two files carry the same timestamp.
    """
    if not os.path.isdir(directory):
        logger.error("Grid directory not found: `%s`.", directory)
        raise GridFormatError(f"Grid directory not found: {directory}.")

    names = sorted(n for n in os.listdir(directory) if os.path.splitext(n)[1].lower() in GRID_FILE_EXTENSIONS)
    if not names:
        logger.error("Grid directory `%s` holds no grid files.", directory)
        raise GridFormatError(f"Grid directory {directory} holds no grid files.")

    grids = sorted((read_grid(os.path.join(directory, n)) for n in names), key=lambda g: g.t)
    for previous, current in zip(grids, grids[1:]):
        if current.t - previous.t <= TIMESTAMP_TOLERANCE:
            logger.error("Duplicate grid timestamp %s in `%s`.", current.t, directory)
            raise TimestepOrderError(f"Duplicate grid timestamp {current.t} in {directory}.")
    logger.debug("Loaded %s grids from `%s`.", len(grids), directory)
    return grids


class FileGridPredictor:
    """
    Predictor serving grids read from a directory. The agent states are not used; the files are the prediction.
    """

    def __init__(self, directory: str):
        self.__directory: str = directory
        self.__grids: Optional[list[OccupancyGrid]] = None

    @property
    def directory(self) -> str:
        """Getter of the grid directory."""
        return self.__directory

    @property
    def grids(self) -> list[OccupancyGrid]:
        """Getter of all loaded grids, read lazily on first use."""
        if self.__grids is None:
            self.__grids = load_grid_directory(self.__directory)
        return self.__grids

    def predict(  # pylint: disable=unused-argument
        self, agents: Sequence[AgentState], spec: GridSpec, t0: float = 0.0
    ) -> list[OccupancyGrid]:
        """
        Grids stamped after t0.

        @param agents: Ignored.
        @param spec: Ignored; files carry their own geometry.
        @param t0: Current time.
        @return: The stored grids with t > t0.
        """
        return [g for g in self.grids if g.t > t0 + TIMESTAMP_TOLERANCE]
