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
This module contains a data container for a scenario with a labeled collision time and its PORA traces
over a grid of Cox coefficients.
"""

import logging
import math
from typing import Sequence

import numpy as np

from utils.constants import TIMESTAMP_TOLERANCE
from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class LabeledScenario:
    """
    A class representing one labeled scenario: the per-step PORA scores of its planned trajectory, one trace
    per Cox coefficient, and the time at which the collision happened.
    """

    def __init__(
        self,
        scenario_id: str,
        beta_grid: Sequence[float],
        times: Sequence[float],
        risk: Sequence[Sequence[float]],
        collision_time: float,
    ):
        grid = np.array(beta_grid, dtype=float)
        steps = np.array(times, dtype=float)
        values = np.array(risk, dtype=float)

        errors = []
        if grid.ndim != 1 or grid.size == 0 or not np.all(np.isfinite(grid)) or np.any(grid < 0):
            errors.append("the beta grid must be a non-empty list of finite values >= 0")
        elif np.any(np.diff(grid) <= 0):
            errors.append("the beta grid must be strictly increasing")
        if steps.ndim != 1 or steps.size == 0 or np.any(np.diff(steps) <= 0):
            errors.append("step times must be a non-empty, strictly increasing list")
        if values.shape != (grid.size, steps.size):
            errors.append(f"risk traces have shape {values.shape}, expected {(grid.size, steps.size)}")
        elif not np.all((values >= 0) & (values <= 1)):
            errors.append("risk values must lie in [0, 1]")
        within = steps.ndim == 1 and steps.size > 0 and steps[0] - TIMESTAMP_TOLERANCE <= collision_time
        if not math.isfinite(collision_time) or not within or collision_time > steps[-1] + TIMESTAMP_TOLERANCE:
            errors.append(f"collision time {collision_time} lies outside the trajectory horizon")
        if errors:
            for error in errors:
                logger.error("Invalid labeled scenario %s: %s.", scenario_id, error)
            raise InvalidParameterError("; ".join(errors))

        for array in (grid, steps, values):
            array.setflags(write=False)
        self.__scenario_id: str = scenario_id
        self.__beta_grid: np.ndarray = grid
        self.__times: np.ndarray = steps
        self.__risk: np.ndarray = values
        self.__collision_time: float = float(collision_time)
        self.__collision_index: int = int(np.argmin(np.abs(steps - collision_time)))

    @property
    def scenario_id(self) -> str:
        """Getter of the scenario identifier."""
        return self.__scenario_id

    @property
    def beta_grid(self) -> np.ndarray:
        """Getter of the Cox coefficients, ascending."""
        return self.__beta_grid

    @property
    def times(self) -> np.ndarray:
        """Getter of the step timestamps."""
        return self.__times

    @property
    def risk(self) -> np.ndarray:
        """Getter of the traces, one row per Cox coefficient."""
        return self.__risk

    @property
    def collision_time(self) -> float:
        """Getter of the labeled collision time."""
        return self.__collision_time

    @property
    def collision_index(self) -> int:
        """Getter of the step closest to the collision time."""
        return self.__collision_index

    def risk_at_collision(self, beta_index: int) -> float:
        """Risk at the collision step for one Cox coefficient."""
        return float(self.__risk[beta_index, self.__collision_index])

    def violation(self, beta_index: int) -> float:
        """
        How far the trace of one Cox coefficient is from peaking at the collision step.

        @param beta_index: Index into the beta grid.
        @return: Sum over steps of the excess of the step risk over the collision-step risk; 0 when the
        collision step holds the trace maximum.
        """
        trace = self.__risk[beta_index]
        return float(np.sum(np.maximum(0.0, trace - trace[self.__collision_index])))

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "id": self.__scenario_id,
            "beta_grid": self.__beta_grid.tolist(),
            "times": self.__times.tolist(),
            "risk": self.__risk.tolist(),
            "collision_time": self.__collision_time,
        }

    @staticmethod
    def from_dict(scenario_json: dict) -> "LabeledScenario":
        """Inverse of to_dict; raises KeyError, TypeError, ValueError or InvalidParameterError on malformed input."""
        return LabeledScenario(
            str(scenario_json["id"]),
            scenario_json["beta_grid"],
            scenario_json["times"],
            scenario_json["risk"],
            float(scenario_json["collision_time"]),
        )

    def __repr__(self):
        return (
            f"LabeledScenario(id={self.__scenario_id}, steps={self.__times.size}, "
            f"betas={self.__beta_grid.size}, collision_time={self.__collision_time})"
        )
