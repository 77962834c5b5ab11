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
This module contains a data container for the occupancy predictor configuration.
"""

import logging
import math
from typing import Optional

import numpy as np

from utils.constants import (
    DEFAULT_HORIZON_STEPS,
    DEFAULT_POSITION_SIGMA0,
    DEFAULT_SIGMA_GROWTH,
    DEFAULT_STEP_DT,
    MotionModel,
)
from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class PredictorConfig:
    """
    A class representing the analytic predictor settings: horizon, step spacing, uncertainty growth,
    motion model and an optional drivable-area mask.
    """

    def __init__(
        self,
        horizon_steps: int = DEFAULT_HORIZON_STEPS,
        step_dt: float = DEFAULT_STEP_DT,
        position_sigma0: float = DEFAULT_POSITION_SIGMA0,
        sigma_growth: float = DEFAULT_SIGMA_GROWTH,
        motion_model: MotionModel = MotionModel.CONSTANT_VELOCITY,
        drivable_mask: Optional[np.ndarray] = None,
    ):
        errors = []
        if int(horizon_steps) != horizon_steps or horizon_steps < 1:
            errors.append(f"horizon_steps must be an integer >= 1, got {horizon_steps}")
        if not math.isfinite(step_dt) or step_dt <= 0:
            errors.append(f"step_dt must be > 0, got {step_dt}")
        if not math.isfinite(position_sigma0) or position_sigma0 < 0:
            errors.append(f"position_sigma0 must be >= 0, got {position_sigma0}")
        if not math.isfinite(sigma_growth) or sigma_growth < 0:
            errors.append(f"sigma_growth must be >= 0, got {sigma_growth}")
        if errors:
            for error in errors:
                logger.error("Invalid predictor configuration: %s.", error)
            raise InvalidParameterError("; ".join(errors))

        self.__horizon_steps: int = int(horizon_steps)
        self.__step_dt: float = float(step_dt)
        self.__position_sigma0: float = float(position_sigma0)
        self.__sigma_growth: float = float(sigma_growth)
        self.__motion_model: MotionModel = MotionModel(motion_model)
        self.__drivable_mask: Optional[np.ndarray] = None
        if drivable_mask is not None:
            mask = np.array(drivable_mask, dtype=bool)
            mask.setflags(write=False)
            self.__drivable_mask = mask

    @property
    def horizon_steps(self) -> int:
        """Getter of K, the number of predicted steps."""
        return self.__horizon_steps

    @property
    def step_dt(self) -> float:
        """Getter of the spacing between predicted steps in seconds."""
        return self.__step_dt

    @property
    def position_sigma0(self) -> float:
        """Getter of the initial position uncertainty in meters."""
        return self.__position_sigma0

    @property
    def sigma_growth(self) -> float:
        """Getter of the uncertainty growth rate in meters per second."""
        return self.__sigma_growth

    @property
    def motion_model(self) -> MotionModel:
        """Getter of the motion model."""
        return self.__motion_model

    @property
    def drivable_mask(self) -> Optional[np.ndarray]:
        """Getter of the optional drivable-area mask (True where vehicles may be)."""
        return self.__drivable_mask

    def step_times(self) -> list[float]:
        """Prediction offsets tau_k = k * step_dt for k = 1..K."""
        return [k * self.__step_dt for k in range(1, self.__horizon_steps + 1)]

    def to_dict(self) -> dict:
        """Serializable form (the mask is reported by presence only)."""
        return {
            "horizon_steps": self.__horizon_steps,
            "step_dt": self.__step_dt,
            "position_sigma0": self.__position_sigma0,
            "sigma_growth": self.__sigma_growth,
            "motion_model": self.__motion_model.value,
            "drivable_mask": self.__drivable_mask is not None,
        }

    @staticmethod
    def load_from_json(config_json: dict) -> Optional["PredictorConfig"]:
        """
        Load the configuration from a JSON object.

        @param config_json: The JSON object with the predictor settings.
        @return: The configuration, or None when the object is malformed.
        """
        try:
            return PredictorConfig(
                horizon_steps=config_json.get("horizon_steps", DEFAULT_HORIZON_STEPS),
                step_dt=float(config_json.get("step_dt", DEFAULT_STEP_DT)),
                position_sigma0=float(config_json.get("position_sigma0", DEFAULT_POSITION_SIGMA0)),
                sigma_growth=float(config_json.get("sigma_growth", DEFAULT_SIGMA_GROWTH)),
                motion_model=MotionModel(config_json.get("motion_model", MotionModel.CONSTANT_VELOCITY.value)),
            )
        except (AttributeError, TypeError, ValueError, InvalidParameterError) as e:
            logger.error("The predictor JSON input is malformed: %s.", e, exc_info=True)
        return None

    def __repr__(self):
        return (
            f"PredictorConfig(horizon_steps={self.__horizon_steps}, step_dt={self.__step_dt}, "
            f"position_sigma0={self.__position_sigma0}, sigma_growth={self.__sigma_growth}, "
            f"motion_model={self.__motion_model.value})"
        )
