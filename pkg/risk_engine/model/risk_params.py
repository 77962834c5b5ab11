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
This module contains the bundle of parameters the PORA evaluation needs.
"""

import logging
import math
from typing import Optional

from risk_engine.model.cox_params import CoxParams
from risk_engine.model.ssd_params import SsdParams
from utils.constants import DEFAULT_BETA, DEFAULT_CELL_SIZE, DEFAULT_DECEL_RATE, DEFAULT_REACTION_TIME, Falloff
from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class RiskParams:
    """
    A class representing the risk evaluation settings: Cox coefficient, stopping-sight-distance parameters,
    the AV-centered cell size and the spatial weighting between the sub-area and the safety box edge.
    """

    def __init__(
        self,
        cox: Optional[CoxParams] = None,
        ssd: Optional[SsdParams] = None,
        cell_size: float = DEFAULT_CELL_SIZE,
        falloff: Falloff = Falloff.LINEAR,
    ):
        if not math.isfinite(cell_size) or cell_size <= 0:
            logger.error("Risk cell size must be > 0, got %s.", cell_size)
            raise InvalidParameterError(f"Risk cell size must be > 0, got {cell_size}.")
        self.__cox: CoxParams = cox if cox is not None else CoxParams()
        self.__ssd: SsdParams = ssd if ssd is not None else SsdParams()
        self.__cell_size: float = float(cell_size)
        self.__falloff: Falloff = Falloff(falloff)

    @property
    def cox(self) -> CoxParams:
        """Getter of the Cox parameters."""
        return self.__cox

    @property
    def ssd(self) -> SsdParams:
        """Getter of the stopping-sight-distance parameters."""
        return self.__ssd

    @property
    def cell_size(self) -> float:
        """Getter of the AV-centered window cell size in meters."""
        return self.__cell_size

    @property
    def falloff(self) -> Falloff:
        """Getter of the spatial weighting between sub-area and box edge."""
        return self.__falloff

    def with_beta(self, beta: float) -> "RiskParams":
        """Copy of these parameters with another Cox coefficient."""
        return RiskParams(CoxParams(beta), self.__ssd, self.__cell_size, self.__falloff)

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "beta": self.__cox.beta,
            "reaction_time": self.__ssd.reaction_time,
            "decel_rate": self.__ssd.decel_rate,
            "cell_size": self.__cell_size,
            "falloff": self.__falloff.value,
        }

    @staticmethod
    def load_from_json(params_json: dict) -> Optional["RiskParams"]:
        """
        Load the parameters from a JSON object; missing keys take their defaults.

        @param params_json: The JSON object.
        @return: The parameters, or None when the object is malformed.
        """
        try:
            return RiskParams(
                CoxParams(float(params_json.get("beta", DEFAULT_BETA))),
                SsdParams(
                    float(params_json.get("reaction_time", DEFAULT_REACTION_TIME)),
                    float(params_json.get("decel_rate", DEFAULT_DECEL_RATE)),
                ),
                float(params_json.get("cell_size", DEFAULT_CELL_SIZE)),
                Falloff(params_json.get("falloff", Falloff.LINEAR.value)),
            )
        except (AttributeError, TypeError, ValueError, InvalidParameterError) as e:
            logger.error("The risk parameters JSON input is malformed: %s.", e, exc_info=True)
        return None

    def __eq__(self, other):
        return isinstance(other, RiskParams) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(tuple(self.to_dict().items()))

    def __repr__(self):
        return f"RiskParams({self.to_dict()})"
