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
This module contains a data container for the stopping-sight-distance parameters.
"""

import logging
import math

from utils.constants import DEFAULT_DECEL_RATE, DEFAULT_REACTION_TIME
from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class SsdParams:
    """
    Perception-reaction time (s) and design deceleration rate (m/s^2).
    """

    def __init__(self, reaction_time: float = DEFAULT_REACTION_TIME, decel_rate: float = DEFAULT_DECEL_RATE):
        if not math.isfinite(reaction_time) or reaction_time < 0:
            logger.error("Reaction time must be >= 0, got %s.", reaction_time)
            raise InvalidParameterError(f"Reaction time must be >= 0, got {reaction_time}.")
        if not math.isfinite(decel_rate) or decel_rate <= 0:
            logger.error("Deceleration rate must be > 0, got %s.", decel_rate)
            raise InvalidParameterError(f"Deceleration rate must be > 0, got {decel_rate}.")
        self.__reaction_time: float = float(reaction_time)
        self.__decel_rate: float = float(decel_rate)

    @property
    def reaction_time(self) -> float:
        """Getter of the perception-reaction time in seconds."""
        return self.__reaction_time

    @property
    def decel_rate(self) -> float:
        """Getter of the deceleration rate in m/s^2."""
        return self.__decel_rate

    def to_dict(self) -> dict:
        """Serializable form."""
        return {"reaction_time": self.__reaction_time, "decel_rate": self.__decel_rate}

    def __eq__(self, other):
        return isinstance(other, SsdParams) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.__reaction_time, self.__decel_rate))

    def __repr__(self):
        return f"SsdParams(reaction_time={self.__reaction_time}, decel_rate={self.__decel_rate})"
