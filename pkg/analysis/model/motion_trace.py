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
This module contains a data container for a two-vehicle relative motion trace.
"""

import logging
from dataclasses import dataclass

import numpy as np

from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MotionTrace:
    """
    Per step: the center-to-center distance between the AV and the other vehicle and the summary of the
    occupancy inside the AV's safety box window.
    """

    scenario_id: str
    times: tuple[float, ...]
    distances: tuple[float, ...]
    occupancy: tuple[float, ...]

    def __post_init__(self):
        for name in ("times", "distances", "occupancy"):
            object.__setattr__(self, name, tuple(float(v) for v in getattr(self, name)))
        if not len(self.times) == len(self.distances) == len(self.occupancy):
            logger.error("Motion trace %s has series of different lengths.", self.scenario_id)
            raise InvalidParameterError(f"Motion trace {self.scenario_id} has series of different lengths.")
        if np.any(np.diff(self.times) <= 0):
            logger.error("Motion trace %s is not in time order.", self.scenario_id)
            raise InvalidParameterError(f"Motion trace {self.scenario_id} is not in time order.")

    @property
    def relative_motion(self) -> np.ndarray:
        """Change of the center distance between consecutive steps."""
        return np.diff(np.array(self.distances))

    @property
    def occupancy_change(self) -> np.ndarray:
        """Change of the occupancy summary between consecutive steps."""
        return np.diff(np.array(self.occupancy))

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "id": self.scenario_id,
            "times": list(self.times),
            "distances": list(self.distances),
            "occupancy": list(self.occupancy),
        }
