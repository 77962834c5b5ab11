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
This module contains the result container of the time-to-collision measures.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TtcResult:
    """
    Time to collision in seconds for a pair of participants; value None means no predicted collision.
    """

    value: Optional[float]
    pair: Optional[tuple[str, str]] = None

    def __post_init__(self):
        if self.value is not None and (not math.isfinite(self.value) or self.value <= 0):
            logger.error("Time to collision must be > 0 when present, got %s.", self.value)
            raise InvalidParameterError(f"Time to collision must be > 0 when present, got {self.value}.")

    @property
    def found(self) -> bool:
        """True when a collision is predicted."""
        return self.value is not None

    @staticmethod
    def none(pair: Optional[tuple[str, str]] = None) -> "TtcResult":
        """A result without predicted collision."""
        return TtcResult(None, pair)

    def below(self, threshold: float) -> bool:
        """True when a collision is predicted sooner than the threshold."""
        return self.value is not None and self.value < threshold
