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
This module contains a data container for the Cox dynamic-adjustment coefficient.
"""

import logging
import math

from utils.constants import DEFAULT_BETA
from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class CoxParams:
    """
    The hazard coefficient beta applied to the occupancy change (exponent beta * delta_p).
    """

    def __init__(self, beta: float = DEFAULT_BETA):
        if not math.isfinite(beta) or beta < 0:
            logger.error("Cox beta must be >= 0, got %s.", beta)
            raise InvalidParameterError(f"Cox beta must be >= 0, got {beta}.")
        self.__beta: float = float(beta)

    @property
    def beta(self) -> float:
        """Getter of beta."""
        return self.__beta

    def __eq__(self, other):
        return isinstance(other, CoxParams) and self.__beta == other.beta

    def __hash__(self):
        return hash(self.__beta)

    def __repr__(self):
        return f"CoxParams(beta={self.__beta})"
