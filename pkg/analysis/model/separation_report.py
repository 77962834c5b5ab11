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
This module contains a data container for the separation of safe and crash metric distributions.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import pandas as pd

from utils.constants import KlDirection
from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)

SEPARATION_COLUMNS = ["bin_lo", "bin_hi", "safe", "crash"]


@dataclass(frozen=True)
class SeparationReport:  # pylint: disable=too-many-instance-attributes
    """
    Smoothed, normalized histograms of the safe and crash samples over [0, 1], their KL divergence in nats
    and the threshold suggestions read off the histograms.
    """

    bin_edges: tuple[float, ...]
    safe_hist: tuple[float, ...]
    crash_hist: tuple[float, ...]
    kl: float
    direction: KlDirection = KlDirection.CRASH_SAFE
    proceed_below: Optional[float] = None
    brake_above: Optional[float] = None
    safe_samples: int = 0
    crash_samples: int = 0

    def __post_init__(self):
        bins = len(self.bin_edges) - 1
        if bins < 1 or len(self.safe_hist) != bins or len(self.crash_hist) != bins:
            logger.error("Separation histograms do not match %s bin edges.", len(self.bin_edges))
            raise InvalidParameterError("Separation histograms do not match their bin edges.")
        if self.kl < 0:
            logger.error("KL divergence must be >= 0, got %s.", self.kl)
            raise InvalidParameterError(f"KL divergence must be >= 0, got {self.kl}.")

    @property
    def bins(self) -> int:
        """Getter of the bin count."""
        return len(self.bin_edges) - 1

    def to_frame(self) -> pd.DataFrame:
        """One row per bin with both densities."""
        return pd.DataFrame(
            {
                "bin_lo": self.bin_edges[:-1],
                "bin_hi": self.bin_edges[1:],
                "safe": self.safe_hist,
                "crash": self.crash_hist,
            },
            columns=SEPARATION_COLUMNS,
        )

    def to_dict(self) -> dict:
        """Serializable form, histograms excluded."""
        return {
            "kl": self.kl,
            "direction": self.direction.value,
            "bins": self.bins,
            "proceed_below": self.proceed_below,
            "brake_above": self.brake_above,
            "safe_samples": self.safe_samples,
            "crash_samples": self.crash_samples,
        }
