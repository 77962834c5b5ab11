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
This module contains the aggregate summary of a batch of episodes.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from simulator.model.episode_report import EpisodeReport
from utils.exceptions import EmptySampleError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BatchSummary:
    """Batch statistics; every field is recomputable from the episode reports."""

    episodes: int
    avg_episode_conflicts: float
    collisions_per_100: float
    avg_return: float
    min_return: float
    crash_rate: float

    @staticmethod
    def from_reports(reports: Sequence[EpisodeReport]) -> "BatchSummary":
        """
        Aggregate episode reports.

        @param reports: At least one report.
        @return: The summary.
        @raise EmptySampleError: When no report is given.
        """
        if not reports:
            logger.error("Cannot summarize an empty batch.")
            raise EmptySampleError("Cannot summarize an empty batch.")
        n = len(reports)
        returns = np.array([r.episode_return for r in reports], dtype=float)
        return BatchSummary(
            episodes=n,
            avg_episode_conflicts=float(sum(r.conflicts for r in reports)) / n,
            collisions_per_100=100.0 * sum(r.collisions for r in reports) / n,
            avg_return=float(np.mean(returns)),
            min_return=float(np.min(returns)),
            crash_rate=sum(1 for r in reports if r.crashed) / n,
        )

    def to_dict(self) -> dict:
        """Serializable form."""
        return asdict(self)
