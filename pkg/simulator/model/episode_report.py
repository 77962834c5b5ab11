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
This module contains the per-episode report of the simulator.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from utils.constants import Metric, Outcome, ScenarioFamily
from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)

Trace = tuple[tuple[float, float], ...]
TtcTrace = tuple[tuple[float, Optional[float]], ...]
TrajectoryRow = tuple[float, str, str, float, float, float, float, float, float, float, float]


@dataclass(frozen=True)
class EpisodeReport:  # pylint: disable=too-many-instance-attributes
    """
    Outcome and traces of one simulated episode. Conflicts and collisions are counted independently; the
    trajectory rows are kept only when recording was requested and are not part of the JSON form.
    """

    seed: int
    family: ScenarioFamily
    metric: Metric
    outcome: Outcome
    conflicts: int
    collisions: int
    travel_time: float
    metric_trace: Trace = ()
    reward_trace: Trace = ()
    ttc2_trace: TtcTrace = ()
    shadow_traces: dict[str, Trace] = field(default_factory=dict)
    crash_time: Optional[float] = None
    av_penetration: float = 0.0
    trajectory: tuple[TrajectoryRow, ...] = field(default=(), repr=False)

    def __post_init__(self):
        if self.conflicts < 0 or self.collisions < 0:
            logger.error("Episode %s has negative event counts.", self.seed)
            raise InvalidParameterError(f"Episode {self.seed} has negative event counts.")
        if self.outcome is Outcome.CRASH and self.collisions < 1:
            logger.error("Crash episode %s records no collision.", self.seed)
            raise InvalidParameterError(f"Crash episode {self.seed} records no collision.")

    @property
    def crashed(self) -> bool:
        """True for a crash outcome."""
        return self.outcome is Outcome.CRASH

    @property
    def episode_return(self) -> float:
        """Sum of the per-tick rewards."""
        return float(sum(r for _, r in self.reward_trace))

    def metric_values(self) -> list[float]:
        """The driving metric values in tick order."""
        return [v for _, v in self.metric_trace]

    def trace_values(self, metric: Metric) -> list[float]:
        """
        Values of a metric over the episode, whether it drove the controller or was evaluated alongside.

        @param metric: The metric.
        @return: The values in tick order, empty when the metric was not recorded.
        """
        if metric is self.metric:
            return self.metric_values()
        return [v for _, v in self.shadow_traces.get(metric.value, ())]

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "seed": self.seed,
            "family": self.family.value,
            "metric": self.metric.value,
            "outcome": self.outcome.value,
            "conflicts": self.conflicts,
            "collisions": self.collisions,
            "travel_time": self.travel_time,
            "episode_return": self.episode_return,
            "crash_time": self.crash_time,
            "av_penetration": self.av_penetration,
            "metric_trace": [list(p) for p in self.metric_trace],
            "reward_trace": [list(p) for p in self.reward_trace],
            "ttc2_trace": [list(p) for p in self.ttc2_trace],
            "shadow_traces": {name: [list(p) for p in trace] for name, trace in sorted(self.shadow_traces.items())},
        }
