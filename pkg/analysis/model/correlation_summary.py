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
This module contains the data containers of the occupancy-change versus relative-motion correlation study.
"""

import logging
from dataclasses import asdict, dataclass

import pandas as pd

from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)

CORRELATION_COLUMNS = ["scenario_id", "n", "pearson", "spearman", "kendall"]
AGGREGATE_ROW_ID = "aggregate"
COEFFICIENT_TOLERANCE = 1e-9


def _check_coefficients(owner: str, *coefficients: float) -> None:
    if any(not -1.0 - COEFFICIENT_TOLERANCE <= c <= 1.0 + COEFFICIENT_TOLERANCE for c in coefficients):
        logger.error("Correlation coefficients of %s lie outside [-1, 1]: %s.", owner, coefficients)
        raise InvalidParameterError(f"Correlation coefficients of {owner} lie outside [-1, 1].")


@dataclass(frozen=True)
class ScenarioCorrelation:
    """Coefficients of one scenario over its n consecutive-step pairs."""

    scenario_id: str
    n: int
    pearson: float
    spearman: float
    kendall: float

    def __post_init__(self):
        _check_coefficients(self.scenario_id, self.pearson, self.spearman, self.kendall)


@dataclass(frozen=True)
class CorrelationSummary:
    """
    Per-scenario coefficients and their scenario-weighted aggregate. Scenarios left out of the study (too short
    or without variation) are listed in excluded.
    """

    per_scenario: tuple[ScenarioCorrelation, ...]
    pearson: float
    spearman: float
    kendall: float
    excluded: tuple[str, ...] = ()

    def __post_init__(self):
        _check_coefficients(AGGREGATE_ROW_ID, self.pearson, self.spearman, self.kendall)

    @property
    def aggregate(self) -> tuple[float, float, float]:
        """Getter of the aggregate (pearson, spearman, kendall)."""
        return self.pearson, self.spearman, self.kendall

    def to_frame(self) -> pd.DataFrame:
        """One row per scenario followed by the aggregate row."""
        rows = [asdict(c) for c in self.per_scenario]
        rows.append(
            {
                "scenario_id": AGGREGATE_ROW_ID,
                "n": sum(c.n for c in self.per_scenario),
                "pearson": self.pearson,
                "spearman": self.spearman,
                "kendall": self.kendall,
            }
        )
        return pd.DataFrame(rows, columns=CORRELATION_COLUMNS)

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "per_scenario": [asdict(c) for c in self.per_scenario],
            "aggregate": {"pearson": self.pearson, "spearman": self.spearman, "kendall": self.kendall},
            "excluded": list(self.excluded),
        }
