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
This module contains the batch runner of independent episodes and the penetration sweep table.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Mapping, Optional, Sequence

import pandas as pd

from predictor.model.predictor_config import PredictorConfig
from risk_engine.model.risk_params import RiskParams
from simulator.episode import run_episode
from simulator.model.batch_summary import BatchSummary
from simulator.model.controller_policy import ControllerPolicy, RewardWeights
from simulator.model.episode_report import EpisodeReport
from simulator.model.scenario_spec import ScenarioSpec
from utils.constants import Metric
from utils.exceptions import EmptySampleError, InvalidParameterError

logger = logging.getLogger(__name__)

PENETRATION_COLUMNS = ["level", "episodes", "avg_conflicts", "collisions_per_100", "avg_return", "min_return"]


def run_batch(  # pylint: disable=too-many-arguments,too-many-positional-arguments
    specs: Sequence[ScenarioSpec],
    metric: Metric = Metric.PORA,
    policy: Optional[ControllerPolicy] = None,
    risk_params: Optional[RiskParams] = None,
    predictor_config: Optional[PredictorConfig] = None,
    weights: Optional[RewardWeights] = None,
    shadow_metrics: Sequence[Metric] = (),
    workers: int = 1,
) -> tuple[list[EpisodeReport], BatchSummary]:
    """
    Run independent episodes, in worker processes when more than one worker is requested. Reports come back
    in input order and do not depend on the worker count.

    @param specs: At least one scenario.
    @param metric: The metric driving the controlled vehicles.
    @param policy: The threshold policy.
    @param risk_params: Risk parameters.
    @param predictor_config: Occupancy predictor settings.
    @param weights: Reward weights.
    @param shadow_metrics: Metrics evaluated alongside for the ego.
    @param workers: Number of worker processes.
    @return: The reports and their summary.
    @raise EmptySampleError: When no scenario is given.
    @raise InvalidParameterError: When the worker count is below 1.
    """
    if not specs:
        logger.error("A batch needs at least one scenario.")
        raise EmptySampleError("A batch needs at least one scenario.")
    if workers < 1:
        logger.error("Worker count must be >= 1, got %s.", workers)
        raise InvalidParameterError(f"Worker count must be >= 1, got {workers}.")

    episode = partial(
        run_episode,
        metric=metric,
        policy=policy,
        risk_params=risk_params,
        predictor_config=predictor_config,
        weights=weights,
        shadow_metrics=tuple(shadow_metrics),
    )
    logger.info("Batch of %s episodes (%s, %s workers) - started.", len(specs), metric.value, workers)
    if workers == 1:
        reports = [episode(spec) for spec in specs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            reports = list(executor.map(episode, specs))
    summary = BatchSummary.from_reports(reports)
    logger.info("Batch of %s episodes - finished: %s collisions per 100.", len(specs), summary.collisions_per_100)
    return reports, summary


def group_by_penetration(reports: Sequence[EpisodeReport]) -> dict[float, list[EpisodeReport]]:
    """Reports keyed by their penetration level, levels in ascending order."""
    grouped: dict[float, list[EpisodeReport]] = {}
    for report in sorted(reports, key=lambda r: r.av_penetration):
        grouped.setdefault(report.av_penetration, []).append(report)
    return grouped


def summarize_penetration(reports_by_level: Mapping[float, Sequence[EpisodeReport]]) -> pd.DataFrame:
    """
    One row per penetration level.

    @param reports_by_level: Reports keyed by level.
    @return: Table with the columns level, episodes, avg_conflicts, collisions_per_100, avg_return, min_return.
    """
    rows = []
    for level in sorted(reports_by_level):
        summary = BatchSummary.from_reports(list(reports_by_level[level]))
        rows.append(
            (
                level,
                summary.episodes,
                summary.avg_episode_conflicts,
                summary.collisions_per_100,
                summary.avg_return,
                summary.min_return,
            )
        )
    return pd.DataFrame(rows, columns=PENETRATION_COLUMNS)
