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
This module contains the correlation study between the occupancy change in the AV's safety box and the
relative motion of the surrounding vehicle, with scenario-weighted aggregation of the coefficients.
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from analysis.model.correlation_summary import CorrelationSummary, ScenarioCorrelation
from analysis.model.motion_trace import MotionTrace
from core_types.geometry import speed_kmh
from core_types.model.agent_state import AgentState
from core_types.model.pose import Pose2, Velocity2
from predictor.analytic import occupancy_at
from predictor.model.predictor_config import PredictorConfig
from risk_engine.collision_map import collision_map
from risk_engine.model.risk_params import RiskParams
from risk_engine.pora import extract_av_centered
from risk_engine.sight_distance import build_safety_box
from simulator.metric_signal import local_grid_spec
from utils.constants import ANALYSIS_STREAM, MIN_CORRELATION_SAMPLES, DeltaPSummary, ParticipantKind
from utils.exceptions import EmptySampleError
from utils.utils import substream

logger = logging.getLogger(__name__)

FISHER_Z_LIMIT = 1.0 - 1e-15


def fisher_z_mean(coefficients: Sequence[float], weights: Sequence[float]) -> float:
    """
    Weighted mean of correlation coefficients in Fisher z space, transformed back.

    @param coefficients: Coefficients in [-1, 1]; +-1 is clipped just inside the interval.
    @param weights: Positive weights.
    @return: The aggregate coefficient.
    """
    z = np.arctanh(np.clip(np.asarray(coefficients, dtype=float), -FISHER_Z_LIMIT, FISHER_Z_LIMIT))
    return float(np.tanh(np.average(z, weights=np.asarray(weights, dtype=float))))


def _scenario_correlation(trace: MotionTrace, min_samples: int) -> Optional[ScenarioCorrelation]:
    x, y = pd.Series(trace.relative_motion), pd.Series(trace.occupancy_change)
    if len(x) < min_samples:
        logger.warning("Scenario %s has only %s step pairs; excluded.", trace.scenario_id, len(x))
        return None
    if np.ptp(x.to_numpy()) == 0 or np.ptp(y.to_numpy()) == 0:
        logger.warning("Scenario %s has a constant series; excluded.", trace.scenario_id)
        return None
    return ScenarioCorrelation(
        trace.scenario_id,
        len(x),
        float(x.corr(y, method="pearson")),
        float(x.corr(y, method="spearman")),
        float(x.corr(y, method="kendall")),
    )


def correlate_delta_p(traces: Sequence[MotionTrace], min_samples: int = MIN_CORRELATION_SAMPLES) -> CorrelationSummary:
    """
    Correlate the occupancy change with the change of the center distance, step pair by step pair, per
    scenario, and aggregate over scenarios with weights n - 3: Pearson and Spearman through Fisher z, Kendall
    as a weighted mean.

    @param traces: One motion trace per scenario.
    @param min_samples: Minimum step pairs for a scenario to take part (at least 4).
    @return: The correlation summary.
    @raise EmptySampleError: When no scenario qualifies.
    """
    threshold = max(min_samples, MIN_CORRELATION_SAMPLES)
    included: list[ScenarioCorrelation] = []
    excluded: list[str] = []
    for trace in traces:
        correlation = _scenario_correlation(trace, threshold)
        if correlation is None:
            excluded.append(trace.scenario_id)
        else:
            included.append(correlation)
    if not included:
        logger.error("No scenario qualifies for the correlation study (%s excluded).", len(excluded))
        raise EmptySampleError("No scenario qualifies for the correlation study.")

    weights = [c.n - 3 for c in included]
    summary = CorrelationSummary(
        tuple(included),
        fisher_z_mean([c.pearson for c in included], weights),
        fisher_z_mean([c.spearman for c in included], weights),
        float(np.average([c.kendall for c in included], weights=weights)),
        tuple(excluded),
    )
    logger.info("Correlation over %s scenarios: pearson=%s.", len(included), summary.pearson)
    return summary


def _window_summary(values: np.ndarray, collision: np.ndarray, summary: DeltaPSummary) -> float:
    """Window maximum, or the occupancy summed over the sub-area cells (P(C|O) = 1) only."""
    if summary is DeltaPSummary.PHI_SUM:
        return float(np.sum(values[collision >= 1.0]))
    return float(np.max(values)) if values.size else 0.0


def _car(agent_id: str, x: float, speed: float, acceleration: float = 0.0) -> AgentState:
    return AgentState.from_kind(
        agent_id, ParticipantKind.CAR, Pose2(x, 0.0, 0.0), Velocity2(speed, 0.0), acceleration=acceleration
    )


def relative_motion_trace(  # pylint: disable=too-many-arguments,too-many-positional-arguments,too-many-locals
    seed: int,
    steps: int = 60,
    dt: float = 0.1,
    summary: DeltaPSummary = DeltaPSummary.MAX,
    risk_params: Optional[RiskParams] = None,
    predictor_config: Optional[PredictorConfig] = None,
) -> MotionTrace:
    """
    A seeded two-vehicle trace on a straight lane: the AV holds its speed while the vehicle ahead, starting just
    beyond the front edge of the AV's safety box, first falls back into the box and then pulls away again, its
    relative speed swinging smoothly from closing to opening.

    @param seed: The scenario seed.
    @param steps: Number of steps after the first sample.
    @param dt: Step length in seconds.
    @param summary: Reduction of the window occupancy (window maximum or sum over the guaranteed-collision sub-area).
    @param risk_params: Risk parameters sizing the safety box.
    @param predictor_config: Predictor settings of the occupancy blob.
    @return: The motion trace.
    """
    params = risk_params if risk_params is not None else RiskParams()
    cfg = predictor_config if predictor_config is not None else PredictorConfig()
    rng = substream(seed, ANALYSIS_STREAM)
    av_speed = float(rng.uniform(8.0, 14.0))
    start = _car("av", 0.0, av_speed)
    front = build_safety_box(start.box, speed_kmh(start.velocity), [start.box], params.ssd).front_extent
    initial_distance = front + float(rng.uniform(2.0, 6.0))
    swing = float(rng.uniform(2.0, 4.0))
    period = steps * dt

    times, distances, occupancy = [], [], []
    for k in range(steps + 1):
        t = k * dt
        phase = math.pi * t / period
        distance = initial_distance - swing * period / math.pi * math.sin(phase)
        av = _car("av", av_speed * t, av_speed)
        other = _car(
            "other",
            av_speed * t + distance,
            av_speed - swing * math.cos(phase),
            swing * math.pi / period * math.sin(phase),
        )
        grid = occupancy_at([other], local_grid_spec(av, params, cfg), cfg, 0.0, t)
        box = build_safety_box(av.box, speed_kmh(av.velocity), [other.box], params.ssd)
        window = extract_av_centered(grid, box, params.cell_size)
        times.append(t)
        distances.append(math.hypot(other.pose.x - av.pose.x, other.pose.y - av.pose.y))
        occupancy.append(_window_summary(window.values, collision_map(box, params.cell_size, params.falloff), summary))
    return MotionTrace(f"motion-{seed}", tuple(times), tuple(distances), tuple(occupancy))
