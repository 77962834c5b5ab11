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
This module contains the per-tick risk signal of a simulated AV for each supported metric. Every metric is
brought to a risk in [0, 1] so that the same threshold policy can act on any of them.
"""

import logging
import math
from typing import Sequence

from core_types.geometry import speed_kmh
from core_types.model.agent_state import AgentState
from core_types.model.planned_trajectory import PlannedTrajectory, TrajectorySample
from core_types.model.pose import Velocity2
from grid.model.grid_spec import GridSpec
from predictor.analytic import occupancy_at, predict_occupancy
from predictor.model.predictor_config import PredictorConfig
from risk_engine.model.risk_params import RiskParams
from risk_engine.pora import horizon_risk, pora_trajectory
from risk_engine.sight_distance import stopping_sight_distance
from simulator.model.road_geometry import Corridor
from surrogates.ttc import min_ttc1_over_agents, min_ttc2_over_agents, ttc_to_risk
from utils.constants import PERCEPTION_RADIUS, Metric

logger = logging.getLogger(__name__)

LOCAL_GRID_REAR = 20.0
LOCAL_GRID_HALF_WIDTH = 20.0
LOCAL_GRID_MARGIN = 10.0


def perceived(ego: AgentState, others: Sequence[AgentState], radius: float = PERCEPTION_RADIUS) -> list[AgentState]:
    """Participants whose center lies within the perception radius of the ego."""
    return [a for a in others if math.hypot(a.pose.x - ego.pose.x, a.pose.y - ego.pose.y) <= radius]


def corridor_plan(
    corridor: Corridor, s: float, d: float, speed: float, t0: float, cfg: PredictorConfig
) -> PlannedTrajectory:
    """
    The nominal plan of a corridor-following AV: constant speed along its lane, sampled now and at every
    predictor step.

    @param corridor: The corridor driven on.
    @param s: Current arc length.
    @param d: Current lateral offset, kept along the plan.
    @param speed: Current speed in m/s.
    @param t0: Current time.
    @param cfg: The predictor configuration, giving the sample times.
    @return: The planned trajectory.
    """
    samples = []
    for tau in [0.0] + cfg.step_times():
        pose = corridor.pose_at(s + speed * tau, d)
        samples.append(TrajectorySample(t0 + tau, pose, Velocity2.along(pose.heading, speed)))
    return PlannedTrajectory(samples)


def local_grid_spec(ego: AgentState, risk_params: RiskParams, cfg: PredictorConfig) -> GridSpec:
    """
    Prediction grid aligned with the ego, long enough to hold its safety box at the end of the horizon.

    @param ego: The ego state.
    @param risk_params: Risk parameters (cell size, stopping sight distance).
    @param cfg: The predictor configuration (horizon).
    @return: The grid geometry.
    """
    speed = ego.speed
    horizon = cfg.horizon_steps * cfg.step_dt
    forward = speed * horizon + stopping_sight_distance(speed_kmh(ego.velocity), risk_params.ssd) + LOCAL_GRID_MARGIN
    cell = risk_params.cell_size
    cols = int(math.ceil((LOCAL_GRID_REAR + forward) / cell))
    rows = int(math.ceil(2 * LOCAL_GRID_HALF_WIDTH / cell))
    return GridSpec(ego.pose.offset(-LOCAL_GRID_REAR, -LOCAL_GRID_HALF_WIDTH), cell, rows, cols)


def pora_signal(  # pylint: disable=too-many-arguments,too-many-positional-arguments
    ego: AgentState,
    others: Sequence[AgentState],
    plan: PlannedTrajectory,
    t0: float,
    risk_params: RiskParams,
    cfg: PredictorConfig,
    adjusted: bool = True,
) -> float:
    """
    PORA over the ego plan. The horizon opens with the currently perceived scene, so that the first predicted
    step is already scored against the occupancy change from now.

    @param ego: The ego state.
    @param others: Everybody else.
    @param plan: The ego plan, sampled now and at the prediction times.
    @param t0: Current time.
    @param risk_params: Risk parameters.
    @param cfg: The predictor configuration.
    @param adjusted: False gives the unadjusted heatmap risk.
    @return: The worst step score, 0 with nobody in perception range.
    """
    nearby = perceived(ego, others)
    if not nearby:
        return 0.0
    spec = local_grid_spec(ego, risk_params, cfg)
    grids = [occupancy_at(nearby, spec, cfg, 0.0, t0)] + predict_occupancy(nearby, spec, cfg, t0)
    scores = pora_trajectory(plan, grids, ego.box.length, ego.box.width, [a.box for a in nearby], risk_params)
    if adjusted:
        return horizon_risk([score for _, score, _ in scores])
    return horizon_risk([field.unadjusted_score for _, _, field in scores])


def metric_signal(  # pylint: disable=too-many-arguments,too-many-positional-arguments
    metric: Metric,
    ego: AgentState,
    others: Sequence[AgentState],
    plan: PlannedTrajectory,
    t0: float,
    risk_params: RiskParams,
    cfg: PredictorConfig,
) -> float:
    """
    Risk of the ego under the chosen metric.

    @param metric: PORA, unadjusted PORA, TTC-1 or TTC-2.
    @param ego: The ego state.
    @param others: Everybody else.
    @param plan: The ego plan (used by the PORA metrics).
    @param t0: Current time.
    @param risk_params: Risk parameters.
    @param cfg: The predictor configuration.
    @return: Risk in [0, 1].
    """
    if metric is Metric.PORA:
        return pora_signal(ego, others, plan, t0, risk_params, cfg)
    if metric is Metric.PORA_UNADJUSTED:
        return pora_signal(ego, others, plan, t0, risk_params, cfg, adjusted=False)
    if metric is Metric.TTC1:
        return ttc_to_risk(min_ttc1_over_agents(ego, others))
    return ttc_to_risk(min_ttc2_over_agents(ego, perceived(ego, others)))
