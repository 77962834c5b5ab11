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
This module contains the PORA evaluation: AV-centered heatmap extraction, occupancy change between steps,
conditional collision probability, Cox adjustment and the max-reduction over the safety box.
"""

import logging
from typing import Optional, Sequence

import numpy as np

from core_types.geometry import speed_kmh
from core_types.model.oriented_box import OrientedBox
from core_types.model.planned_trajectory import PlannedTrajectory
from core_types.model.pose import Pose2, Velocity2
from grid.model.occupancy_grid import OccupancyGrid
from grid.transforms import resample_window
from risk_engine.collision_map import collision_given_occupancy
from risk_engine.cox import cox_adjust
from risk_engine.model.risk_field import RiskField
from risk_engine.model.risk_params import RiskParams
from risk_engine.model.safety_box import SafetyBox
from risk_engine.sight_distance import build_safety_box
from utils.constants import TIMESTAMP_TOLERANCE
from utils.exceptions import MisalignedTimestampError, TimestepOrderError

logger = logging.getLogger(__name__)

StepScore = tuple[float, float, RiskField]


def extract_av_centered(global_grid: OccupancyGrid, box: SafetyBox, cell_size: float) -> OccupancyGrid:
    """
    Translate, rotate, resample and trim a global heatmap into the safety-box window.

    @param global_grid: The global occupancy grid.
    @param box: The safety box anchored at the AV.
    @param cell_size: Window cell edge in meters.
    @return: The AV-centered grid, stamped with the global grid's timestamp.
    """
    return resample_window(global_grid, box.window_spec(cell_size))


def _body_only_box(av_box: OrientedBox) -> SafetyBox:
    return SafetyBox(av_box.width, av_box.length, av_box.length, av_box.width, av_box.center, av_box.half_length)


def pora_step(  # pylint: disable=too-many-arguments,too-many-positional-arguments,too-many-locals
    global_curr: OccupancyGrid,
    av_box: OrientedBox,
    av_velocity: Velocity2,
    others: Sequence[OrientedBox],
    params: RiskParams,
    global_prev: Optional[OccupancyGrid] = None,
    av_pose_prev: Optional[Pose2] = None,
    k: Optional[int] = None,
) -> tuple[float, RiskField]:
    """
    Score one step. The safety box is built at the current AV state; the previous grid is extracted with the
    same box dimensions anchored at the previous AV pose, so that cell (i, j) of both windows is the same place
    in the AV frame and their difference is the occupancy change.

    @param global_curr: The global grid at t_k.
    @param av_box: The AV footprint at t_k.
    @param av_velocity: The AV velocity at t_k.
    @param others: Footprints of the surrounding participants (their dimensions size the box).
    @param params: Risk parameters.
    @param global_prev: The global grid at t_{k-1}; absent at the first step.
    @param av_pose_prev: The AV pose at t_{k-1}; defaults to the current pose.
    @param k: 1-based step index; defaults to 1 without a previous grid and 2 otherwise.
    @return: (PORA score, the full risk field).
    @raise TimestepOrderError: When the previous grid is not strictly older than the current one.
    """
    step = k if k is not None else (1 if global_prev is None else 2)
    if global_prev is not None and global_prev.t >= global_curr.t - TIMESTAMP_TOLERANCE:
        logger.error("Previous grid at t=%s is not older than the current grid at t=%s.", global_prev.t, global_curr.t)
        raise TimestepOrderError(f"Grid at t={global_prev.t} does not precede grid at t={global_curr.t}.")

    if not others:
        box = _body_only_box(av_box)
        spec = box.window_spec(params.cell_size)
        zeros = np.zeros(spec.shape)
        return 0.0, RiskField(spec, global_curr.t, step, params.cox.beta, zeros, zeros, zeros, zeros)

    box = build_safety_box(av_box, speed_kmh(av_velocity), others, params.ssd)
    h_curr = extract_av_centered(global_curr, box, params.cell_size)

    if global_prev is None or step == 1:
        delta_p = np.zeros(h_curr.spec.shape)
    else:
        prev_anchor = av_pose_prev if av_pose_prev is not None else av_box.center
        prev_box = SafetyBox(box.width, box.length, box.sub_length, box.sub_width, prev_anchor, box.rear_extent)
        h_prev = extract_av_centered(global_prev, prev_box, params.cell_size)
        delta_p = h_curr.values - h_prev.values

    p_coll_given_occ = collision_given_occupancy(box, h_curr.spec, params.falloff)
    risk = cox_adjust(p_coll_given_occ * h_curr.values, delta_p, params.cox, step)
    field = RiskField(
        h_curr.spec, global_curr.t, step, params.cox.beta, h_curr.values, p_coll_given_occ, delta_p, risk
    )
    return field.score, field


def pora_trajectory(  # pylint: disable=too-many-arguments,too-many-positional-arguments
    plan: PlannedTrajectory,
    grids: Sequence[OccupancyGrid],
    av_length: float,
    av_width: float,
    others: Sequence[OrientedBox],
    params: RiskParams,
) -> list[StepScore]:
    """
    Score every predicted grid along a planned trajectory. Each grid is paired with the plan sample of the same
    timestamp, whose pose places the AV and whose speed sizes the safety box. The first grid uses the
    unadjusted branch.

    @param plan: The planned AV trajectory.
    @param grids: Global grids in time order.
    @param av_length: AV body length in meters.
    @param av_width: AV body width in meters.
    @param others: Footprints of the surrounding participants.
    @param params: Risk parameters.
    @return: (t_k, score, field) per grid.
    @raise MisalignedTimestampError: When a grid has no plan sample within 1e-6 s.
    """
    logger.debug("PORA trajectory evaluation - started for %s grids.", len(grids))
    results: list[StepScore] = []
    previous: Optional[tuple[OccupancyGrid, Pose2]] = None
    for k, grid in enumerate(grids, start=1):
        sample = plan.sample_at(grid.t, TIMESTAMP_TOLERANCE)
        if sample is None:
            logger.error("Grid at t=%s has no planned trajectory sample.", grid.t)
            raise MisalignedTimestampError(f"Grid at t={grid.t} has no planned trajectory sample.")

        av_box = OrientedBox(sample.pose, av_length, av_width)
        score, field = pora_step(
            grid,
            av_box,
            sample.velocity,
            others,
            params,
            global_prev=previous[0] if previous else None,
            av_pose_prev=previous[1] if previous else None,
            k=k,
        )
        results.append((grid.t, score, field))
        previous = (grid, sample.pose)
    logger.debug("PORA trajectory evaluation - finished.")
    return results


def horizon_risk(scores: Sequence[float]) -> float:
    """
    Worst-case risk over the prediction horizon.

    @param scores: Per-step scores.
    @return: The maximum, or 0 for no steps.
    """
    return float(max(scores)) if len(scores) else 0.0
