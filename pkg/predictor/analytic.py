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
This module contains the analytic occupancy predictor: every agent's footprint is advected under a simple
motion model and rasterized as a truncated Gaussian blob; blobs of different agents combine by noisy-or.
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from core_types.model.agent_state import AgentState
from grid.model.grid_spec import GridSpec
from grid.model.occupancy_grid import OccupancyGrid
from predictor.model.predictor_config import PredictorConfig
from utils.constants import BLOB_TRUNCATION_SIGMAS, MotionModel
from utils.exceptions import InvalidAgentStateError, InvalidGridError
from utils.utils import finite

logger = logging.getLogger(__name__)


def advect(agent: AgentState, tau: float, motion_model: MotionModel) -> tuple[float, float, float]:
    """
    Position and heading of an agent tau seconds ahead. Under constant acceleration a decelerating
    agent stops in place and never reverses.

    @param agent: The current state.
    @param tau: Look-ahead in seconds.
    @param motion_model: Constant velocity or constant acceleration.
    @return: (x, y, heading).
    """
    pose = agent.pose
    if motion_model is MotionModel.CONSTANT_VELOCITY:
        return pose.x + agent.velocity.vx * tau, pose.y + agent.velocity.vy * tau, pose.heading

    speed = agent.speed
    direction = math.atan2(agent.velocity.vy, agent.velocity.vx) if speed > 0 else pose.heading
    accel = agent.acceleration
    moving_time = tau
    if accel < 0:
        moving_time = min(tau, speed / -accel)
    distance = max(0.0, speed * moving_time + 0.5 * accel * moving_time * moving_time)
    return pose.x + distance * math.cos(direction), pose.y + distance * math.sin(direction), pose.heading


def _validate_agents(agents: Sequence[AgentState]) -> None:
    for agent in agents:
        pose, velocity = agent.pose, agent.velocity
        if not finite(pose.x, pose.y, pose.heading, velocity.vx, velocity.vy, agent.acceleration, agent.yaw_rate):
            logger.error("Agent %s has a non-finite state.", agent.id)
            raise InvalidAgentStateError(f"Agent {agent.id} has a non-finite state.")


def _mask_for(spec: GridSpec, cfg: Optional[PredictorConfig]) -> Optional[np.ndarray]:
    if cfg is None or cfg.drivable_mask is None:
        return None
    if cfg.drivable_mask.shape != spec.shape:
        logger.error("Drivable mask shape %s does not match grid shape %s.", cfg.drivable_mask.shape, spec.shape)
        raise InvalidGridError("Drivable mask shape does not match the grid.")
    return cfg.drivable_mask


def _cell_window(
    spec: GridSpec, center_x: float, center_y: float, heading: float, reach_along: float, reach_across: float
) -> Optional[tuple[slice, slice, np.ndarray, np.ndarray]]:
    """
    Cells touched by a rectangle given in grid-local coordinates, plus the local coordinates of their centers.
    """
    c, s = math.cos(heading), math.sin(heading)
    extent_x = abs(c) * reach_along + abs(s) * reach_across
    extent_y = abs(s) * reach_along + abs(c) * reach_across
    col_lo = max(0, int(math.floor((center_x - extent_x) / spec.cell_size)))
    col_hi = min(spec.cols - 1, int(math.floor((center_x + extent_x) / spec.cell_size)))
    row_lo = max(0, int(math.floor((center_y - extent_y) / spec.cell_size)))
    row_hi = min(spec.rows - 1, int(math.floor((center_y + extent_y) / spec.cell_size)))
    if col_lo > col_hi or row_lo > row_hi:
        return None
    local_x = (np.arange(col_lo, col_hi + 1) + 0.5) * spec.cell_size
    local_y = (np.arange(row_lo, row_hi + 1) + 0.5) * spec.cell_size
    grid_x, grid_y = np.meshgrid(local_x, local_y)
    return slice(row_lo, row_hi + 1), slice(col_lo, col_hi + 1), grid_x, grid_y


def _to_grid_local(spec: GridSpec, x: float, y: float, heading: float) -> tuple[float, float, float]:
    local_x, local_y = spec.origin.to_local(x, y)
    return local_x, local_y, heading - spec.origin.heading


def occupancy_at(
    agents: Sequence[AgentState], spec: GridSpec, cfg: PredictorConfig, tau: float, t: float
) -> OccupancyGrid:
    """
    Predicted occupancy tau seconds ahead of the given states.

    @param agents: Current participant states.
    @param spec: The output grid geometry.
    @param cfg: The predictor configuration.
    @param tau: Look-ahead in seconds (0 gives a snapshot of the current scene).
    @param t: Timestamp stamped on the grid.
    @return: The occupancy grid.
    """
    _validate_agents(agents)
    mask = _mask_for(spec, cfg)
    survivors = np.ones(spec.shape)

    for agent in agents:
        x, y, heading = advect(agent, tau, cfg.motion_model)
        cx, cy, relative_heading = _to_grid_local(spec, x, y, heading)
        base_along = agent.box.half_length + cfg.position_sigma0
        base_across = agent.box.half_width + cfg.position_sigma0
        sigma_along = base_along + cfg.sigma_growth * tau
        sigma_across = base_across + cfg.sigma_growth * tau
        peak = (base_along * base_across) / (sigma_along * sigma_across)
        reach_along = BLOB_TRUNCATION_SIGMAS * sigma_along
        reach_across = BLOB_TRUNCATION_SIGMAS * sigma_across

        window = _cell_window(spec, cx, cy, relative_heading, reach_along, reach_across)
        if window is None:
            continue
        rows, cols, grid_x, grid_y = window
        c, s = math.cos(relative_heading), math.sin(relative_heading)
        dx, dy = grid_x - cx, grid_y - cy
        along = c * dx + s * dy
        across = -s * dx + c * dy
        inside = (np.abs(along) <= reach_along) & (np.abs(across) <= reach_across)
        blob = np.where(
            inside, peak * np.exp(-0.5 * ((along / sigma_along) ** 2 + (across / sigma_across) ** 2)), 0.0
        )
        if mask is not None and agent.kind.is_vehicle:
            blob = blob * mask[rows, cols]
        survivors[rows, cols] *= 1.0 - blob

    return OccupancyGrid(spec, t, np.clip(1.0 - survivors, 0.0, 1.0))


def predict_occupancy(
    agents: Sequence[AgentState], spec: GridSpec, cfg: PredictorConfig, t0: float = 0.0
) -> list[OccupancyGrid]:
    """
    Propagate the current states into K future occupancy grids.

    @param agents: Current participant states (empty gives all-zero grids).
    @param spec: The output grid geometry.
    @param cfg: The predictor configuration.
    @param t0: Timestamp of the current states; step k is stamped t0 + k * step_dt.
    @return: K occupancy grids in time order.
    @raise InvalidAgentStateError: When an agent state is non-finite.
    """
    logger.debug("Occupancy prediction - started for %s agents.", len(agents))
    grids = [occupancy_at(agents, spec, cfg, tau, t0 + tau) for tau in cfg.step_times()]
    logger.debug("Occupancy prediction - finished.")
    return grids


def ground_truth_grid(agents: Sequence[AgentState], spec: GridSpec, t: float = 0.0) -> OccupancyGrid:
    """
    Binary rasterization: 1 where a cell center lies inside any agent's footprint, else 0.

    @param agents: Participant states.
    @param spec: The output grid geometry.
    @param t: Timestamp stamped on the grid.
    @return: The binary occupancy grid.
    """
    values = np.zeros(spec.shape)
    for agent in agents:
        cx, cy, relative_heading = _to_grid_local(spec, agent.pose.x, agent.pose.y, agent.pose.heading)
        window = _cell_window(spec, cx, cy, relative_heading, agent.box.half_length, agent.box.half_width)
        if window is None:
            continue
        rows, cols, grid_x, grid_y = window
        c, s = math.cos(relative_heading), math.sin(relative_heading)
        dx, dy = grid_x - cx, grid_y - cy
        inside = (np.abs(c * dx + s * dy) <= agent.box.half_length) & (np.abs(-s * dx + c * dy) <= agent.box.half_width)
        values[rows, cols] = np.maximum(values[rows, cols], inside.astype(float))
    return OccupancyGrid(spec, t, values)


class AnalyticPredictor:  # pylint: disable=too-few-public-methods
    """
    Occupancy predictor backed by Gaussian advection of the current agent states.
    """

    def __init__(self, config: Optional[PredictorConfig] = None):
        self.__config: PredictorConfig = config if config is not None else PredictorConfig()

    @property
    def config(self) -> PredictorConfig:
        """Getter of the predictor configuration."""
        return self.__config

    def predict(self, agents: Sequence[AgentState], spec: GridSpec, t0: float = 0.0) -> list[OccupancyGrid]:
        """
        Predict K future grids.

        @param agents: Current participant states.
        @param spec: The output grid geometry.
        @param t0: Timestamp of the current states.
        @return: K occupancy grids.
        """
        return predict_occupancy(agents, spec, self.__config, t0)
