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
This module contains the latency benchmark of the PORA evaluation stages and of pairwise TTC-2.
"""

import logging
import math
import time
from functools import partial
from typing import Callable, Sequence

import numpy as np
import pandas as pd

from core_types.model.agent_state import AgentState
from core_types.model.pose import Pose2, Velocity2
from grid.model.grid_spec import GridSpec
from grid.model.occupancy_grid import OccupancyGrid
from risk_engine.collision_map import clear_collision_map_cache, collision_given_occupancy
from risk_engine.cox import cox_adjust
from risk_engine.model.cox_params import CoxParams
from risk_engine.model.risk_params import RiskParams
from risk_engine.model.safety_box import SafetyBox
from risk_engine.pora import extract_av_centered
from surrogates.ttc import min_ttc2_over_agents
from utils.constants import (
    ANALYSIS_STREAM,
    BENCH_COLLISION_MAP,
    BENCH_COLLISION_MAP_COLD,
    BENCH_COX_REDUCE,
    BENCH_CROP_ROTATE,
    BENCH_MIN_REPETITIONS,
    BENCH_TTC2_PAIRWISE,
    Falloff,
    ParticipantKind,
)
from utils.exceptions import InvalidParameterError
from utils.utils import substream

logger = logging.getLogger(__name__)

BENCH_COLUMNS = ["component", "size", "median_ms", "p95_ms"]
BENCH_ANCHOR = Pose2(0.0, 0.0, 0.3)
BENCH_SCENE_SIZE = 60.0


def _timed(stage: Callable[[], object], repetitions: int) -> tuple[float, float]:
    samples = np.empty(repetitions)
    for i in range(repetitions):
        start = time.perf_counter()
        stage()
        samples[i] = (time.perf_counter() - start) * 1000.0
    return float(np.median(samples)), float(np.percentile(samples, 95))


def _bench_box(rows: int, cols: int, cell_size: float) -> SafetyBox:
    length, width = rows * cell_size, cols * cell_size
    sub_length, sub_width = min(6.5, length), min(4.0, width)
    return SafetyBox(width, length, sub_length, sub_width, BENCH_ANCHOR, sub_length / 2)


def _global_grid(box: SafetyBox, cell_size: float, rng: np.random.Generator) -> OccupancyGrid:
    reach = max(box.length, box.width) + 5.0
    cells = int(math.ceil(2 * reach / cell_size))
    spec = GridSpec(Pose2(-reach, -reach, 0.0), cell_size, cells, cells)
    return OccupancyGrid(spec, 0.0, rng.random(spec.shape))


def _scene(count: int, rng: np.random.Generator) -> list[AgentState]:
    agents = []
    for i in range(count):
        x, y = rng.uniform(0.0, BENCH_SCENE_SIZE, 2)
        heading = float(rng.uniform(-math.pi, math.pi))
        speed = float(rng.uniform(0.0, 15.0))
        agents.append(
            AgentState.from_kind(
                f"a{i}",
                ParticipantKind.CAR,
                Pose2(float(x), float(y), heading),
                Velocity2(speed * math.cos(heading), speed * math.sin(heading)),
            )
        )
    return agents


def _collision_stage(box: SafetyBox, window: OccupancyGrid, falloff: Falloff) -> np.ndarray:
    return collision_given_occupancy(box, window.spec, falloff) * window.values


def _cold_collision_stage(box: SafetyBox, window: OccupancyGrid, falloff: Falloff) -> np.ndarray:
    clear_collision_map_cache()
    return _collision_stage(box, window, falloff)


def _cox_stage(p_coll: np.ndarray, delta_p: np.ndarray, cox: CoxParams) -> float:
    return float(np.max(cox_adjust(p_coll, delta_p, cox, 2)))


def _pairwise_ttc2(agents: list[AgentState]) -> None:
    for i, agent in enumerate(agents):
        min_ttc2_over_agents(agent, agents[:i] + agents[i + 1 :])


def bench_latency(
    window_sizes: Sequence[tuple[int, int]] = ((30, 40),),
    repetitions: int = BENCH_MIN_REPETITIONS,
    agent_counts: Sequence[int] = (2, 4, 8, 16),
    seed: int = 0,
) -> pd.DataFrame:
    """
    Wall-clock latency of the PORA stages per window size and of pairwise TTC-2 per agent count on this host.
    The collision-map row times the memo lookup and the product with the window on a warm memo, as a scoring
    loop sees it; the cold-memo row rebuilds the map on every call.

    @param window_sizes: (rows, cols) of the AV-centered windows.
    @param repetitions: Timed calls per row, at least 100.
    @param agent_counts: Scene sizes for the TTC-2 rows.
    @param seed: Seed of the synthetic grids and scenes.
    @return: Table with the columns component, size, median_ms, p95_ms.
    @raise InvalidParameterError: When fewer than 100 repetitions or an empty window is requested.
    """
    if repetitions < BENCH_MIN_REPETITIONS:
        logger.error("The benchmark needs at least %s repetitions, got %s.", BENCH_MIN_REPETITIONS, repetitions)
        raise InvalidParameterError(f"The benchmark needs at least {BENCH_MIN_REPETITIONS} repetitions.")
    if any(rows < 1 or cols < 1 for rows, cols in window_sizes):
        logger.error("Benchmark windows must have at least one cell, got %s.", list(window_sizes))
        raise InvalidParameterError("Benchmark windows must have at least one cell.")

    params = RiskParams()
    cell_size = params.cell_size
    rng = substream(seed, ANALYSIS_STREAM)
    rows_out = []
    logger.info("Latency benchmark - started.")
    for rows, cols in window_sizes:
        box = _bench_box(rows, cols, cell_size)
        global_grid = _global_grid(box, cell_size, rng)
        window = extract_av_centered(global_grid, box, cell_size)
        delta_p = rng.uniform(-1.0, 1.0, window.spec.shape)
        # warms the memo for the collision-map row
        p_coll = _collision_stage(box, window, params.falloff)

        size = f"{rows}x{cols}"
        stages = (
            (BENCH_CROP_ROTATE, partial(extract_av_centered, global_grid, box, cell_size)),
            (BENCH_COLLISION_MAP, partial(_collision_stage, box, window, params.falloff)),
            (BENCH_COLLISION_MAP_COLD, partial(_cold_collision_stage, box, window, params.falloff)),
            (BENCH_COX_REDUCE, partial(_cox_stage, p_coll, delta_p, params.cox)),
        )
        for component, stage in stages:
            rows_out.append((component, size, *_timed(stage, repetitions)))

    for count in agent_counts:
        agents = _scene(count, rng)
        rows_out.append((BENCH_TTC2_PAIRWISE, f"{count} agents", *_timed(partial(_pairwise_ttc2, agents), repetitions)))

    clear_collision_map_cache()
    logger.info("Latency benchmark - finished.")
    return pd.DataFrame(rows_out, columns=BENCH_COLUMNS)
