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
This module contains the two calibration programs of the Cox coefficient: the labeled program, which
looks for the coefficient that makes the risk peak at the known collision time, and the simulation program,
which minimizes the collision cost of the PORA-driven controller over seeded batches.
"""

import json
import logging
import math
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from analysis.model.calibration_result import CalibrationResult
from analysis.model.labeled_scenario import LabeledScenario
from core_types.model.oriented_box import OrientedBox
from core_types.model.planned_trajectory import PlannedTrajectory
from grid.model.occupancy_grid import OccupancyGrid
from predictor.model.predictor_config import PredictorConfig
from risk_engine.model.risk_params import RiskParams
from risk_engine.pora import pora_trajectory
from simulator.batch import run_batch
from simulator.model.controller_policy import ControllerPolicy, RewardWeights
from simulator.model.scenario_spec import ScenarioSpec
from simulator.scenarios import make_penetration_sweep
from utils.constants import DEFAULT_BETA_GRID, SIM_CALIBRATION_CONFLICT_WEIGHT, CalibrationProgram, Metric
from utils.exceptions import EmptySampleError, InvalidParameterError, PoraRiskEngineException, ScenarioLoadException
from utils.utils import read_json, write_json

logger = logging.getLogger(__name__)


def _validated_grid(beta_grid: Sequence[float]) -> list[float]:
    grid = sorted(set(float(b) for b in beta_grid))
    if not grid or any(not math.isfinite(b) or b < 0 for b in grid):
        logger.error("The beta grid must hold finite values >= 0, got %s.", list(beta_grid))
        raise InvalidParameterError(f"The beta grid must hold finite values >= 0, got {list(beta_grid)}.")
    return grid


def risk_traces_over_beta(  # pylint: disable=too-many-arguments,too-many-positional-arguments
    scenario_id: str,
    plan: PlannedTrajectory,
    grids: Sequence[OccupancyGrid],
    av_length: float,
    av_width: float,
    others: Sequence[OrientedBox],
    params: RiskParams,
    collision_time: float,
    beta_grid: Sequence[float] = DEFAULT_BETA_GRID,
) -> LabeledScenario:
    """
    PORA traces of a labeled scenario for every coefficient of the grid. The windows are extracted once; only
    the Cox adjustment is re-applied per coefficient.

    @param scenario_id: Scenario identifier.
    @param plan: The planned AV trajectory.
    @param grids: Global grids in time order.
    @param av_length: AV body length in meters.
    @param av_width: AV body width in meters.
    @param others: Footprints of the surrounding participants.
    @param params: Risk parameters; their coefficient is not used.
    @param collision_time: The labeled collision time.
    @param beta_grid: The coefficients to evaluate.
    @return: The labeled scenario.
    """
    grid = _validated_grid(beta_grid)
    steps = pora_trajectory(plan, grids, av_length, av_width, others, params)
    times = [t for t, _, _ in steps]
    risk = [[field.rescore(beta).score for _, _, field in steps] for beta in grid]
    return LabeledScenario(scenario_id, grid, times, risk, collision_time)


def calibrate_beta_labeled(scenarios: Sequence[LabeledScenario]) -> CalibrationResult:
    """
    Choose the coefficient for which every scenario's risk peaks at its collision step and, among those, the
    mean collision-step risk is the highest. Without such a coefficient, the one with the smallest total
    violation is returned and the result is flagged infeasible. Ties go to the smallest coefficient.

    @param scenarios: Labeled scenarios sharing one beta grid.
    @return: The calibration result.
    @raise EmptySampleError: When no scenario is given.
    @raise InvalidParameterError: When the scenarios use different beta grids.
    """
    if not scenarios:
        logger.error("Labeled calibration needs at least one scenario.")
        raise EmptySampleError("Labeled calibration needs at least one scenario.")
    grid = scenarios[0].beta_grid
    for scenario in scenarios[1:]:
        if scenario.beta_grid.shape != grid.shape or not np.allclose(scenario.beta_grid, grid, rtol=0, atol=1e-12):
            logger.error("Scenario %s uses another beta grid.", scenario.scenario_id)
            raise InvalidParameterError(f"Scenario {scenario.scenario_id} uses another beta grid.")

    logger.info("Labeled beta calibration over %s scenarios - started.", len(scenarios))
    objective = np.array([np.mean([s.risk_at_collision(b) for s in scenarios]) for b in range(grid.size)])
    violation = np.array([sum(s.violation(b) for s in scenarios) for b in range(grid.size)])
    feasible = violation <= 0
    if np.any(feasible):
        best = int(np.argmax(np.where(feasible, objective, -np.inf)))
    else:
        best = int(np.argmin(violation))
        logger.warning("No beta makes every trace peak at its collision time; least violating beta %s.", grid[best])

    table = pd.DataFrame({"beta": grid, "objective": objective, "violation": violation})
    logger.info("Labeled beta calibration - finished: beta=%s.", grid[best])
    return CalibrationResult(CalibrationProgram.LABELED, float(grid[best]), bool(np.any(feasible)), table)


def calibrate_beta_sim(  # pylint: disable=too-many-arguments,too-many-positional-arguments,too-many-locals
    base_specs: Sequence[ScenarioSpec],
    beta_grid: Sequence[float] = DEFAULT_BETA_GRID,
    episodes_per_beta: int = 1,
    policy: Optional[ControllerPolicy] = None,
    risk_params: Optional[RiskParams] = None,
    predictor_config: Optional[PredictorConfig] = None,
    weights: Optional[RewardWeights] = None,
    workers: int = 1,
) -> CalibrationResult:
    """
    Choose the coefficient minimizing collisions per 100 episodes plus a small weight times the average
    conflicts per episode, with the PORA threshold controller on the same seeded batch for every
    coefficient. Ties go to the smallest coefficient.

    @param base_specs: Base scenarios; each contributes episodes_per_beta seeds.
    @param beta_grid: The coefficients to evaluate.
    @param episodes_per_beta: Seeds per base scenario.
    @param policy: The threshold policy.
    @param risk_params: Risk parameters; the coefficient is replaced by each grid value.
    @param predictor_config: Occupancy predictor settings.
    @param weights: Reward weights.
    @param workers: Worker processes per batch.
    @return: The calibration result, always feasible.
    """
    grid = _validated_grid(beta_grid)
    specs = [
        spec for base in base_specs for spec in make_penetration_sweep(base, [base.av_penetration], episodes_per_beta)
    ]
    params = risk_params if risk_params is not None else RiskParams()

    logger.info("Simulation beta calibration over %s betas x %s episodes - started.", len(grid), len(specs))
    rows = []
    for beta in grid:
        _, summary = run_batch(
            specs, Metric.PORA, policy, params.with_beta(beta), predictor_config, weights, workers=workers
        )
        cost = summary.collisions_per_100 + SIM_CALIBRATION_CONFLICT_WEIGHT * summary.avg_episode_conflicts
        logger.debug("Beta %s: collision cost %s.", beta, cost)
        rows.append((beta, cost, 0.0))

    table = pd.DataFrame(rows, columns=["beta", "objective", "violation"])
    best = int(np.argmin(table["objective"].to_numpy()))
    logger.info("Simulation beta calibration - finished: beta=%s.", grid[best])
    return CalibrationResult(CalibrationProgram.SIM, grid[best], True, table)


def save_labeled_scenarios(file_path: str, scenarios: Sequence[LabeledScenario]) -> str:
    """
    Write labeled scenarios as a JSON list.

    @param file_path: Target file.
    @param scenarios: The scenarios.
    @return: The written path.
    """
    return write_json(file_path, [s.to_dict() for s in scenarios])


def load_labeled_scenarios(file_path: str) -> list[LabeledScenario]:
    """
    Read labeled scenarios from a JSON list.

    @param file_path: Source file.
    @return: The scenarios in file order.
    @raise ScenarioLoadException: When the file is missing, not a list or holds a malformed scenario.
    """
    try:
        scenarios_json = read_json(file_path)
        if not isinstance(scenarios_json, list):
            raise TypeError("a list of labeled scenarios is expected")
        scenarios = [LabeledScenario.from_dict(s) for s in scenarios_json]
    except OSError as e:
        logger.error("Cannot read labeled scenario file `%s`: %s.", file_path, e)
        raise ScenarioLoadException(f"Cannot read labeled scenario file {file_path}.") from e
    except (json.JSONDecodeError, AttributeError, KeyError, TypeError, ValueError, PoraRiskEngineException) as e:
        logger.error("Malformed labeled scenario file `%s`: %s.", file_path, e)
        raise ScenarioLoadException(f"Malformed labeled scenario file {file_path}.") from e
    logger.debug("Loaded %s labeled scenarios from `%s`.", len(scenarios), file_path)
    return scenarios
