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
This module contains the seeded scenario generator, the scenario files and the AV penetration sweep.

Every family starts from the nominal draw of its seed (road, ego, cut-in candidate and background traffic);
the rare-event families only add their event, so an event-free variant replays the nominal episode.
"""

import json
import logging
import math
from typing import Callable, Optional, Sequence

import numpy as np

from simulator.model.road_geometry import Corridor, RoadGeometry
from simulator.model.scenario_spec import ScenarioSpec
from simulator.model.spawn_spec import EventSpec, SpawnSpec
from simulator.road import (
    CROSS_CORRIDOR,
    CROSSWALK_CURB_MARGIN,
    MAIN_CORRIDOR,
    corridor_road,
    crosswalk,
    intersection_road,
)
from utils.constants import (
    DEMAND_DENSITY,
    DEMAND_SPEED_RANGE,
    EVENT_STREAM,
    GAP_KEEPING_HEADWAY,
    MIN_STANDSTILL_GAP,
    PENETRATION_STREAM,
    SCENARIO_SCHEMA_VERSION,
    SCENARIO_STREAM,
    Behavior,
    Demand,
    ParticipantKind,
    RoadTemplate,
    ScenarioFamily,
)
from utils.exceptions import InvalidParameterError, PoraRiskEngineException, ScenarioLoadException
from utils.utils import read_json, substream, write_json

logger = logging.getLogger(__name__)

ROAD_LENGTH = 800.0
SPEED_LIMIT = 25.0
BEND_LENGTH = 200.0
MAX_BEND_CURVATURE = 1.0 / 300.0
EGO_ID = "ego"
TARGET_ID = "target"
PEDESTRIAN_ID = "ped"
EGO_S0 = 100.0
INTERSECTION_CLEARANCE = 10.0


def _background_kind(u: float) -> ParticipantKind:
    if u < 0.08:
        return ParticipantKind.TRUCK
    if u < 0.12:
        return ParticipantKind.BUS
    return ParticipantKind.CAR


def _clear(placed: list[tuple[float, float, float]], s: float, length: float, speed: float) -> bool:
    """True when a vehicle at s keeps a car-following gap to every vehicle already placed in its lane."""
    for other_s, other_length, other_speed in placed:
        gap = abs(s - other_s) - (length + other_length) / 2
        if gap < MIN_STANDSTILL_GAP + GAP_KEEPING_HEADWAY * max(speed, other_speed):
            return False
    return True


def _background(  # pylint: disable=too-many-arguments,too-many-positional-arguments
    rng: np.random.Generator,
    corridor: Corridor,
    demand: Demand,
    placed: dict[int, list],
    first_id: int,
    exclude: Optional[Callable[[float], bool]] = None,
) -> list[SpawnSpec]:
    """Poisson-many vehicles per lane at the demand density, dropping those too close to a placed vehicle."""
    low, high = DEMAND_SPEED_RANGE[demand]
    spawns: list[SpawnSpec] = []
    for lane in range(corridor.lane_count):
        lane_placed = placed.setdefault(lane, [])
        count = int(rng.poisson(DEMAND_DENSITY[demand] * corridor.length / 1000.0))
        for s in np.sort(rng.uniform(0.0, 0.9 * corridor.length, count)):
            kind = _background_kind(float(rng.random()))
            speed = min(float(rng.uniform(low, high)), corridor.speed_limit)
            length, _ = kind.default_dimensions
            if exclude is not None and exclude(float(s)):
                continue
            if not _clear(lane_placed, float(s), length, speed):
                continue
            lane_placed.append((float(s), length, speed))
            spawn_id = f"bg{first_id + len(spawns)}"
            spawns.append(SpawnSpec(spawn_id, kind, corridor.id, lane, float(s), speed, speed, Behavior.BACKGROUND))
    return spawns


def _event(
    family: ScenarioFamily, seed: int, road: RoadGeometry, ego: SpawnSpec
) -> tuple[Optional[EventSpec], RoadGeometry, list[SpawnSpec]]:
    rng = substream(seed, EVENT_STREAM)
    if family is ScenarioFamily.BRAKE_CUTIN:
        event = EventSpec(
            TARGET_ID,
            trigger_time=float(rng.uniform(2.0, 5.0)),
            magnitude=float(rng.uniform(4.0, 8.0)),
            duration=float(rng.uniform(1.5, 3.0)),
            lateral_speed=float(rng.uniform(1.0, 2.0)),
        )
        return event, road, []
    if family is ScenarioFamily.LANE_INCURSION:
        event = EventSpec(
            TARGET_ID,
            trigger_time=float(rng.uniform(2.0, 5.0)),
            magnitude=float(rng.uniform(0.8, 1.6)),
            duration=float(rng.uniform(1.5, 2.5)),
        )
        return event, road, []
    if family is ScenarioFamily.PEDESTRIAN_VIOLATION:
        main = road.corridor(MAIN_CORRIDOR)
        arrival = float(rng.uniform(4.0, 7.0))
        walking_speed = float(rng.uniform(1.2, 2.0))
        crossing = crosswalk(main, ego.s0 + ego.speed * arrival)
        to_ego_lane = main.lane_offset(ego.lane) + main.half_width + CROSSWALK_CURB_MARGIN
        trigger = max(0.0, arrival - to_ego_lane / walking_speed + float(rng.uniform(-1.0, 1.0)))
        pedestrian = SpawnSpec(
            PEDESTRIAN_ID, ParticipantKind.PEDESTRIAN, crossing.id, 0, 0.0, behavior=Behavior.PEDESTRIAN
        )
        return EventSpec(PEDESTRIAN_ID, trigger, walking_speed), road.with_corridor(crossing), [pedestrian]
    return None, road, []


def make_scenario(
    family: ScenarioFamily,
    seed: int,
    demand: Demand = Demand.FREE,
    template: RoadTemplate = RoadTemplate.CORRIDOR,
) -> ScenarioSpec:
    """
    Draw a scenario of a family for a seed.

    @param family: Nominal or one of the rare-event families.
    @param seed: The scenario seed.
    @param demand: Background traffic density.
    @param template: Road template.
    @return: The scenario.
    """
    rng = substream(seed, SCENARIO_STREAM)
    lane_count = int(rng.integers(2, 4))
    curvature = float(rng.uniform(-MAX_BEND_CURVATURE, MAX_BEND_CURVATURE))
    if template is RoadTemplate.INTERSECTION:
        road = intersection_road(lane_count, ROAD_LENGTH, SPEED_LIMIT)
    else:
        road = corridor_road(lane_count, ROAD_LENGTH, SPEED_LIMIT, bend_curvature=curvature, bend_length=BEND_LENGTH)
    main = road.corridor(MAIN_CORRIDOR)

    ego_lane = int(rng.integers(0, lane_count))
    target_lane = ego_lane + 1 if ego_lane + 1 < lane_count else ego_lane - 1
    ego_speed = float(rng.uniform(12.0, 20.0))
    ego = SpawnSpec(
        EGO_ID,
        ParticipantKind.CAR,
        main.id,
        ego_lane,
        EGO_S0,
        ego_speed,
        min(SPEED_LIMIT, ego_speed + float(rng.uniform(0.0, 3.0))),
        Behavior.EGO,
    )
    target_speed = ego_speed - float(rng.uniform(0.0, 3.0))
    target = SpawnSpec(
        TARGET_ID,
        ParticipantKind.CAR,
        main.id,
        target_lane,
        EGO_S0 + float(rng.uniform(15.0, 30.0)),
        target_speed,
        target_speed,
        Behavior.BACKGROUND,
    )
    car_length, _ = ParticipantKind.CAR.default_dimensions
    placed: dict[int, list] = {
        ego_lane: [(ego.s0, car_length, ego.speed)],
        target_lane: [(target.s0, car_length, target.speed)],
    }
    agents = [ego, target] + _background(rng, main, demand, placed, 0)

    if template is RoadTemplate.INTERSECTION:
        crossing_s = road.corridor(CROSS_CORRIDOR).length / 2

        def near_crossing(s: float) -> bool:
            return abs(s - crossing_s) < main.half_width + INTERSECTION_CLEARANCE

        agents += _background(rng, road.corridor(CROSS_CORRIDOR), demand, {}, len(agents) - 2, near_crossing)

    event, road, extra = _event(family, seed, road, ego)
    logger.debug("Scenario %s (%s, %s) drawn with %s participants.", seed, family.value, demand.value, len(agents))
    return ScenarioSpec(seed, road, tuple(agents + extra), family, event=event, demand=demand)


def save_scenario(file_path: str, spec: ScenarioSpec) -> str:
    """
    Write a scenario as versioned JSON.

    @param file_path: Target file.
    @param spec: The scenario.
    @return: The written path.
    """
    return write_json(file_path, spec.to_dict())


def load_scenario(file_path: str) -> ScenarioSpec:
    """
    Read a scenario file.

    @param file_path: Source file.
    @return: The scenario.
    @raise ScenarioLoadException: When the file is missing, malformed, of another schema version or describes
    an invalid scene.
    """
    try:
        scenario_json = read_json(file_path)
        version = scenario_json.get("schema_version")
        if version != SCENARIO_SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {version}")
        spec = ScenarioSpec.from_dict(scenario_json)
    except OSError as e:
        logger.error("Cannot read scenario file `%s`: %s.", file_path, e)
        raise ScenarioLoadException(f"Cannot read scenario file {file_path}.") from e
    except (json.JSONDecodeError, AttributeError, KeyError, TypeError, ValueError, PoraRiskEngineException) as e:
        logger.error("Malformed scenario file `%s`: %s.", file_path, e)
        raise ScenarioLoadException(f"Malformed scenario file {file_path}.") from e
    logger.debug("Scenario %s loaded from `%s`.", spec.seed, file_path)
    return spec


def with_penetration(spec: ScenarioSpec, level: float) -> ScenarioSpec:
    """
    Hand a fraction of the background motor vehicles to the AV controller. The selection is a seeded
    permutation of the candidates, so a higher level always extends the selection of a lower one. Vehicles
    already controller-driven count as candidates, which makes re-applying a level a no-op.

    @param spec: The scenario.
    @param level: Fraction in [0, 1]; the count is rounded half up.
    @return: The scenario with the chosen vehicles controller-driven.
    """
    target = spec.event.target if spec.event is not None else None
    candidates = [
        i
        for i, a in enumerate(spec.agents)
        if a.behavior in (Behavior.BACKGROUND, Behavior.CONTROLLER) and a.kind.is_motor_vehicle and a.id != target
    ]
    count = int(math.floor(level * len(candidates) + 0.5))
    order = substream(spec.seed, PENETRATION_STREAM).permutation(len(candidates))
    chosen = {candidates[int(k)] for k in order[:count]}
    eligible = set(candidates)
    agents = tuple(
        a.with_behavior(Behavior.CONTROLLER if i in chosen else Behavior.BACKGROUND) if i in eligible else a
        for i, a in enumerate(spec.agents)
    )
    return spec.with_agents(agents, level)


def make_penetration_sweep(base: ScenarioSpec, levels: Sequence[float], episodes_per_level: int) -> list[ScenarioSpec]:
    """
    Scenarios of a penetration sweep: for every level, episodes_per_level seeds counted up from the base seed.
    A generated base is re-drawn for every seed; a hand-written one keeps its participants.

    @param base: The base scenario.
    @param levels: Penetration levels in [0, 1].
    @param episodes_per_level: Episodes per level, at least 1.
    @return: The scenarios, level by level.
    @raise InvalidParameterError: When a level lies outside [0, 1] or no episode is requested.
    """
    if any(not 0.0 <= level <= 1.0 for level in levels):
        logger.error("Penetration levels must lie in [0, 1], got %s.", list(levels))
        raise InvalidParameterError(f"Penetration levels must lie in [0, 1], got {list(levels)}.")
    if episodes_per_level < 1:
        logger.error("At least one episode per level is needed, got %s.", episodes_per_level)
        raise InvalidParameterError(f"At least one episode per level is needed, got {episodes_per_level}.")

    template = base.road.template if base.road.template is not None else RoadTemplate.CORRIDOR
    scenarios = []
    for level in levels:
        for episode in range(episodes_per_level):
            seed = base.seed + episode
            if base.demand is not None:
                scenario = make_scenario(base.family, seed, base.demand, template)
            else:
                scenario = base.with_seed(seed)
            scenarios.append(with_penetration(scenario, level))
    logger.debug("Penetration sweep of %s levels x %s episodes built.", len(levels), episodes_per_level)
    return scenarios
