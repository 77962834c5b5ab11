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
This module contains the episode simulator: seeded kinematic traffic on the scenario road, the scripted rare
event, the threshold-policy AV controller and the conflict, collision and reward bookkeeping.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from core_types.geometry import obb_overlap_many
from core_types.model.agent_state import AgentState
from core_types.model.pose import Pose2, Velocity2
from predictor.model.predictor_config import PredictorConfig
from risk_engine.model.risk_params import RiskParams
from simulator.metric_signal import corridor_plan, metric_signal
from simulator.model.controller_policy import ControllerPolicy, RewardWeights
from simulator.model.episode_report import EpisodeReport, TrajectoryRow
from simulator.model.road_geometry import Corridor
from simulator.model.scenario_spec import ScenarioSpec
from simulator.model.spawn_spec import EventSpec, SpawnSpec
from surrogates.ttc import min_ttc2_over_agents
from utils.constants import (
    BACKGROUND_ACCEL_NOISE,
    CONFLICT_TTC_THRESHOLD,
    DEFAULT_MAX_ACCEL,
    DEFAULT_MAX_DECEL,
    FREE_FLOW_GAIN,
    GAP_KEEPING_GAIN,
    GAP_KEEPING_HEADWAY,
    MIN_STANDSTILL_GAP,
    NOISE_STREAM,
    PERCEPTION_RADIUS,
    SPEED_MATCHING_GAIN,
    Behavior,
    Metric,
    Outcome,
    PolicyAction,
    ScenarioFamily,
)
from utils.exceptions import InvalidAgentStateError
from utils.utils import substream

logger = logging.getLogger(__name__)

CONTROLLED_BEHAVIORS = (Behavior.EGO, Behavior.CONTROLLER)
Leader = tuple[float, float]


@dataclass
class Actor:  # pylint: disable=too-many-instance-attributes
    """
    Mutable simulation state of one participant in corridor coordinates: arc length s, lateral offset d,
    longitudinal and lateral speeds and the commanded acceleration.
    """

    spawn: SpawnSpec
    corridor: Corridor
    s: float
    d: float
    v: float
    vd: float = 0.0
    a: float = 0.0
    home_d: float = 0.0
    cutin_at: Optional[float] = None

    @property
    def controlled(self) -> bool:
        """True for the ego and for controller-driven vehicles."""
        return self.spawn.behavior in CONTROLLED_BEHAVIORS

    def state(self) -> AgentState:
        """World state of the participant."""
        reference = self.corridor.pose_at(self.s, self.d)
        heading = reference.heading + math.atan2(self.vd, self.v)
        return AgentState.from_kind(
            self.spawn.id,
            self.spawn.kind,
            Pose2(reference.x, reference.y, heading),
            Velocity2.along(heading, math.hypot(self.v, self.vd)),
            acceleration=self.a,
            yaw_rate=self.v * self.corridor.curvature_at(self.s),
            dimensions=self.spawn.dimensions,
        )

    def integrate(self, dt: float) -> None:
        """Advance one tick; the speed stays within [0, speed limit]."""
        self.v = min(self.corridor.speed_limit, max(0.0, self.v + self.a * dt))
        self.s += self.v * dt
        self.d += self.vd * dt


def background_acceleration(speed: float, desired_speed: float, leader: Optional[Leader]) -> float:
    """
    Gap-keeping car following: relax towards the desired speed, and when the bumper gap to the leader is
    shorter than the standstill gap plus the time headway, close the gap error and match the leader's speed.

    @param speed: Own speed in m/s.
    @param desired_speed: Desired speed in m/s.
    @param leader: (bumper gap, leader speed along the own heading), or None without leader.
    @return: The acceleration in m/s^2, before noise and bounds.
    """
    free_flow = FREE_FLOW_GAIN * (desired_speed - speed)
    if leader is None:
        return free_flow
    gap, leader_speed = leader
    desired_gap = MIN_STANDSTILL_GAP + GAP_KEEPING_HEADWAY * speed
    if gap >= desired_gap:
        return free_flow
    return min(free_flow, GAP_KEEPING_GAIN * (gap - desired_gap) + SPEED_MATCHING_GAIN * (leader_speed - speed))


def controller_acceleration(
    action: PolicyAction, speed: float, desired_speed: float, policy: ControllerPolicy
) -> float:
    """
    Acceleration commanded by the threshold policy.

    @param action: The policy decision.
    @param speed: Own speed in m/s.
    @param desired_speed: Desired speed in m/s.
    @param policy: The controller policy.
    @return: The acceleration in m/s^2.
    """
    if action is PolicyAction.PROCEED:
        return min(policy.max_accel, max(-policy.max_decel, FREE_FLOW_GAIN * (desired_speed - speed)))
    if action is PolicyAction.REPLAN:
        return -policy.replan_decel
    return -policy.max_decel


def find_leaders(states: Sequence[AgentState], radius: float = PERCEPTION_RADIUS) -> list[Optional[Leader]]:
    """
    Nearest participant ahead of each participant whose body overlaps its lane of travel.

    @param states: All participant states.
    @param radius: Perception radius in meters.
    @return: Per participant, (bumper gap, leader speed along the follower heading) or None.
    """
    n = len(states)
    if n < 2:
        return [None] * n
    xy = np.array([[st.pose.x, st.pose.y] for st in states])
    heading = np.array([st.pose.heading for st in states])
    half = np.array([[st.box.half_length, st.box.half_width] for st in states])
    velocity = np.array([[st.velocity.vx, st.velocity.vy] for st in states])

    ux, uy = np.cos(heading)[:, None], np.sin(heading)[:, None]
    dx = xy[None, :, 0] - xy[:, None, 0]
    dy = xy[None, :, 1] - xy[:, None, 1]
    forward = ux * dx + uy * dy
    lateral = -uy * dx + ux * dy
    relative = heading[None, :] - heading[:, None]
    cos_r, sin_r = np.abs(np.cos(relative)), np.abs(np.sin(relative))
    along = half[None, :, 0] * cos_r + half[None, :, 1] * sin_r
    across = half[None, :, 0] * sin_r + half[None, :, 1] * cos_r

    ahead = (forward > 0) & (np.abs(lateral) < half[:, None, 1] + across) & (np.hypot(dx, dy) <= radius)
    np.fill_diagonal(ahead, False)
    gap = forward - half[:, None, 0] - along
    leader_speed = ux * velocity[None, :, 0] + uy * velocity[None, :, 1]

    leaders: list[Optional[Leader]] = []
    for i in range(n):
        if not ahead[i].any():
            leaders.append(None)
            continue
        j = int(np.argmin(np.where(ahead[i], forward[i], np.inf)))
        leaders.append((float(gap[i, j]), float(leader_speed[i, j])))
    return leaders


def collision_count(states: Sequence[AgentState], controlled: Sequence[int]) -> int:
    """
    Number of overlapping participant pairs involving a controlled vehicle (touching counts).

    @param states: All participant states.
    @param controlled: Indices of the controlled vehicles.
    @return: The number of distinct overlapping pairs.
    """
    pairs = [(i, j) for i in controlled for j in range(len(states)) if j != i and not (j in controlled and j < i)]
    if not pairs:
        return 0
    a = [states[i] for i, _ in pairs]
    b = [states[j] for _, j in pairs]
    hits = obb_overlap_many(
        np.array([[st.pose.x, st.pose.y] for st in a]),
        np.array([st.pose.heading for st in a]),
        np.array([[st.box.half_length, st.box.half_width] for st in a]),
        np.array([[st.pose.x, st.pose.y] for st in b]),
        np.array([st.pose.heading for st in b]),
        np.array([[st.box.half_length, st.box.half_width] for st in b]),
    )
    return int(np.count_nonzero(hits))


def _conflict_ttc(states: Sequence[AgentState], controlled: Sequence[int]) -> Optional[float]:
    values = []
    for i in controlled:
        others = [st for j, st in enumerate(states) if j != i]
        result = min_ttc2_over_agents(states[i], others, horizon=CONFLICT_TTC_THRESHOLD)
        if result.value is not None:
            values.append(result.value)
    return min(values) if values else None


class EpisodeRunner:  # pylint: disable=too-many-instance-attributes
    """
    One episode of a scenario. Each tick checks for collisions, evaluates the metric of every controlled vehicle,
    registers conflicts, books the reward, decides the accelerations and integrates.
    """

    def __init__(  # pylint: disable=too-many-arguments,too-many-positional-arguments
        self,
        spec: ScenarioSpec,
        metric: Metric,
        policy: ControllerPolicy,
        risk_params: RiskParams,
        predictor_config: PredictorConfig,
        weights: RewardWeights,
        shadow_metrics: Sequence[Metric] = (),
        record_trajectory: bool = False,
    ):
        self.__spec = spec
        self.__metric = metric
        self.__policy = policy
        self.__risk_params = risk_params
        self.__predictor_config = predictor_config
        self.__weights = weights
        self.__shadow_metrics = tuple(m for m in shadow_metrics if m is not metric)
        self.__record_trajectory = record_trajectory

        self.__actors: list[Actor] = []
        for spawn in spec.agents:
            corridor = spec.road.corridor(spawn.corridor)
            d = corridor.lane_offset(spawn.lane)
            self.__actors.append(Actor(spawn, corridor, spawn.s0, d, min(spawn.speed, corridor.speed_limit), home_d=d))
        self.__ego = next(i for i, a in enumerate(self.__actors) if a.spawn.behavior is Behavior.EGO)
        self.__controlled = [i for i, a in enumerate(self.__actors) if a.controlled]
        self.__noise = {
            i: substream(spec.seed, NOISE_STREAM, i)
            for i, a in enumerate(self.__actors)
            if a.spawn.behavior is Behavior.BACKGROUND
        }
        event = spec.event
        self.__event: Optional[EventSpec] = event if event is not None and not event.is_null else None
        self.__target: Optional[int] = None
        if self.__event is not None:
            self.__target = next(i for i, a in enumerate(self.__actors) if a.spawn.id == self.__event.target)

    def run(self) -> EpisodeReport:
        """
        Simulate until the duration, the ego goal or a crash.

        @return: The episode report.
        @raise InvalidAgentStateError: When a controlled vehicle overlaps another participant at the start.
        """
        spec, dt = self.__spec, self.__spec.tick_dt
        logger.debug("Episode %s (%s) - started.", spec.seed, spec.family.value)

        metric_trace: list[tuple[float, float]] = []
        reward_trace: list[tuple[float, float]] = []
        ttc2_trace: list[tuple[float, Optional[float]]] = []
        shadow_traces: dict[str, list[tuple[float, float]]] = {m.value: [] for m in self.__shadow_metrics}
        rows: list[TrajectoryRow] = []
        outcome, collisions, conflicts, crash_time = Outcome.SAFE, 0, 0, None
        below, t = False, 0.0

        for tick in range(spec.ticks + 1):
            t = tick * dt
            states = [actor.state() for actor in self.__actors]
            if self.__record_trajectory:
                rows.extend(self._rows(t, states))

            hits = collision_count(states, self.__controlled)
            if hits and tick == 0:
                logger.error("Episode %s starts with a controlled vehicle in contact.", spec.seed)
                raise InvalidAgentStateError(f"Episode {spec.seed} starts with a controlled vehicle in contact.")
            if hits:
                outcome, collisions, crash_time = Outcome.CRASH, hits, t
                break
            if tick == spec.ticks or self._goal_reached():
                break

            risks = self._risks(t, states)
            metric_trace.append((t, risks[self.__ego]))
            for shadow in self.__shadow_metrics:
                shadow_traces[shadow.value].append((t, self._signal(shadow, self.__ego, t, states)))

            ttc = _conflict_ttc(states, self.__controlled)
            ttc2_trace.append((t, ttc))
            now_below = ttc is not None and ttc < CONFLICT_TTC_THRESHOLD
            new_conflict = int(now_below and not below)
            conflicts += new_conflict
            below = now_below
            reward_trace.append((t, self.__weights.reward(dt, new_conflict, risks[self.__ego])))

            self._decide(t, states, risks)
            for actor in self.__actors:
                actor.integrate(dt)

        logger.debug("Episode %s - finished: %s after %s s.", spec.seed, outcome.value, t)
        return EpisodeReport(
            seed=spec.seed,
            family=spec.family,
            metric=self.__metric,
            outcome=outcome,
            conflicts=conflicts,
            collisions=collisions,
            travel_time=t,
            metric_trace=tuple(metric_trace),
            reward_trace=tuple(reward_trace),
            ttc2_trace=tuple(ttc2_trace),
            shadow_traces={name: tuple(trace) for name, trace in shadow_traces.items()},
            crash_time=crash_time,
            av_penetration=spec.av_penetration,
            trajectory=tuple(rows),
        )

    @staticmethod
    def _rows(t: float, states: Sequence[AgentState]) -> list[TrajectoryRow]:
        return [
            (
                t,
                st.id,
                st.kind.value,
                st.pose.x,
                st.pose.y,
                st.pose.heading,
                st.velocity.vx,
                st.velocity.vy,
                st.acceleration,
                st.box.length,
                st.box.width,
            )
            for st in states
        ]

    def _goal_reached(self) -> bool:
        goal = self.__spec.goal_s
        return goal is not None and self.__actors[self.__ego].s >= goal

    def _signal(self, metric: Metric, index: int, t: float, states: Sequence[AgentState]) -> float:
        actor = self.__actors[index]
        plan = corridor_plan(actor.corridor, actor.s, actor.d, actor.v, t, self.__predictor_config)
        others = [st for j, st in enumerate(states) if j != index]
        return metric_signal(metric, states[index], others, plan, t, self.__risk_params, self.__predictor_config)

    def _risks(self, t: float, states: Sequence[AgentState]) -> dict[int, float]:
        return {i: self._signal(self.__metric, i, t, states) for i in self.__controlled}

    def _decide(self, t: float, states: Sequence[AgentState], risks: dict[int, float]) -> None:
        leaders = find_leaders(states)
        for i, actor in enumerate(self.__actors):
            behavior = actor.spawn.behavior
            if behavior in CONTROLLED_BEHAVIORS:
                action = self.__policy.decide(risks[i])
                actor.a = controller_acceleration(action, actor.v, actor.spawn.desired_speed, self.__policy)
                actor.vd = 0.0
            elif behavior is Behavior.BACKGROUND:
                noise = float(self.__noise[i].normal(0.0, BACKGROUND_ACCEL_NOISE))
                law = background_acceleration(actor.v, actor.spawn.desired_speed, leaders[i]) + noise
                actor.a = min(DEFAULT_MAX_ACCEL, max(-DEFAULT_MAX_DECEL, law))
            elif behavior is Behavior.PEDESTRIAN:
                actor.a = 0.0
                if actor.s >= actor.corridor.length:
                    actor.v = 0.0
            else:
                actor.a, actor.v, actor.vd = 0.0, 0.0, 0.0
            if i == self.__target:
                self._apply_event(actor, t)

    def _apply_event(self, actor: Actor, t: float) -> None:
        event, family = self.__event, self.__spec.family
        if event is None or t < event.trigger_time:
            if family is ScenarioFamily.PEDESTRIAN_VIOLATION:
                actor.v = 0.0
            return

        ego_d = self.__actors[self.__ego].home_d
        dt = self.__spec.tick_dt
        if family is ScenarioFamily.BRAKE_CUTIN:
            if actor.cutin_at is None:
                if not _steer_towards(actor, ego_d, event.lateral_speed, dt):
                    return
                actor.cutin_at = t
            if t < actor.cutin_at + event.duration:
                actor.a = -min(event.magnitude, DEFAULT_MAX_DECEL)
        elif family is ScenarioFamily.LANE_INCURSION:
            if t < event.trigger_time + event.duration:
                actor.vd = math.copysign(event.magnitude, ego_d - actor.home_d)
                limit = actor.corridor.half_width - actor.spawn.dimensions[1] / 2
                if abs(actor.d + actor.vd * dt) > limit:
                    actor.vd = 0.0
            else:
                _steer_towards(actor, actor.home_d, event.magnitude, dt)
        elif family is ScenarioFamily.PEDESTRIAN_VIOLATION:
            actor.v = 0.0 if actor.s >= actor.corridor.length else min(event.magnitude, actor.corridor.speed_limit)


def _steer_towards(actor: Actor, target_d: float, lateral_speed: float, dt: float) -> bool:
    """Set the lateral speed towards target_d; True once the actor is settled there."""
    remaining = target_d - actor.d
    if lateral_speed <= 0 or abs(remaining) <= lateral_speed * dt:
        actor.d, actor.vd = target_d, 0.0
        return True
    actor.vd = math.copysign(lateral_speed, remaining)
    return False


def run_episode(  # pylint: disable=too-many-arguments,too-many-positional-arguments
    spec: ScenarioSpec,
    metric: Metric = Metric.PORA,
    policy: Optional[ControllerPolicy] = None,
    risk_params: Optional[RiskParams] = None,
    predictor_config: Optional[PredictorConfig] = None,
    weights: Optional[RewardWeights] = None,
    shadow_metrics: Sequence[Metric] = (),
    record_trajectory: bool = False,
) -> EpisodeReport:
    """
    Simulate one episode. The result depends only on the arguments.

    @param spec: The scenario.
    @param metric: The metric driving the controlled vehicles.
    @param policy: The threshold policy, defaults when None.
    @param risk_params: Risk parameters of the PORA metrics, defaults when None.
    @param predictor_config: Occupancy predictor settings of the PORA metrics, defaults when None.
    @param weights: Reward weights, defaults when None.
    @param shadow_metrics: Metrics evaluated for the ego alongside, without acting on them.
    @param record_trajectory: Keep every participant state of every tick in the report.
    @return: The episode report.
    @raise InvalidAgentStateError: When a controlled vehicle starts in contact with another participant.
    """
    return EpisodeRunner(
        spec,
        metric,
        policy if policy is not None else ControllerPolicy(),
        risk_params if risk_params is not None else RiskParams(),
        predictor_config if predictor_config is not None else PredictorConfig(),
        weights if weights is not None else RewardWeights(),
        shadow_metrics,
        record_trajectory,
    ).run()
