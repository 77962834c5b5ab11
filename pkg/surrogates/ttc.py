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
This module contains the time-to-collision surrogate safety measures.

TTC-1 is the first-order lead-follow measure: bumper gap over closing speed along the follower's axis.
TTC-2 propagates both participants with a fixed steering wheel and steady pedal (constant acceleration and
yaw rate) and finds the first time their footprints touch by stepping followed by bisection.
"""

import logging
import math
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from core_types.geometry import obb_overlap_many
from core_types.model.agent_state import AgentState
from surrogates.model.ttc_result import TtcResult
from utils.constants import DEFAULT_TTC_DT, DEFAULT_TTC_HORIZON, TTC_BISECTION_TOLERANCE, TTC_RISK_HORIZON_CAP
from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


def ttc1(follower: AgentState, leader: AgentState) -> TtcResult:
    """
    First-order time to collision of a follower behind a leader.

    @param follower: The following participant; its heading defines the projection axis.
    @param leader: The leading participant.
    @return: gap / closing speed, or none when the pair is not closing, not ahead or not laterally overlapping.
    """
    pair = (follower.id, leader.id)
    ux, uy = follower.pose.unit
    dx, dy = leader.pose.x - follower.pose.x, leader.pose.y - follower.pose.y
    center_gap = dx * ux + dy * uy
    lateral = -dx * uy + dy * ux
    if abs(lateral) >= (follower.box.width + leader.box.width) / 2:
        return TtcResult.none(pair)

    gap = center_gap - (follower.box.length + leader.box.length) / 2
    closing = (follower.velocity.vx - leader.velocity.vx) * ux + (follower.velocity.vy - leader.velocity.vy) * uy
    if gap <= 0 or closing <= 0:
        return TtcResult.none(pair)
    return TtcResult(gap / closing, pair)


def min_ttc1_over_agents(ego: AgentState, others: Sequence[AgentState]) -> TtcResult:
    """
    Smallest TTC-1 with the ego as follower.

    @param ego: The ego participant.
    @param others: Everybody else.
    @return: The minimum over pairs, none if every pair is none.
    """
    return _minimum(ttc1(ego, other) for other in others)


def _moving_time(speed: float, accel: float, t: np.ndarray) -> np.ndarray:
    if accel < 0:
        return np.minimum(t, speed / -accel)
    return t


def propagate(agent: AgentState, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Centers and headings of an agent under constant acceleration and constant yaw rate. A braking agent stops
    in place (and stops turning) instead of reversing.

    @param agent: The initial state.
    @param t: Times from now, in seconds.
    @return: ((N, 2) centers, (N,) headings).
    """
    t = np.asarray(t, dtype=float)
    speed, accel, omega = agent.speed, agent.acceleration, agent.yaw_rate
    direction = math.atan2(agent.velocity.vy, agent.velocity.vx) if speed > 0 else agent.pose.heading
    tm = _moving_time(speed, accel, t)

    # displacement = integral of (v0 + a s) e^{i (direction + omega s)} ds over [0, tm]
    if abs(omega) < 1e-9:
        displacement = (speed * tm + 0.5 * accel * tm * tm) * np.exp(1j * direction)
    else:
        rotation = np.exp(1j * omega * tm)
        io = 1j * omega
        displacement = np.exp(1j * direction) * (
            speed * (rotation - 1) / io + accel * (tm * rotation / io - (rotation - 1) / (io * io))
        )
    centers = np.stack([agent.pose.x + displacement.real, agent.pose.y + displacement.imag], axis=-1)
    return centers, agent.pose.heading + omega * tm


def overlap_at(a: AgentState, b: AgentState, t: np.ndarray) -> np.ndarray:
    """Whether the propagated footprints of two agents overlap at each of the given times."""
    centers_a, headings_a = propagate(a, t)
    centers_b, headings_b = propagate(b, t)
    return obb_overlap_many(
        centers_a,
        headings_a,
        np.array([[a.box.half_length, a.box.half_width]]),
        centers_b,
        headings_b,
        np.array([[b.box.half_length, b.box.half_width]]),
    )


def reach(agent: AgentState, horizon: float) -> float:
    """Longest path an agent can cover within the horizon under its current acceleration."""
    tm = float(_moving_time(agent.speed, agent.acceleration, np.array([horizon]))[0])
    return max(0.0, agent.speed * tm + 0.5 * agent.acceleration * tm * tm)


def _validate_stepping(dt: float, horizon: float) -> None:
    if not math.isfinite(dt) or dt <= 0 or not math.isfinite(horizon) or horizon <= 0:
        logger.error("TTC-2 needs dt > 0 and horizon > 0, got dt=%s, horizon=%s.", dt, horizon)
        raise InvalidParameterError(f"TTC-2 needs dt > 0 and horizon > 0, got dt={dt}, horizon={horizon}.")


def ttc2(a: AgentState, b: AgentState, dt: float = DEFAULT_TTC_DT, horizon: float = DEFAULT_TTC_HORIZON) -> TtcResult:
    """
    Second-order time to collision: the earliest time within the horizon at which the propagated footprints
    touch, located by stepping at dt and refined by bisection to 1e-4 s.

    @param a: First participant.
    @param b: Second participant.
    @param dt: Stepping interval in seconds.
    @param horizon: Look-ahead in seconds.
    @return: The first contact time, or none without contact (or when the pair already overlaps).
    @raise InvalidParameterError: When dt or horizon is not positive.
    """
    _validate_stepping(dt, horizon)
    pair = (a.id, b.id)
    if bool(overlap_at(a, b, np.array([0.0]))[0]):
        return TtcResult.none(pair)

    steps = int(math.ceil(horizon / dt - 1e-9))
    times = np.minimum(np.arange(1, steps + 1) * dt, horizon)
    hits = np.flatnonzero(overlap_at(a, b, times))
    if hits.size == 0:
        return TtcResult.none(pair)

    first = int(hits[0])
    lo = float(times[first - 1]) if first > 0 else 0.0
    hi = float(times[first])
    while hi - lo > TTC_BISECTION_TOLERANCE:
        mid = 0.5 * (lo + hi)
        if bool(overlap_at(a, b, np.array([mid]))[0]):
            hi = mid
        else:
            lo = mid
    return TtcResult(hi, pair)


def min_ttc2_over_agents(
    ego: AgentState,
    others: Sequence[AgentState],
    dt: float = DEFAULT_TTC_DT,
    horizon: float = DEFAULT_TTC_HORIZON,
) -> TtcResult:
    """
    Smallest TTC-2 between the ego and every other participant. Pairs that cannot come into contact within the
    horizon (center distance minus both circumradii beyond their combined reach) are skipped.

    @param ego: The ego participant.
    @param others: Everybody else.
    @param dt: Stepping interval in seconds.
    @param horizon: Look-ahead in seconds.
    @return: The minimum over pairs, none if every pair is none.
    """
    _validate_stepping(dt, horizon)
    ego_reach = reach(ego, horizon)
    results = []
    for other in others:
        clearance = (
            math.hypot(other.pose.x - ego.pose.x, other.pose.y - ego.pose.y)
            - ego.box.circumradius
            - other.box.circumradius
        )
        if clearance > ego_reach + reach(other, horizon) + 1e-9:
            continue
        results.append(ttc2(ego, other, dt, horizon))
    return _minimum(results)


def _minimum(results: Iterable[TtcResult]) -> TtcResult:
    best: Optional[TtcResult] = None
    for result in results:
        if result.value is None:
            continue
        if best is None or best.value is None or result.value < best.value:
            best = result
    return best if best is not None else TtcResult.none()


def ttc_to_risk(result: Union[TtcResult, float, None], horizon_cap: float = TTC_RISK_HORIZON_CAP) -> float:
    """
    Map a time to collision to a risk score so that every metric drives the same threshold policy.

    @param result: A TTC result or a plain value in seconds; None means no predicted collision.
    @param horizon_cap: TTC at and beyond which the risk is 0.
    @return: clamp(1 - ttc / horizon_cap, 0, 1), or 0 without predicted collision.
    """
    value = result.value if isinstance(result, TtcResult) else result
    if value is None:
        return 0.0
    return min(1.0, max(0.0, 1.0 - value / horizon_cap))
