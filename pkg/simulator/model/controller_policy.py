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
This module contains the threshold controller policy and the reward weights of the simulated AV.
"""

import logging
import math
from typing import Optional

from utils.constants import (
    DEFAULT_ALPHA,
    DEFAULT_BRAKE_ABOVE,
    DEFAULT_DELTA,
    DEFAULT_GAMMA,
    DEFAULT_MAX_ACCEL,
    DEFAULT_MAX_DECEL,
    DEFAULT_PROCEED_BELOW,
    DEFAULT_REPLAN_DECEL,
    PolicyAction,
)
from utils.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class ControllerPolicy:
    """
    A class representing the threshold policy: proceed below the first threshold, brake above the second and
    replan (a comfortable deceleration) in between.
    """

    def __init__(
        self,
        proceed_below: float = DEFAULT_PROCEED_BELOW,
        brake_above: float = DEFAULT_BRAKE_ABOVE,
        replan_decel: float = DEFAULT_REPLAN_DECEL,
        max_decel: float = DEFAULT_MAX_DECEL,
        max_accel: float = DEFAULT_MAX_ACCEL,
    ):
        errors = []
        if not 0.0 <= proceed_below <= brake_above <= 1.0:
            errors.append(f"thresholds must satisfy 0 <= {proceed_below} <= {brake_above} <= 1")
        for name, value in (("replan_decel", replan_decel), ("max_decel", max_decel), ("max_accel", max_accel)):
            if not math.isfinite(value) or value < 0:
                errors.append(f"{name} must be >= 0, got {value}")
        if replan_decel > max_decel:
            errors.append(f"replan_decel {replan_decel} exceeds max_decel {max_decel}")
        if errors:
            for error in errors:
                logger.error("Invalid controller policy: %s.", error)
            raise InvalidParameterError("; ".join(errors))

        self.__proceed_below: float = float(proceed_below)
        self.__brake_above: float = float(brake_above)
        self.__replan_decel: float = float(replan_decel)
        self.__max_decel: float = float(max_decel)
        self.__max_accel: float = float(max_accel)

    @property
    def proceed_below(self) -> float:
        """Getter of the risk under which the planned trajectory is kept."""
        return self.__proceed_below

    @property
    def brake_above(self) -> float:
        """Getter of the risk over which the controller brakes."""
        return self.__brake_above

    @property
    def replan_decel(self) -> float:
        """Getter of the deceleration applied in the middle band, m/s^2."""
        return self.__replan_decel

    @property
    def max_decel(self) -> float:
        """Getter of the braking deceleration, m/s^2."""
        return self.__max_decel

    @property
    def max_accel(self) -> float:
        """Getter of the acceleration bound, m/s^2."""
        return self.__max_accel

    def decide(self, risk: float) -> PolicyAction:
        """
        Pick the action for a risk score.

        @param risk: Risk in [0, 1].
        @return: PROCEED, REPLAN or BRAKE.
        """
        if risk < self.__proceed_below:
            return PolicyAction.PROCEED
        if risk > self.__brake_above:
            return PolicyAction.BRAKE
        return PolicyAction.REPLAN

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "proceed_below": self.__proceed_below,
            "brake_above": self.__brake_above,
            "replan_decel": self.__replan_decel,
            "max_decel": self.__max_decel,
            "max_accel": self.__max_accel,
        }

    @staticmethod
    def load_from_json(policy_json: dict) -> Optional["ControllerPolicy"]:
        """
        Load the policy from a JSON object; missing keys take their defaults.

        @param policy_json: The JSON object.
        @return: The policy, or None when the object is malformed.
        """
        try:
            return ControllerPolicy(
                float(policy_json.get("proceed_below", DEFAULT_PROCEED_BELOW)),
                float(policy_json.get("brake_above", DEFAULT_BRAKE_ABOVE)),
                float(policy_json.get("replan_decel", DEFAULT_REPLAN_DECEL)),
                float(policy_json.get("max_decel", DEFAULT_MAX_DECEL)),
                float(policy_json.get("max_accel", DEFAULT_MAX_ACCEL)),
            )
        except (AttributeError, TypeError, ValueError, InvalidParameterError) as e:
            logger.error("The controller policy JSON input is malformed: %s.", e, exc_info=True)
        return None


class RewardWeights:
    """
    Weights of the per-tick reward r = -alpha * T - delta * C - gamma * R (travel time, conflicts, risk).
    """

    def __init__(self, alpha: float = DEFAULT_ALPHA, delta: float = DEFAULT_DELTA, gamma: float = DEFAULT_GAMMA):
        for name, value in (("alpha", alpha), ("delta", delta), ("gamma", gamma)):
            if not math.isfinite(value) or value < 0:
                logger.error("Reward weight %s must be >= 0, got %s.", name, value)
                raise InvalidParameterError(f"Reward weight {name} must be >= 0, got {value}.")
        self.__alpha: float = float(alpha)
        self.__delta: float = float(delta)
        self.__gamma: float = float(gamma)

    @property
    def alpha(self) -> float:
        """Getter of the travel-time weight."""
        return self.__alpha

    @property
    def delta(self) -> float:
        """Getter of the conflict weight."""
        return self.__delta

    @property
    def gamma(self) -> float:
        """Getter of the risk weight."""
        return self.__gamma

    def reward(self, travel_time: float, conflicts: int, risk: float) -> float:
        """The reward of one tick."""
        return -self.__alpha * travel_time - self.__delta * conflicts - self.__gamma * risk

    def to_dict(self) -> dict:
        """Serializable form."""
        return {"alpha": self.__alpha, "delta": self.__delta, "gamma": self.__gamma}
