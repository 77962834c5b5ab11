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
This module contains the stopping sight distance and the safety box construction around the AV.
"""

import logging
import math
from typing import Sequence

from core_types.model.oriented_box import OrientedBox
from risk_engine.model.safety_box import SafetyBox
from risk_engine.model.ssd_params import SsdParams
from utils.constants import GRAVITY, SSD_BRAKING_FACTOR, SSD_SPEED_FACTOR
from utils.exceptions import InvalidParameterError, NoSurroundingParticipantsError

logger = logging.getLogger(__name__)


def stopping_sight_distance(speed: float, p: SsdParams) -> float:
    """
    Distance covered during the perception-reaction time plus the braking distance at the design deceleration.

    @param speed: AV speed in km/h.
    @param p: Reaction time and deceleration rate.
    @return: The stopping sight distance in meters.
    @raise InvalidParameterError: When the speed is negative or not finite.
    """
    if not math.isfinite(speed) or speed < 0:
        logger.error("Speed must be >= 0 km/h, got %s.", speed)
        raise InvalidParameterError(f"Speed must be >= 0 km/h, got {speed}.")
    return SSD_SPEED_FACTOR * speed * p.reaction_time + speed * speed * GRAVITY / (SSD_BRAKING_FACTOR * p.decel_rate)


def build_safety_box(av: OrientedBox, av_speed: float, others: Sequence[OrientedBox], p: SsdParams) -> SafetyBox:
    """
    Size the safety box from the AV body, the surrounding participants and the stopping sight distance.

    width = w_AV + max l_n, length = l_AV + max l_n + SSD, sub_length = l_AV + min w_n, sub_width = w_AV + min w_n.
    The box reaches max l_n / 2 behind the AV body; the rest, including the whole SSD, extends forward.
    The sub-area is clamped to the box when min w_n exceeds max l_n.

    @param av: The AV footprint; its pose anchors the box.
    @param av_speed: AV speed in km/h.
    @param others: Footprints of the surrounding participants.
    @param p: Stopping-sight-distance parameters.
    @return: The safety box.
    @raise NoSurroundingParticipantsError: When there are no other participants.
    """
    if not others:
        logger.debug("Safety box requested without surrounding participants.")
        raise NoSurroundingParticipantsError("No surrounding participants.")

    max_length = max(o.length for o in others)
    min_width = min(o.width for o in others)
    ssd = stopping_sight_distance(av_speed, p)

    width = av.width + max_length
    length = av.length + max_length + ssd
    sub_length = min(av.length + min_width, length)
    sub_width = min(av.width + min_width, width)
    rear_extent = max(av.length / 2 + max_length / 2, sub_length / 2)
    return SafetyBox(width, length, sub_length, sub_width, av.center, rear_extent)
