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
This module contains the Cox dynamic adjustment of collision probabilities and its normalization.
"""

import logging
from typing import Union

import numpy as np

from risk_engine.model.cox_params import CoxParams
from utils.exceptions import InvalidParameterError, WindowMismatchError

logger = logging.getLogger(__name__)


def cox_adjust(p_coll: np.ndarray, delta_p: np.ndarray, beta: Union[CoxParams, float], k: int) -> np.ndarray:
    """
    Scale the collision probability by exp(beta * delta_p) and normalize by exp(beta), which gives
    p_coll * exp(beta * (delta_p - 1)). The first step of a trajectory has no previous grid and passes
    p_coll through unchanged.

    @param p_coll: Per-cell collision probability P(C).
    @param delta_p: Per-cell occupancy change, same shape.
    @param beta: The hazard coefficient.
    @param k: 1-based step index along the trajectory.
    @return: The normalized adjusted risk per cell, in [0, 1].
    @raise InvalidParameterError: When beta < 0 or k < 1.
    @raise WindowMismatchError: When the two fields differ in shape.
    """
    cox = beta if isinstance(beta, CoxParams) else CoxParams(float(beta))
    if k < 1:
        logger.error("Step index must be >= 1, got %s.", k)
        raise InvalidParameterError(f"Step index must be >= 1, got {k}.")
    p_coll = np.asarray(p_coll, dtype=float)
    if k == 1:
        return p_coll.copy()

    delta_p = np.asarray(delta_p, dtype=float)
    if p_coll.shape != delta_p.shape:
        logger.error("Cox fields differ in shape: %s vs %s.", p_coll.shape, delta_p.shape)
        raise WindowMismatchError(f"Cox fields differ in shape: {p_coll.shape} vs {delta_p.shape}.")
    return np.clip(p_coll * np.exp(cox.beta * (delta_p - 1.0)), 0.0, 1.0)
