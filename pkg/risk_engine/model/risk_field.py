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
This module contains the per-cell sub-fields of one PORA evaluation step.
"""

import logging
from typing import Optional

import numpy as np

from grid.model.grid_spec import GridSpec
from risk_engine.cox import cox_adjust
from utils.exceptions import WindowMismatchError

logger = logging.getLogger(__name__)

RISK_SUB_FIELDS = ("p_occ", "p_coll_given_occ", "p_coll", "delta_p", "risk_norm")


class RiskField:
    """
    The AV-centered fields of step k: occupancy P(O), conditional collision probability P(C|O),
    collision probability P(C), occupancy change dP(O) (zero at k = 1) and the normalized adjusted risk.
    """

    def __init__(
        self,
        spec: GridSpec,
        t: float,
        k: int,
        beta: float,
        p_occ: np.ndarray,
        p_coll_given_occ: np.ndarray,
        delta_p: np.ndarray,
        risk_norm: np.ndarray,
    ):
        fields = {"p_occ": p_occ, "p_coll_given_occ": p_coll_given_occ, "delta_p": delta_p, "risk_norm": risk_norm}
        for name, values in fields.items():
            if np.shape(values) != spec.shape:
                logger.error("Risk sub-field %s has shape %s, window is %s.", name, np.shape(values), spec.shape)
                raise WindowMismatchError(f"Risk sub-field {name} does not match the window.")

        self.__spec: GridSpec = spec
        self.__t: float = float(t)
        self.__k: int = int(k)
        self.__beta: float = float(beta)
        self.__p_occ: np.ndarray = self.__frozen(p_occ)
        self.__p_coll_given_occ: np.ndarray = self.__frozen(p_coll_given_occ)
        self.__p_coll: np.ndarray = self.__frozen(self.__p_coll_given_occ * self.__p_occ)
        self.__delta_p: np.ndarray = self.__frozen(delta_p)
        self.__risk_norm: np.ndarray = self.__frozen(risk_norm)

    @staticmethod
    def __frozen(values: np.ndarray) -> np.ndarray:
        array = np.array(values, dtype=float)
        array.setflags(write=False)
        return array

    @property
    def spec(self) -> GridSpec:
        """Getter of the safety-box window geometry."""
        return self.__spec

    @property
    def t(self) -> float:
        """Getter of the step timestamp."""
        return self.__t

    @property
    def k(self) -> int:
        """Getter of the 1-based step index."""
        return self.__k

    @property
    def beta(self) -> float:
        """Getter of the Cox coefficient the adjusted risk was computed with."""
        return self.__beta

    @property
    def p_occ(self) -> np.ndarray:
        """Getter of P(O)."""
        return self.__p_occ

    @property
    def p_coll_given_occ(self) -> np.ndarray:
        """Getter of P(C|O)."""
        return self.__p_coll_given_occ

    @property
    def p_coll(self) -> np.ndarray:
        """Getter of P(C) = P(C|O) * P(O)."""
        return self.__p_coll

    @property
    def delta_p(self) -> np.ndarray:
        """Getter of dP(O)."""
        return self.__delta_p

    @property
    def risk_norm(self) -> np.ndarray:
        """Getter of the normalized adjusted risk."""
        return self.__risk_norm

    @property
    def score(self) -> float:
        """The PORA score: the maximum normalized adjusted risk over the window."""
        return float(np.max(self.__risk_norm)) if self.__risk_norm.size else 0.0

    @property
    def unadjusted_score(self) -> float:
        """The maximum collision probability without Cox adjustment."""
        return float(np.max(self.__p_coll)) if self.__p_coll.size else 0.0

    def sub_fields(self) -> dict[str, np.ndarray]:
        """All sub-fields by name."""
        return {name: getattr(self, name) for name in RISK_SUB_FIELDS}

    def rescore(self, beta: float, k: Optional[int] = None) -> "RiskField":
        """
        Re-apply the Cox adjustment with another coefficient, keeping the extracted grids.

        @param beta: The new coefficient (>= 0).
        @param k: Optional step index override.
        @return: A new field.
        """
        step = self.__k if k is None else k
        risk = cox_adjust(self.__p_coll, self.__delta_p, beta, step)
        return RiskField(
            self.__spec, self.__t, step, beta, self.__p_occ, self.__p_coll_given_occ, self.__delta_p, risk
        )

    def __repr__(self):
        return f"RiskField(t={self.__t}, k={self.__k}, beta={self.__beta}, score={self.score})"
