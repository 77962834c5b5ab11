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
This module contains a data container for the outcome of a Cox coefficient calibration.
"""

import pandas as pd

from utils.constants import CalibrationProgram

CALIBRATION_COLUMNS = ["beta", "objective", "violation"]


class CalibrationResult:
    """
    A class representing the chosen Cox coefficient, whether it satisfies the program's constraints, and the
    objective and constraint violation recorded for every coefficient of the grid.
    """

    def __init__(self, program: CalibrationProgram, beta: float, feasible: bool, table: pd.DataFrame):
        self.__program: CalibrationProgram = program
        self.__beta: float = float(beta)
        self.__feasible: bool = bool(feasible)
        self.__table: pd.DataFrame = table[CALIBRATION_COLUMNS].reset_index(drop=True)

    @property
    def program(self) -> CalibrationProgram:
        """Getter of the calibration program."""
        return self.__program

    @property
    def beta(self) -> float:
        """Getter of the chosen coefficient."""
        return self.__beta

    @property
    def feasible(self) -> bool:
        """Getter of the feasibility flag."""
        return self.__feasible

    @property
    def table(self) -> pd.DataFrame:
        """Getter of the per-coefficient table (beta, objective, violation)."""
        return self.__table.copy()

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "program": self.__program.value,
            "beta": self.__beta,
            "feasible": self.__feasible,
            "table": self.__table.to_dict(orient="records"),
        }

    def __repr__(self):
        return f"CalibrationResult(program={self.__program.value}, beta={self.__beta}, feasible={self.__feasible})"
