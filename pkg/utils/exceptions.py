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
This module contains custom exceptions for this project
"""


class PoraRiskEngineException(Exception):
    """Base class for exceptions in this project."""


class InvalidGeometryError(PoraRiskEngineException):
    """Raised when a pose, velocity or box violates its invariants."""


class InvalidAgentStateError(PoraRiskEngineException):
    """Raised when an agent state is non-finite or otherwise unusable."""


class InvalidGridError(PoraRiskEngineException):
    """Raised when a grid spec or occupancy grid violates its invariants."""


class GridFormatError(PoraRiskEngineException):
    """Raised when a grid file cannot be parsed."""


class WindowMismatchError(PoraRiskEngineException):
    """Raised when a grid does not match the safety-box window it is combined with."""


class NoSurroundingParticipantsError(PoraRiskEngineException):
    """Raised when a safety box is requested without any surrounding participant."""


class TimestepOrderError(PoraRiskEngineException):
    """Raised when the previous timestep is not strictly before the current one."""


class MisalignedTimestampError(PoraRiskEngineException):
    """Raised when grid timestamps do not match the planned trajectory samples."""


class InvalidParameterError(PoraRiskEngineException):
    """Raised when a numeric parameter is out of its allowed range."""


class RoadGeometryError(PoraRiskEngineException):
    """Raised when the road description of a scenario is ill-formed."""


class ScenarioLoadException(PoraRiskEngineException):
    """Raised when a scenario file cannot be read or parsed."""


class EmptySampleError(PoraRiskEngineException):
    """Raised when a statistic is requested over an empty sample."""


class ConfigurationError(PoraRiskEngineException):
    """Raised when the resolved run configuration is invalid."""
