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
This module contains the planned AV trajectory and its CSV form.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from core_types.model.pose import Pose2, Velocity2
from utils.constants import DT_TOLERANCE, TIMESTAMP_TOLERANCE
from utils.exceptions import InvalidGeometryError, ScenarioLoadException

logger = logging.getLogger(__name__)

TRAJECTORY_COLUMNS = ["t", "x", "y", "heading_deg", "vx", "vy"]


@dataclass(frozen=True)
class TrajectorySample:
    """One planned state."""

    t: float
    pose: Pose2
    velocity: Velocity2


class PlannedTrajectory:
    """
    Uniformly spaced planned AV states, strictly increasing in time.
    """

    def __init__(self, samples: Sequence[TrajectorySample]):
        if len(samples) == 0:
            logger.error("A planned trajectory needs at least one sample.")
            raise InvalidGeometryError("A planned trajectory needs at least one sample.")

        times = np.array([s.t for s in samples], dtype=float)
        steps = np.diff(times)
        if np.any(steps <= 0):
            logger.error("Planned trajectory times are not strictly increasing: %s.", times)
            raise InvalidGeometryError("Planned trajectory times must be strictly increasing.")
        if len(steps) > 0 and np.max(np.abs(steps - steps[0])) > DT_TOLERANCE:
            logger.error("Planned trajectory spacing is not uniform: %s.", steps)
            raise InvalidGeometryError("Planned trajectory samples must be uniformly spaced.")

        self.__samples: tuple[TrajectorySample, ...] = tuple(samples)
        self.__dt: float = float(steps[0]) if len(steps) > 0 else 0.0

    @property
    def samples(self) -> tuple[TrajectorySample, ...]:
        """Getter of the samples."""
        return self.__samples

    @property
    def dt(self) -> float:
        """Getter of the uniform spacing (0 for a single sample)."""
        return self.__dt

    @property
    def times(self) -> np.ndarray:
        """Getter of the sample times."""
        return np.array([s.t for s in self.__samples], dtype=float)

    def __len__(self) -> int:
        return len(self.__samples)

    def sample_at(self, t: float, tolerance: float = TIMESTAMP_TOLERANCE) -> Optional[TrajectorySample]:
        """
        Find the sample stamped t.

        @param t: Requested time.
        @param tolerance: Allowed timestamp mismatch.
        @return: The sample or None when no sample is within tolerance.
        """
        times = self.times
        index = int(np.argmin(np.abs(times - t)))
        if abs(times[index] - t) <= tolerance:
            return self.__samples[index]
        return None

    def index_of(self, t: float, tolerance: float = TIMESTAMP_TOLERANCE) -> Optional[int]:
        """Index of the sample stamped t, or None."""
        times = self.times
        index = int(np.argmin(np.abs(times - t)))
        return index if abs(times[index] - t) <= tolerance else None

    def to_frame(self) -> pd.DataFrame:
        """Tabular form with the heading in degrees."""
        rows = [
            (s.t, s.pose.x, s.pose.y, math.degrees(s.pose.heading), s.velocity.vx, s.velocity.vy)
            for s in self.__samples
        ]
        return pd.DataFrame(rows, columns=TRAJECTORY_COLUMNS)

    def to_csv(self, file_path: str) -> str:
        """
        Write the trajectory as CSV.

        @param file_path: Target file.
        @return: The written path.
        """
        self.to_frame().to_csv(file_path, index=False, float_format="%.17g")
        return file_path

    @staticmethod
    def from_csv(file_path: str) -> "PlannedTrajectory":
        """
        Read a trajectory CSV with columns t, x, y, heading_deg, vx, vy.

        @param file_path: Source file.
        @return: The planned trajectory.
        @raise ScenarioLoadException: When the file is missing or malformed.
        """
        try:
            frame = pd.read_csv(file_path)
            missing = [c for c in TRAJECTORY_COLUMNS if c not in frame.columns]
            if missing:
                raise KeyError(", ".join(missing))
            samples = [
                TrajectorySample(
                    float(row.t),
                    Pose2(float(row.x), float(row.y), math.radians(float(row.heading_deg))),
                    Velocity2(float(row.vx), float(row.vy)),
                )
                for row in frame.itertuples(index=False)
            ]
        except OSError as e:
            logger.error("Cannot read trajectory file `%s`: %s.", file_path, e)
            raise ScenarioLoadException(f"Cannot read trajectory file {file_path}.") from e
        except (KeyError, ValueError) as e:
            logger.error("Malformed trajectory file `%s`: %s.", file_path, e)
            raise ScenarioLoadException(f"Malformed trajectory file {file_path}.") from e
        return PlannedTrajectory(samples)

    def __repr__(self):
        return f"PlannedTrajectory(samples={len(self.__samples)}, dt={self.__dt})"
