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
This module contains all constants and enums used across the project.
"""

from enum import Enum

GENERATOR_NAME = "pora-risk-engine"
GENERATOR_VERSION = "1.0.0"

# Environment inputs (read as INPUT_<NAME>)
VERBOSE_LOGGING = "VERBOSE_LOGGING"
OUTPUT_DIR = "OUTPUT_DIR"
WORKERS = "WORKERS"

# Numerical tolerances
TOUCH_TOLERANCE = 1e-9
DT_TOLERANCE = 1e-9
TIMESTAMP_TOLERANCE = 1e-6
TTC_BISECTION_TOLERANCE = 1e-4

# Grid defaults
DEFAULT_CELL_SIZE = 0.5

# Predictor defaults
DEFAULT_HORIZON_STEPS = 6
DEFAULT_STEP_DT = 0.5
DEFAULT_POSITION_SIGMA0 = 0.3
DEFAULT_SIGMA_GROWTH = 0.5
BLOB_TRUNCATION_SIGMAS = 3.0

# Risk engine defaults
DEFAULT_BETA = 1.5
DEFAULT_REACTION_TIME = 2.5
DEFAULT_DECEL_RATE = 3.4
GRAVITY = 9.81
SSD_SPEED_FACTOR = 0.278
SSD_BRAKING_FACTOR = 254.0

# Surrogate defaults
DEFAULT_TTC_DT = 0.05
DEFAULT_TTC_HORIZON = 10.0
CONFLICT_TTC_THRESHOLD = 2.0
TTC_RISK_HORIZON_CAP = 10.0

# Controller and reward defaults
DEFAULT_PROCEED_BELOW = 0.65
DEFAULT_BRAKE_ABOVE = 0.9
DEFAULT_REPLAN_DECEL = 2.0
DEFAULT_MAX_DECEL = 8.0
DEFAULT_MAX_ACCEL = 3.0
DEFAULT_ALPHA = 1.0
DEFAULT_DELTA = 50.0
DEFAULT_GAMMA = 10.0

# Background driving law
GAP_KEEPING_HEADWAY = 1.5
GAP_KEEPING_GAIN = 0.5
SPEED_MATCHING_GAIN = 1.0
FREE_FLOW_GAIN = 0.5
MIN_STANDSTILL_GAP = 2.0
BACKGROUND_ACCEL_NOISE = 0.2
PERCEPTION_RADIUS = 120.0

# Simulation defaults
DEFAULT_TICK_DT = 0.1
DEFAULT_DURATION = 20.0
SCENARIO_SCHEMA_VERSION = 1

# Seed-sequence spawn keys, one per purpose
SCENARIO_STREAM = 0
EVENT_STREAM = 1
NOISE_STREAM = 2
PENETRATION_STREAM = 3
ANALYSIS_STREAM = 4

# Analysis defaults
DEFAULT_BETA_GRID = tuple(round(0.05 * i, 2) for i in range(101))
DEFAULT_HISTOGRAM_BINS = 50
MIN_CORRELATION_SAMPLES = 4
BENCH_MIN_REPETITIONS = 100
SIM_CALIBRATION_CONFLICT_WEIGHT = 0.1

# Default body dimensions (length, width) in meters
DEFAULT_DIMENSIONS = {
    "car": (4.5, 1.8),
    "truck": (8.0, 2.4),
    "bus": (12.0, 2.5),
    "bicycle": (1.8, 0.6),
    "pedestrian": (0.5, 0.5),
}


class ParticipantKind(Enum):
    """Traffic participant categories."""

    CAR = "car"
    TRUCK = "truck"
    BUS = "bus"
    BICYCLE = "bicycle"
    PEDESTRIAN = "pedestrian"

    @property
    def default_dimensions(self) -> tuple[float, float]:
        """Getter of the default (length, width) pair."""
        return DEFAULT_DIMENSIONS[self.value]

    @property
    def is_vehicle(self) -> bool:
        """Vehicles are subject to the drivable-area mask."""
        return self is not ParticipantKind.PEDESTRIAN

    @property
    def is_motor_vehicle(self) -> bool:
        """Motor vehicles are the candidates for controller-driven penetration."""
        return self in (ParticipantKind.CAR, ParticipantKind.TRUCK, ParticipantKind.BUS)


class Metric(Enum):
    PORA = "pora"
    PORA_UNADJUSTED = "pora_unadjusted"
    TTC1 = "ttc1"
    TTC2 = "ttc2"


class PredictorMode(Enum):
    ANALYTIC = "analytic"
    FILE = "file"


class MotionModel(Enum):
    CONSTANT_VELOCITY = "constant-velocity"
    CONSTANT_ACCELERATION = "constant-acceleration"


class Outcome(Enum):
    SAFE = "safe"
    CRASH = "crash"


class ScenarioFamily(Enum):
    NOMINAL = "nominal"
    PEDESTRIAN_VIOLATION = "pedestrian_violation"
    LANE_INCURSION = "lane_incursion"
    BRAKE_CUTIN = "brake_cutin"


class Demand(Enum):
    LOW = "low"
    FREE = "free"
    CONGESTED = "congested"


# Background vehicles per kilometer and lane
DEMAND_DENSITY = {Demand.LOW: 8.0, Demand.FREE: 16.0, Demand.CONGESTED: 35.0}

# Background desired-speed range in m/s
DEMAND_SPEED_RANGE = {Demand.LOW: (20.0, 25.0), Demand.FREE: (16.0, 24.0), Demand.CONGESTED: (8.0, 14.0)}


class Behavior(Enum):
    EGO = "ego"
    BACKGROUND = "background"
    CONTROLLER = "controller"
    PEDESTRIAN = "pedestrian"
    STATIC = "static"


class RoadTemplate(Enum):
    CORRIDOR = "corridor"
    INTERSECTION = "intersection"


class SegmentKind(Enum):
    STRAIGHT = "straight"
    ARC = "arc"


class SummaryFormat(Enum):
    CSV = "csv"
    JSON = "json"


class KlDirection(Enum):
    CRASH_SAFE = "crash_safe"
    SAFE_CRASH = "safe_crash"


class DeltaPSummary(Enum):
    MAX = "max"
    PHI_SUM = "phi_sum"


class SampleMode(Enum):
    PEAK = "peak"
    ALL = "all"


class CalibrationProgram(Enum):
    LABELED = "labeled"
    SIM = "sim"


class Falloff(Enum):
    LINEAR = "linear"
    QUADRATIC = "quadratic"


class PolicyAction(Enum):
    PROCEED = "proceed"
    REPLAN = "replan"
    BRAKE = "brake"


# Latency benchmark component names
BENCH_CROP_ROTATE = "PORA eval (crop+rotate)"
BENCH_COLLISION_MAP = "PORA eval (collision map P(C|O))"
BENCH_COLLISION_MAP_COLD = "PORA eval (collision map P(C|O), cold memo)"
BENCH_COX_REDUCE = "PORA eval (Cox adj. + reduce)"
BENCH_TTC2_PAIRWISE = "TTC-2 pairwise"
