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
This module contains the road description of a scenario: corridors made of straight and arc segments, each
carrying parallel lanes. Positions on a corridor are given as arc length s along its reference line and signed
lateral offset d (left positive).
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

from core_types.model.pose import Pose2
from utils.constants import RoadTemplate, SegmentKind
from utils.exceptions import RoadGeometryError

logger = logging.getLogger(__name__)


def _road_error(message: str) -> RoadGeometryError:
    logger.error("Ill-formed road geometry: %s.", message)
    return RoadGeometryError(message)


@dataclass(frozen=True)
class Segment:
    """A piece of reference line; arcs carry a signed curvature (1 / radius, left turns positive)."""

    kind: SegmentKind
    length: float
    curvature: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.length) or self.length <= 0:
            raise _road_error(f"segment length must be > 0, got {self.length}")
        if not math.isfinite(self.curvature):
            raise _road_error(f"segment curvature must be finite, got {self.curvature}")
        if self.kind is SegmentKind.STRAIGHT and self.curvature != 0:
            raise _road_error("a straight segment cannot carry curvature")
        if self.kind is SegmentKind.ARC and self.curvature == 0:
            raise _road_error("an arc segment needs a non-zero curvature")

    def advance(self, start: Pose2, ds: float) -> Pose2:
        """Reference pose ds meters into the segment from its start pose."""
        if self.kind is SegmentKind.STRAIGHT:
            c, s = start.unit
            return Pose2(start.x + ds * c, start.y + ds * s, start.heading)
        heading = start.heading + self.curvature * ds
        x = start.x + (math.sin(heading) - math.sin(start.heading)) / self.curvature
        y = start.y - (math.cos(heading) - math.cos(start.heading)) / self.curvature
        return Pose2(x, y, heading)


@dataclass(frozen=True)
class Corridor:
    """
    A directed reference line with lane_count lanes of equal width; lane 0 is the rightmost lane.
    Speed limit in m/s.
    """

    id: str
    start: Pose2
    segments: tuple[Segment, ...]
    lane_count: int = 1
    lane_width: float = 3.5
    speed_limit: float = 25.0
    _starts: tuple[tuple[float, Pose2], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.segments:
            raise _road_error(f"corridor {self.id} has no segments")
        if int(self.lane_count) != self.lane_count or self.lane_count < 1:
            raise _road_error(f"corridor {self.id} needs at least one lane, got {self.lane_count}")
        if not math.isfinite(self.lane_width) or self.lane_width <= 0:
            raise _road_error(f"corridor {self.id} lane width must be > 0, got {self.lane_width}")
        if not math.isfinite(self.speed_limit) or self.speed_limit <= 0:
            raise _road_error(f"corridor {self.id} speed limit must be > 0, got {self.speed_limit}")
        for segment in self.segments:
            if abs(segment.curvature) * self.half_width >= 1.0:
                raise _road_error(f"corridor {self.id} is wider than the radius of one of its arcs")

        starts = []
        s, pose = 0.0, self.start
        for segment in self.segments:
            starts.append((s, pose))
            pose = segment.advance(pose, segment.length)
            s += segment.length
        object.__setattr__(self, "segments", tuple(self.segments))
        object.__setattr__(self, "_starts", tuple(starts))

    @property
    def length(self) -> float:
        """Getter of the reference line length in meters."""
        return sum(segment.length for segment in self.segments)

    @property
    def half_width(self) -> float:
        """Getter of half the paved width."""
        return self.lane_count * self.lane_width / 2

    def lane_offset(self, lane: int) -> float:
        """
        Lateral offset of a lane center.

        @param lane: Lane index, 0 being the rightmost lane.
        @return: The signed offset d in meters.
        @raise RoadGeometryError: When the lane does not exist.
        """
        if not 0 <= lane < self.lane_count:
            raise _road_error(f"corridor {self.id} has no lane {lane}")
        return (lane - (self.lane_count - 1) / 2) * self.lane_width

    def _locate(self, s: float) -> tuple[Segment, Pose2, float]:
        if s <= 0:
            return Segment(SegmentKind.STRAIGHT, 1.0), self.start, s
        for segment, (start_s, start_pose) in zip(self.segments, self._starts):
            if s <= start_s + segment.length:
                return segment, start_pose, s - start_s
        last, (last_s, last_pose) = self.segments[-1], self._starts[-1]
        end = last.advance(last_pose, last.length)
        return Segment(SegmentKind.STRAIGHT, 1.0), end, s - last_s - last.length

    def pose_at(self, s: float, d: float = 0.0) -> Pose2:
        """
        World pose at arc length s and lateral offset d. The reference line is extended straight before its
        start and beyond its end.

        @param s: Arc length in meters.
        @param d: Lateral offset in meters, left positive.
        @return: The pose, heading along the reference line.
        """
        segment, start, ds = self._locate(s)
        reference = segment.advance(start, ds)
        c, sn = reference.unit
        return Pose2(reference.x - d * sn, reference.y + d * c, reference.heading)

    def curvature_at(self, s: float) -> float:
        """Signed curvature of the reference line at arc length s."""
        segment, _, _ = self._locate(s)
        return segment.curvature

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "id": self.id,
            "start": {"x": self.start.x, "y": self.start.y, "heading": self.start.heading},
            "segments": [{"kind": s.kind.value, "length": s.length, "curvature": s.curvature} for s in self.segments],
            "lane_count": self.lane_count,
            "lane_width": self.lane_width,
            "speed_limit": self.speed_limit,
        }

    @staticmethod
    def from_dict(corridor_json: dict) -> "Corridor":
        """Inverse of to_dict; raises KeyError, TypeError or ValueError on malformed input."""
        start = corridor_json["start"]
        return Corridor(
            str(corridor_json["id"]),
            Pose2(float(start["x"]), float(start["y"]), float(start.get("heading", 0.0))),
            tuple(
                Segment(SegmentKind(s["kind"]), float(s["length"]), float(s.get("curvature", 0.0)))
                for s in corridor_json["segments"]
            ),
            int(corridor_json.get("lane_count", 1)),
            float(corridor_json.get("lane_width", 3.5)),
            float(corridor_json.get("speed_limit", 25.0)),
        )


@dataclass(frozen=True)
class RoadGeometry:
    """The corridors of a scene, with the template they were built from (if any)."""

    corridors: tuple[Corridor, ...]
    template: Optional[RoadTemplate] = None

    def __post_init__(self):
        if not self.corridors:
            raise _road_error("a road needs at least one corridor")
        ids = [c.id for c in self.corridors]
        if len(set(ids)) != len(ids):
            raise _road_error(f"corridor ids must be unique, got {ids}")
        object.__setattr__(self, "corridors", tuple(self.corridors))

    def corridor(self, corridor_id: str) -> Corridor:
        """
        Look a corridor up by id.

        @param corridor_id: The corridor id.
        @return: The corridor.
        @raise RoadGeometryError: When no such corridor exists.
        """
        for corridor in self.corridors:
            if corridor.id == corridor_id:
                return corridor
        raise _road_error(f"unknown corridor {corridor_id}")

    def with_corridor(self, corridor: Corridor) -> "RoadGeometry":
        """A copy of this road with one more corridor."""
        return RoadGeometry(self.corridors + (corridor,), self.template)

    def to_dict(self) -> dict:
        """Serializable form."""
        return {
            "template": self.template.value if self.template is not None else None,
            "corridors": [c.to_dict() for c in self.corridors],
        }

    @staticmethod
    def from_dict(road_json: dict) -> "RoadGeometry":
        """Inverse of to_dict; raises KeyError, TypeError or ValueError on malformed input."""
        template = road_json.get("template")
        return RoadGeometry(
            tuple(Corridor.from_dict(c) for c in road_json["corridors"]),
            RoadTemplate(template) if template is not None else None,
        )
