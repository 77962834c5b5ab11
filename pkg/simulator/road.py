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
This module contains the road templates of the scenario generator.
"""

import logging
import math

from core_types.model.pose import Pose2
from simulator.model.road_geometry import Corridor, RoadGeometry, Segment
from utils.constants import RoadTemplate, SegmentKind

logger = logging.getLogger(__name__)

MAIN_CORRIDOR = "main"
CROSS_CORRIDOR = "cross"
CROSSWALK_CORRIDOR = "crosswalk"
CROSSWALK_SPEED_LIMIT = 2.5
CROSSWALK_CURB_MARGIN = 1.0


def corridor_road(
    lane_count: int,
    length: float,
    speed_limit: float = 25.0,
    lane_width: float = 3.5,
    bend_curvature: float = 0.0,
    bend_length: float = 0.0,
) -> RoadGeometry:
    """
    A multi-lane road along world +x. With a bend, the middle third of the road is an arc.

    @param lane_count: Number of lanes.
    @param length: Road length in meters.
    @param speed_limit: Speed limit in m/s.
    @param lane_width: Lane width in meters.
    @param bend_curvature: Signed curvature of the bend, 0 for a straight road.
    @param bend_length: Arc length of the bend in meters.
    @return: The road.
    """
    if bend_curvature == 0 or bend_length <= 0:
        segments = (Segment(SegmentKind.STRAIGHT, length),)
    else:
        straight = (length - bend_length) / 2
        segments = (
            Segment(SegmentKind.STRAIGHT, straight),
            Segment(SegmentKind.ARC, bend_length, bend_curvature),
            Segment(SegmentKind.STRAIGHT, straight),
        )
    main = Corridor(MAIN_CORRIDOR, Pose2(0.0, 0.0, 0.0), segments, lane_count, lane_width, speed_limit)
    return RoadGeometry((main,), RoadTemplate.CORRIDOR)


def intersection_road(
    lane_count: int, length: float, speed_limit: float = 25.0, lane_width: float = 3.5, crossing_at: float = 0.5
) -> RoadGeometry:
    """
    A straight main road crossed at right angle by a second road of the same cross-section. The crossing road
    runs towards +y and meets the main reference line at its mid length.

    @param lane_count: Number of lanes of both roads.
    @param length: Length of both roads in meters.
    @param speed_limit: Speed limit in m/s.
    @param lane_width: Lane width in meters.
    @param crossing_at: Position of the crossing along the main road as a fraction of its length.
    @return: The road.
    """
    straight = (Segment(SegmentKind.STRAIGHT, length),)
    main = Corridor(MAIN_CORRIDOR, Pose2(0.0, 0.0, 0.0), straight, lane_count, lane_width, speed_limit)
    cross = Corridor(
        CROSS_CORRIDOR,
        Pose2(crossing_at * length, -length / 2, math.pi / 2),
        straight,
        lane_count,
        lane_width,
        speed_limit,
    )
    return RoadGeometry((main, cross), RoadTemplate.INTERSECTION)


def build_road(template: RoadTemplate, lane_count: int, length: float, **kwargs) -> RoadGeometry:
    """Build a road from its template name."""
    if template is RoadTemplate.INTERSECTION:
        return intersection_road(lane_count, length, **kwargs)
    return corridor_road(lane_count, length, **kwargs)


def crosswalk(main: Corridor, s: float, corridor_id: str = CROSSWALK_CORRIDOR) -> Corridor:
    """
    A mid-block crossing: a short corridor starting at the right curb of the main corridor and running across
    it to the left curb. Arc length 0 is the right curb.

    @param main: The crossed corridor.
    @param s: Arc length of the crossing on the main corridor.
    @param corridor_id: Id of the new corridor.
    @return: The crosswalk corridor.
    """
    start = main.pose_at(s, -main.half_width - CROSSWALK_CURB_MARGIN)
    width = 2 * (main.half_width + CROSSWALK_CURB_MARGIN)
    logger.debug("Crosswalk `%s` placed at s=%s on `%s`.", corridor_id, s, main.id)
    return Corridor(
        corridor_id,
        Pose2(start.x, start.y, start.heading + math.pi / 2),
        (Segment(SegmentKind.STRAIGHT, width),),
        lane_count=1,
        lane_width=3.0,
        speed_limit=CROSSWALK_SPEED_LIMIT,
    )
