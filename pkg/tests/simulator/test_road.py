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
import math

import pytest

from simulator.road import build_road, corridor_road, crosswalk, intersection_road
from utils.constants import RoadTemplate, SegmentKind


# corridor_road


def test_corridor_road_straight():
    # Act
    actual = corridor_road(3, 800.0)

    # Assert
    assert RoadTemplate.CORRIDOR == actual.template
    assert [SegmentKind.STRAIGHT] == [s.kind for s in actual.corridor("main").segments]
    assert 3 == actual.corridor("main").lane_count


def test_corridor_road_with_bend():
    # Act
    main = corridor_road(2, 800.0, bend_curvature=0.002, bend_length=200.0).corridor("main")

    # Assert
    assert [SegmentKind.STRAIGHT, SegmentKind.ARC, SegmentKind.STRAIGHT] == [s.kind for s in main.segments]
    assert 800.0 == pytest.approx(main.length)
    assert 0.002 == main.curvature_at(400.0)


# intersection_road


def test_intersection_road_crossing_meets_main_road():
    # Arrange
    road = intersection_road(2, 400.0)

    # Act
    actual = road.corridor("cross").pose_at(200.0)

    # Assert
    assert RoadTemplate.INTERSECTION == road.template
    assert actual.x == pytest.approx(200.0)
    assert actual.y == pytest.approx(0.0, abs=1e-9)
    assert actual.heading == pytest.approx(math.pi / 2)


def test_build_road_dispatches_on_template():
    # Act & Assert
    assert RoadTemplate.INTERSECTION == build_road(RoadTemplate.INTERSECTION, 2, 400.0).template
    assert RoadTemplate.CORRIDOR == build_road(RoadTemplate.CORRIDOR, 2, 400.0).template


# crosswalk


def test_crosswalk_runs_from_right_curb_across_the_road():
    # Arrange
    main = corridor_road(2, 800.0).corridor("main")

    # Act
    actual = crosswalk(main, 200.0)

    # Assert
    assert actual.start.x == pytest.approx(200.0)
    assert actual.start.y == pytest.approx(-4.5)
    assert actual.start.heading == pytest.approx(math.pi / 2)
    assert 9.0 == pytest.approx(actual.length)
    assert actual.pose_at(4.5).y == pytest.approx(0.0, abs=1e-9)
    assert 2.5 == actual.speed_limit
