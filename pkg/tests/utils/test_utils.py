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

import numpy as np
import pandas as pd
import pytest

from utils.utils import (
    ensure_directory,
    finite,
    frame_records,
    make_absolute_path,
    read_json,
    substream,
    write_json,
    write_table,
)


# make_absolute_path


def test_make_absolute_path(mocker):
    # Arrange
    mocker.patch("os.getcwd", return_value="/current/working/directory")

    # Act
    actual = make_absolute_path("relative/output")

    # Assert
    assert "/current/working/directory/relative/output" == actual


def test_make_absolute_path_already_absolute():
    # Act
    actual = make_absolute_path("/absolute/output")

    # Assert
    assert "/absolute/output" == actual


# ensure_directory


def test_ensure_directory_creates_nested_directories(tmp_path):
    # Arrange
    target = tmp_path / "a" / "b"

    # Act
    actual = ensure_directory(str(target))

    # Assert
    assert target.is_dir()
    assert str(target) == actual


# write_json


def test_write_json_is_sorted_and_stable(tmp_path):
    # Arrange
    first, second = str(tmp_path / "first.json"), str(tmp_path / "second.json")

    # Act
    write_json(first, {"b": 1, "a": [1.5, None]})
    write_json(second, {"a": [1.5, None], "b": 1})

    # Assert
    with open(first, "rb") as f1, open(second, "rb") as f2:
        assert f1.read() == f2.read()
    assert {"a": [1.5, None], "b": 1} == read_json(first)


# substream


def test_substream_same_keys_same_draws():
    # Act
    first = substream(7, 0, 3).uniform(size=5)
    second = substream(7, 0, 3).uniform(size=5)

    # Assert
    assert np.array_equal(first, second)


def test_substream_draw_order_does_not_matter():
    # Arrange
    substream(7, 0, 1).uniform(size=100)

    # Act
    actual = substream(7, 0, 2).uniform(size=5)

    # Assert
    assert np.array_equal(substream(7, 0, 2).uniform(size=5), actual)


@pytest.mark.parametrize("seed, keys", [(8, (0, 3)), (7, (1, 3)), (7, (0, 4))])
def test_substream_other_keys_other_draws(seed, keys):
    # Act
    actual = substream(seed, *keys).uniform(size=5)

    # Assert
    assert not np.array_equal(substream(7, 0, 3).uniform(size=5), actual)


# finite


@pytest.mark.parametrize(
    "values, expected",
    [((0.0, 1.0, -2.5), True), ((1.0, math.nan), False), ((math.inf,), False), ((), True)],
)
def test_finite(values, expected):
    # Act
    actual = finite(*values)

    # Assert
    assert expected == actual


# frame_records


def test_frame_records_missing_values_become_none():
    # Arrange
    frame = pd.DataFrame({"name": ["a", "b"], "value": [1.5, np.nan]})

    # Act
    actual = frame_records(frame)

    # Assert
    assert [{"name": "a", "value": 1.5}, {"name": "b", "value": None}] == actual


# write_table


def test_write_table_csv(tmp_path):
    # Arrange
    frame = pd.DataFrame({"level": [0.0, 0.5], "episodes": [3, 3]})

    # Act
    actual = write_table(str(tmp_path / "table"), frame, "csv")

    # Assert
    assert str(tmp_path / "table.csv") == actual
    assert "level,episodes\n0.0,3\n0.5,3\n" == (tmp_path / "table.csv").read_text(encoding="utf-8")


def test_write_table_json(tmp_path):
    # Arrange
    frame = pd.DataFrame({"level": [0.5], "episodes": [3]})

    # Act
    actual = write_table(str(tmp_path / "table"), frame, "json")

    # Assert
    assert str(tmp_path / "table.json") == actual
    assert [{"episodes": 3, "level": 0.5}] == read_json(actual)
