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
This module contains utility functions used across the project.
"""

import json
import logging
import os
from typing import Any

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)


def make_absolute_path(path: str) -> str:
    """
    Convert the provided path to an absolute path.

    @param path: The path to convert.
    @return: The absolute path.
    """
    # If the path is already absolute, return it as is
    if os.path.isabs(path):
        return path
    # Otherwise, convert the relative path to an absolute path
    return os.path.abspath(path)


def ensure_directory(path: str) -> str:
    """
    Create the directory (and parents) when missing.

    @param path: The directory path.
    @return: The absolute directory path.
    """
    absolute = make_absolute_path(path)
    os.makedirs(absolute, exist_ok=True)
    return absolute


def write_json(file_path: str, payload: Any) -> str:
    """
    Write the payload as stable, sorted JSON so that re-runs produce byte-identical files.

    @param file_path: The target file.
    @param payload: A JSON-serializable structure.
    @return: The written file path.
    """
    with open(file_path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")
    logger.debug("JSON written to `%s`.", file_path)
    return file_path


def read_json(file_path: str) -> Any:
    """
    Read a JSON document.

    @param file_path: The source file.
    @return: The parsed structure.
    @raise OSError: When the file cannot be opened.
    @raise json.JSONDecodeError: When the content is not JSON.
    """
    with open(file_path, "r", encoding="utf-8") as f:
        return json.load(f)


def substream(seed: int, *keys: int) -> np.random.Generator:
    """
    Build an independent counter-based generator for one purpose of one seed.
    Streams with different keys never overlap, whatever order they are drawn in.

    @param seed: The scenario or analysis seed.
    @param keys: The spawn key path (purpose, then e.g. agent index).
    @return: A Philox-backed generator.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=tuple(keys))))


def finite(*values: float) -> bool:
    """Check that every value is a finite number."""
    return bool(np.all(np.isfinite(np.asarray(values, dtype=float))))


def frame_records(frame: pd.DataFrame) -> list[dict]:
    """
    Rows of a table as JSON-ready dictionaries; missing values become None.

    @param frame: The table.
    @return: One dictionary per row.
    """
    return [
        {key: None if isinstance(value, float) and np.isnan(value) else value for key, value in row.items()}
        for row in frame.to_dict(orient="records")
    ]


def write_table(file_path_stem: str, frame: pd.DataFrame, file_format: str) -> str:
    """
    Write a table as CSV or as a JSON list of records.

    @param file_path_stem: Target path without extension.
    @param frame: The table.
    @param file_format: `csv` or `json`.
    @return: The written path.
    """
    if file_format == "json":
        return write_json(file_path_stem + ".json", frame_records(frame))
    file_path = file_path_stem + ".csv"
    frame.to_csv(file_path, index=False)
    logger.debug("CSV written to `%s`.", file_path)
    return file_path
