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
This module contains the JSON file form of a set of observed traffic participants.
"""

import json
import logging

from core_types.model.agent_state import AgentState
from utils.exceptions import PoraRiskEngineException, ScenarioLoadException
from utils.utils import read_json, write_json

logger = logging.getLogger(__name__)


def save_participants(file_path: str, agents: list[AgentState]) -> str:
    """
    Write participant states as a JSON list.

    @param file_path: Target file.
    @param agents: The states.
    @return: The written path.
    """
    return write_json(file_path, [a.to_dict() for a in agents])


def load_participants(file_path: str) -> list[AgentState]:
    """
    Read participant states from a JSON list of objects.

    @param file_path: Source file.
    @return: The states in file order.
    @raise ScenarioLoadException: When the file is missing, not a list, or holds a malformed or duplicate entry.
    """
    try:
        participants_json = read_json(file_path)
        if not isinstance(participants_json, list):
            raise TypeError("a list of participants is expected")
        agents = [AgentState.from_dict(p) for p in participants_json]
        ids = [a.id for a in agents]
        if len(set(ids)) != len(ids):
            raise ValueError("participant ids must be unique")
    except OSError as e:
        logger.error("Cannot read participants file `%s`: %s.", file_path, e)
        raise ScenarioLoadException(f"Cannot read participants file {file_path}.") from e
    except (json.JSONDecodeError, AttributeError, KeyError, TypeError, ValueError, PoraRiskEngineException) as e:
        logger.error("Malformed participants file `%s`: %s.", file_path, e)
        raise ScenarioLoadException(f"Malformed participants file {file_path}.") from e
    logger.debug("Loaded %s participants from `%s`.", len(agents), file_path)
    return agents
