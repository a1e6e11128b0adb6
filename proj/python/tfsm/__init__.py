# Copyright 2026 The tfsm authors
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

"""Deterministic complete timed finite state machines.

Machines load from JSON documents; reports come back as plain dicts in
the same shapes the command-line tool prints with ``--json``.
"""

from ._tfsm import (  # noqa: F401
    AlphabetMismatch,
    Error,
    Machine,
    MalformedRelation,
    NotLcro,
    NotLoopFree,
    ParseError,
    TrailingTicks,
    ValidationError,
    abstract,
    cross_equivalent,
    embed,
    equivalent,
    is_lcro,
    is_loop_free,
    load_machine,
    parse_machine,
    run,
    to_guarded,
    to_timeout,
    validate,
)

__all__ = [
    "AlphabetMismatch",
    "Error",
    "Machine",
    "MalformedRelation",
    "NotLcro",
    "NotLoopFree",
    "ParseError",
    "TrailingTicks",
    "ValidationError",
    "abstract",
    "cross_equivalent",
    "embed",
    "equivalent",
    "is_lcro",
    "is_loop_free",
    "load_machine",
    "parse_machine",
    "run",
    "to_guarded",
    "to_timeout",
    "validate",
]
