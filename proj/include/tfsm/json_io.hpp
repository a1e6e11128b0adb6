/*
 * Copyright 2026 The tfsm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <string_view>

#include "tfsm/abstraction.hpp"
#include "tfsm/bisimulation.hpp"
#include "tfsm/equivalence.hpp"
#include "tfsm/machine.hpp"
#include "tfsm/semantics.hpp"
#include "tfsm/validate.hpp"

namespace tfsm {

// ── Machine documents ───────────────────────────────────────────────
//
// {
//   "kind": "guarded" | "timeout" | "general",
//   "states": ["s0", ...],
//   "inputs": ["i", ...],
//   "outputs": ["o1", ...],
//   "initial": "s0",
//   "transitions": [
//     {"from": "s0", "input": "i",
//      "guard": {"lower": 0, "lower_closed": true,
//                "upper": 1, "upper_closed": true},   // guarded, general
//      "output": "o1", "to": "s0"},
//     {"from": "q0", "input": "i",
//      "output": "o1", "to": "q0"},                   // timeout
//     ...
//   ],
//   "timeouts": {"q0": {"target": "q1", "duration": 3},
//                "q1": {"target": "q1", "duration": "inf"}}
// }
//
// Guard endpoints are integers; "upper" and "duration" accept the
// string "inf".  Timestamps elsewhere are exact: JSON integers, exact
// decimal strings ("2.25") or rational strings ("5/2"); non-integer
// JSON numbers are rejected because binary floats are not exact.

/// Parses and structurally checks a machine document (ParseError), then
/// rejects values no variant admits: timeout durations below 1 and
/// guards with negative, inverted or closed-at-infinity endpoints
/// (ValidationError).  Completeness, determinism and name resolution
/// are `validate_*`'s job, so incomplete machines parse fine and can be
/// reported on.  Transitions are brought into canonical order, infinite
/// timeouts are normalized to self-targets, and missing timeout entries
/// default to infinity.
MachineAny parse_machine(std::string_view text);

/// Canonical serialization: 2-space indent, alphabetically sorted keys,
/// transitions in canonical order, trailing newline.  Parsing a
/// serialized machine and serializing again is byte-identical.
std::string serialize_machine(const MachineAny& machine);

// ── Timed word documents ────────────────────────────────────────────
//
// [{"symbol": "i", "timestamp": "5/2"}, ...]

TimedWord parse_timed_word(std::string_view text);
std::string serialize_timed_word(const TimedWord& word);

// ── Reports (stable shapes used by the command-line tool) ───────────

std::string serialize_validation(const ValidationReport& report);
std::string serialize_run(const RunResult& result, bool with_trace);
std::string serialize_fsm(const UntimedFsm& fsm);
std::string serialize_verdict(const EquivalenceVerdict& verdict);
std::string serialize_error(const std::string& code, const std::string& message);

}  // namespace tfsm
