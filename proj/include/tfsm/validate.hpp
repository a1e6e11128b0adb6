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

#include <optional>
#include <string>
#include <vector>

#include "tfsm/machine.hpp"
#include "tfsm/rational.hpp"

namespace tfsm {

// ── Validation ──────────────────────────────────────────────────────

enum class ViolationKind {
    Structure,         // unknown names, duplicate letters, bad initial state
    MissingTransition, // timeout machine lacks a (state, input) transition
    DuplicateTransition,
    Gap,               // guards of (state, input) leave a clock value uncovered
    Overlap,           // two guards of (state, input) admit a common clock value
    BadTimeout,        // missing entry, zero duration, unknown target
    GuardBeyondTimeout // guard admits values >= the state's timeout
};

std::string violation_kind_name(ViolationKind kind);

/// One completeness or determinism defect.  `witness` is a clock value
/// demonstrating the defect when one exists (a point in the gap, a
/// point in the overlap, or a point in the guard at or beyond the
/// timeout).
struct Violation {
    ViolationKind kind;
    std::string state;
    std::string input;
    std::optional<Rational> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks that the machine is well formed, complete and deterministic:
/// for every state and input the guards partition [0, inf) exactly
/// (guarded machines), every (state, input) has exactly one transition
/// (timeout machines), or the guards partition [0, timeout duration)
/// exactly (general machines).  Timeout entries must exist for every
/// state with positive-integer or infinite durations.
ValidationReport validate_guarded(const GuardedMachine& machine);
ValidationReport validate_timeout(const TimeoutMachine& machine);
ValidationReport validate_general(const GeneralMachine& machine);
ValidationReport validate_any(const MachineAny& machine);

}  // namespace tfsm
