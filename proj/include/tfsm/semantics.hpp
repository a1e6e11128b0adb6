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
#include <variant>
#include <vector>

#include "tfsm/machine.hpp"

namespace tfsm {

// ── Execution traces ────────────────────────────────────────────────

/// Time passes; for timeout machines this may cross timeout boundaries
/// and silently change state.
struct DelayStep {
    TimedState from;
    Rational delay;
    TimedState to;
};

/// An input is consumed and an output produced; the clock resets.
struct IoStep {
    TimedState from;
    std::string input;
    std::string output;
    TimedState to;
};

using RunStep = std::variant<DelayStep, IoStep>;

struct RunResult {
    TimedState final_state;
    TimedWord outputs;           // same timestamps as the input word
    std::vector<RunStep> trace;  // alternating delay and io steps
};

// ── Small-step semantics ────────────────────────────────────────────

/// Effect of letting `delay` time units pass from `from`.  Guarded
/// machines simply advance the clock; timeout and general machines
/// fire every timeout crossed on the way, resetting the clock at each
/// jump.  A delay landing exactly on a timeout boundary jumps.
TimedState delay(const GuardedMachine& machine, const TimedState& from, const Rational& amount);
TimedState delay(const TimeoutMachine& machine, const TimedState& from, const Rational& amount);
TimedState delay(const GeneralMachine& machine, const TimedState& from, const Rational& amount);

/// Result of one input: the successor configuration and the emitted
/// output.  Requires a valid complete machine; throws Error when no
/// transition is enabled (which only happens on invalid machines).
struct StepResult {
    TimedState to;
    std::string output;
};

StepResult step(const GuardedMachine& machine, const TimedState& from,
                const Rational& amount, const std::string& input);
StepResult step(const TimeoutMachine& machine, const TimedState& from,
                const Rational& amount, const std::string& input);
StepResult step(const GeneralMachine& machine, const TimedState& from,
                const Rational& amount, const std::string& input);

/// Runs a timed input word from the initial state with clock 0.
/// Timestamps must be non-negative and non-decreasing (ValidationError
/// otherwise); the i-th output carries the i-th input timestamp.
RunResult run(const GuardedMachine& machine, const TimedWord& word);
RunResult run(const TimeoutMachine& machine, const TimedWord& word);
RunResult run(const GeneralMachine& machine, const TimedWord& word);
RunResult run(const MachineAny& machine, const TimedWord& word);

}  // namespace tfsm
