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

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tfsm/guard.hpp"
#include "tfsm/rational.hpp"

namespace tfsm {

// ── Transitions and timeouts ────────────────────────────────────────

/// Transition of a guarded or general machine: in state `source`, when
/// input `input` arrives with clock value inside `guard`, emit `output`
/// and move to `target` with the clock reset to 0.
struct GuardedTransition {
    std::string source;
    std::string input;
    Guard guard;
    std::string output;
    std::string target;

    friend bool operator==(const GuardedTransition&, const GuardedTransition&) = default;
};

/// Transition of a timeout machine; input behavior does not depend on
/// the clock, only the timeout function does.
struct IoTransition {
    std::string source;
    std::string input;
    std::string output;
    std::string target;

    friend bool operator==(const IoTransition&, const IoTransition&) = default;
};

/// Timeout entry for one state: after `duration` time units without
/// input the machine silently jumps to `target` and resets the clock.
/// `duration` is a positive integer or infinity; an infinite timeout
/// never fires, and its target is normalized to the state itself.
struct Timeout {
    std::string target;
    Bound duration{Bound::inf()};

    friend bool operator==(const Timeout&, const Timeout&) = default;
};

// ── Machines ────────────────────────────────────────────────────────

/// Machine with timed guards only.  The clock resets on every input.
struct GuardedMachine {
    std::vector<std::string> states;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string initial;
    std::vector<GuardedTransition> transitions;
};

/// Machine with timeouts only.  Every state has a timeout entry.
struct TimeoutMachine {
    std::vector<std::string> states;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string initial;
    std::vector<IoTransition> transitions;
    std::map<std::string, Timeout> timeouts;
};

/// Machine with both timed guards and timeouts.  Guards of a state must
/// lie inside [0, timeout duration).
struct GeneralMachine {
    std::vector<std::string> states;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string initial;
    std::vector<GuardedTransition> transitions;
    std::map<std::string, Timeout> timeouts;
};

using MachineAny = std::variant<GuardedMachine, TimeoutMachine, GeneralMachine>;

enum class MachineKind { Guarded, Timeout, General };

MachineKind kind_of(const MachineAny& machine);
std::string kind_name(MachineKind kind);

// ── Timed words and configurations ──────────────────────────────────

/// One observation: a letter together with the absolute time at which
/// it occurs.  Timestamps in a word must be non-decreasing.
struct TimedEntry {
    std::string symbol;
    Rational time;

    friend bool operator==(const TimedEntry&, const TimedEntry&) = default;
};

using TimedWord = std::vector<TimedEntry>;

/// Configuration during execution: current state plus clock value.
struct TimedState {
    std::string state;
    Rational clock;

    friend bool operator==(const TimedState&, const TimedState&) = default;
};

enum class TimestampOrder { NonDecreasing, StrictlyIncreasing };

/// Nullopt when the timestamps respect the requested order and are all
/// non-negative, else a description of the first offense.
std::optional<std::string> timed_word_problem(const TimedWord& word,
                                              TimestampOrder order = TimestampOrder::NonDecreasing);

/// Drops the timestamps.
std::vector<std::string> untime(const TimedWord& word);

// ── Shared helpers ──────────────────────────────────────────────────

/// Largest finite constant appearing in guards or timeout durations,
/// and at least 1 even when no finite constant occurs.
std::int64_t max_constant(const GuardedMachine& machine);
std::int64_t max_constant(const TimeoutMachine& machine);
std::int64_t max_constant(const GeneralMachine& machine);
std::int64_t max_constant(const MachineAny& machine);

/// Timeout entry of a state; infinite self-loop when the map has no
/// entry for it.
Timeout timeout_of(const std::map<std::string, Timeout>& timeouts, const std::string& state);

/// Rewrites every infinite-duration entry to target its own state and
/// inserts missing entries as infinite self-loops.
void normalize_timeouts(std::map<std::string, Timeout>& timeouts,
                        const std::vector<std::string>& states);

/// Sorts transitions into the canonical order used by serialization:
/// source, then input, then guard (guarded variants), then output and
/// target.  States, inputs and outputs keep their declared order.
void canonicalize(GuardedMachine& machine);
void canonicalize(TimeoutMachine& machine);
void canonicalize(GeneralMachine& machine);
void canonicalize(MachineAny& machine);

}  // namespace tfsm
