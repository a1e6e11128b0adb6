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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tfsm/abstraction.hpp"
#include "tfsm/machine.hpp"

namespace tfsm {

// ── FSM equivalence ─────────────────────────────────────────────────

/// Shortest separating input word for two FSMs, with both output words
/// and the position where they first differ (always the last position,
/// since BFS stops at the first divergence).
struct FsmCounterexample {
    std::vector<Symbol> word;
    std::vector<Symbol> outputs_a;
    std::vector<Symbol> outputs_b;
    std::size_t divergence_index{};
};

struct FsmVerdict {
    bool equivalent{};
    std::optional<FsmCounterexample> counterexample;
};

/// Breadth-first product walk.  Requires equal flavors and alphabets
/// (as sets); throws AlphabetMismatch otherwise.  Symbols are explored
/// in `a`'s alphabet order, so ties among shortest counterexamples are
/// broken deterministically.
FsmVerdict fsm_equivalent(const UntimedFsm& a, const UntimedFsm& b);

// ── Lifting abstract words back to timed words ──────────────────────

/// Region symbols: each delay is the region's representative; returns
/// the cumulative timed word.
TimedWord lift_regions(std::span<const Symbol> word);

/// Unit ticks: k ticks before a letter become delay k + 1/2.  Throws
/// TrailingTicks when the word ends with ticks.
TimedWord lift_one(std::span<const Symbol> word);

/// Region ticks: k ticks before a letter become delay k/2.  Throws
/// TrailingTicks when the word ends with ticks.
TimedWord lift_tick(std::span<const Symbol> word);

// ── Timed equivalence ───────────────────────────────────────────────

/// Witness that two machines are not timed-equivalent: the abstract
/// separating word, its lift, and both machines' timed outputs, which
/// first differ at `divergence_index`.
struct Counterexample {
    std::vector<Symbol> abstract_word;
    TimedWord word;
    TimedWord outputs_a;
    TimedWord outputs_b;
    std::size_t divergence_index{};
};

struct EquivalenceVerdict {
    bool equivalent{};
    std::optional<Counterexample> counterexample;
};

/// Timed equivalence via the matching abstraction.  Guarded machines
/// are compared over regions with the common bound max(N1, N2);
/// timeout machines over unit ticks; general machines over region
/// ticks with the common bound.  Throws AlphabetMismatch when the
/// machines' input or output alphabets differ as sets.
EquivalenceVerdict guarded_equivalent(const GuardedMachine& a, const GuardedMachine& b);
EquivalenceVerdict timeout_equivalent(const TimeoutMachine& a, const TimeoutMachine& b);
EquivalenceVerdict general_equivalent(const GeneralMachine& a, const GeneralMachine& b);

}  // namespace tfsm
