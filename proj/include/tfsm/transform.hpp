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

#include "tfsm/equivalence.hpp"
#include "tfsm/machine.hpp"

namespace tfsm {

// ── Subclass checks ─────────────────────────────────────────────────

/// A timeout machine is loop-free when following finite timeouts never
/// returns to a visited state.  `cycle` lists one offending cycle when
/// there is one.
struct LoopCheck {
    bool loop_free{};
    std::vector<std::string> cycle;
};

LoopCheck is_timeout_loop_free(const TimeoutMachine& machine);

/// A guarded machine is LCRO when every guard is left-closed and
/// right-open (upper endpoint finite and open, or infinite).
struct LcroCheck {
    bool lcro{};
    std::optional<GuardedTransition> offending;
};

LcroCheck is_lcro(const GuardedMachine& machine);

// ── Conversions between subclasses ──────────────────────────────────

/// Equivalent guarded machine for a loop-free timeout machine: each
/// state keeps its own transitions guarded by [0, timeout), and
/// inherits the transitions of its timeout chain shifted by the
/// accumulated timeouts.  Throws NotLoopFree otherwise.
GuardedMachine loopfree_timeout_to_guarded(const TimeoutMachine& machine);

/// Equivalent timeout machine for an LCRO guarded machine: states are
/// split into windows between consecutive guard endpoints, windows are
/// chained by timeouts, and each window carries the transitions whose
/// guards cover it.  Throws NotLcro otherwise.
TimeoutMachine lcro_guarded_to_timeout(const GuardedMachine& machine);

// ── Embeddings into the general class ───────────────────────────────

/// A guarded machine as a general machine: same transitions, all
/// timeouts infinite.
GeneralMachine embed(const GuardedMachine& machine);

/// A timeout machine as a general machine: transitions guarded by
/// [0, timeout) of their source, timeouts kept.
GeneralMachine embed(const TimeoutMachine& machine);

GeneralMachine embed_any(const MachineAny& machine);

// ── Cross-variant equivalence ───────────────────────────────────────

/// Timed equivalence across variants: both machines are embedded into
/// the general class and compared there.
EquivalenceVerdict cross_equivalent(const MachineAny& a, const MachineAny& b);

}  // namespace tfsm
