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

#include "tfsm/abstraction.hpp"
#include "tfsm/machine.hpp"

namespace tfsm {

// ── Candidate relations ─────────────────────────────────────────────

/// One pair of a candidate bisimulation between a timed machine and an
/// abstract FSM.  The timed side is a machine state, refined by a clock
/// region where the variant needs it:
///   * guarded machines: Tag::Plain (the clock is irrelevant, every
///     clock value of the state is related);
///   * timeout machines: Tag::Index n (all clocks with floor n) or
///     Tag::Region, which both denote sets of clock values;
///   * general machines: Tag::Region.
/// The abstract side must name a state of the FSM.
struct RelatedPair {
    AbstractState timed;
    AbstractState abstracted;
};

using RegionRelation = std::vector<RelatedPair>;

// ── Checking ────────────────────────────────────────────────────────

/// Violated bisimulation condition.  Numbering:
///   0  the initial configurations are not related;
///   1  a delay move is not matched: the FSM lacks the tick transition
///      or its output is not the tick (guarded machines: the FSM lacks
///      the region transition or its output differs);
///   2  the FSM's tick successor is unrelated to the delay successor
///      (guarded machines: the region successor is unrelated);
///   3  an input move is not matched: the FSM transition is missing or
///      its output differs;
///   4  the FSM's input successor is unrelated to the machine's.
/// `pair` is the related pair at which the condition fails and
/// `symbol` the abstract letter involved.
struct BisimViolation {
    int condition{};
    RelatedPair pair;
    Symbol symbol;
    std::string detail;
};

struct BisimReport {
    bool ok{};
    std::optional<BisimViolation> violation;
};

/// Decides whether `relation` is a bisimulation between the machine
/// and the FSM that relates the initial configurations.  The check
/// quantifies over region representatives, which suffices because
/// guard membership, clock floors and timeout comparisons are constant
/// on each region.  Throws MalformedRelation when a pair names unknown
/// states, uses a tag the variant does not admit, or uses a region
/// outside the FSM's bound; throws AlphabetMismatch when machine and
/// FSM do not fit together (wrong flavor or input alphabet).
BisimReport check_region_bisimulation(const GuardedMachine& machine, const UntimedFsm& fsm,
                                      const RegionRelation& relation);
BisimReport check_region_bisimulation(const TimeoutMachine& machine, const UntimedFsm& fsm,
                                      const RegionRelation& relation);
BisimReport check_region_bisimulation(const GeneralMachine& machine, const UntimedFsm& fsm,
                                      const RegionRelation& relation);

// ── Canonical relations ─────────────────────────────────────────────

/// The standard bisimulation between a machine and its own
/// abstraction: identity on states for guarded machines, clock floors
/// for timeout machines, clock regions for general machines.  For
/// infinite-timeout states of a timeout machine every region of the
/// FSM's bound relates to the floor-0 state.  Only abstract states
/// present in the FSM are emitted.
RegionRelation canonical_relation(const GuardedMachine& machine, const UntimedFsm& fsm);
RegionRelation canonical_relation(const TimeoutMachine& machine, const UntimedFsm& fsm);
RegionRelation canonical_relation(const GeneralMachine& machine, const UntimedFsm& fsm);

}  // namespace tfsm
