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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tfsm/machine.hpp"

namespace tfsm {

// ── Region intervals ────────────────────────────────────────────────

/// Element of the standard region partition of [0, inf) with bound N:
/// points [n,n] for n <= N, open units (n,n+1) for n < N, and the tail
/// (N, inf).  `n` stores the left endpoint.
struct RegionInterval {
    enum class Kind { Point, Open, Tail };

    Kind kind{Kind::Point};
    std::int64_t n{0};

    static RegionInterval point(std::int64_t n) { return {Kind::Point, n}; }
    static RegionInterval open(std::int64_t n) { return {Kind::Open, n}; }
    static RegionInterval tail(std::int64_t n) { return {Kind::Tail, n}; }

    bool contains(const Rational& x) const;

    /// Canonical element: n for points, n + 1/2 for open units, N + 1
    /// for the tail.
    Rational representative() const;

    /// "[2,2]", "(0,1)" or "(3,inf)".
    std::string str() const;

    /// Position on the line; points sort before the open unit to their
    /// right, the tail sorts last.
    std::int64_t position() const { return 2 * n + (kind == Kind::Point ? 0 : 1); }

    friend bool operator==(const RegionInterval&, const RegionInterval&) = default;
    friend std::strong_ordering operator<=>(const RegionInterval& a, const RegionInterval& b) {
        if (auto c = a.position() <=> b.position(); c != 0) return c;
        return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
    }
};

/// The 2N+2 region intervals for bound N >= 1, in ascending order.
std::vector<RegionInterval> interval_set(std::int64_t n_bound);

/// The unique region interval of bound N containing t (t >= 0).
RegionInterval classify(const Rational& t, std::int64_t n_bound);

/// True iff every point of the region lies inside the guard.  Because
/// guard endpoints are integers, this is equivalent to the region
/// meeting the guard at all.
bool guard_covers(const Guard& guard, const RegionInterval& region);

// ── Abstract alphabet and states ────────────────────────────────────

/// Letter of an abstract FSM: a plain machine letter, a machine input
/// paired with a region interval, or one of the two tick symbols.
struct Symbol {
    enum class Kind { Plain, Region, TickOne, TickT };

    Kind kind{Kind::Plain};
    std::string value;       // Plain and Region
    RegionInterval region;   // Region only

    static Symbol plain(std::string v) { return {Kind::Plain, std::move(v), {}}; }
    static Symbol with_region(std::string v, RegionInterval r) {
        return {Kind::Region, std::move(v), r};
    }
    static Symbol tick_one() { return {Kind::TickOne, {}, {}}; }
    static Symbol tick_t() { return {Kind::TickT, {}, {}}; }

    bool is_tick() const { return kind == Kind::TickOne || kind == Kind::TickT; }

    /// "i", "(i,[0,1])", "tick1" or "tickT".
    std::string str() const;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol&, const Symbol&) = default;
};

/// State of an abstract FSM: a machine state, optionally refined by a
/// clock floor (tick-abstraction of timeout machines) or by a region
/// interval (tick-abstraction of general machines).
struct AbstractState {
    enum class Tag { Plain, Index, Region };

    Tag tag{Tag::Plain};
    std::string source;
    std::int64_t index{0};   // Index only
    RegionInterval region;   // Region only

    static AbstractState plain(std::string s) { return {Tag::Plain, std::move(s), 0, {}}; }
    static AbstractState indexed(std::string s, std::int64_t i) {
        return {Tag::Index, std::move(s), i, {}};
    }
    static AbstractState in_region(std::string s, RegionInterval r) {
        return {Tag::Region, std::move(s), 0, r};
    }

    /// "s0", "q1#2" or "s1#(1,inf)".
    std::string str() const;

    friend bool operator==(const AbstractState&, const AbstractState&) = default;
    friend std::strong_ordering operator<=>(const AbstractState&, const AbstractState&) = default;
};

// ── Abstract FSMs ───────────────────────────────────────────────────

enum class AbstractionFlavor { Regions, TickOne, TickT };

std::string flavor_name(AbstractionFlavor flavor);

/// Deterministic complete Mealy machine produced by an abstraction.
/// States are indices into `states`; `transitions` maps (state index,
/// input symbol) to (successor index, output symbol).
struct UntimedFsm {
    AbstractionFlavor flavor{AbstractionFlavor::Regions};
    std::int64_t bound{1};  // region bound N, or the max constant for TickOne
    std::vector<AbstractState> states;
    std::size_t initial{0};
    std::vector<Symbol> alphabet;  // fixed order; ticks come last
    std::vector<Symbol> outputs;
    std::map<std::pair<std::size_t, Symbol>, std::pair<std::size_t, Symbol>> transitions;

    std::optional<std::pair<std::size_t, Symbol>> next(std::size_t state, const Symbol& in) const;
    std::optional<std::size_t> find_state(const AbstractState& s) const;
};

/// Region abstraction of a guarded machine with bound N >= the max
/// constant: same states, inputs paired with all 2N+2 regions, one
/// transition per (machine transition, region inside its guard).
UntimedFsm abstract_guarded(const GuardedMachine& machine, std::int64_t n_bound);

/// Unit-tick abstraction of a timeout machine: reachable states (s, n)
/// with n below the timeout of s, the tick advancing n, jumping at the
/// timeout, and looping when the timeout is infinite.
UntimedFsm abstract_timeout(const TimeoutMachine& machine);

/// Region-tick abstraction of a general machine: reachable states
/// (s, region) where the tick alternates point and open regions, jumps
/// at the timeout, and loops on the tail exactly for infinite-timeout
/// states.  The two-argument form uses bound n_bound >= max constant.
UntimedFsm abstract_general(const GeneralMachine& machine);
UntimedFsm abstract_general(const GeneralMachine& machine, std::int64_t n_bound);

// ── Word abstractions ───────────────────────────────────────────────

/// Regions: each entry becomes its letter paired with the region of
/// the delay since the previous entry.
std::vector<Symbol> abstract_word_regions(const TimedWord& word, std::int64_t n_bound);

/// Unit ticks: floor(delay) ticks before each letter.
std::vector<Symbol> abstract_word_one(const TimedWord& word);

/// Region ticks: 2*delay ticks for integer delays, 2*floor(delay)+1
/// otherwise, before each letter.
std::vector<Symbol> abstract_word_tick(const TimedWord& word);

// ── Running abstract FSMs ───────────────────────────────────────────

struct FsmRun {
    std::size_t final_state{};
    std::vector<Symbol> outputs;
};

/// Walks the FSM over the given input symbols; throws Error when a
/// transition is missing (symbols outside the alphabet).
FsmRun fsm_run(const UntimedFsm& fsm, std::span<const Symbol> word);

}  // namespace tfsm
