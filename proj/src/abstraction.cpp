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

#include "tfsm/abstraction.hpp"

#include <deque>
#include <sstream>

#include "tfsm/errors.hpp"

namespace tfsm {

// ── Region intervals ────────────────────────────────────────────────

bool RegionInterval::contains(const Rational& x) const {
    switch (kind) {
        case Kind::Point: return x == Rational(n);
        case Kind::Open: return Rational(n) < x && x < Rational(n + 1);
        case Kind::Tail: return x > Rational(n);
    }
    return false;
}

Rational RegionInterval::representative() const {
    switch (kind) {
        case Kind::Point: return Rational(n);
        case Kind::Open: return Rational(2 * n + 1, 2);
        case Kind::Tail: return Rational(n + 1);
    }
    return Rational(0);
}

std::string RegionInterval::str() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Point: out << '[' << n << ',' << n << ']'; break;
        case Kind::Open: out << '(' << n << ',' << n + 1 << ')'; break;
        case Kind::Tail: out << '(' << n << ",inf)"; break;
    }
    return out.str();
}

std::vector<RegionInterval> interval_set(std::int64_t n_bound) {
    if (n_bound < 1) throw ValidationError("region bound must be at least 1");
    std::vector<RegionInterval> regions;
    regions.reserve(static_cast<std::size_t>(2 * n_bound + 2));
    for (std::int64_t n = 0; n < n_bound; ++n) {
        regions.push_back(RegionInterval::point(n));
        regions.push_back(RegionInterval::open(n));
    }
    regions.push_back(RegionInterval::point(n_bound));
    regions.push_back(RegionInterval::tail(n_bound));
    return regions;
}

RegionInterval classify(const Rational& t, std::int64_t n_bound) {
    if (n_bound < 1) throw ValidationError("region bound must be at least 1");
    if (t < Rational(0)) throw ValidationError("cannot classify a negative time");
    if (t > Rational(n_bound)) return RegionInterval::tail(n_bound);
    if (is_integral(t)) return RegionInterval::point(floor_of(t));
    return RegionInterval::open(floor_of(t));
}

bool guard_covers(const Guard& guard, const RegionInterval& region) {
    switch (region.kind) {
        case RegionInterval::Kind::Point:
            return guard.contains(Rational(region.n));
        case RegionInterval::Kind::Open:
            // Guard endpoints are integers, so no boundary can split an
            // open unit interval: containing the midpoint is containment.
            return guard.contains(Rational(2 * region.n + 1, 2));
        case RegionInterval::Kind::Tail:
            return !guard.upper.finite && guard.lower <= region.n;
    }
    return false;
}

// ── Symbols and abstract states ─────────────────────────────────────

std::string Symbol::str() const {
    switch (kind) {
        case Kind::Plain: return value;
        case Kind::Region: return "(" + value + "," + region.str() + ")";
        case Kind::TickOne: return "tick1";
        case Kind::TickT: return "tickT";
    }
    return "?";
}

std::string AbstractState::str() const {
    switch (tag) {
        case Tag::Plain: return source;
        case Tag::Index: return source + "#" + std::to_string(index);
        case Tag::Region: return source + "#" + region.str();
    }
    return "?";
}

std::string flavor_name(AbstractionFlavor flavor) {
    switch (flavor) {
        case AbstractionFlavor::Regions: return "regions";
        case AbstractionFlavor::TickOne: return "tick1";
        case AbstractionFlavor::TickT: return "tickT";
    }
    return "?";
}

std::optional<std::pair<std::size_t, Symbol>> UntimedFsm::next(std::size_t state,
                                                               const Symbol& in) const {
    auto it = transitions.find({state, in});
    if (it == transitions.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> UntimedFsm::find_state(const AbstractState& s) const {
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k] == s) return k;
    }
    return std::nullopt;
}

// ── Machine abstractions ────────────────────────────────────────────

namespace {

void require_bound(std::int64_t n_bound, std::int64_t needed) {
    if (n_bound < needed) {
        throw ValidationError("abstraction bound " + std::to_string(n_bound) +
                              " is below the machine's largest constant " +
                              std::to_string(needed));
    }
}

std::vector<Symbol> plain_symbols(const std::vector<std::string>& letters) {
    std::vector<Symbol> symbols;
    symbols.reserve(letters.size());
    for (const auto& l : letters) symbols.push_back(Symbol::plain(l));
    return symbols;
}

/// Incremental state table with BFS worklist; states are numbered in
/// discovery order, which keeps abstractions reproducible.
struct StateTable {
    std::vector<AbstractState> states;
    std::map<AbstractState, std::size_t> ids;
    std::deque<std::size_t> work;

    std::size_t intern(const AbstractState& s) {
        auto [it, inserted] = ids.try_emplace(s, states.size());
        if (inserted) {
            states.push_back(s);
            work.push_back(it->second);
        }
        return it->second;
    }
};

}  // namespace

UntimedFsm abstract_guarded(const GuardedMachine& machine, std::int64_t n_bound) {
    require_bound(n_bound, max_constant(machine));

    UntimedFsm fsm;
    fsm.flavor = AbstractionFlavor::Regions;
    fsm.bound = n_bound;
    std::map<std::string, std::size_t> index;
    for (const auto& s : machine.states) {
        index.emplace(s, fsm.states.size());
        fsm.states.push_back(AbstractState::plain(s));
    }
    fsm.initial = index.at(machine.initial);
    const std::vector<RegionInterval> regions = interval_set(n_bound);
    for (const auto& input : machine.inputs) {
        for (const auto& region : regions) {
            fsm.alphabet.push_back(Symbol::with_region(input, region));
        }
    }
    fsm.outputs = plain_symbols(machine.outputs);
    for (const auto& tr : machine.transitions) {
        for (const auto& region : regions) {
            if (!guard_covers(tr.guard, region)) continue;
            fsm.transitions[{index.at(tr.source), Symbol::with_region(tr.input, region)}] = {
                index.at(tr.target), Symbol::plain(tr.output)};
        }
    }
    return fsm;
}

UntimedFsm abstract_timeout(const TimeoutMachine& machine) {
    UntimedFsm fsm;
    fsm.flavor = AbstractionFlavor::TickOne;
    fsm.bound = max_constant(machine);
    fsm.alphabet = plain_symbols(machine.inputs);
    fsm.alphabet.push_back(Symbol::tick_one());
    fsm.outputs = plain_symbols(machine.outputs);
    fsm.outputs.push_back(Symbol::tick_one());

    StateTable table;
    fsm.initial = table.intern(AbstractState::indexed(machine.initial, 0));
    while (!table.work.empty()) {
        std::size_t id = table.work.front();
        table.work.pop_front();
        AbstractState at = table.states[id];

        for (const auto& input : machine.inputs) {
            for (const auto& tr : machine.transitions) {
                if (tr.source != at.source || tr.input != input) continue;
                std::size_t succ = table.intern(AbstractState::indexed(tr.target, 0));
                fsm.transitions[{id, Symbol::plain(input)}] = {succ, Symbol::plain(tr.output)};
                break;
            }
        }

        Timeout entry = timeout_of(machine.timeouts, at.source);
        AbstractState after = !entry.duration.finite
                                  ? at  // infinite timeout: time loops in place
                                  : (at.index + 1 == entry.duration.value
                                         ? AbstractState::indexed(entry.target, 0)
                                         : AbstractState::indexed(at.source, at.index + 1));
        std::size_t succ = table.intern(after);
        fsm.transitions[{id, Symbol::tick_one()}] = {succ, Symbol::tick_one()};
    }
    fsm.states = table.states;
    return fsm;
}

UntimedFsm abstract_general(const GeneralMachine& machine) {
    return abstract_general(machine, max_constant(machine));
}

UntimedFsm abstract_general(const GeneralMachine& machine, std::int64_t n_bound) {
    require_bound(n_bound, max_constant(machine));

    UntimedFsm fsm;
    fsm.flavor = AbstractionFlavor::TickT;
    fsm.bound = n_bound;
    fsm.alphabet = plain_symbols(machine.inputs);
    fsm.alphabet.push_back(Symbol::tick_t());
    fsm.outputs = plain_symbols(machine.outputs);
    fsm.outputs.push_back(Symbol::tick_t());

    StateTable table;
    fsm.initial = table.intern(AbstractState::in_region(machine.initial, RegionInterval::point(0)));
    while (!table.work.empty()) {
        std::size_t id = table.work.front();
        table.work.pop_front();
        AbstractState at = table.states[id];

        for (const auto& input : machine.inputs) {
            for (const auto& tr : machine.transitions) {
                if (tr.source != at.source || tr.input != input) continue;
                if (!guard_covers(tr.guard, at.region)) continue;
                std::size_t succ =
                    table.intern(AbstractState::in_region(tr.target, RegionInterval::point(0)));
                fsm.transitions[{id, Symbol::plain(input)}] = {succ, Symbol::plain(tr.output)};
                break;
            }
        }

        // Tick: points open up, open units close onto the next point or
        // jump at the timeout, the tail loops for infinite timeouts.
        Timeout entry = timeout_of(machine.timeouts, at.source);
        std::optional<AbstractState> after;
        switch (at.region.kind) {
            case RegionInterval::Kind::Point:
                if (at.region.n < n_bound) {
                    after = AbstractState::in_region(at.source, RegionInterval::open(at.region.n));
                } else if (!entry.duration.finite) {
                    after = AbstractState::in_region(at.source, RegionInterval::tail(n_bound));
                }
                break;
            case RegionInterval::Kind::Open:
                if (entry.duration.finite && entry.duration.value == at.region.n + 1) {
                    after = AbstractState::in_region(entry.target, RegionInterval::point(0));
                } else {
                    after = AbstractState::in_region(at.source,
                                                     RegionInterval::point(at.region.n + 1));
                }
                break;
            case RegionInterval::Kind::Tail:
                if (!entry.duration.finite) after = at;
                break;
        }
        if (after) {
            std::size_t succ = table.intern(*after);
            fsm.transitions[{id, Symbol::tick_t()}] = {succ, Symbol::tick_t()};
        }
    }
    fsm.states = table.states;
    return fsm;
}

// ── Word abstractions ───────────────────────────────────────────────

namespace {

std::vector<Rational> delays_of(const TimedWord& word) {
    if (auto problem = timed_word_problem(word)) throw ValidationError(*problem);
    std::vector<Rational> delays;
    delays.reserve(word.size());
    Rational previous(0);
    for (const auto& entry : word) {
        delays.push_back(entry.time - previous);
        previous = entry.time;
    }
    return delays;
}

}  // namespace

std::vector<Symbol> abstract_word_regions(const TimedWord& word, std::int64_t n_bound) {
    std::vector<Rational> delays = delays_of(word);
    std::vector<Symbol> symbols;
    symbols.reserve(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
        symbols.push_back(Symbol::with_region(word[k].symbol, classify(delays[k], n_bound)));
    }
    return symbols;
}

std::vector<Symbol> abstract_word_one(const TimedWord& word) {
    std::vector<Rational> delays = delays_of(word);
    std::vector<Symbol> symbols;
    for (std::size_t k = 0; k < word.size(); ++k) {
        for (std::int64_t t = 0; t < floor_of(delays[k]); ++t) {
            symbols.push_back(Symbol::tick_one());
        }
        symbols.push_back(Symbol::plain(word[k].symbol));
    }
    return symbols;
}

std::vector<Symbol> abstract_word_tick(const TimedWord& word) {
    std::vector<Rational> delays = delays_of(word);
    std::vector<Symbol> symbols;
    for (std::size_t k = 0; k < word.size(); ++k) {
        std::int64_t ticks = is_integral(delays[k]) ? 2 * floor_of(delays[k])
                                                    : 2 * floor_of(delays[k]) + 1;
        for (std::int64_t t = 0; t < ticks; ++t) symbols.push_back(Symbol::tick_t());
        symbols.push_back(Symbol::plain(word[k].symbol));
    }
    return symbols;
}

FsmRun fsm_run(const UntimedFsm& fsm, std::span<const Symbol> word) {
    FsmRun result;
    result.final_state = fsm.initial;
    result.outputs.reserve(word.size());
    for (const Symbol& in : word) {
        auto succ = fsm.next(result.final_state, in);
        if (!succ) {
            throw Error("no transition from state '" + fsm.states[result.final_state].str() +
                        "' on symbol " + in.str());
        }
        result.final_state = succ->first;
        result.outputs.push_back(succ->second);
    }
    return result;
}

}  // namespace tfsm
