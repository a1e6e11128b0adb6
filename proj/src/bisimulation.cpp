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

#include "tfsm/bisimulation.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "tfsm/errors.hpp"
#include "tfsm/semantics.hpp"

namespace tfsm {

namespace {

// ── Fit between machine and FSM ─────────────────────────────────────

std::set<std::string> plain_input_letters(const UntimedFsm& fsm) {
    std::set<std::string> letters;
    for (const Symbol& s : fsm.alphabet) {
        if (s.kind == Symbol::Kind::Plain || s.kind == Symbol::Kind::Region) {
            letters.insert(s.value);
        }
    }
    return letters;
}

void require_fit(const std::vector<std::string>& inputs, const UntimedFsm& fsm,
                 AbstractionFlavor flavor, std::int64_t min_bound) {
    if (fsm.flavor != flavor) {
        throw AlphabetMismatch("expected a " + flavor_name(flavor) + " FSM, got " +
                               flavor_name(fsm.flavor));
    }
    if (fsm.bound < min_bound) {
        throw AlphabetMismatch("FSM bound " + std::to_string(fsm.bound) +
                               " is below the machine's largest constant " +
                               std::to_string(min_bound));
    }
    for (const Symbol& s : fsm.alphabet) {
        bool fits = false;
        switch (flavor) {
            case AbstractionFlavor::Regions: fits = s.kind == Symbol::Kind::Region; break;
            case AbstractionFlavor::TickOne:
                fits = s.kind == Symbol::Kind::Plain || s.kind == Symbol::Kind::TickOne;
                break;
            case AbstractionFlavor::TickT:
                fits = s.kind == Symbol::Kind::Plain || s.kind == Symbol::Kind::TickT;
                break;
        }
        if (!fits) {
            throw AlphabetMismatch("FSM alphabet symbol " + s.str() + " does not belong to a " +
                                   flavor_name(flavor) + " abstraction");
        }
    }
    if (plain_input_letters(fsm) != std::set<std::string>(inputs.begin(), inputs.end())) {
        throw AlphabetMismatch("machine and FSM have different input alphabets");
    }
}

// ── Expanding candidate relations ───────────────────────────────────

/// A relation pair's timed side denotes a set of configurations; the
/// expansion turns every pair into explicit (state, region, FSM state)
/// triples over the region vocabulary of bound `bound` (or plain
/// (state, FSM state) pairs for guarded machines).
struct Expanded {
    std::set<std::pair<std::string, std::size_t>> plain;
    std::set<std::tuple<std::string, RegionInterval, std::size_t>> region;

    bool related(const std::string& state, std::size_t fsm_state) const {
        return plain.count({state, fsm_state}) > 0;
    }
    bool related(const std::string& state, const RegionInterval& rho, std::size_t fsm_state) const {
        return region.count({state, rho, fsm_state}) > 0;
    }
};

template <typename Machine>
std::size_t fsm_side(const Machine& machine, const UntimedFsm& fsm, const RelatedPair& pair) {
    auto id = fsm.find_state(pair.abstracted);
    if (!id) {
        throw MalformedRelation("relation names FSM state " + pair.abstracted.str() +
                                ", which does not exist");
    }
    bool known = std::find(machine.states.begin(), machine.states.end(), pair.timed.source) !=
                 machine.states.end();
    if (!known) {
        throw MalformedRelation("relation names machine state '" + pair.timed.source + "'");
    }
    return *id;
}

bool region_in_vocabulary(const RegionInterval& rho, std::int64_t bound) {
    switch (rho.kind) {
        case RegionInterval::Kind::Point: return rho.n >= 0 && rho.n <= bound;
        case RegionInterval::Kind::Open: return rho.n >= 0 && rho.n < bound;
        case RegionInterval::Kind::Tail: return rho.n == bound;
    }
    return false;
}

Expanded expand_plain(const GuardedMachine& machine, const UntimedFsm& fsm,
                      const RegionRelation& relation) {
    Expanded expanded;
    for (const RelatedPair& pair : relation) {
        std::size_t r = fsm_side(machine, fsm, pair);
        if (pair.timed.tag != AbstractState::Tag::Plain) {
            throw MalformedRelation("guarded machines relate whole states; pair " +
                                    pair.timed.str() + " carries a clock refinement");
        }
        expanded.plain.insert({pair.timed.source, r});
    }
    return expanded;
}

template <typename Machine>
Expanded expand_regions(const Machine& machine, const UntimedFsm& fsm,
                        const RegionRelation& relation, std::int64_t bound) {
    Expanded expanded;
    for (const RelatedPair& pair : relation) {
        std::size_t r = fsm_side(machine, fsm, pair);
        switch (pair.timed.tag) {
            case AbstractState::Tag::Plain:
                throw MalformedRelation("pair " + pair.timed.str() +
                                        " must refine the clock by an index or a region");
            case AbstractState::Tag::Index:
                if (pair.timed.index < 0 || pair.timed.index >= bound) {
                    throw MalformedRelation("clock floor " + std::to_string(pair.timed.index) +
                                            " is outside [0, " + std::to_string(bound) +
                                            "); use regions for larger clocks");
                }
                expanded.region.insert(
                    {pair.timed.source, RegionInterval::point(pair.timed.index), r});
                expanded.region.insert(
                    {pair.timed.source, RegionInterval::open(pair.timed.index), r});
                break;
            case AbstractState::Tag::Region:
                if (!region_in_vocabulary(pair.timed.region, bound)) {
                    throw MalformedRelation("region " + pair.timed.region.str() +
                                            " is not in the region vocabulary of bound " +
                                            std::to_string(bound));
                }
                expanded.region.insert({pair.timed.source, pair.timed.region, r});
                break;
        }
    }
    return expanded;
}

// ── Shared condition helpers ────────────────────────────────────────

BisimReport fail(int condition, RelatedPair pair, Symbol symbol, std::string detail) {
    return {false, BisimViolation{condition, std::move(pair), std::move(symbol),
                                  std::move(detail)}};
}

RelatedPair region_pair(const std::string& state, const RegionInterval& rho,
                        const UntimedFsm& fsm, std::size_t r) {
    return {AbstractState::in_region(state, rho), fsm.states[r]};
}

/// True when the region meets [0, duration), i.e. when configurations
/// with that clock class can exist in the state at all.
bool region_inhabited(const RegionInterval& rho, const Bound& duration) {
    return !duration.finite || rho.representative() < Rational(duration.value);
}

}  // namespace

// ── Guarded machines ────────────────────────────────────────────────

BisimReport check_region_bisimulation(const GuardedMachine& machine, const UntimedFsm& fsm,
                                      const RegionRelation& relation) {
    require_fit(machine.inputs, fsm, AbstractionFlavor::Regions, max_constant(machine));
    Expanded rel = expand_plain(machine, fsm, relation);

    if (!rel.related(machine.initial, fsm.initial)) {
        return fail(0, {AbstractState::plain(machine.initial), fsm.states[fsm.initial]},
                    Symbol::plain(""), "the initial configurations are not related");
    }

    const std::vector<RegionInterval> regions = interval_set(fsm.bound);
    for (const auto& [state, r] : rel.plain) {
        RelatedPair at{AbstractState::plain(state), fsm.states[r]};

        // Machine moves must be matched by the FSM.
        for (const auto& tr : machine.transitions) {
            if (tr.source != state) continue;
            for (const RegionInterval& rho : regions) {
                if (!guard_covers(tr.guard, rho)) continue;
                Symbol symbol = Symbol::with_region(tr.input, rho);
                auto succ = fsm.next(r, symbol);
                if (!succ || succ->second != Symbol::plain(tr.output)) {
                    return fail(1, at, symbol,
                                succ ? "the FSM answers " + succ->second.str() + " instead of " +
                                           tr.output
                                     : "the FSM has no transition on this symbol");
                }
                if (!rel.related(tr.target, succ->first)) {
                    return fail(2, at, symbol,
                                "successors " + tr.target + " and " +
                                    fsm.states[succ->first].str() + " are not related");
                }
            }
        }

        // FSM moves must be matched by the machine.
        for (const Symbol& symbol : fsm.alphabet) {
            auto succ = fsm.next(r, symbol);
            if (!succ) {
                return fail(1, at, symbol, "the FSM has no transition on this symbol");
            }
            const Rational witness = symbol.region.representative();
            const GuardedTransition* match = nullptr;
            for (const auto& tr : machine.transitions) {
                if (tr.source == state && tr.input == symbol.value &&
                    tr.guard.contains(witness)) {
                    match = &tr;
                    break;
                }
            }
            if (!match || Symbol::plain(match->output) != succ->second) {
                return fail(1, at, symbol,
                            match ? "the machine answers " + match->output + " instead of " +
                                        succ->second.str()
                                  : "the machine has no transition admitting this region");
            }
            if (!rel.related(match->target, succ->first)) {
                return fail(2, at, symbol,
                            "successors " + match->target + " and " +
                                fsm.states[succ->first].str() + " are not related");
            }
        }
    }
    return {true, std::nullopt};
}

// ── Timeout machines ────────────────────────────────────────────────

BisimReport check_region_bisimulation(const TimeoutMachine& machine, const UntimedFsm& fsm,
                                      const RegionRelation& relation) {
    require_fit(machine.inputs, fsm, AbstractionFlavor::TickOne, 1);
    const std::int64_t bound = std::max(fsm.bound, max_constant(machine));
    Expanded rel = expand_regions(machine, fsm, relation, bound);

    if (!rel.related(machine.initial, RegionInterval::point(0), fsm.initial)) {
        return fail(0,
                    {AbstractState::in_region(machine.initial, RegionInterval::point(0)),
                     fsm.states[fsm.initial]},
                    Symbol::plain(""), "the initial configurations are not related");
    }

    for (const auto& [state, rho, r] : rel.region) {
        Timeout entry = timeout_of(machine.timeouts, state);
        if (!region_inhabited(rho, entry.duration)) continue;  // vacuous pair
        RelatedPair at = region_pair(state, rho, fsm, r);
        const Rational x = rho.representative();

        // Delay of one unit against the tick.  The successor's class is
        // the same for every clock in rho, because timeout boundaries
        // are integers.
        TimedState landed = delay(machine, {state, x}, Rational(1));
        auto tick = fsm.next(r, Symbol::tick_one());
        if (!tick || tick->second != Symbol::tick_one()) {
            return fail(1, at, Symbol::tick_one(),
                        tick ? "the tick answers " + tick->second.str() + " instead of a tick"
                             : "the FSM has no tick transition");
        }
        if (!rel.related(landed.state, classify(landed.clock, bound), tick->first)) {
            return fail(2, at, Symbol::tick_one(),
                        "delay successor (" + landed.state + ", " +
                            format_rational(landed.clock) + ") is not related to " +
                            fsm.states[tick->first].str());
        }

        // Inputs: timeout machines answer independently of the clock.
        for (const auto& input : machine.inputs) {
            const IoTransition* match = nullptr;
            for (const auto& tr : machine.transitions) {
                if (tr.source == state && tr.input == input) {
                    match = &tr;
                    break;
                }
            }
            if (!match) throw Error("machine has no transition on input '" + input + "'");
            Symbol symbol = Symbol::plain(input);
            auto succ = fsm.next(r, symbol);
            if (!succ || succ->second != Symbol::plain(match->output)) {
                return fail(3, at, symbol,
                            succ ? "the FSM answers " + succ->second.str() + " instead of " +
                                       match->output
                                 : "the FSM has no transition on this input");
            }
            if (!rel.related(match->target, RegionInterval::point(0), succ->first)) {
                return fail(4, at, symbol,
                            "input successors (" + match->target + ", 0) and " +
                                fsm.states[succ->first].str() + " are not related");
            }
        }
    }
    return {true, std::nullopt};
}

// ── General machines ────────────────────────────────────────────────

BisimReport check_region_bisimulation(const GeneralMachine& machine, const UntimedFsm& fsm,
                                      const RegionRelation& relation) {
    require_fit(machine.inputs, fsm, AbstractionFlavor::TickT, max_constant(machine));
    const std::int64_t bound = fsm.bound;
    Expanded rel = expand_regions(machine, fsm, relation, bound);

    if (!rel.related(machine.initial, RegionInterval::point(0), fsm.initial)) {
        return fail(0,
                    {AbstractState::in_region(machine.initial, RegionInterval::point(0)),
                     fsm.states[fsm.initial]},
                    Symbol::plain(""), "the initial configurations are not related");
    }

    for (const auto& [state, rho, r] : rel.region) {
        Timeout entry = timeout_of(machine.timeouts, state);
        if (!region_inhabited(rho, entry.duration)) continue;  // vacuous pair
        RelatedPair at = region_pair(state, rho, fsm, r);
        const Rational x = rho.representative();

        // The region tick advances to the adjacent region: half a unit
        // from a point or the tail, up to the next integer from an open
        // unit.  The successor's class is constant over rho.
        Rational step_delay = is_integral(x) ? Rational(1, 2) : Rational(floor_of(x) + 1) - x;
        TimedState landed = delay(machine, {state, x}, step_delay);
        auto tick = fsm.next(r, Symbol::tick_t());
        if (!tick || tick->second != Symbol::tick_t()) {
            return fail(1, at, Symbol::tick_t(),
                        tick ? "the tick answers " + tick->second.str() + " instead of a tick"
                             : "the FSM has no tick transition");
        }
        if (!rel.related(landed.state, classify(landed.clock, bound), tick->first)) {
            return fail(2, at, Symbol::tick_t(),
                        "delay successor (" + landed.state + ", " +
                            format_rational(landed.clock) + ") is not related to " +
                            fsm.states[tick->first].str());
        }

        // Inputs read at clock x; guard membership is constant on rho.
        for (const auto& input : machine.inputs) {
            const GuardedTransition* match = nullptr;
            for (const auto& tr : machine.transitions) {
                if (tr.source == state && tr.input == input && tr.guard.contains(x)) {
                    match = &tr;
                    break;
                }
            }
            if (!match) {
                throw Error("machine has no transition on input '" + input + "' at clock " +
                            format_rational(x));
            }
            Symbol symbol = Symbol::plain(input);
            auto succ = fsm.next(r, symbol);
            if (!succ || succ->second != Symbol::plain(match->output)) {
                return fail(3, at, symbol,
                            succ ? "the FSM answers " + succ->second.str() + " instead of " +
                                       match->output
                                 : "the FSM has no transition on this input");
            }
            if (!rel.related(match->target, RegionInterval::point(0), succ->first)) {
                return fail(4, at, symbol,
                            "input successors (" + match->target + ", 0) and " +
                                fsm.states[succ->first].str() + " are not related");
            }
        }
    }
    return {true, std::nullopt};
}

// ── Canonical relations ─────────────────────────────────────────────

RegionRelation canonical_relation(const GuardedMachine& machine, const UntimedFsm& fsm) {
    RegionRelation relation;
    for (const auto& state : machine.states) {
        if (auto id = fsm.find_state(AbstractState::plain(state))) {
            relation.push_back({AbstractState::plain(state), fsm.states[*id]});
        }
    }
    return relation;
}

RegionRelation canonical_relation(const TimeoutMachine& machine, const UntimedFsm& fsm) {
    const std::int64_t bound = std::max(fsm.bound, max_constant(machine));
    RegionRelation relation;
    for (const auto& state : machine.states) {
        Timeout entry = timeout_of(machine.timeouts, state);
        if (entry.duration.finite) {
            for (std::int64_t n = 0; n < entry.duration.value; ++n) {
                if (auto id = fsm.find_state(AbstractState::indexed(state, n))) {
                    relation.push_back({AbstractState::indexed(state, n), fsm.states[*id]});
                }
            }
        } else if (auto id = fsm.find_state(AbstractState::indexed(state, 0))) {
            // Time is invisible in an infinite-timeout state: every
            // clock class collapses onto the floor-0 abstract state.
            for (const RegionInterval& rho : interval_set(bound)) {
                relation.push_back({AbstractState::in_region(state, rho), fsm.states[*id]});
            }
        }
    }
    return relation;
}

RegionRelation canonical_relation(const GeneralMachine& machine, const UntimedFsm& fsm) {
    RegionRelation relation;
    for (const auto& s : fsm.states) {
        bool known = std::find(machine.states.begin(), machine.states.end(), s.source) !=
                     machine.states.end();
        if (s.tag == AbstractState::Tag::Region && known) {
            relation.push_back({s, s});
        }
    }
    return relation;
}

}  // namespace tfsm
