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

#include "support/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "tfsm/guard.hpp"

namespace tfsm::testing {

int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

std::vector<std::string> state_names(int count) {
    std::vector<std::string> out;
    for (int k = 0; k < count; ++k) out.push_back("s" + std::to_string(k));
    return out;
}

const std::string& any_of(Rng& rng, const std::vector<std::string>& pool) {
    return pool[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1))];
}

/// Guards partitioning [0, end) for finite `end`, or [0, inf).  Cut
/// points are drawn strictly inside; each junction value joins the left
/// or the right window at random, so all four endpoint shapes occur.
std::vector<Guard> random_partition(Rng& rng, Bound end, int max_constant) {
    std::vector<std::int64_t> cuts;
    const std::int64_t hi = end.finite ? end.value - 1 : max_constant;
    if (hi >= 1) {
        std::set<std::int64_t> chosen;
        const int wanted = pick(rng, 0, static_cast<int>(std::min<std::int64_t>(2, hi)));
        while (static_cast<int>(chosen.size()) < wanted)
            chosen.insert(pick(rng, 1, static_cast<int>(hi)));
        cuts.assign(chosen.begin(), chosen.end());
    }

    std::vector<Guard> out;
    std::int64_t lower = 0;
    bool lower_closed = true;
    for (const std::int64_t cut : cuts) {
        const bool cut_joins_right = pick(rng, 0, 1) == 1;
        out.push_back(make_guard(lower, Bound::at(cut), lower_closed, !cut_joins_right));
        lower = cut;
        lower_closed = cut_joins_right;
    }
    out.push_back(make_guard(lower, end, lower_closed, false));
    return out;
}

Timeout random_timeout_entry(Rng& rng, const std::vector<std::string>& states,
                             const std::string& self, int max_constant) {
    if (pick(rng, 0, 2) == 0) return Timeout{self, Bound::inf()};
    return Timeout{any_of(rng, states), Bound::at(pick(rng, 1, max_constant))};
}

}  // namespace

GuardedMachine random_guarded(Rng& rng, const GenOptions& opt) {
    GuardedMachine m;
    m.states = state_names(pick(rng, opt.min_states, opt.max_states));
    m.inputs = opt.inputs;
    m.outputs = opt.outputs;
    m.initial = m.states.front();
    for (const auto& state : m.states)
        for (const auto& input : m.inputs)
            for (const auto& guard : random_partition(rng, Bound::inf(), opt.max_constant))
                m.transitions.push_back(
                    {state, input, guard, any_of(rng, m.outputs), any_of(rng, m.states)});
    canonicalize(m);
    return m;
}

TimeoutMachine random_timeout(Rng& rng, const GenOptions& opt) {
    TimeoutMachine m;
    m.states = state_names(pick(rng, opt.min_states, opt.max_states));
    m.inputs = opt.inputs;
    m.outputs = opt.outputs;
    m.initial = m.states.front();
    for (const auto& state : m.states) {
        for (const auto& input : m.inputs)
            m.transitions.push_back({state, input, any_of(rng, m.outputs), any_of(rng, m.states)});
        m.timeouts[state] = random_timeout_entry(rng, m.states, state, opt.max_constant);
    }
    normalize_timeouts(m.timeouts, m.states);
    canonicalize(m);
    return m;
}

TimeoutMachine random_loopfree_timeout(Rng& rng, const GenOptions& opt) {
    TimeoutMachine m = random_timeout(rng, opt);
    // Finite timeouts only point to later states, so the timeout graph
    // is a DAG; the last state is always infinite.
    const int count = static_cast<int>(m.states.size());
    for (int k = 0; k < count; ++k) {
        const auto& state = m.states[static_cast<std::size_t>(k)];
        if (k + 1 >= count || pick(rng, 0, 1) == 0) {
            m.timeouts[state] = Timeout{state, Bound::inf()};
        } else {
            m.timeouts[state] = Timeout{m.states[static_cast<std::size_t>(pick(rng, k + 1, count - 1))],
                                        Bound::at(pick(rng, 1, opt.max_constant))};
        }
    }
    return m;
}

GeneralMachine random_general(Rng& rng, const GenOptions& opt) {
    GeneralMachine m;
    m.states = state_names(pick(rng, opt.min_states, opt.max_states));
    m.inputs = opt.inputs;
    m.outputs = opt.outputs;
    m.initial = m.states.front();
    for (const auto& state : m.states) {
        const Timeout entry = random_timeout_entry(rng, m.states, state, opt.max_constant);
        m.timeouts[state] = entry;
        for (const auto& input : m.inputs)
            for (const auto& guard : random_partition(rng, entry.duration, opt.max_constant))
                m.transitions.push_back(
                    {state, input, guard, any_of(rng, m.outputs), any_of(rng, m.states)});
    }
    normalize_timeouts(m.timeouts, m.states);
    canonicalize(m);
    return m;
}

MachineAny random_machine(Rng& rng, MachineKind kind, const GenOptions& opt) {
    switch (kind) {
        case MachineKind::Guarded: return random_guarded(rng, opt);
        case MachineKind::Timeout: return random_timeout(rng, opt);
        case MachineKind::General: return random_general(rng, opt);
    }
    throw std::logic_error("unreachable");
}

namespace {

template <typename Machine>
Machine renamed(Machine m, const std::string& suffix) {
    for (auto& s : m.states) s += suffix;
    m.initial += suffix;
    for (auto& t : m.transitions) {
        t.source += suffix;
        t.target += suffix;
    }
    if constexpr (requires { m.timeouts; }) {
        std::map<std::string, Timeout> renamed_timeouts;
        for (auto& [state, entry] : m.timeouts)
            renamed_timeouts[state + suffix] = Timeout{entry.target + suffix, entry.duration};
        m.timeouts = std::move(renamed_timeouts);
    }
    return m;
}

template <typename Machine>
Machine mutated(Rng& rng, Machine m, const GenOptions& opt) {
    bool touched = false;
    if constexpr (requires { m.timeouts; }) {
        // Retargeting a finite timeout keeps guards valid (the duration
        // is unchanged), so only the target is mutated.
        if (pick(rng, 0, 3) == 0) {
            std::vector<std::string> finite;
            for (const auto& [state, entry] : m.timeouts)
                if (entry.duration.finite) finite.push_back(state);
            if (!finite.empty()) {
                m.timeouts[any_of(rng, finite)].target = any_of(rng, m.states);
                touched = true;
            }
        }
    }
    if (!touched) {
        auto& t = m.transitions[static_cast<std::size_t>(
            pick(rng, 0, static_cast<int>(m.transitions.size()) - 1))];
        if (pick(rng, 0, 1) == 0 || m.states.size() == 1) {
            std::string other = any_of(rng, opt.outputs);
            if (other == t.output)
                for (const auto& candidate : opt.outputs)
                    if (candidate != t.output) other = candidate;
            t.output = other;
        } else {
            t.target = any_of(rng, m.states);
        }
    }
    canonicalize(m);
    return m;
}

}  // namespace

MachineAny rename_states(const MachineAny& machine, const std::string& suffix) {
    return std::visit([&](const auto& m) -> MachineAny { return renamed(m, suffix); }, machine);
}

MachineAny mutate_machine(Rng& rng, const MachineAny& machine, const GenOptions& opt) {
    return std::visit(
        [&](const auto& m) -> MachineAny { return mutated(rng, m, opt); }, machine);
}

std::pair<MachineAny, MachineAny> random_machine_pair(Rng& rng, MachineKind kind,
                                                      const GenOptions& opt) {
    MachineAny first = random_machine(rng, kind, opt);
    switch (pick(rng, 0, 2)) {
        case 0: return {first, rename_states(first, "r")};
        case 1: return {first, mutate_machine(rng, first, opt)};
        default: return {std::move(first), random_machine(rng, kind, opt)};
    }
}

TimedWord random_word(Rng& rng, const std::vector<std::string>& inputs, int max_entries,
                      int max_delay, int max_denominator) {
    TimedWord word;
    Rational now{0};
    const int entries = pick(rng, 0, max_entries);
    for (int k = 0; k < entries; ++k) {
        const int den = pick(rng, 1, max_denominator);
        now += Rational(pick(rng, 0, max_delay * den), den);
        word.push_back({any_of(rng, inputs), now});
    }
    return word;
}

std::pair<std::size_t, Symbol> mutate_fsm(Rng& rng, UntimedFsm& fsm) {
    auto it = fsm.transitions.begin();
    std::advance(it, pick(rng, 0, static_cast<int>(fsm.transitions.size()) - 1));
    auto& [successor, output] = it->second;
    if (fsm.states.size() > 1 && pick(rng, 0, 1) == 0) {
        const auto shift = static_cast<std::size_t>(
            pick(rng, 1, static_cast<int>(fsm.states.size()) - 1));
        successor = (successor + shift) % fsm.states.size();
    } else {
        for (const auto& candidate : fsm.outputs)
            if (candidate != output) {
                output = candidate;
                break;
            }
    }
    return it->first;
}

}  // namespace tfsm::testing
