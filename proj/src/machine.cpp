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

#include "tfsm/machine.hpp"

#include <algorithm>
#include <tuple>

#include "tfsm/rational.hpp"

namespace tfsm {

MachineKind kind_of(const MachineAny& machine) {
    if (std::holds_alternative<GuardedMachine>(machine)) return MachineKind::Guarded;
    if (std::holds_alternative<TimeoutMachine>(machine)) return MachineKind::Timeout;
    return MachineKind::General;
}

std::string kind_name(MachineKind kind) {
    switch (kind) {
        case MachineKind::Guarded: return "guarded";
        case MachineKind::Timeout: return "timeout";
        case MachineKind::General: return "general";
    }
    return "?";
}

std::optional<std::string> timed_word_problem(const TimedWord& word, TimestampOrder order) {
    Rational previous(0);
    for (std::size_t k = 0; k < word.size(); ++k) {
        const Rational& t = word[k].time;
        if (t < Rational(0)) {
            return "timestamp " + std::to_string(k) + " is negative";
        }
        bool bad = order == TimestampOrder::StrictlyIncreasing ? (k > 0 && t <= previous)
                                                               : t < previous;
        if (bad) {
            return "timestamp " + std::to_string(k) + " (" + format_rational(t) +
                   ") breaks the required order";
        }
        previous = t;
    }
    return std::nullopt;
}

std::vector<std::string> untime(const TimedWord& word) {
    std::vector<std::string> letters;
    letters.reserve(word.size());
    for (const auto& entry : word) letters.push_back(entry.symbol);
    return letters;
}

namespace {

std::int64_t guard_constant(const Guard& guard) {
    std::int64_t c = guard.lower;
    if (guard.upper.finite) c = std::max(c, guard.upper.value);
    return c;
}

template <typename Machine>
std::int64_t constants_max(const Machine& machine, bool with_guards) {
    std::int64_t best = 1;
    if constexpr (requires { machine.timeouts; }) {
        for (const auto& [state, entry] : machine.timeouts) {
            if (entry.duration.finite) best = std::max(best, entry.duration.value);
        }
    }
    if (with_guards) {
        if constexpr (requires { machine.transitions[0].guard; }) {
            for (const auto& tr : machine.transitions) {
                best = std::max(best, guard_constant(tr.guard));
            }
        }
    }
    return best;
}

}  // namespace

std::int64_t max_constant(const GuardedMachine& machine) { return constants_max(machine, true); }
std::int64_t max_constant(const TimeoutMachine& machine) { return constants_max(machine, false); }
std::int64_t max_constant(const GeneralMachine& machine) { return constants_max(machine, true); }

std::int64_t max_constant(const MachineAny& machine) {
    return std::visit([](const auto& m) { return max_constant(m); }, machine);
}

Timeout timeout_of(const std::map<std::string, Timeout>& timeouts, const std::string& state) {
    auto it = timeouts.find(state);
    if (it == timeouts.end()) return Timeout{state, Bound::inf()};
    return it->second;
}

void normalize_timeouts(std::map<std::string, Timeout>& timeouts,
                        const std::vector<std::string>& states) {
    for (const auto& state : states) {
        auto [it, inserted] = timeouts.try_emplace(state, Timeout{state, Bound::inf()});
        if (!it->second.duration.finite) it->second.target = state;
    }
}

namespace {

void sort_guarded(std::vector<GuardedTransition>& transitions) {
    std::stable_sort(transitions.begin(), transitions.end(),
                     [](const GuardedTransition& a, const GuardedTransition& b) {
                         auto ka = std::tie(a.source, a.input);
                         auto kb = std::tie(b.source, b.input);
                         if (ka != kb) return ka < kb;
                         if (a.guard != b.guard) return guard_less(a.guard, b.guard);
                         return std::tie(a.output, a.target) < std::tie(b.output, b.target);
                     });
}

}  // namespace

void canonicalize(GuardedMachine& machine) { sort_guarded(machine.transitions); }

void canonicalize(TimeoutMachine& machine) {
    std::stable_sort(machine.transitions.begin(), machine.transitions.end(),
                     [](const IoTransition& a, const IoTransition& b) {
                         return std::tie(a.source, a.input, a.output, a.target) <
                                std::tie(b.source, b.input, b.output, b.target);
                     });
    normalize_timeouts(machine.timeouts, machine.states);
}

void canonicalize(GeneralMachine& machine) {
    sort_guarded(machine.transitions);
    normalize_timeouts(machine.timeouts, machine.states);
}

void canonicalize(MachineAny& machine) {
    std::visit([](auto& m) { canonicalize(m); }, machine);
}

}  // namespace tfsm
