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

#include "tfsm/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tfsm/errors.hpp"

namespace tfsm {

// ── Subclass checks ─────────────────────────────────────────────────

LoopCheck is_timeout_loop_free(const TimeoutMachine& machine) {
    // Finite timeouts form a partial function on states; a cycle in it
    // makes time loop forever without input.
    std::map<std::string, int> color;  // 0 new, 1 on path, 2 done
    for (const auto& start : machine.states) {
        if (color[start] != 0) continue;
        std::vector<std::string> path;
        std::string at = start;
        while (true) {
            if (color[at] == 1) {
                // Cut the path down to the cycle itself.
                auto it = std::find(path.begin(), path.end(), at);
                return {false, std::vector<std::string>(it, path.end())};
            }
            if (color[at] == 2) break;
            color[at] = 1;
            path.push_back(at);
            Timeout entry = timeout_of(machine.timeouts, at);
            if (!entry.duration.finite) break;
            at = entry.target;
        }
        for (const auto& s : path) color[s] = 2;
    }
    return {true, {}};
}

LcroCheck is_lcro(const GuardedMachine& machine) {
    for (const auto& tr : machine.transitions) {
        bool lcro = tr.guard.lower_closed && !tr.guard.upper_closed;
        if (!lcro) return {false, tr};
    }
    return {true, std::nullopt};
}

// ── Loop-free timeout machines to guarded machines ──────────────────

namespace {

/// Guards the machine's own transitions by [0, timeout) and resolves
/// the timeout chain of `state` recursively, shifting inherited guards
/// by the accumulated timeout.  Recursion is bounded by loop-freedom.
const std::vector<GuardedTransition>& resolve_state(
    const TimeoutMachine& machine, const std::string& state,
    std::map<std::string, std::vector<GuardedTransition>>& resolved) {
    if (auto it = resolved.find(state); it != resolved.end()) return it->second;

    Timeout entry = timeout_of(machine.timeouts, state);
    std::vector<GuardedTransition> own;
    for (const auto& tr : machine.transitions) {
        if (tr.source != state) continue;
        Guard window = entry.duration.finite
                           ? guard_right_open(0, entry.duration.value)
                           : guard_from(0);
        own.push_back({state, tr.input, window, tr.output, tr.target});
    }

    if (entry.duration.finite) {
        const std::int64_t shift = entry.duration.value;
        for (const auto& tr : resolve_state(machine, entry.target, resolved)) {
            Guard moved = tr.guard;
            moved.lower += shift;
            if (moved.upper.finite) moved.upper.value += shift;
            own.push_back({state, tr.input, moved, tr.output, tr.target});
        }
    }
    return resolved.emplace(state, std::move(own)).first->second;
}

}  // namespace

GuardedMachine loopfree_timeout_to_guarded(const TimeoutMachine& machine) {
    LoopCheck check = is_timeout_loop_free(machine);
    if (!check.loop_free) {
        std::string shown;
        for (const auto& s : check.cycle) shown += (shown.empty() ? "" : " -> ") + s;
        throw NotLoopFree("timeout cycle " + shown + " prevents the conversion", check.cycle);
    }

    GuardedMachine result;
    result.states = machine.states;
    result.inputs = machine.inputs;
    result.outputs = machine.outputs;
    result.initial = machine.initial;
    std::map<std::string, std::vector<GuardedTransition>> resolved;
    for (const auto& state : machine.states) {
        for (const auto& tr : resolve_state(machine, state, resolved)) {
            result.transitions.push_back(tr);
        }
    }
    canonicalize(result);
    return result;
}

// ── LCRO guarded machines to timeout machines ───────────────────────

namespace {

std::string window_name(const std::string& state, std::int64_t from, const Bound& to) {
    return state + "@[" + std::to_string(from) + "," + to.str() + ")";
}

}  // namespace

TimeoutMachine lcro_guarded_to_timeout(const GuardedMachine& machine) {
    LcroCheck check = is_lcro(machine);
    if (!check.lcro) {
        throw NotLcro("guard " + check.offending->guard.str() + " on input '" +
                      check.offending->input + "' of state '" + check.offending->source +
                      "' is not left-closed right-open");
    }

    // Boundary values of each state split [0, inf) into windows between
    // consecutive guard endpoints; each window lies inside one guard
    // per input.
    std::map<std::string, std::vector<std::int64_t>> boundaries;
    for (const auto& state : machine.states) boundaries[state] = {0};
    for (const auto& tr : machine.transitions) {
        auto& list = boundaries[tr.source];
        list.push_back(tr.guard.lower);
        if (tr.guard.upper.finite) list.push_back(tr.guard.upper.value);
    }
    for (auto& [state, list] : boundaries) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    TimeoutMachine result;
    result.inputs = machine.inputs;
    result.outputs = machine.outputs;

    auto first_window = [&](const std::string& state) {
        const auto& list = boundaries.at(state);
        Bound end = list.size() > 1 ? Bound::at(list[1]) : Bound::inf();
        return window_name(state, 0, end);
    };

    for (const auto& state : machine.states) {
        const auto& list = boundaries.at(state);
        for (std::size_t k = 0; k < list.size(); ++k) {
            bool last = k + 1 == list.size();
            Bound end = last ? Bound::inf() : Bound::at(list[k + 1]);
            std::string name = window_name(state, list[k], end);
            result.states.push_back(name);
            if (last) {
                result.timeouts[name] = {name, Bound::inf()};
            } else {
                Bound next_end = k + 2 == list.size() ? Bound::inf() : Bound::at(list[k + 2]);
                result.timeouts[name] = {window_name(state, list[k + 1], next_end),
                                         Bound::at(list[k + 1] - list[k])};
            }

            // The window [list[k], end) lies inside exactly one guard
            // per input for complete deterministic machines.
            for (const auto& tr : machine.transitions) {
                if (tr.source != state) continue;
                bool covers = tr.guard.lower <= list[k] &&
                              (!tr.guard.upper.finite ||
                               (end.finite && end.value <= tr.guard.upper.value));
                if (!covers) continue;
                result.transitions.push_back({name, tr.input, tr.output, first_window(tr.target)});
            }
        }
    }
    result.initial = first_window(machine.initial);
    canonicalize(result);
    return result;
}

// ── Embeddings ──────────────────────────────────────────────────────

GeneralMachine embed(const GuardedMachine& machine) {
    GeneralMachine result;
    result.states = machine.states;
    result.inputs = machine.inputs;
    result.outputs = machine.outputs;
    result.initial = machine.initial;
    result.transitions = machine.transitions;
    normalize_timeouts(result.timeouts, result.states);
    canonicalize(result);
    return result;
}

GeneralMachine embed(const TimeoutMachine& machine) {
    GeneralMachine result;
    result.states = machine.states;
    result.inputs = machine.inputs;
    result.outputs = machine.outputs;
    result.initial = machine.initial;
    result.timeouts = machine.timeouts;
    normalize_timeouts(result.timeouts, result.states);
    for (const auto& tr : machine.transitions) {
        Bound duration = timeout_of(result.timeouts, tr.source).duration;
        Guard window = duration.finite ? guard_right_open(0, duration.value) : guard_from(0);
        result.transitions.push_back({tr.source, tr.input, window, tr.output, tr.target});
    }
    canonicalize(result);
    return result;
}

GeneralMachine embed_any(const MachineAny& machine) {
    if (const auto* g = std::get_if<GuardedMachine>(&machine)) return embed(*g);
    if (const auto* t = std::get_if<TimeoutMachine>(&machine)) return embed(*t);
    GeneralMachine result = std::get<GeneralMachine>(machine);
    normalize_timeouts(result.timeouts, result.states);
    canonicalize(result);
    return result;
}

EquivalenceVerdict cross_equivalent(const MachineAny& a, const MachineAny& b) {
    return general_equivalent(embed_any(a), embed_any(b));
}

}  // namespace tfsm
