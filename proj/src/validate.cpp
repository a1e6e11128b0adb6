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

#include "tfsm/validate.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace tfsm {

std::string violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Structure: return "structure";
        case ViolationKind::MissingTransition: return "missing-transition";
        case ViolationKind::DuplicateTransition: return "duplicate-transition";
        case ViolationKind::Gap: return "gap";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::BadTimeout: return "bad-timeout";
        case ViolationKind::GuardBeyondTimeout: return "guard-beyond-timeout";
    }
    return "?";
}

namespace {

// ── Interval endpoint arithmetic ────────────────────────────────────
//
// A start (value, closed) covers the point `value` iff closed; an end
// likewise.  Starts order by how early coverage begins, ends by how
// late it stops.

struct Start {
    std::int64_t value;
    bool closed;

    friend bool operator<(const Start& a, const Start& b) {
        return std::tuple(a.value, !a.closed) < std::tuple(b.value, !b.closed);
    }
};

struct End {
    Bound value;
    bool closed;

    bool infinite() const { return !value.finite; }

    friend bool operator<(const End& a, const End& b) {
        if (a.infinite() || b.infinite()) return !a.infinite() && b.infinite();
        return std::tuple(a.value.value, a.closed) < std::tuple(b.value.value, b.closed);
    }
};

Start start_of(const Guard& g) { return {g.lower, g.lower_closed}; }
End end_of(const Guard& g) { return {g.upper, g.upper_closed}; }

/// Some point contained in both guards, when the intersection is
/// nonempty.
std::optional<Rational> guards_common_point(const Guard& a, const Guard& b) {
    Start lo = std::max(start_of(a), start_of(b));
    End hi = std::min(end_of(a), end_of(b));
    if (hi.infinite()) return Rational(lo.value + 1);
    Rational low(lo.value), high(hi.value.value);
    if (low < high) return (low + high) / 2;
    if (low == high && lo.closed && hi.closed) return low;
    return std::nullopt;
}

/// A point of [0, limit) not covered by the union of the guards, or
/// nullopt when coverage is complete.  `limit` infinite means all of
/// [0, inf) must be covered.  Overlaps are permitted here; only holes
/// are of interest.
std::optional<Rational> first_uncovered(std::vector<Guard> guards, const Bound& limit) {
    std::sort(guards.begin(), guards.end(),
              [](const Guard& a, const Guard& b) { return start_of(a) < start_of(b); });

    // Invariant: [0, at) is covered, and `at` itself iff `inclusive`.
    std::int64_t at = 0;
    bool inclusive = false;
    bool to_infinity = false;

    for (const Guard& g : guards) {
        if (g.lower > at) break;                               // hole before g
        if (g.lower == at && !g.lower_closed && !inclusive) break;  // `at` stays uncovered
        if (!g.upper.finite) {
            to_infinity = true;
            break;
        }
        if (g.upper.value > at) {
            at = g.upper.value;
            inclusive = g.upper_closed;
        } else if (g.upper.value == at) {
            inclusive = inclusive || g.upper_closed;
        }
    }

    if (to_infinity) return std::nullopt;
    if (limit.finite && at >= limit.value) return std::nullopt;
    if (!inclusive) return Rational(at);
    // `at` is covered but nothing past it: witness inside (at, next).
    std::int64_t next = limit.finite ? limit.value : at + 1;
    return (Rational(at) + Rational(next)) / 2;
}

// ── Structure ───────────────────────────────────────────────────────

void check_letters(const std::vector<std::string>& letters, const char* what,
                   std::set<std::string>& seen, std::vector<Violation>& out) {
    for (const auto& name : letters) {
        if (!seen.insert(name).second) {
            out.push_back({ViolationKind::Structure, "", "", std::nullopt,
                           std::string("duplicate ") + what + " '" + name + "'"});
        }
    }
}

template <typename Machine>
void check_structure(const Machine& machine, std::vector<Violation>& out) {
    std::set<std::string> states, inputs, outputs;
    if (machine.states.empty()) {
        out.push_back({ViolationKind::Structure, "", "", std::nullopt, "machine has no states"});
    }
    check_letters(machine.states, "state", states, out);
    check_letters(machine.inputs, "input", inputs, out);
    check_letters(machine.outputs, "output", outputs, out);
    if (!states.count(machine.initial)) {
        out.push_back({ViolationKind::Structure, machine.initial, "", std::nullopt,
                       "initial state '" + machine.initial + "' is not a state"});
    }
    for (const auto& tr : machine.transitions) {
        if (!states.count(tr.source)) {
            out.push_back({ViolationKind::Structure, tr.source, tr.input, std::nullopt,
                           "transition source '" + tr.source + "' is not a state"});
        }
        if (!states.count(tr.target)) {
            out.push_back({ViolationKind::Structure, tr.source, tr.input, std::nullopt,
                           "transition target '" + tr.target + "' is not a state"});
        }
        if (!inputs.count(tr.input)) {
            out.push_back({ViolationKind::Structure, tr.source, tr.input, std::nullopt,
                           "transition input '" + tr.input + "' is not declared"});
        }
        if (!outputs.count(tr.output)) {
            out.push_back({ViolationKind::Structure, tr.source, tr.input, std::nullopt,
                           "transition output '" + tr.output + "' is not declared"});
        }
    }
}

template <typename Machine>
void check_timeout_entries(const Machine& machine, std::vector<Violation>& out) {
    for (const auto& [state, entry] : machine.timeouts) {
        bool known = std::find(machine.states.begin(), machine.states.end(), state) !=
                     machine.states.end();
        if (!known) {
            out.push_back({ViolationKind::Structure, state, "", std::nullopt,
                           "timeout entry for unknown state '" + state + "'"});
            continue;
        }
        if (entry.duration.finite && entry.duration.value < 1) {
            out.push_back({ViolationKind::BadTimeout, state, "", std::nullopt,
                           "timeout duration must be a positive integer"});
        }
        bool target_known = std::find(machine.states.begin(), machine.states.end(),
                                      entry.target) != machine.states.end();
        if (!target_known) {
            out.push_back({ViolationKind::BadTimeout, state, "", std::nullopt,
                           "timeout target '" + entry.target + "' is not a state"});
        }
    }
}

/// Completeness and determinism of one (state, input) cell: the guards
/// must partition [0, limit).
void check_cell(const std::string& state, const std::string& input,
                const std::vector<Guard>& guards, const Bound& limit,
                std::vector<Violation>& out) {
    for (std::size_t i = 0; i < guards.size(); ++i) {
        for (std::size_t j = i + 1; j < guards.size(); ++j) {
            if (auto common = guards_common_point(guards[i], guards[j])) {
                out.push_back({ViolationKind::Overlap, state, input, common,
                               "guards " + guards[i].str() + " and " + guards[j].str() +
                                   " admit the same clock value"});
            }
        }
    }
    if (auto witness = first_uncovered(guards, limit)) {
        out.push_back({ViolationKind::Gap, state, input, witness,
                       "no guard admits clock value " + format_rational(*witness)});
    }
}

}  // namespace

ValidationReport validate_guarded(const GuardedMachine& machine) {
    ValidationReport report;
    check_structure(machine, report.violations);
    if (!report.ok()) return report;

    for (const auto& state : machine.states) {
        for (const auto& input : machine.inputs) {
            std::vector<Guard> guards;
            for (const auto& tr : machine.transitions) {
                if (tr.source == state && tr.input == input) guards.push_back(tr.guard);
            }
            check_cell(state, input, guards, Bound::inf(), report.violations);
        }
    }
    return report;
}

ValidationReport validate_timeout(const TimeoutMachine& machine) {
    ValidationReport report;
    check_structure(machine, report.violations);
    if (!report.ok()) return report;
    check_timeout_entries(machine, report.violations);

    for (const auto& state : machine.states) {
        for (const auto& input : machine.inputs) {
            std::size_t count = 0;
            for (const auto& tr : machine.transitions) {
                if (tr.source == state && tr.input == input) ++count;
            }
            if (count == 0) {
                report.violations.push_back({ViolationKind::MissingTransition, state, input,
                                             std::nullopt, "no transition for this input"});
            } else if (count > 1) {
                report.violations.push_back({ViolationKind::DuplicateTransition, state, input,
                                             std::nullopt,
                                             std::to_string(count) + " transitions for this input"});
            }
        }
    }
    return report;
}

ValidationReport validate_general(const GeneralMachine& machine) {
    ValidationReport report;
    check_structure(machine, report.violations);
    if (!report.ok()) return report;
    check_timeout_entries(machine, report.violations);

    for (const auto& state : machine.states) {
        Bound limit = timeout_of(machine.timeouts, state).duration;
        for (const auto& input : machine.inputs) {
            std::vector<Guard> guards;
            for (const auto& tr : machine.transitions) {
                if (tr.source != state || tr.input != input) continue;
                guards.push_back(tr.guard);
                if (!limit.finite) continue;
                if (auto over = guards_common_point(tr.guard, guard_from(limit.value))) {
                    report.violations.push_back(
                        {ViolationKind::GuardBeyondTimeout, state, input, over,
                         "guard " + tr.guard.str() + " admits clock value " +
                             format_rational(*over) + " at or beyond timeout " + limit.str()});
                }
            }
            check_cell(state, input, guards, limit, report.violations);
        }
    }
    return report;
}

ValidationReport validate_any(const MachineAny& machine) {
    if (const auto* g = std::get_if<GuardedMachine>(&machine)) return validate_guarded(*g);
    if (const auto* t = std::get_if<TimeoutMachine>(&machine)) return validate_timeout(*t);
    return validate_general(std::get<GeneralMachine>(machine));
}

}  // namespace tfsm
