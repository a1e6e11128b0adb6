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

#include "tfsm/semantics.hpp"

#include "tfsm/errors.hpp"

namespace tfsm {

namespace {

/// Advances a configuration through the timeout function.  Fires every
/// timeout boundary that the delay reaches, including one hit exactly:
/// a jump happens before any input at the same instant is read.  Each
/// fired timeout resets the clock, so at most one partial jump is
/// followed by whole-duration jumps and the loop terminates.
TimedState delay_with_timeouts(const std::map<std::string, Timeout>& timeouts,
                               TimedState at, Rational remaining) {
    for (;;) {
        Timeout entry = timeout_of(timeouts, at.state);
        if (!entry.duration.finite) {
            return {at.state, at.clock + remaining};
        }
        Rational boundary(entry.duration.value);
        if (at.clock + remaining < boundary) {
            return {at.state, at.clock + remaining};
        }
        remaining -= boundary - at.clock;
        at = {entry.target, Rational(0)};
    }
}

void require_delay(const Rational& amount) {
    if (amount < Rational(0)) throw Error("negative delay");
}

template <typename Machine>
StepResult step_guarded_like(const Machine& machine, const TimedState& from,
                             const Rational& amount, const std::string& input) {
    TimedState ready = delay(machine, from, amount);
    for (const auto& tr : machine.transitions) {
        if (tr.source == ready.state && tr.input == input && tr.guard.contains(ready.clock)) {
            return {{tr.target, Rational(0)}, tr.output};
        }
    }
    throw Error("no transition enabled in state '" + ready.state + "' on input '" + input +
                "' at clock " + format_rational(ready.clock));
}

template <typename Machine>
RunResult run_impl(const Machine& machine, const TimedWord& word) {
    if (auto problem = timed_word_problem(word)) throw ValidationError(*problem);

    RunResult result;
    result.final_state = {machine.initial, Rational(0)};
    Rational now(0);
    for (const auto& entry : word) {
        Rational wait = entry.time - now;
        TimedState before = result.final_state;
        TimedState ready = delay(machine, before, wait);
        result.trace.push_back(DelayStep{before, wait, ready});
        StepResult next = step(machine, before, wait, entry.symbol);
        result.trace.push_back(IoStep{ready, entry.symbol, next.output, next.to});
        result.outputs.push_back({next.output, entry.time});
        result.final_state = next.to;
        now = entry.time;
    }
    return result;
}

}  // namespace

TimedState delay(const GuardedMachine&, const TimedState& from, const Rational& amount) {
    require_delay(amount);
    return {from.state, from.clock + amount};
}

TimedState delay(const TimeoutMachine& machine, const TimedState& from, const Rational& amount) {
    require_delay(amount);
    return delay_with_timeouts(machine.timeouts, from, amount);
}

TimedState delay(const GeneralMachine& machine, const TimedState& from, const Rational& amount) {
    require_delay(amount);
    return delay_with_timeouts(machine.timeouts, from, amount);
}

StepResult step(const GuardedMachine& machine, const TimedState& from, const Rational& amount,
                const std::string& input) {
    return step_guarded_like(machine, from, amount, input);
}

StepResult step(const TimeoutMachine& machine, const TimedState& from, const Rational& amount,
                const std::string& input) {
    TimedState ready = delay(machine, from, amount);
    for (const auto& tr : machine.transitions) {
        if (tr.source == ready.state && tr.input == input) {
            return {{tr.target, Rational(0)}, tr.output};
        }
    }
    throw Error("no transition in state '" + ready.state + "' on input '" + input + "'");
}

StepResult step(const GeneralMachine& machine, const TimedState& from, const Rational& amount,
                const std::string& input) {
    return step_guarded_like(machine, from, amount, input);
}

RunResult run(const GuardedMachine& machine, const TimedWord& word) {
    return run_impl(machine, word);
}

RunResult run(const TimeoutMachine& machine, const TimedWord& word) {
    return run_impl(machine, word);
}

RunResult run(const GeneralMachine& machine, const TimedWord& word) {
    return run_impl(machine, word);
}

RunResult run(const MachineAny& machine, const TimedWord& word) {
    return std::visit([&](const auto& m) { return run(m, word); }, machine);
}

}  // namespace tfsm
