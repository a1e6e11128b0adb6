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

#include "tfsm/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "tfsm/errors.hpp"
#include "tfsm/semantics.hpp"

namespace tfsm {

// ── FSM equivalence ─────────────────────────────────────────────────

namespace {

bool same_symbol_set(std::vector<Symbol> a, std::vector<Symbol> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

FsmVerdict fsm_equivalent(const UntimedFsm& a, const UntimedFsm& b) {
    if (a.flavor != b.flavor) {
        throw AlphabetMismatch("cannot compare a " + flavor_name(a.flavor) + " FSM with a " +
                               flavor_name(b.flavor) + " FSM");
    }
    if (!same_symbol_set(a.alphabet, b.alphabet)) {
        throw AlphabetMismatch("the FSMs have different input alphabets");
    }

    using Pair = std::pair<std::size_t, std::size_t>;
    std::map<Pair, std::pair<Pair, Symbol>> parent;
    std::deque<Pair> queue;
    Pair start{a.initial, b.initial};
    parent.emplace(start, std::pair<Pair, Symbol>{start, Symbol::plain("")});
    queue.push_back(start);

    auto word_to = [&](Pair at) {
        std::vector<Symbol> word;
        while (at != start) {
            const auto& [from, symbol] = parent.at(at);
            word.push_back(symbol);
            at = from;
        }
        std::reverse(word.begin(), word.end());
        return word;
    };

    while (!queue.empty()) {
        Pair at = queue.front();
        queue.pop_front();
        for (const Symbol& symbol : a.alphabet) {
            auto sa = a.next(at.first, symbol);
            auto sb = b.next(at.second, symbol);
            if (!sa || !sb) {
                throw Error("FSM is not complete at symbol " + symbol.str());
            }
            if (sa->second != sb->second) {
                FsmCounterexample cex;
                cex.word = word_to(at);
                cex.word.push_back(symbol);
                cex.outputs_a = fsm_run(a, cex.word).outputs;
                cex.outputs_b = fsm_run(b, cex.word).outputs;
                cex.divergence_index = cex.word.size() - 1;
                return {false, std::move(cex)};
            }
            Pair succ{sa->first, sb->first};
            if (parent.emplace(succ, std::pair<Pair, Symbol>{at, symbol}).second) {
                queue.push_back(succ);
            }
        }
    }
    return {true, std::nullopt};
}

// ── Lifts ───────────────────────────────────────────────────────────

TimedWord lift_regions(std::span<const Symbol> word) {
    TimedWord timed;
    timed.reserve(word.size());
    Rational now(0);
    for (const Symbol& symbol : word) {
        if (symbol.kind != Symbol::Kind::Region) {
            throw Error("expected a region symbol, got " + symbol.str());
        }
        now += symbol.region.representative();
        timed.push_back({symbol.value, now});
    }
    return timed;
}

namespace {

TimedWord lift_ticks(std::span<const Symbol> word, Symbol::Kind tick,
                     const Rational& (*to_delay)(std::int64_t, Rational&)) {
    TimedWord timed;
    Rational now(0);
    std::int64_t pending = 0;
    for (const Symbol& symbol : word) {
        if (symbol.kind == tick) {
            ++pending;
            continue;
        }
        if (symbol.kind != Symbol::Kind::Plain) {
            throw Error("unexpected symbol " + symbol.str() + " in a tick word");
        }
        Rational delay(0);
        now += to_delay(pending, delay);
        timed.push_back({symbol.value, now});
        pending = 0;
    }
    if (pending > 0) {
        throw TrailingTicks("abstract word ends with " + std::to_string(pending) +
                            " trailing tick symbols");
    }
    return timed;
}

}  // namespace

TimedWord lift_one(std::span<const Symbol> word) {
    // k unit ticks mean the delay had floor k: take k + 1/2.
    return lift_ticks(word, Symbol::Kind::TickOne,
                      [](std::int64_t k, Rational& out) -> const Rational& {
                          out = Rational(2 * k + 1, 2);
                          return out;
                      });
}

TimedWord lift_tick(std::span<const Symbol> word) {
    // k region ticks mean the delay crossed k region boundaries: k/2
    // lands in the right region for even and odd k alike.
    return lift_ticks(word, Symbol::Kind::TickT,
                      [](std::int64_t k, Rational& out) -> const Rational& {
                          out = Rational(k, 2);
                          return out;
                      });
}

// ── Timed equivalence ───────────────────────────────────────────────

namespace {

void require_same_letters(const std::vector<std::string>& a, const std::vector<std::string>& b,
                          const char* what) {
    std::vector<std::string> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
        throw AlphabetMismatch(std::string("the machines have different ") + what +
                               " alphabets");
    }
}

/// Replays a separating abstract word on both machines and packages
/// the timed counterexample.  The divergence index always exists when
/// the abstraction is sound; finding none would be a library bug.
template <typename Machine>
Counterexample make_counterexample(const Machine& a, const Machine& b,
                                   std::vector<Symbol> abstract_word, TimedWord timed) {
    Counterexample cex;
    cex.outputs_a = run(a, timed).outputs;
    cex.outputs_b = run(b, timed).outputs;
    cex.abstract_word = std::move(abstract_word);
    cex.word = std::move(timed);

    std::size_t at = cex.word.size();
    for (std::size_t k = 0; k < cex.word.size(); ++k) {
        if (cex.outputs_a[k].symbol != cex.outputs_b[k].symbol) {
            at = k;
            break;
        }
    }
    if (at == cex.word.size()) {
        throw Error("internal error: lifted counterexample does not separate the machines");
    }
    cex.divergence_index = at;
    return cex;
}

}  // namespace

EquivalenceVerdict guarded_equivalent(const GuardedMachine& a, const GuardedMachine& b) {
    require_same_letters(a.inputs, b.inputs, "input");
    require_same_letters(a.outputs, b.outputs, "output");
    std::int64_t n = std::max(max_constant(a), max_constant(b));
    FsmVerdict fv = fsm_equivalent(abstract_guarded(a, n), abstract_guarded(b, n));
    if (fv.equivalent) return {true, std::nullopt};
    TimedWord timed = lift_regions(fv.counterexample->word);
    return {false, make_counterexample(a, b, std::move(fv.counterexample->word), std::move(timed))};
}

EquivalenceVerdict timeout_equivalent(const TimeoutMachine& a, const TimeoutMachine& b) {
    require_same_letters(a.inputs, b.inputs, "input");
    require_same_letters(a.outputs, b.outputs, "output");
    FsmVerdict fv = fsm_equivalent(abstract_timeout(a), abstract_timeout(b));
    if (fv.equivalent) return {true, std::nullopt};
    // BFS counterexamples end at the first divergence; a divergence on
    // the tick symbol itself cannot happen, because ticks always
    // output ticks on both sides.  The word therefore ends in a letter
    // and lifts cleanly.
    TimedWord timed = lift_one(fv.counterexample->word);
    return {false, make_counterexample(a, b, std::move(fv.counterexample->word), std::move(timed))};
}

EquivalenceVerdict general_equivalent(const GeneralMachine& a, const GeneralMachine& b) {
    require_same_letters(a.inputs, b.inputs, "input");
    require_same_letters(a.outputs, b.outputs, "output");
    std::int64_t n = std::max(max_constant(a), max_constant(b));
    FsmVerdict fv = fsm_equivalent(abstract_general(a, n), abstract_general(b, n));
    if (fv.equivalent) return {true, std::nullopt};
    TimedWord timed = lift_tick(fv.counterexample->word);
    return {false, make_counterexample(a, b, std::move(fv.counterexample->word), std::move(timed))};
}

}  // namespace tfsm
