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

#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "tfsm/abstraction.hpp"
#include "tfsm/errors.hpp"
#include "tfsm/semantics.hpp"
#include "tfsm/transform.hpp"

using namespace tfsm;
using tfsm::testing::Rng;

namespace {

/// The transition (from, on) -> (to, out) must exist, where states are
/// looked up by provenance.
void check_arc(const UntimedFsm& fsm, const AbstractState& from, const Symbol& on,
               const AbstractState& to, const Symbol& out) {
    const std::string where = from.str() + " on " + on.str();
    const auto source = fsm.find_state(from);
    const auto target = fsm.find_state(to);
    REQUIRE_MESSAGE(source.has_value(), where);
    REQUIRE_MESSAGE(target.has_value(), where);
    const auto hit = fsm.next(*source, on);
    REQUIRE_MESSAGE(hit.has_value(), where);
    CHECK(hit->first == *target);
    CHECK(hit->second == out);
}

}  // namespace

// ── Region intervals ────────────────────────────────────────────────

TEST_CASE("interval_set lists the 2N+2 regions in ascending order") {
    const auto regions = interval_set(1);
    REQUIRE(regions.size() == 4);
    CHECK(regions[0] == RegionInterval::point(0));
    CHECK(regions[1] == RegionInterval::open(0));
    CHECK(regions[2] == RegionInterval::point(1));
    CHECK(regions[3] == RegionInterval::tail(1));

    CHECK(interval_set(3).size() == 8);
    CHECK_THROWS_AS(interval_set(0), ValidationError);
}

TEST_CASE("classify places a time in its unique region") {
    CHECK(classify(Rational(1), 1) == RegionInterval::point(1));
    CHECK(classify(Rational(9, 5), 1) == RegionInterval::tail(1));
    CHECK(classify(Rational(1, 2), 3) == RegionInterval::open(0));
    CHECK(classify(Rational(0), 2) == RegionInterval::point(0));
    CHECK(classify(Rational(5, 2), 2) == RegionInterval::tail(2));
    CHECK_THROWS_AS(classify(Rational(-1), 1), ValidationError);

    // classify is the inverse of membership: each region contains
    // exactly the times it classifies to.
    for (std::int64_t den = 1; den <= 4; ++den)
        for (std::int64_t num = 0; num <= 4 * den; ++num) {
            const Rational t(num, den);
            for (const auto& region : interval_set(2))
                CHECK(region.contains(t) == (classify(t, 2) == region));
        }
}

TEST_CASE("representatives sit inside their region") {
    CHECK(RegionInterval::point(2).representative() == Rational(2));
    CHECK(RegionInterval::open(1).representative() == Rational(3, 2));
    CHECK(RegionInterval::tail(3).representative() == Rational(4));
    for (const auto& region : interval_set(3)) CHECK(region.contains(region.representative()));
}

TEST_CASE("guard_covers matches region-subset semantics") {
    const Guard unit = guard_closed(0, 1);
    CHECK(guard_covers(unit, RegionInterval::point(0)));
    CHECK(guard_covers(unit, RegionInterval::open(0)));
    CHECK(guard_covers(unit, RegionInterval::point(1)));
    CHECK_FALSE(guard_covers(unit, RegionInterval::tail(1)));

    CHECK(guard_covers(guard_above(1), RegionInterval::tail(1)));
    CHECK(guard_covers(guard_above(1), RegionInterval::open(1)));
    CHECK_FALSE(guard_covers(guard_right_open(0, 2), RegionInterval::tail(1)));
    CHECK_FALSE(guard_covers(guard_point(2), RegionInterval::open(1)));
    CHECK(guard_covers(guard_point(2), RegionInterval::point(2)));
}

// ── Region abstraction of guarded machines ──────────────────────────

TEST_CASE("abstract_guarded of the two-state fixture matches arc for arc") {
    const GuardedMachine m = tfsm::testing::two_state_guarded();
    const UntimedFsm fsm = abstract_guarded(m, 1);

    CHECK(fsm.flavor == AbstractionFlavor::Regions);
    CHECK(fsm.states.size() == 2);
    CHECK(fsm.transitions.size() == 8);
    CHECK(fsm.alphabet.size() == 4);

    const AbstractState s0 = AbstractState::plain("s0");
    const AbstractState s1 = AbstractState::plain("s1");
    const Symbol o1 = Symbol::plain("o1");
    const Symbol o2 = Symbol::plain("o2");
    const auto at = [](RegionInterval r) { return Symbol::with_region("i", r); };

    check_arc(fsm, s0, at(RegionInterval::point(0)), s0, o1);
    check_arc(fsm, s0, at(RegionInterval::open(0)), s0, o1);
    check_arc(fsm, s0, at(RegionInterval::point(1)), s0, o1);
    check_arc(fsm, s0, at(RegionInterval::tail(1)), s1, o2);
    check_arc(fsm, s1, at(RegionInterval::point(0)), s1, o2);
    check_arc(fsm, s1, at(RegionInterval::open(0)), s1, o2);
    check_arc(fsm, s1, at(RegionInterval::point(1)), s0, o1);
    check_arc(fsm, s1, at(RegionInterval::tail(1)), s0, o1);

    // A larger bound refines the alphabet: 2 states x 6 regions.
    CHECK(abstract_guarded(m, 2).transitions.size() == 12);
}

TEST_CASE("abstract_guarded keeps 4 self-loops for the one-state machine") {
    GuardedMachine m;
    m.states = {"s"};
    m.inputs = {"i"};
    m.outputs = {"o"};
    m.initial = "s";
    m.transitions = {{"s", "i", guard_from(0), "o", "s"}};
    const UntimedFsm fsm = abstract_guarded(m, 1);
    CHECK(fsm.states.size() == 1);
    CHECK(fsm.transitions.size() == 4);
    for (const auto& [key, value] : fsm.transitions) {
        CHECK(value.first == fsm.initial);
        CHECK(value.second == Symbol::plain("o"));
    }
}

TEST_CASE("abstract_guarded rejects bounds below the max constant") {
    CHECK_THROWS_AS(abstract_guarded(tfsm::testing::threshold_machine(), 1), ValidationError);
}

// ── Tick abstraction of timeout machines ────────────────────────────

TEST_CASE("abstract_timeout of the two-state fixture has the 5-state tick cycle") {
    const TimeoutMachine m = tfsm::testing::two_state_timeout();
    const UntimedFsm fsm = abstract_timeout(m);

    CHECK(fsm.flavor == AbstractionFlavor::TickOne);
    CHECK(fsm.states.size() == 5);
    CHECK(fsm.transitions.size() == 10);

    const auto q = [](const char* s, std::int64_t n) { return AbstractState::indexed(s, n); };
    const Symbol tick = Symbol::tick_one();
    const Symbol i = Symbol::plain("i");
    const Symbol o1 = Symbol::plain("o1");
    const Symbol o2 = Symbol::plain("o2");

    check_arc(fsm, q("q0", 0), tick, q("q0", 1), tick);
    check_arc(fsm, q("q0", 1), tick, q("q0", 2), tick);
    check_arc(fsm, q("q0", 2), tick, q("q1", 0), tick);
    check_arc(fsm, q("q1", 0), tick, q("q1", 1), tick);
    check_arc(fsm, q("q1", 1), tick, q("q0", 0), tick);
    check_arc(fsm, q("q0", 0), i, q("q0", 0), o1);
    check_arc(fsm, q("q0", 1), i, q("q0", 0), o1);
    check_arc(fsm, q("q0", 2), i, q("q0", 0), o1);
    check_arc(fsm, q("q1", 0), i, q("q1", 0), o2);
    check_arc(fsm, q("q1", 1), i, q("q1", 0), o2);
}

TEST_CASE("abstract_timeout of the parity fixture toggles between two states") {
    const UntimedFsm fsm = abstract_timeout(tfsm::testing::parity_machine());
    CHECK(fsm.states.size() == 2);
    const auto q0 = AbstractState::indexed("q0", 0);
    const auto q1 = AbstractState::indexed("q1", 0);
    check_arc(fsm, q0, Symbol::tick_one(), q1, Symbol::tick_one());
    check_arc(fsm, q1, Symbol::tick_one(), q0, Symbol::tick_one());
    check_arc(fsm, q0, Symbol::plain("i"), q0, Symbol::plain("o1"));
    check_arc(fsm, q1, Symbol::plain("i"), q1, Symbol::plain("o2"));
}

TEST_CASE("infinite timeouts loop on the tick") {
    TimeoutMachine m;
    m.states = {"s"};
    m.inputs = {"i"};
    m.outputs = {"o"};
    m.initial = "s";
    m.transitions = {{"s", "i", "o", "s"}};
    m.timeouts["s"] = Timeout{"s", Bound::inf()};
    const UntimedFsm fsm = abstract_timeout(m);
    CHECK(fsm.states.size() == 1);
    check_arc(fsm, AbstractState::indexed("s", 0), Symbol::tick_one(),
              AbstractState::indexed("s", 0), Symbol::tick_one());
}

// ── Region-tick abstraction of general machines ─────────────────────

TEST_CASE("abstract_general of the two-state fixture walks the region chain") {
    const GeneralMachine m = tfsm::testing::two_state_general();
    const UntimedFsm fsm = abstract_general(m);

    CHECK(fsm.flavor == AbstractionFlavor::TickT);
    CHECK(fsm.states.size() == 6);

    const auto at = [](const char* s, RegionInterval r) { return AbstractState::in_region(s, r); };
    const Symbol tick = Symbol::tick_t();
    const Symbol i = Symbol::plain("i");
    const Symbol o1 = Symbol::plain("o1");
    const Symbol o2 = Symbol::plain("o2");

    const auto s0p0 = at("s0", RegionInterval::point(0));
    const auto s0o0 = at("s0", RegionInterval::open(0));
    const auto s1p0 = at("s1", RegionInterval::point(0));
    const auto s1o0 = at("s1", RegionInterval::open(0));
    const auto s1p1 = at("s1", RegionInterval::point(1));
    const auto s1tail = at("s1", RegionInterval::tail(1));

    // Tick chain: the timeout of s0 fires after one unit, s1 never
    // times out and parks in the tail.
    check_arc(fsm, s0p0, tick, s0o0, tick);
    check_arc(fsm, s0o0, tick, s1p0, tick);
    check_arc(fsm, s1p0, tick, s1o0, tick);
    check_arc(fsm, s1o0, tick, s1p1, tick);
    check_arc(fsm, s1p1, tick, s1tail, tick);
    check_arc(fsm, s1tail, tick, s1tail, tick);

    check_arc(fsm, s0p0, i, s0p0, o1);
    check_arc(fsm, s0o0, i, s0p0, o1);
    check_arc(fsm, s1p0, i, s1p0, o2);
    check_arc(fsm, s1o0, i, s1p0, o2);
    check_arc(fsm, s1p1, i, s1p0, o2);
    check_arc(fsm, s1tail, i, s0p0, o1);
}

TEST_CASE("abstract_general of an embedded guarded machine visits all regions") {
    const GeneralMachine m = embed(tfsm::testing::threshold_machine());
    const UntimedFsm fsm = abstract_general(m);  // bound = max constant = 2
    CHECK(fsm.bound == 2);
    CHECK(fsm.states.size() == 6);
    const auto tail = AbstractState::in_region("q0", RegionInterval::tail(2));
    check_arc(fsm, tail, Symbol::tick_t(), tail, Symbol::tick_t());
    check_arc(fsm, tail, Symbol::plain("i"),
              AbstractState::in_region("q0", RegionInterval::point(0)), Symbol::plain("o2"));
}

TEST_CASE("abstract_general of a single all-accepting state has 4 regions") {
    GeneralMachine m;
    m.states = {"s"};
    m.inputs = {"i"};
    m.outputs = {"o"};
    m.initial = "s";
    m.transitions = {{"s", "i", guard_from(0), "o", "s"}};
    m.timeouts["s"] = Timeout{"s", Bound::inf()};
    CHECK(abstract_general(m).states.size() == 4);
}

// ── Word abstractions ───────────────────────────────────────────────

TEST_CASE("abstract_word_regions classifies consecutive delays") {
    const auto w1 = abstract_word_regions({{"i", Rational(1, 2)}, {"i", Rational(23, 10)}}, 1);
    REQUIRE(w1.size() == 2);
    CHECK(w1[0] == Symbol::with_region("i", RegionInterval::open(0)));
    CHECK(w1[1] == Symbol::with_region("i", RegionInterval::tail(1)));

    const auto w2 = abstract_word_regions({{"i", Rational(1)}}, 1);
    CHECK(w2 == std::vector<Symbol>{Symbol::with_region("i", RegionInterval::point(1))});

    const auto w3 = abstract_word_regions({{"i", Rational(3)}, {"i", Rational(3)}}, 2);
    REQUIRE(w3.size() == 2);
    CHECK(w3[0] == Symbol::with_region("i", RegionInterval::tail(2)));
    CHECK(w3[1] == Symbol::with_region("i", RegionInterval::point(0)));
}

TEST_CASE("abstract_word_one inserts floor-many ticks") {
    const auto w1 = abstract_word_one({{"i", Rational(5, 2)}, {"i", Rational(16, 5)}});
    CHECK(w1 == std::vector<Symbol>{Symbol::tick_one(), Symbol::tick_one(), Symbol::plain("i"),
                                    Symbol::plain("i")});
    CHECK(abstract_word_one({{"i", Rational(1, 2)}}) == std::vector<Symbol>{Symbol::plain("i")});
    CHECK(abstract_word_one({{"i", Rational(3)}}) ==
          std::vector<Symbol>{Symbol::tick_one(), Symbol::tick_one(), Symbol::tick_one(),
                              Symbol::plain("i")});
}

TEST_CASE("abstract_word_tick doubles integer delays") {
    const auto five = abstract_word_tick({{"i", Rational(5, 2)}});
    REQUIRE(five.size() == 6);
    for (std::size_t k = 0; k < 5; ++k) CHECK(five[k] == Symbol::tick_t());
    CHECK(five[5] == Symbol::plain("i"));

    CHECK(abstract_word_tick({{"i", Rational(2)}}).size() == 5);  // 4 ticks + letter
    CHECK(abstract_word_tick({{"i", Rational(0)}}) == std::vector<Symbol>{Symbol::plain("i")});
}

// ── Running abstract FSMs ───────────────────────────────────────────

TEST_CASE("fsm_run walks transitions and reports outputs") {
    const UntimedFsm fsm = abstract_timeout(tfsm::testing::parity_machine());
    const std::vector<Symbol> word{Symbol::tick_one(), Symbol::plain("i")};
    const FsmRun result = fsm_run(fsm, word);
    REQUIRE(result.outputs.size() == 2);
    CHECK(result.outputs[0] == Symbol::tick_one());
    CHECK(result.outputs[1] == Symbol::plain("o2"));

    const std::vector<Symbol> alien{Symbol::with_region("i", RegionInterval::point(0))};
    CHECK_THROWS_AS(fsm_run(fsm, alien), Error);
}

// ── The commuting identity, at unit-test scale ──────────────────────

TEST_CASE("abstraction commutes with execution on random machines") {
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        // Regions: the abstract outputs are the untimed machine outputs.
        const GuardedMachine gm = tfsm::testing::random_guarded(rng);
        const std::int64_t n = max_constant(gm);
        const TimedWord gw = tfsm::testing::random_word(rng, gm.inputs);
        std::vector<Symbol> plain_outputs;
        for (const auto& name : untime(run(gm, gw).outputs))
            plain_outputs.push_back(Symbol::plain(name));
        CHECK(fsm_run(abstract_guarded(gm, n), abstract_word_regions(gw, n)).outputs ==
              plain_outputs);

        // Ticks in, ticks out: output timestamps equal input timestamps,
        // so abstracting the timed output word interleaves the same
        // ticks with the output letters.
        const TimeoutMachine tm = tfsm::testing::random_timeout(rng);
        const TimedWord tw = tfsm::testing::random_word(rng, tm.inputs);
        CHECK(fsm_run(abstract_timeout(tm), abstract_word_one(tw)).outputs ==
              abstract_word_one(run(tm, tw).outputs));

        const GeneralMachine om = tfsm::testing::random_general(rng);
        const TimedWord ow = tfsm::testing::random_word(rng, om.inputs);
        CHECK(fsm_run(abstract_general(om), abstract_word_tick(ow)).outputs ==
              abstract_word_tick(run(om, ow).outputs));
    }
}
