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
#include <optional>
#include <string>

#include "tfsm/rational.hpp"

namespace tfsm {

// ── Bound ───────────────────────────────────────────────────────────

/// A natural number or infinity.  Used for guard upper endpoints and
/// timeout durations.  Infinity compares greater than every integer.
struct Bound {
    std::int64_t value{0};
    bool finite{true};

    static constexpr Bound at(std::int64_t v) { return Bound{v, true}; }
    static constexpr Bound inf() { return Bound{0, false}; }

    friend constexpr bool operator==(const Bound& a, const Bound& b) {
        if (a.finite != b.finite) return false;
        return !a.finite || a.value == b.value;
    }

    friend constexpr bool operator<(const Bound& a, const Bound& b) {
        if (!a.finite) return false;
        if (!b.finite) return true;
        return a.value < b.value;
    }

    friend constexpr bool operator<=(const Bound& a, const Bound& b) {
        return a < b || a == b;
    }

    constexpr bool is_at_most(std::int64_t v) const { return finite && value <= v; }
    constexpr bool is_greater_than(std::int64_t v) const { return !finite || value > v; }

    /// Exceeds x for every rational x when infinite.
    bool is_greater_than(const Rational& x) const;

    std::string str() const;
};

// ── Guard ───────────────────────────────────────────────────────────

/// A time interval with integer endpoints: one of [a,b], [a,b), (a,b],
/// (a,b), or the unbounded forms [a,inf), (a,inf).
///
/// Invariants (enforced by make_guard, assumed everywhere else):
///   * lower >= 0;
///   * the interval is nonempty: lower < upper, or lower == upper with
///     both endpoints closed;
///   * an infinite upper endpoint is open.
struct Guard {
    std::int64_t lower{0};
    Bound upper{Bound::inf()};
    bool lower_closed{true};
    bool upper_closed{false};

    bool contains(const Rational& x) const;

    /// Least element when the guard is left-closed, else the lower
    /// endpoint itself (not contained).
    std::int64_t lower_value() const { return lower; }

    std::string str() const;

    friend bool operator==(const Guard&, const Guard&) = default;
};

/// Validates the invariants above; throws ValidationError on failure.
Guard make_guard(std::int64_t lower, Bound upper, bool lower_closed, bool upper_closed);

/// Convenience factories.  All validate.
Guard guard_closed(std::int64_t lower, std::int64_t upper);       // [a,b]
Guard guard_right_open(std::int64_t lower, std::int64_t upper);   // [a,b)
Guard guard_left_open(std::int64_t lower, std::int64_t upper);    // (a,b]
Guard guard_open(std::int64_t lower, std::int64_t upper);         // (a,b)
Guard guard_from(std::int64_t lower);                             // [a,inf)
Guard guard_above(std::int64_t lower);                            // (a,inf)
Guard guard_point(std::int64_t value);                            // [a,a]

/// Nullopt if the fields form a valid guard, else a description of the
/// violated invariant.
std::optional<std::string> guard_problem(std::int64_t lower, Bound upper,
                                         bool lower_closed, bool upper_closed);

/// Total order used for canonical serialization: by lower endpoint,
/// closed-left before open-left, then by upper endpoint, closed-right
/// after open-right.
bool guard_less(const Guard& a, const Guard& b);

}  // namespace tfsm
