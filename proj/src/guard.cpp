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

#include "tfsm/guard.hpp"

#include <sstream>
#include <tuple>

#include "tfsm/errors.hpp"

namespace tfsm {

bool Bound::is_greater_than(const Rational& x) const {
    return !finite || Rational(value) > x;
}

std::string Bound::str() const {
    return finite ? std::to_string(value) : "inf";
}

bool Guard::contains(const Rational& x) const {
    Rational lo(lower);
    if (lower_closed ? x < lo : x <= lo) return false;
    if (!upper.finite) return true;
    Rational hi(upper.value);
    return upper_closed ? x <= hi : x < hi;
}

std::string Guard::str() const {
    std::ostringstream out;
    out << (lower_closed ? '[' : '(') << lower << ',' << upper.str()
        << (upper_closed ? ']' : ')');
    return out.str();
}

std::optional<std::string> guard_problem(std::int64_t lower, Bound upper,
                                         bool lower_closed, bool upper_closed) {
    if (lower < 0) return "guard lower endpoint is negative";
    if (!upper.finite) {
        if (upper_closed) return "guard cannot be closed at infinity";
        return std::nullopt;
    }
    if (upper.value < lower) return "guard upper endpoint below lower endpoint";
    if (upper.value == lower && !(lower_closed && upper_closed)) {
        return "guard with equal endpoints must be closed on both sides";
    }
    return std::nullopt;
}

Guard make_guard(std::int64_t lower, Bound upper, bool lower_closed, bool upper_closed) {
    if (auto problem = guard_problem(lower, upper, lower_closed, upper_closed)) {
        throw ValidationError(*problem);
    }
    return Guard{lower, upper, lower_closed, upper_closed};
}

Guard guard_closed(std::int64_t lower, std::int64_t upper) {
    return make_guard(lower, Bound::at(upper), true, true);
}

Guard guard_right_open(std::int64_t lower, std::int64_t upper) {
    return make_guard(lower, Bound::at(upper), true, false);
}

Guard guard_left_open(std::int64_t lower, std::int64_t upper) {
    return make_guard(lower, Bound::at(upper), false, true);
}

Guard guard_open(std::int64_t lower, std::int64_t upper) {
    return make_guard(lower, Bound::at(upper), false, false);
}

Guard guard_from(std::int64_t lower) {
    return make_guard(lower, Bound::inf(), true, false);
}

Guard guard_above(std::int64_t lower) {
    return make_guard(lower, Bound::inf(), false, false);
}

Guard guard_point(std::int64_t value) {
    return make_guard(value, Bound::at(value), true, true);
}

bool guard_less(const Guard& a, const Guard& b) {
    // Infinite upper endpoints sort after every finite one.
    auto upper_key = [](const Guard& g) {
        return g.upper.finite ? g.upper.value : std::int64_t{1} << 62;
    };
    return std::tuple(a.lower, !a.lower_closed, upper_key(a), a.upper_closed) <
           std::tuple(b.lower, !b.lower_closed, upper_key(b), b.upper_closed);
}

}  // namespace tfsm
