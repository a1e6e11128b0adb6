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

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace tfsm {

/// Exact time values.  All timestamps, delays and clock values are
/// rationals; nothing in the library ever rounds.
using Rational = boost::rational<std::int64_t>;

/// Largest integer <= r.  Works for negative values too, although the
/// model only ever produces non-negative times.
std::int64_t floor_of(const Rational& r);

/// True iff r is an integer.
bool is_integral(const Rational& r);

/// Parses "7", "-3", "5/2" or an exact decimal such as "2.25".
/// Throws ParseError on anything else (including division by zero).
Rational parse_rational(std::string_view text);

/// Canonical form: "n" for integers, "p/q" otherwise (q > 0, reduced).
std::string format_rational(const Rational& r);

}  // namespace tfsm
