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

#include "tfsm/rational.hpp"

#include <charconv>
#include <sstream>

#include "tfsm/errors.hpp"

namespace tfsm {

std::int64_t floor_of(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

bool is_integral(const Rational& r) { return r.denominator() == 1; }

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("not a rational literal: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(text.substr(0, slash), text);
        std::int64_t den = parse_int(text.substr(slash + 1), text);
        if (den <= 0) throw ParseError("rational denominator must be positive: '" +
                                       std::string(text) + "'");
        return {num, den};
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18) {
            throw ParseError("not a rational literal: '" + std::string(text) + "'");
        }
        bool negative = !whole.empty() && whole.front() == '-';
        if (negative) whole.remove_prefix(1);
        std::int64_t ip = whole.empty() ? 0 : parse_int(whole, text);
        std::int64_t fp = parse_int(frac, text);
        if (fp < 0) throw ParseError("not a rational literal: '" + std::string(text) + "'");
        std::int64_t scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        Rational magnitude = Rational(ip) + Rational(fp, scale);
        return negative ? -magnitude : magnitude;
    }
    return {parse_int(text, text), 1};
}

std::string format_rational(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << '/' << r.denominator();
    return out.str();
}

}  // namespace tfsm
