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

#include <stdexcept>
#include <string>
#include <vector>

namespace tfsm {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A document is not syntactically well formed (bad JSON, missing or
/// mistyped fields, unknown machine kind, malformed rational literals).
struct ParseError : Error {
    using Error::Error;
};

/// A document parses but violates a semantic invariant that the model
/// requires unconditionally (timeout duration zero, closed infinite
/// bound, unknown state or letter names, and similar).
struct ValidationError : Error {
    using Error::Error;
};

/// Two machines or FSMs cannot be compared because their alphabets
/// (or abstraction flavors) differ.
struct AlphabetMismatch : Error {
    using Error::Error;
};

/// An abstract word ends in tick symbols; no timed word maps onto it,
/// since trailing delay below the next input is unobservable.
struct TrailingTicks : Error {
    using Error::Error;
};

/// A timeout machine has a cycle of finite timeouts, so the loop-free
/// conversion to a guarded machine does not apply.  `cycle` lists the
/// states of one offending cycle in traversal order.
struct NotLoopFree : Error {
    std::vector<std::string> cycle;

    NotLoopFree(std::string message, std::vector<std::string> cycle_states)
        : Error(std::move(message)), cycle(std::move(cycle_states)) {}
};

/// A guarded machine uses a guard that is not left-closed right-open,
/// so the conversion to a timeout machine does not apply.
struct NotLcro : Error {
    using Error::Error;
};

/// A candidate bisimulation relation mentions unknown states, uses the
/// wrong tags for the machine variant, or pairs mismatched structures.
struct MalformedRelation : Error {
    using Error::Error;
};

}  // namespace tfsm
