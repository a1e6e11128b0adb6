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

#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "tfsm/json_io.hpp"

#ifndef TFSM_FIXTURE_DIR
#error "TFSM_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace tfsm::testing {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fixture_path(const std::string& name) {
    return std::string(TFSM_FIXTURE_DIR) + "/" + name;
}

std::string fixture_text(const std::string& name) {
    return read_file(fixture_path(name));
}

MachineAny fixture_machine(const std::string& name) {
    return parse_machine(fixture_text(name));
}

GuardedMachine two_state_guarded() {
    return std::get<GuardedMachine>(fixture_machine("guarded_two_state.json"));
}

TimeoutMachine two_state_timeout() {
    return std::get<TimeoutMachine>(fixture_machine("timeout_two_state.json"));
}

GeneralMachine two_state_general() {
    return std::get<GeneralMachine>(fixture_machine("general_two_state.json"));
}

TimeoutMachine parity_machine() {
    return std::get<TimeoutMachine>(fixture_machine("timeout_parity.json"));
}

GuardedMachine threshold_machine() {
    return std::get<GuardedMachine>(fixture_machine("guarded_threshold.json"));
}

}  // namespace tfsm::testing
