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

#include <string>

#include "tfsm/machine.hpp"

namespace tfsm::testing {

std::string read_file(const std::string& path);
std::string fixture_path(const std::string& name);
std::string fixture_text(const std::string& name);
MachineAny fixture_machine(const std::string& name);

/// The five machines shipped under fixtures/, by shape:
///   * guarded_two_state:  s0: [0,1]:i/o1 loop, (1,inf):i/o2 -> s1;
///                         s1: [0,1):i/o2 loop, [1,inf):i/o1 -> s0
///   * timeout_two_state:  q0: i/o1 loop, timeout (q1, 3);
///                         q1: i/o2 loop, timeout (q0, 2)
///   * general_two_state:  s0: [0,1):i/o1 loop, timeout (s1, 1);
///                         s1: [0,1]:i/o2 loop, (1,inf):i/o1 -> s0, inf
///   * timeout_parity:     q0/q1 swap every time unit; i/o1 in q0, i/o2 in q1
///   * guarded_threshold:  q0: [0,2]:i/o1 loop, (2,inf):i/o2 loop
GuardedMachine two_state_guarded();
TimeoutMachine two_state_timeout();
GeneralMachine two_state_general();
TimeoutMachine parity_machine();
GuardedMachine threshold_machine();

}  // namespace tfsm::testing
