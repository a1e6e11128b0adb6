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

// Python bindings.  Machines are opaque handles; every structured
// value crosses the boundary in the documented JSON shapes (machine
// and timed word documents in, validation/run/FSM/verdict reports out
// as plain dicts and lists), so the Python API, the CLI and the file
// formats all speak the same language.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <string>

#include "tfsm/abstraction.hpp"
#include "tfsm/equivalence.hpp"
#include "tfsm/errors.hpp"
#include "tfsm/json_io.hpp"
#include "tfsm/machine.hpp"
#include "tfsm/semantics.hpp"
#include "tfsm/transform.hpp"
#include "tfsm/validate.hpp"

namespace py = pybind11;
using namespace tfsm;

namespace {

// ── JSON bridge ─────────────────────────────────────────────────────

py::object loads(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

std::string dumps(const py::object& value) {
    return py::module_::import("json").attr("dumps")(value).cast<std::string>();
}

/// Accepts a timed word as a JSON string or as the document structure
/// itself (a list of {"symbol", "timestamp"} dicts).
TimedWord word_from(const py::object& word) {
    if (py::isinstance<py::str>(word)) return parse_timed_word(word.cast<std::string>());
    return parse_timed_word(dumps(word));
}

/// Accepts a machine document as a JSON string or as the structure.
MachineAny machine_from(const py::object& doc) {
    if (py::isinstance<py::str>(doc)) return parse_machine(doc.cast<std::string>());
    return parse_machine(dumps(doc));
}

py::object verdict_to_py(const EquivalenceVerdict& verdict) {
    return loads(serialize_verdict(verdict));
}

// ── Machine handle ──────────────────────────────────────────────────

struct PyMachine {
    MachineAny value;

    std::string kind() const { return kind_name(kind_of(value)); }

    std::vector<std::string> states() const {
        return std::visit([](const auto& m) { return m.states; }, value);
    }

    std::vector<std::string> inputs() const {
        return std::visit([](const auto& m) { return m.inputs; }, value);
    }

    std::vector<std::string> outputs() const {
        return std::visit([](const auto& m) { return m.outputs; }, value);
    }

    std::string initial() const {
        return std::visit([](const auto& m) { return m.initial; }, value);
    }
};

EquivalenceVerdict dispatch_equivalent(const MachineAny& a, const MachineAny& b) {
    if (kind_of(a) != kind_of(b)) return cross_equivalent(a, b);
    if (const auto* ga = std::get_if<GuardedMachine>(&a))
        return guarded_equivalent(*ga, std::get<GuardedMachine>(b));
    if (const auto* ta = std::get_if<TimeoutMachine>(&a))
        return timeout_equivalent(*ta, std::get<TimeoutMachine>(b));
    return general_equivalent(std::get<GeneralMachine>(a), std::get<GeneralMachine>(b));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

PYBIND11_MODULE(_tfsm, m) {
    m.doc() = "Deterministic complete timed finite state machines: validation, "
              "simulation, untimed abstractions, equivalence checking and "
              "conversions between the guarded, timeout and general variants.";

    // Library errors surface as module-level exception types, all
    // derived from tfsm.Error (itself a ValueError, since every one of
    // them reports a problem with the caller's input).
    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<ValidationError>(m, "ValidationError", base);
    py::register_exception<AlphabetMismatch>(m, "AlphabetMismatch", base);
    py::register_exception<TrailingTicks>(m, "TrailingTicks", base);
    py::register_exception<NotLoopFree>(m, "NotLoopFree", base);
    py::register_exception<NotLcro>(m, "NotLcro", base);
    py::register_exception<MalformedRelation>(m, "MalformedRelation", base);

    py::class_<PyMachine>(m, "Machine")
        .def_property_readonly("kind", &PyMachine::kind)
        .def_property_readonly("states", &PyMachine::states)
        .def_property_readonly("inputs", &PyMachine::inputs)
        .def_property_readonly("outputs", &PyMachine::outputs)
        .def_property_readonly("initial", &PyMachine::initial)
        .def("to_json", [](const PyMachine& self) { return serialize_machine(self.value); },
             "Canonical JSON document of the machine.")
        .def("to_dict", [](const PyMachine& self) { return loads(serialize_machine(self.value)); },
             "The machine document as a plain dict.")
        .def("__repr__", [](const PyMachine& self) {
            return "<tfsm.Machine kind=" + self.kind() + " states=" +
                   std::to_string(self.states().size()) + " initial=" + self.initial() + ">";
        });

    m.def(
        "parse_machine", [](const py::object& doc) { return PyMachine{machine_from(doc)}; },
        py::arg("document"),
        "Parses a machine document given as a JSON string or as the document structure.");

    m.def(
        "load_machine", [](const std::string& path) { return PyMachine{parse_machine(read_file(path))}; },
        py::arg("path"), "Parses the machine document stored at `path`.");

    m.def(
        "validate", [](const PyMachine& machine) { return loads(serialize_validation(validate_any(machine.value))); },
        py::arg("machine"),
        "Completeness/determinism report: {\"ok\": bool, \"violations\": [...]}.");

    m.def(
        "run",
        [](const PyMachine& machine, const py::object& word, bool trace) {
            return loads(serialize_run(tfsm::run(machine.value, word_from(word)), trace));
        },
        py::arg("machine"), py::arg("word"), py::arg("trace") = false,
        "Runs a timed input word (JSON string or list of {\"symbol\", \"timestamp\"}); "
        "returns {\"outputs\": [...], \"final\": {...}} plus a \"trace\" when requested.");

    m.def(
        "abstract",
        [](const PyMachine& machine, const py::object& n) {
            UntimedFsm fsm;
            if (const auto* g = std::get_if<GuardedMachine>(&machine.value)) {
                const std::int64_t bound =
                    n.is_none() ? max_constant(*g) : n.cast<std::int64_t>();
                fsm = abstract_guarded(*g, bound);
            } else if (const auto* t = std::get_if<TimeoutMachine>(&machine.value)) {
                if (!n.is_none())
                    throw ValidationError("the tick abstraction does not take a bound");
                fsm = abstract_timeout(*t);
            } else {
                const auto& general = std::get<GeneralMachine>(machine.value);
                fsm = n.is_none() ? abstract_general(general)
                                  : abstract_general(general, n.cast<std::int64_t>());
            }
            return loads(serialize_fsm(fsm));
        },
        py::arg("machine"), py::arg("n") = py::none(),
        "Untimed FSM of the machine's abstraction as a document: the region "
        "abstraction with bound n (guarded), the unit-tick abstraction (timeout) "
        "or the region-tick abstraction with bound n (general).");

    m.def(
        "equivalent",
        [](const PyMachine& a, const PyMachine& b) {
            return verdict_to_py(dispatch_equivalent(a.value, b.value));
        },
        py::arg("a"), py::arg("b"),
        "Timed equivalence verdict {\"equivalent\": bool, \"counterexample\": {...}}; "
        "machines of different variants are compared through their general embeddings.");

    m.def(
        "cross_equivalent",
        [](const PyMachine& a, const PyMachine& b) {
            return verdict_to_py(tfsm::cross_equivalent(a.value, b.value));
        },
        py::arg("a"), py::arg("b"),
        "Equivalence verdict over the general embeddings, regardless of variants.");

    m.def(
        "is_loop_free",
        [](const PyMachine& machine) {
            const auto* t = std::get_if<TimeoutMachine>(&machine.value);
            if (!t) throw ValidationError("loop-freedom applies to timeout machines");
            return is_timeout_loop_free(*t).loop_free;
        },
        py::arg("machine"), "True when following finite timeouts never revisits a state.");

    m.def(
        "is_lcro",
        [](const PyMachine& machine) {
            const auto* g = std::get_if<GuardedMachine>(&machine.value);
            if (!g) throw ValidationError("the LCRO property applies to guarded machines");
            return tfsm::is_lcro(*g).lcro;
        },
        py::arg("machine"), "True when every guard is left-closed and right-open.");

    m.def(
        "to_guarded",
        [](const PyMachine& machine) {
            const auto* t = std::get_if<TimeoutMachine>(&machine.value);
            if (!t) throw ValidationError("only timeout machines convert to guarded machines");
            return PyMachine{MachineAny{loopfree_timeout_to_guarded(*t)}};
        },
        py::arg("machine"),
        "Equivalent LCRO-guarded machine of a loop-free timeout machine.");

    m.def(
        "to_timeout",
        [](const PyMachine& machine) {
            const auto* g = std::get_if<GuardedMachine>(&machine.value);
            if (!g) throw ValidationError("only guarded machines convert to timeout machines");
            return PyMachine{MachineAny{lcro_guarded_to_timeout(*g)}};
        },
        py::arg("machine"), "Equivalent timeout machine of an LCRO guarded machine.");

    m.def(
        "embed", [](const PyMachine& machine) { return PyMachine{MachineAny{embed_any(machine.value)}}; },
        py::arg("machine"),
        "The machine as a general machine with identical timed behavior.");
}
