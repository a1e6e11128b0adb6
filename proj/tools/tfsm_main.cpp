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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tfsm/errors.hpp"
#include "tfsm/json_io.hpp"
#include "tfsm/semantics.hpp"
#include "tfsm/transform.hpp"
#include "tfsm/validate.hpp"

namespace {

using namespace tfsm;

// Exit codes: 0 success, 1 inequivalent, 2 bad input or failed
// precondition.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

MachineAny load_machine(const std::string& path) {
    return parse_machine(read_file(path));
}

/// Loads and fully validates; complete deterministic machines are a
/// precondition of everything except `validate` itself.
MachineAny load_valid_machine(const std::string& path) {
    MachineAny machine = load_machine(path);
    ValidationReport report = validate_any(machine);
    if (!report.ok()) {
        throw Error("machine '" + path + "' is not a valid complete deterministic machine; " +
                    "run `tfsm validate " + path + "` for the violations");
    }
    return machine;
}

std::string show_timed_word(const TimedWord& word) {
    std::string text;
    for (const auto& entry : word) {
        if (!text.empty()) text += " ";
        text += "(" + entry.symbol + ", " + format_rational(entry.time) + ")";
    }
    return text.empty() ? "(empty)" : text;
}

std::string show_symbols(const std::vector<Symbol>& symbols) {
    std::string text;
    for (const auto& s : symbols) {
        if (!text.empty()) text += " ";
        text += s.str();
    }
    return text.empty() ? "(empty)" : text;
}

// ── Subcommands ─────────────────────────────────────────────────────

int cmd_validate(const std::string& path, bool as_json) {
    MachineAny machine = load_machine(path);
    ValidationReport report = validate_any(machine);
    if (as_json) {
        std::cout << serialize_validation(report);
    } else if (report.ok()) {
        std::cout << "valid " << kind_name(kind_of(machine)) << " machine\n";
    } else {
        for (const auto& v : report.violations) {
            std::cout << violation_kind_name(v.kind);
            if (!v.state.empty()) {
                std::cout << " at (" << v.state;
                if (!v.input.empty()) std::cout << ", " << v.input;
                std::cout << ")";
            }
            std::cout << ": " << v.detail;
            if (v.witness) std::cout << " (witness clock " << format_rational(*v.witness) << ")";
            std::cout << "\n";
        }
    }
    return report.ok() ? kOk : kFailure;
}

int cmd_simulate(const std::string& machine_path, const std::string& word_path, bool with_trace,
                 bool as_json) {
    MachineAny machine = load_valid_machine(machine_path);
    TimedWord word = parse_timed_word(read_file(word_path));
    RunResult result = run(machine, word);
    if (as_json) {
        std::cout << serialize_run(result, with_trace);
        return kOk;
    }
    std::cout << "outputs: " << show_timed_word(result.outputs) << "\n";
    if (with_trace) {
        for (const auto& step : result.trace) {
            if (const auto* d = std::get_if<DelayStep>(&step)) {
                std::cout << "  delay " << format_rational(d->delay) << ": (" << d->from.state
                          << ", " << format_rational(d->from.clock) << ") -> (" << d->to.state
                          << ", " << format_rational(d->to.clock) << ")\n";
            } else {
                const auto& io = std::get<IoStep>(step);
                std::cout << "  io " << io.input << "/" << io.output << ": (" << io.from.state
                          << ", " << format_rational(io.from.clock) << ") -> (" << io.to.state
                          << ", " << format_rational(io.to.clock) << ")\n";
            }
        }
    }
    std::cout << "final: (" << result.final_state.state << ", "
              << format_rational(result.final_state.clock) << ")\n";
    return kOk;
}

int cmd_abstract(const std::string& path, std::int64_t n_bound, bool n_given) {
    MachineAny machine = load_valid_machine(path);
    UntimedFsm fsm;
    if (const auto* g = std::get_if<GuardedMachine>(&machine)) {
        fsm = abstract_guarded(*g, n_given ? n_bound : max_constant(*g));
    } else if (const auto* t = std::get_if<TimeoutMachine>(&machine)) {
        if (n_given) throw Error("the tick abstraction of a timeout machine takes no bound");
        fsm = abstract_timeout(*t);
    } else {
        const auto& m = std::get<GeneralMachine>(machine);
        fsm = n_given ? abstract_general(m, n_bound) : abstract_general(m);
    }
    std::cout << serialize_fsm(fsm);
    return kOk;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, bool as_json) {
    MachineAny a = load_valid_machine(path_a);
    MachineAny b = load_valid_machine(path_b);

    EquivalenceVerdict verdict;
    if (kind_of(a) != kind_of(b)) {
        verdict = cross_equivalent(a, b);
    } else if (const auto* ga = std::get_if<GuardedMachine>(&a)) {
        verdict = guarded_equivalent(*ga, std::get<GuardedMachine>(b));
    } else if (const auto* ta = std::get_if<TimeoutMachine>(&a)) {
        verdict = timeout_equivalent(*ta, std::get<TimeoutMachine>(b));
    } else {
        verdict = general_equivalent(std::get<GeneralMachine>(a), std::get<GeneralMachine>(b));
    }

    if (as_json) {
        std::cout << serialize_verdict(verdict);
    } else if (verdict.equivalent) {
        std::cout << "equivalent\n";
    } else {
        const Counterexample& cex = *verdict.counterexample;
        std::cout << "inequivalent\n";
        std::cout << "  abstract word: " << show_symbols(cex.abstract_word) << "\n";
        std::cout << "  timed word:    " << show_timed_word(cex.word) << "\n";
        std::cout << "  outputs a:     " << show_timed_word(cex.outputs_a) << "\n";
        std::cout << "  outputs b:     " << show_timed_word(cex.outputs_b) << "\n";
        std::cout << "  diverges at index " << cex.divergence_index << "\n";
    }
    return verdict.equivalent ? kOk : kNegative;
}

int cmd_convert(const std::string& path, const std::string& to) {
    MachineAny machine = load_valid_machine(path);
    if (to == "guarded") {
        const auto* t = std::get_if<TimeoutMachine>(&machine);
        if (!t) throw Error("convert --to guarded expects a timeout machine");
        std::cout << serialize_machine(loopfree_timeout_to_guarded(*t));
        return kOk;
    }
    if (to == "timeout") {
        const auto* g = std::get_if<GuardedMachine>(&machine);
        if (!g) throw Error("convert --to timeout expects a guarded machine");
        std::cout << serialize_machine(lcro_guarded_to_timeout(*g));
        return kOk;
    }
    throw Error("unknown conversion target '" + to + "'");
}

int cmd_embed(const std::string& path) {
    MachineAny machine = load_valid_machine(path);
    std::cout << serialize_machine(MachineAny(embed_any(machine)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic complete timed finite state machine toolkit"};
    app.require_subcommand(1);

    std::string machine_path, word_path, other_path, to;
    std::int64_t n_bound = 0;
    bool as_json = false, with_trace = false;

    auto* validate = app.add_subcommand("validate", "check completeness and determinism");
    validate->add_option("machine", machine_path)->required();
    validate->add_flag("--json", as_json);

    auto* simulate = app.add_subcommand("simulate", "run a timed input word");
    simulate->add_option("machine", machine_path)->required();
    simulate->add_option("word", word_path)->required();
    simulate->add_flag("--trace", with_trace);
    simulate->add_flag("--json", as_json);

    auto* abstr = app.add_subcommand("abstract", "write the untimed abstraction");
    abstr->add_option("machine", machine_path)->required();
    auto* n_option = abstr->add_option("--n", n_bound, "region bound");
    abstr->add_flag("--json", as_json);

    auto* equiv = app.add_subcommand("equiv", "decide timed equivalence");
    equiv->add_option("a", machine_path)->required();
    equiv->add_option("b", other_path)->required();
    equiv->add_flag("--json", as_json);

    auto* convert = app.add_subcommand("convert", "convert between machine classes");
    convert->add_option("machine", machine_path)->required();
    convert->add_option("--to", to, "guarded|timeout")->required();
    convert->add_flag("--json", as_json);

    auto* embed = app.add_subcommand("embed", "embed into the general class");
    embed->add_option("machine", machine_path)->required();
    embed->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(machine_path, as_json);
        if (app.got_subcommand(simulate)) {
            return cmd_simulate(machine_path, word_path, with_trace, as_json);
        }
        if (app.got_subcommand(abstr)) {
            return cmd_abstract(machine_path, n_bound, n_option->count() > 0);
        }
        if (app.got_subcommand(equiv)) return cmd_equiv(machine_path, other_path, as_json);
        if (app.got_subcommand(convert)) return cmd_convert(machine_path, to);
        if (app.got_subcommand(embed)) return cmd_embed(machine_path);
    } catch (const NotLoopFree& e) {
        if (as_json) {
            std::cout << serialize_error("not-loop-free", e.what());
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    } catch (const NotLcro& e) {
        if (as_json) {
            std::cout << serialize_error("not-lcro", e.what());
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    } catch (const AlphabetMismatch& e) {
        if (as_json) {
            std::cout << serialize_error("alphabet-mismatch", e.what());
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    } catch (const ParseError& e) {
        if (as_json) {
            std::cout << serialize_error("parse", e.what());
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    } catch (const ValidationError& e) {
        if (as_json) {
            std::cout << serialize_error("validation", e.what());
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    } catch (const std::exception& e) {
        if (as_json) {
            std::cout << serialize_error("failure", e.what());
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 2;
}
