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

#include "tfsm/json_io.hpp"

#include <json.hpp>

#include "tfsm/errors.hpp"

namespace tfsm {

using json = nlohmann::json;

namespace {

// ── Parsing helpers ─────────────────────────────────────────────────

json parse_text(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("input is not valid JSON");
    return doc;
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ParseError("unknown key '" + key + "' in " + where);
    }
}

const json& field(const json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) throw ParseError("missing key '" + std::string(key) + "' in " + where);
    return *it;
}

std::string string_field(const json& object, const char* key, const std::string& where) {
    const json& value = field(object, key, where);
    if (!value.is_string()) {
        throw ParseError("key '" + std::string(key) + "' in " + where + " must be a string");
    }
    return value.get<std::string>();
}

std::vector<std::string> string_list(const json& value, const std::string& where) {
    if (!value.is_array()) throw ParseError(where + " must be an array of strings");
    std::vector<std::string> list;
    for (const auto& item : value) {
        if (!item.is_string()) throw ParseError(where + " must contain only strings");
        list.push_back(item.get<std::string>());
    }
    return list;
}

std::int64_t integer_field(const json& value, const std::string& where) {
    if (!value.is_number_integer()) throw ParseError(where + " must be an integer");
    return value.get<std::int64_t>();
}

/// An integer or the string "inf".
Bound bound_field(const json& value, const std::string& where) {
    if (value.is_string()) {
        if (value.get<std::string>() == "inf") return Bound::inf();
        throw ParseError(where + " must be an integer or \"inf\"");
    }
    return Bound::at(integer_field(value, where));
}

/// One convention for every exact time value in documents and reports:
/// integers stay JSON numbers, everything else is a "p/q" string, so no
/// value ever becomes a binary float.
json rational_to_json(const Rational& value) {
    if (is_integral(value)) return json(value.numerator());
    return json(format_rational(value));
}

bool bool_field(const json& object, const char* key, const std::string& where) {
    const json& value = field(object, key, where);
    if (!value.is_boolean()) {
        throw ParseError("key '" + std::string(key) + "' in " + where + " must be a boolean");
    }
    return value.get<bool>();
}

Guard parse_guard(const json& value, const std::string& where) {
    if (!value.is_object()) throw ParseError("guard in " + where + " must be an object");
    reject_unknown_keys(value, {"lower", "lower_closed", "upper", "upper_closed"},
                        "guard of " + where);
    std::int64_t lower = integer_field(field(value, "lower", where), "guard lower of " + where);
    Bound upper = bound_field(field(value, "upper", where), "guard upper of " + where);
    return make_guard(lower, upper, bool_field(value, "lower_closed", where),
                      bool_field(value, "upper_closed", where));
}

template <typename Machine>
void parse_common(const json& doc, Machine& machine) {
    machine.states = string_list(field(doc, "states", "machine"), "\"states\"");
    machine.inputs = string_list(field(doc, "inputs", "machine"), "\"inputs\"");
    machine.outputs = string_list(field(doc, "outputs", "machine"), "\"outputs\"");
    machine.initial = string_field(doc, "initial", "machine");
}

const json& transition_array(const json& doc) {
    const json& list = field(doc, "transitions", "machine");
    if (!list.is_array()) throw ParseError("\"transitions\" must be an array");
    return list;
}

GuardedTransition parse_guarded_transition(const json& value, std::size_t index) {
    std::string where = "transition " + std::to_string(index);
    if (!value.is_object()) throw ParseError(where + " must be an object");
    reject_unknown_keys(value, {"from", "input", "guard", "output", "to"}, where);
    return {string_field(value, "from", where), string_field(value, "input", where),
            parse_guard(field(value, "guard", where), where),
            string_field(value, "output", where), string_field(value, "to", where)};
}

IoTransition parse_io_transition(const json& value, std::size_t index) {
    std::string where = "transition " + std::to_string(index);
    if (!value.is_object()) throw ParseError(where + " must be an object");
    reject_unknown_keys(value, {"from", "input", "output", "to"}, where);
    return {string_field(value, "from", where), string_field(value, "input", where),
            string_field(value, "output", where), string_field(value, "to", where)};
}

std::map<std::string, Timeout> parse_timeouts(const json& doc) {
    std::map<std::string, Timeout> timeouts;
    auto it = doc.find("timeouts");
    if (it == doc.end()) return timeouts;
    if (!it->is_object()) throw ParseError("\"timeouts\" must be an object");
    for (const auto& [state, entry] : it->items()) {
        std::string where = "timeout of '" + state + "'";
        if (!entry.is_object()) throw ParseError(where + " must be an object");
        reject_unknown_keys(entry, {"target", "duration"}, where);
        Bound duration = bound_field(field(entry, "duration", where), "duration of " + where);
        if (duration.finite && duration.value < 1) {
            throw ValidationError("non-positive timeout duration for state '" + state + "'");
        }
        timeouts[state] = {string_field(entry, "target", where), duration};
    }
    return timeouts;
}

// ── Serialization helpers ───────────────────────────────────────────
//
// nlohmann's default object keeps keys sorted, which is exactly the
// canonical order the format promises.

json guard_to_json(const Guard& guard) {
    json value;
    value["lower"] = guard.lower;
    value["lower_closed"] = guard.lower_closed;
    if (guard.upper.finite) {
        value["upper"] = guard.upper.value;
    } else {
        value["upper"] = "inf";
    }
    value["upper_closed"] = guard.upper_closed;
    return value;
}

json guarded_transitions_to_json(const std::vector<GuardedTransition>& transitions) {
    json list = json::array();
    for (const auto& tr : transitions) {
        json item;
        item["from"] = tr.source;
        item["input"] = tr.input;
        item["guard"] = guard_to_json(tr.guard);
        item["output"] = tr.output;
        item["to"] = tr.target;
        list.push_back(item);
    }
    return list;
}

json timeouts_to_json(const std::map<std::string, Timeout>& timeouts) {
    json value = json::object();
    for (const auto& [state, entry] : timeouts) {
        json item;
        item["target"] = entry.target;
        if (entry.duration.finite) {
            item["duration"] = entry.duration.value;
        } else {
            item["duration"] = "inf";
        }
        value[state] = item;
    }
    return value;
}

template <typename Machine>
json machine_common_to_json(const Machine& machine, const char* kind) {
    json doc;
    doc["kind"] = kind;
    doc["states"] = machine.states;
    doc["inputs"] = machine.inputs;
    doc["outputs"] = machine.outputs;
    doc["initial"] = machine.initial;
    return doc;
}

std::string finish(json doc) { return doc.dump(2) + "\n"; }

Rational timestamp_field(const json& value, const std::string& where) {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_number()) {
        throw ParseError(where + ": non-integer JSON numbers are not exact; write the " +
                         "timestamp as a string like \"5/2\" or \"2.5\"");
    }
    if (!value.is_string()) throw ParseError(where + " must be an integer or a string");
    return parse_rational(value.get<std::string>());
}

}  // namespace

// ── Machine documents ───────────────────────────────────────────────

MachineAny parse_machine(std::string_view text) {
    json doc = parse_text(text);
    if (!doc.is_object()) throw ParseError("machine document must be a JSON object");
    reject_unknown_keys(
        doc, {"kind", "states", "inputs", "outputs", "initial", "transitions", "timeouts"},
        "machine");
    std::string kind = string_field(doc, "kind", "machine");

    MachineAny machine;
    if (kind == "guarded") {
        GuardedMachine m;
        parse_common(doc, m);
        if (doc.contains("timeouts")) {
            throw ParseError("guarded machines do not carry timeouts");
        }
        std::size_t index = 0;
        for (const auto& item : transition_array(doc)) {
            m.transitions.push_back(parse_guarded_transition(item, index++));
        }
        machine = std::move(m);
    } else if (kind == "timeout") {
        TimeoutMachine m;
        parse_common(doc, m);
        std::size_t index = 0;
        for (const auto& item : transition_array(doc)) {
            m.transitions.push_back(parse_io_transition(item, index++));
        }
        m.timeouts = parse_timeouts(doc);
        machine = std::move(m);
    } else if (kind == "general") {
        GeneralMachine m;
        parse_common(doc, m);
        std::size_t index = 0;
        for (const auto& item : transition_array(doc)) {
            m.transitions.push_back(parse_guarded_transition(item, index++));
        }
        m.timeouts = parse_timeouts(doc);
        machine = std::move(m);
    } else {
        throw ParseError("unknown machine kind '" + kind + "'");
    }
    canonicalize(machine);
    return machine;
}

std::string serialize_machine(const MachineAny& machine) {
    MachineAny canonical = machine;
    canonicalize(canonical);

    if (const auto* m = std::get_if<GuardedMachine>(&canonical)) {
        json doc = machine_common_to_json(*m, "guarded");
        doc["transitions"] = guarded_transitions_to_json(m->transitions);
        return finish(doc);
    }
    if (const auto* m = std::get_if<TimeoutMachine>(&canonical)) {
        json doc = machine_common_to_json(*m, "timeout");
        json list = json::array();
        for (const auto& tr : m->transitions) {
            json item;
            item["from"] = tr.source;
            item["input"] = tr.input;
            item["output"] = tr.output;
            item["to"] = tr.target;
            list.push_back(item);
        }
        doc["transitions"] = list;
        doc["timeouts"] = timeouts_to_json(m->timeouts);
        return finish(doc);
    }
    const auto& m = std::get<GeneralMachine>(canonical);
    json doc = machine_common_to_json(m, "general");
    doc["transitions"] = guarded_transitions_to_json(m.transitions);
    doc["timeouts"] = timeouts_to_json(m.timeouts);
    return finish(doc);
}

// ── Timed word documents ────────────────────────────────────────────

TimedWord parse_timed_word(std::string_view text) {
    json doc = parse_text(text);
    if (!doc.is_array()) throw ParseError("timed word document must be a JSON array");
    TimedWord word;
    std::size_t index = 0;
    for (const auto& item : doc) {
        std::string where = "entry " + std::to_string(index++);
        if (!item.is_object()) throw ParseError(where + " must be an object");
        reject_unknown_keys(item, {"symbol", "timestamp"}, where);
        word.push_back({string_field(item, "symbol", where),
                        timestamp_field(field(item, "timestamp", where), where)});
    }
    if (auto problem = timed_word_problem(word)) throw ValidationError(*problem);
    return word;
}

std::string serialize_timed_word(const TimedWord& word) {
    json doc = json::array();
    for (const auto& entry : word) {
        json item;
        item["symbol"] = entry.symbol;
        item["timestamp"] = rational_to_json(entry.time);
        doc.push_back(item);
    }
    return finish(doc);
}

// ── Reports ─────────────────────────────────────────────────────────

namespace {

json timed_word_to_json(const TimedWord& word) {
    json list = json::array();
    for (const auto& entry : word) {
        json item;
        item["symbol"] = entry.symbol;
        item["timestamp"] = rational_to_json(entry.time);
        list.push_back(item);
    }
    return list;
}

json timed_state_to_json(const TimedState& state) {
    json value;
    value["state"] = state.state;
    value["clock"] = rational_to_json(state.clock);
    return value;
}

json symbols_to_json(const std::vector<Symbol>& symbols) {
    json list = json::array();
    for (const Symbol& s : symbols) list.push_back(s.str());
    return list;
}

json abstract_state_to_json(const AbstractState& state) {
    json value;
    value["name"] = state.str();
    value["source"] = state.source;
    switch (state.tag) {
        case AbstractState::Tag::Plain: break;
        case AbstractState::Tag::Index: value["floor"] = state.index; break;
        case AbstractState::Tag::Region: value["region"] = state.region.str(); break;
    }
    return value;
}

}  // namespace

std::string serialize_validation(const ValidationReport& report) {
    json doc;
    doc["ok"] = report.ok();
    json list = json::array();
    for (const auto& v : report.violations) {
        json item;
        item["kind"] = violation_kind_name(v.kind);
        if (!v.state.empty()) item["state"] = v.state;
        if (!v.input.empty()) item["input"] = v.input;
        if (v.witness) item["witness"] = rational_to_json(*v.witness);
        item["detail"] = v.detail;
        list.push_back(item);
    }
    doc["violations"] = list;
    return finish(doc);
}

std::string serialize_run(const RunResult& result, bool with_trace) {
    json doc;
    doc["outputs"] = timed_word_to_json(result.outputs);
    doc["final"] = timed_state_to_json(result.final_state);
    if (with_trace) {
        json steps = json::array();
        for (const auto& step : result.trace) {
            json item;
            if (const auto* d = std::get_if<DelayStep>(&step)) {
                item["step"] = "delay";
                item["from"] = timed_state_to_json(d->from);
                item["delay"] = rational_to_json(d->delay);
                item["to"] = timed_state_to_json(d->to);
            } else {
                const auto& io = std::get<IoStep>(step);
                item["step"] = "io";
                item["from"] = timed_state_to_json(io.from);
                item["input"] = io.input;
                item["output"] = io.output;
                item["to"] = timed_state_to_json(io.to);
            }
            steps.push_back(item);
        }
        doc["trace"] = steps;
    }
    return finish(doc);
}

std::string serialize_fsm(const UntimedFsm& fsm) {
    json doc;
    doc["flavor"] = flavor_name(fsm.flavor);
    doc["bound"] = fsm.bound;
    json states = json::array();
    for (const auto& s : fsm.states) states.push_back(abstract_state_to_json(s));
    doc["states"] = states;
    doc["initial"] = fsm.states[fsm.initial].str();
    doc["alphabet"] = symbols_to_json(fsm.alphabet);
    doc["outputs"] = symbols_to_json(fsm.outputs);

    json list = json::array();
    for (std::size_t id = 0; id < fsm.states.size(); ++id) {
        for (const Symbol& symbol : fsm.alphabet) {
            auto succ = fsm.next(id, symbol);
            if (!succ) continue;
            json item;
            item["from"] = fsm.states[id].str();
            item["on"] = symbol.str();
            item["output"] = succ->second.str();
            item["to"] = fsm.states[succ->first].str();
            list.push_back(item);
        }
    }
    doc["transitions"] = list;
    return finish(doc);
}

std::string serialize_verdict(const EquivalenceVerdict& verdict) {
    json doc;
    doc["equivalent"] = verdict.equivalent;
    if (verdict.counterexample) {
        const Counterexample& cex = *verdict.counterexample;
        json body;
        json word = json::array();
        for (const Symbol& s : cex.abstract_word) word.push_back(s.str());
        body["abstract_word"] = word;
        body["timed_word"] = timed_word_to_json(cex.word);
        body["outputs_a"] = timed_word_to_json(cex.outputs_a);
        body["outputs_b"] = timed_word_to_json(cex.outputs_b);
        body["divergence_index"] = cex.divergence_index;
        doc["counterexample"] = body;
    }
    return finish(doc);
}

std::string serialize_error(const std::string& code, const std::string& message) {
    json doc;
    doc["error"] = code;
    doc["message"] = message;
    return finish(doc);
}

}  // namespace tfsm
