#include "msection/report.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace msection {

namespace {

using nlohmann::json;

json value_to_json(const Value& v) {
    switch (v.kind()) {
        case Value::Kind::Null: return nullptr;
        case Value::Kind::Bool: return v.as_bool();
        case Value::Kind::Number: return v.as_number();
        case Value::Kind::String: return v.as_string();
        case Value::Kind::Array: {
            json a = json::array();
            for (const auto& item : v.items()) a.push_back(value_to_json(item));
            return a;
        }
        case Value::Kind::Object: {
            json o = json::object();
            for (const auto& [k, item] : v.fields()) o[k] = value_to_json(item);
            return o;
        }
    }
    return nullptr;
}

Value value_from_json(const json& j) {
    if (j.is_null()) return {};
    if (j.is_boolean()) return Value(j.get<bool>());
    if (j.is_number_integer()) return Value(j.get<long>());
    if (j.is_string()) return Value(j.get<std::string>());
    if (j.is_array()) {
        Value v = Value::array();
        for (const auto& item : j) v.push_back(value_from_json(item));
        return v;
    }
    if (j.is_object()) {
        Value v = Value::object();
        for (auto it = j.begin(); it != j.end(); ++it) v.set(it.key(), value_from_json(it.value()));
        return v;
    }
    throw std::invalid_argument("report: unsupported JSON value (floating point?)");
}

}  // namespace

std::string to_json_string(const Report& report, int indent) {
    json j;
    j["command"] = report.command;
    j["inputs"] = value_to_json(report.inputs);
    j["outputs"] = value_to_json(report.outputs);
    json checks = json::array();
    for (const auto& c : report.checks) {
        json line;
        line["name"] = c.name;
        line["pass"] = c.pass;
        line["counterexample"] = c.counterexample;
        checks.push_back(line);
    }
    j["checks"] = checks;
    j["pass"] = report.pass();
    return j.dump(indent);
}

Report report_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("report: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("command") || !j.contains("inputs") ||
        !j.contains("outputs") || !j.contains("checks"))
        throw std::invalid_argument("report: missing required fields");

    Report r;
    r.command = j["command"].get<std::string>();
    r.inputs = value_from_json(j["inputs"]);
    r.outputs = value_from_json(j["outputs"]);
    for (const auto& line : j["checks"]) {
        CheckLine c;
        c.name = line.at("name").get<std::string>();
        c.pass = line.at("pass").get<bool>();
        c.counterexample = line.at("counterexample").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    return r;
}

namespace {

void render_value(std::ostream& os, const Value& v, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    switch (v.kind()) {
        case Value::Kind::Null: os << "-"; break;
        case Value::Kind::Bool: os << (v.as_bool() ? "true" : "false"); break;
        case Value::Kind::Number: os << v.as_number(); break;
        case Value::Kind::String: os << v.as_string(); break;
        case Value::Kind::Array: {
            bool scalar_only = true;
            for (const auto& item : v.items())
                if (item.kind() == Value::Kind::Array || item.kind() == Value::Kind::Object)
                    scalar_only = false;
            if (scalar_only) {
                os << "[";
                for (std::size_t i = 0; i < v.items().size(); ++i) {
                    if (i) os << ", ";
                    render_value(os, v.items()[i], depth);
                }
                os << "]";
            } else {
                for (const auto& item : v.items()) {
                    os << "\n" << pad << "- ";
                    render_value(os, item, depth + 1);
                }
            }
            break;
        }
        case Value::Kind::Object: {
            for (const auto& [k, item] : v.fields()) {
                os << "\n" << pad << k << ": ";
                render_value(os, item, depth + 1);
            }
            break;
        }
    }
}

}  // namespace

std::string render_text(const Report& report) {
    std::ostringstream os;
    os << "command: " << report.command;
    os << "\ninputs:";
    render_value(os, report.inputs, 1);
    os << "\noutputs:";
    render_value(os, report.outputs, 1);
    if (!report.checks.empty()) {
        os << "\nchecks:";
        for (const auto& c : report.checks) {
            os << "\n  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
            if (!c.pass && !c.counterexample.empty()) os << "\n         " << c.counterexample;
        }
    }
    os << "\nresult: " << (report.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace msection
