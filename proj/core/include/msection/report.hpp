#pragma once

#include <map>
#include <string>
#include <vector>

namespace msection {

/// One named verification with its verdict.
struct CheckLine {
    std::string name;
    bool pass = true;
    std::string counterexample;

    friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

/// A JSON-like value tree for command inputs/outputs. Exact integers and
/// rationals are carried as decimal strings so serialization is lossless.
class Value {
public:
    enum class Kind { Null, Bool, Number, String, Array, Object };

    Value() : kind_(Kind::Null) {}
    Value(bool b) : kind_(Kind::Bool), bool_(b) {}
    Value(long n) : kind_(Kind::Number), number_(n) {}
    Value(int n) : Value(static_cast<long>(n)) {}
    Value(std::string s) : kind_(Kind::String), string_(std::move(s)) {}
    Value(const char* s) : Value(std::string(s)) {}

    static Value array() {
        Value v;
        v.kind_ = Kind::Array;
        return v;
    }
    static Value object() {
        Value v;
        v.kind_ = Kind::Object;
        return v;
    }

    Kind kind() const { return kind_; }
    bool as_bool() const { return bool_; }
    long as_number() const { return number_; }
    const std::string& as_string() const { return string_; }
    const std::vector<Value>& items() const { return items_; }
    const std::map<std::string, Value>& fields() const { return fields_; }

    Value& push_back(Value v) {
        items_.push_back(std::move(v));
        return items_.back();
    }
    Value& set(const std::string& key, Value v) { return fields_[key] = std::move(v); }
    const Value* find(const std::string& key) const {
        auto it = fields_.find(key);
        return it == fields_.end() ? nullptr : &it->second;
    }

    friend bool operator==(const Value&, const Value&) = default;

private:
    Kind kind_;
    bool bool_ = false;
    long number_ = 0;
    std::string string_;
    std::vector<Value> items_;
    std::map<std::string, Value> fields_;
};

/// Structured result of one CLI command: echo of the command and inputs,
/// outputs, and the list of checks that ran.
struct Report {
    std::string command;
    Value inputs = Value::object();
    Value outputs = Value::object();
    std::vector<CheckLine> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    friend bool operator==(const Report&, const Report&) = default;
};

/// JSON text. indent < 0 gives compact output.
std::string to_json_string(const Report& report, int indent = 2);

/// Inverse of to_json_string. Throws std::invalid_argument on malformed
/// or schema-violating input.
Report report_from_json_string(const std::string& text);

/// Plain-text rendering used by the default CLI output format.
std::string render_text(const Report& report);

}  // namespace msection
