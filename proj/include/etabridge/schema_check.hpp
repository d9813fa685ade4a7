#ifndef ETABRIDGE_SCHEMA_CHECK_HPP
#define ETABRIDGE_SCHEMA_CHECK_HPP

// A small structural JSON-schema checker covering the subset used by the
// schemas shipped under schema/: type, properties, required, items, enum,
// additionalProperties (boolean form) and pattern-free string checks.

#include <json.hpp>

#include <string>
#include <vector>

namespace etabridge::schema {

struct Result {
    bool ok = true;
    std::vector<std::string> errors;
    void fail(const std::string& where, const std::string& what)
    {
        ok = false;
        if (errors.size() < 32) errors.push_back(where + ": " + what);
    }
};

inline bool type_matches(const nlohmann::json& value, const std::string& type)
{
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline void validate_node(const nlohmann::json& schema, const nlohmann::json& value,
                          const std::string& where, Result& res)
{
    if (schema.contains("type")) {
        const auto& t = schema["type"];
        bool ok = false;
        if (t.is_string())
            ok = type_matches(value, t.get<std::string>());
        else if (t.is_array())
            for (const auto& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
        if (!ok) {
            res.fail(where, "type mismatch");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"]) ok = ok || (alt == value);
        if (!ok) res.fail(where, "value not in enum");
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    res.fail(where, "missing required key '" + key.get<std::string>() + "'");
        const bool closed = schema.contains("additionalProperties") &&
                            schema["additionalProperties"].is_boolean() &&
                            !schema["additionalProperties"].get<bool>();
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (schema.contains("properties") && schema["properties"].contains(it.key()))
                validate_node(schema["properties"][it.key()], it.value(), where + "/" + it.key(),
                              res);
            else if (closed)
                res.fail(where, "unexpected key '" + it.key() + "'");
        }
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t idx = 0;
        for (const auto& elem : value) {
            validate_node(schema["items"], elem, where + "[" + std::to_string(idx) + "]", res);
            ++idx;
        }
    }
}

inline Result validate(const nlohmann::json& schema, const nlohmann::json& value)
{
    Result res;
    validate_node(schema, value, "$", res);
    return res;
}

}  // namespace etabridge::schema

#endif
