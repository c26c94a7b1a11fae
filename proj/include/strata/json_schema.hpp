#pragma once

#include <string>

#include "json.hpp"

namespace strata {

/// Minimal JSON-schema validator covering the subset used by the shipped
/// schemas: type, properties, required, items, enum, additionalProperties
/// (boolean or schema). Returns an empty string on success, otherwise a
/// one-line reason with a JSON-pointer-ish path.
inline std::string schema_validate(const nlohmann::json& value,
                                   const nlohmann::json& schema,
                                   const std::string& path = "$") {
    if (schema.contains("type")) {
        const std::string t = schema.at("type").get<std::string>();
        bool ok = (t == "object" && value.is_object()) ||
                  (t == "array" && value.is_array()) ||
                  (t == "string" && value.is_string()) ||
                  (t == "integer" && value.is_number_integer()) ||
                  (t == "number" && value.is_number()) ||
                  (t == "boolean" && value.is_boolean()) ||
                  (t == "null" && value.is_null());
        if (!ok) return path + ": expected type " + t;
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& e : schema.at("enum"))
            if (e == value) hit = true;
        if (!hit) return path + ": value not in enum";
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    return path + ": missing required key '" + key.get<std::string>() + "'";
        const auto* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props && props->contains(it.key())) {
                auto err = schema_validate(it.value(), props->at(it.key()),
                                           path + "." + it.key());
                if (!err.empty()) return err;
            } else if (schema.contains("additionalProperties")) {
                const auto& ap = schema.at("additionalProperties");
                if (ap.is_boolean()) {
                    if (!ap.get<bool>())
                        return path + ": unexpected key '" + it.key() + "'";
                } else {
                    auto err = schema_validate(it.value(), ap, path + "." + it.key());
                    if (!err.empty()) return err;
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        int idx = 0;
        for (const auto& item : value) {
            auto err = schema_validate(item, schema.at("items"),
                                       path + "[" + std::to_string(idx) + "]");
            if (!err.empty()) return err;
            ++idx;
        }
    }
    return {};
}

} // namespace strata
