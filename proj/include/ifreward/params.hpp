#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "ifreward/errors.hpp"

namespace ifreward {

// Constraint parameters are flat key -> scalar maps (numbers, strings, bools).
using ParamValue = std::variant<double, std::string, bool>;
using ParamMap = std::map<std::string, ParamValue>;

inline bool has_param(const ParamMap& params, const std::string& key) {
    return params.find(key) != params.end();
}

inline std::optional<double> find_num(const ParamMap& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    if (const double* v = std::get_if<double>(&it->second)) return *v;
    throw ValidationError("param '" + key + "' must be a number");
}

inline std::optional<std::string> find_str(const ParamMap& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    if (const std::string* v = std::get_if<std::string>(&it->second)) return *v;
    throw ValidationError("param '" + key + "' must be a string");
}

inline double get_num(const ParamMap& params, const std::string& key) {
    auto v = find_num(params, key);
    if (!v) throw ValidationError("missing numeric param '" + key + "'");
    return *v;
}

inline std::string get_str(const ParamMap& params, const std::string& key) {
    auto v = find_str(params, key);
    if (!v) throw ValidationError("missing string param '" + key + "'");
    return *v;
}

inline bool get_bool(const ParamMap& params, const std::string& key, bool fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    if (const bool* v = std::get_if<bool>(&it->second)) return *v;
    throw ValidationError("param '" + key + "' must be a boolean");
}

} // namespace ifreward
