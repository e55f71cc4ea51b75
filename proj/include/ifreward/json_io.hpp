#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ifreward/constraint.hpp"
#include "ifreward/errors.hpp"
#include "ifreward/registry.hpp"

namespace ifreward {

using json = nlohmann::json;

namespace detail {

// nlohmann reports a byte offset; JSONL records are single lines, so the
// offset is the column.
inline ParseError json_parse_error(const nlohmann::json::parse_error& e, std::size_t line_no) {
    return ParseError("line " + std::to_string(line_no) + ", column " + std::to_string(e.byte) +
                          ": " + e.what(),
                      line_no, e.byte);
}

inline const json& require_field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError("missing field '" + key + "'");
    return *it;
}

inline std::string require_string(const json& j, const std::string& key) {
    const json& v = require_field(j, key);
    if (!v.is_string()) throw ValidationError("field '" + key + "' must be a string");
    return v.get<std::string>();
}

} // namespace detail

inline ParamMap params_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("params must be a JSON object");
    ParamMap params;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_number()) {
            params[it.key()] = v.get<double>();
        } else if (v.is_string()) {
            params[it.key()] = v.get<std::string>();
        } else if (v.is_boolean()) {
            params[it.key()] = v.get<bool>();
        } else {
            throw ValidationError("param '" + it.key() + "' must be a number, string or boolean");
        }
    }
    return params;
}

inline json params_to_json(const ParamMap& params) {
    json j = json::object();
    for (const auto& [key, value] : params) {
        std::visit([&](const auto& v) { j[key] = v; }, value);
    }
    return j;
}

inline Kind kind_from_string(const std::string& s) {
    if (s == "hard") return Kind::Hard;
    if (s == "soft") return Kind::Soft;
    throw ValidationError("kind must be \"hard\" or \"soft\", got \"" + s + "\"");
}

inline TaskDomain domain_from_string(const std::string& s) {
    if (s == "instruction_following") return TaskDomain::InstructionFollowing;
    if (s == "math") return TaskDomain::Math;
    if (s == "science") return TaskDomain::Science;
    throw ValidationError("unknown domain \"" + s + "\"");
}

inline Constraint constraint_from_json(const json& j, const ConstraintRegistry& registry) {
    Constraint c;
    c.id = detail::require_string(j, "id");
    c.kind = kind_from_string(detail::require_string(j, "kind"));
    c.type_tag = detail::require_string(j, "type_tag");
    c.text = detail::require_string(j, "text");
    if (c.text.empty()) throw ValidationError("constraint '" + c.id + "' has empty text");
    auto params_it = j.find("params");
    if (params_it != j.end() && !params_it->is_null()) {
        c.params = params_from_json(*params_it);
    }

    const RegistryEntry& entry = registry.lookup(c.type_tag); // throws RegistryError if unknown
    if (entry.kind != c.kind) {
        throw ValidationError("constraint '" + c.id + "': tag '" + c.type_tag +
                              "' is registered as " + to_string(entry.kind) + " but declared " +
                              to_string(c.kind));
    }
    std::vector<std::string> violations = registry.validate_params(c.type_tag, c.params);
    if (!violations.empty()) {
        std::string msg = "constraint '" + c.id + "' (" + c.type_tag + "):";
        for (const std::string& v : violations) msg += " " + v + ";";
        throw ValidationError(msg);
    }
    return c;
}

inline json to_json(const Constraint& c) {
    return json{{"id", c.id},
                {"kind", to_string(c.kind)},
                {"type_tag", c.type_tag},
                {"params", params_to_json(c.params)},
                {"text", c.text}};
}

inline Instruction instruction_from_json(const json& j, const ConstraintRegistry& registry) {
    Instruction inst;
    inst.id = detail::require_string(j, "id");
    inst.base_prompt = detail::require_string(j, "base_prompt");
    if (auto it = j.find("domain"); it != j.end() && !it->is_null()) {
        inst.domain = domain_from_string(it->get<std::string>());
    }
    if (auto it = j.find("answer_key"); it != j.end() && !it->is_null()) {
        inst.answer_key = it->get<std::string>();
    }
    if (auto it = j.find("constraints"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) throw ValidationError("field 'constraints' must be an array");
        for (const json& cj : *it) {
            inst.constraints.push_back(constraint_from_json(cj, registry));
        }
    }

    for (std::size_t a = 0; a < inst.constraints.size(); ++a) {
        for (std::size_t b = a + 1; b < inst.constraints.size(); ++b) {
            if (inst.constraints[a].id == inst.constraints[b].id) {
                throw ValidationError("instruction '" + inst.id + "': duplicate constraint id '" +
                                      inst.constraints[a].id + "'");
            }
        }
    }
    if (inst.domain == TaskDomain::InstructionFollowing) {
        if (inst.constraints.empty()) {
            throw ValidationError("instruction '" + inst.id +
                                  "': instruction_following items need >= 1 constraint");
        }
    } else if (!inst.answer_key || inst.answer_key->empty()) {
        throw ValidationError("instruction '" + inst.id + "': " + to_string(inst.domain) +
                              " items need an answer_key");
    }
    return inst;
}

inline json to_json(const Instruction& inst) {
    json constraints = json::array();
    for (const Constraint& c : inst.constraints) constraints.push_back(to_json(c));
    json j{{"id", inst.id},
           {"base_prompt", inst.base_prompt},
           {"domain", to_string(inst.domain)},
           {"constraints", std::move(constraints)}};
    if (inst.answer_key) j["answer_key"] = *inst.answer_key;
    return j;
}

// One JSONL record -> validated Instruction. line_no feeds error messages.
inline Instruction parse_instruction_record(const std::string& line,
                                            const ConstraintRegistry& registry,
                                            std::size_t line_no = 1) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw detail::json_parse_error(e, line_no);
    }
    return instruction_from_json(j, registry);
}

inline Response response_from_json(const json& j) {
    Response r;
    r.instruction_id = detail::require_string(j, "instruction_id");
    const json& level = detail::require_field(j, "level");
    if (!level.is_number_integer() || level.get<int>() < 0) {
        throw ValidationError("field 'level' must be a non-negative integer");
    }
    r.level = level.get<int>();
    r.text = detail::require_string(j, "text");
    if (auto it = j.find("meta"); it != j.end() && !it->is_null()) {
        for (auto m = it->begin(); m != it->end(); ++m) {
            if (!m.value().is_string()) {
                throw ValidationError("meta values must be strings");
            }
            r.meta[m.key()] = m.value().get<std::string>();
        }
    }
    return r;
}

inline json to_json(const Response& r) {
    json meta = json::object();
    for (const auto& [k, v] : r.meta) meta[k] = v;
    return json{{"instruction_id", r.instruction_id},
                {"level", r.level},
                {"text", r.text},
                {"meta", std::move(meta)}};
}

// Constraint-synthesis output shape: {"c1": "...", ..., "c5": "..."}. Returns
// the texts in c1..c5 order. The texts carry no kind or tag; classification
// happens downstream.
inline std::vector<std::string> parse_legacy_synthesis(const json& obj) {
    if (!obj.is_object()) throw ValidationError("synthesis record must be a JSON object");
    constexpr int kMaxSlots = 5;
    int max_present = 0;
    for (int i = 1; i <= kMaxSlots; ++i) {
        if (obj.contains("c" + std::to_string(i))) max_present = i;
    }
    std::vector<std::string> texts;
    for (int i = 1; i <= max_present; ++i) {
        std::string key = "c" + std::to_string(i);
        auto it = obj.find(key);
        if (it == obj.end()) {
            throw ValidationError("gap in synthesis keys: missing '" + key + "' while c" +
                                  std::to_string(max_present) + " is present");
        }
        if (!it->is_string()) throw ValidationError("synthesis value '" + key + "' must be a string");
        texts.push_back(it->get<std::string>());
    }
    return texts;
}

// Registry override file: JSON map tag -> {kind, description, params}. New
// tags must be soft (hard tags need a code-level verifier binding); existing
// tags keep their kind and verifier, with schema and description replaced.
inline void apply_registry_overrides(ConstraintRegistry& registry, const json& overrides) {
    if (!overrides.is_object()) throw ValidationError("registry override file must be a JSON object");
    auto parse_specs = [](const json& arr) {
        std::vector<ParamSpec> specs;
        for (const json& p : arr) {
            ParamSpec spec;
            spec.name = detail::require_string(p, "name");
            std::string type = p.value("type", "number");
            if (type == "number") {
                spec.type = ParamType::Number;
            } else if (type == "string") {
                spec.type = ParamType::String;
            } else if (type == "bool") {
                spec.type = ParamType::Bool;
            } else {
                throw ValidationError("param spec type must be number|string|bool");
            }
            spec.required = p.value("required", true);
            if (p.contains("min")) spec.min_value = p.at("min").get<double>();
            spec.single_char = p.value("single_char", false);
            specs.push_back(std::move(spec));
        }
        return specs;
    };

    ConstraintRegistry merged;
    for (const auto& [tag, entry] : registry.entries()) {
        auto it = overrides.find(tag);
        if (it == overrides.end()) {
            merged.add(entry);
            continue;
        }
        RegistryEntry updated = entry;
        if (it->contains("kind") && kind_from_string(it->at("kind").get<std::string>()) != entry.kind) {
            throw RegistryError("override for '" + tag + "' may not change its kind", tag);
        }
        if (it->contains("description")) updated.description = it->at("description").get<std::string>();
        if (it->contains("params")) updated.params = parse_specs(it->at("params"));
        merged.add(std::move(updated));
    }
    for (auto it = overrides.begin(); it != overrides.end(); ++it) {
        if (registry.has(it.key())) continue;
        RegistryEntry entry;
        entry.tag = it.key();
        entry.kind = kind_from_string(detail::require_string(it.value(), "kind"));
        if (entry.kind == Kind::Hard) {
            throw RegistryError("override cannot introduce hard tag '" + it.key() +
                                    "' (no verifier binding)",
                                it.key());
        }
        entry.description = it.value().value("description", "");
        if (it.value().contains("params")) entry.params = parse_specs(it.value().at("params"));
        merged.add(std::move(entry));
    }
    registry = std::move(merged);
}

} // namespace ifreward
