#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifreward/constraint.hpp"
#include "ifreward/errors.hpp"
#include "ifreward/verdict.hpp"
#include "ifreward/verifiers.hpp"

namespace ifreward {

enum class ParamType { Number, String, Bool };

struct ParamSpec {
    std::string name;
    ParamType type = ParamType::Number;
    bool required = true;
    std::optional<double> min_value;
    bool single_char = false;
};

using VerifierFn = std::function<Verdict(const std::string&, const ParamMap&)>;

struct RegistryEntry {
    std::string tag;
    Kind kind = Kind::Hard;
    std::string description;
    std::vector<ParamSpec> params;
    VerifierFn verifier; // bound for hard tags only
};

// Immutable-after-startup table of constraint types. Hard tags carry a
// programmatic verifier; soft tags only declare their parameter schema and
// are scored by a learned model.
class ConstraintRegistry {
public:
    void add(RegistryEntry entry) {
        if (entry.kind == Kind::Hard && !entry.verifier) {
            throw RegistryError("hard tag '" + entry.tag + "' requires a verifier", entry.tag);
        }
        if (entry.kind == Kind::Soft && entry.verifier) {
            throw RegistryError("soft tag '" + entry.tag + "' must not bind a verifier", entry.tag);
        }
        auto [it, inserted] = entries_.emplace(entry.tag, std::move(entry));
        if (!inserted) {
            throw RegistryError("tag '" + it->first + "' already registered", it->first);
        }
    }

    bool has(const std::string& tag) const { return entries_.count(tag) > 0; }

    const RegistryEntry& lookup(const std::string& tag) const {
        auto it = entries_.find(tag);
        if (it == entries_.end()) {
            throw RegistryError("unknown constraint type tag '" + tag + "'", tag);
        }
        return it->second;
    }

    // Schema violations for the given params, empty when valid.
    std::vector<std::string> validate_params(const std::string& tag, const ParamMap& params) const {
        const RegistryEntry& entry = lookup(tag);
        std::vector<std::string> violations;
        for (const ParamSpec& spec : entry.params) {
            auto it = params.find(spec.name);
            if (it == params.end()) {
                if (spec.required) violations.push_back("missing required param '" + spec.name + "'");
                continue;
            }
            const ParamValue& value = it->second;
            switch (spec.type) {
                case ParamType::Number: {
                    const double* num = std::get_if<double>(&value);
                    if (!num) {
                        violations.push_back("param '" + spec.name + "' must be a number");
                    } else if (spec.min_value && *num < *spec.min_value) {
                        violations.push_back("param '" + spec.name + "' must be >= " +
                                             std::to_string(*spec.min_value));
                    }
                    break;
                }
                case ParamType::String: {
                    const std::string* str = std::get_if<std::string>(&value);
                    if (!str) {
                        violations.push_back("param '" + spec.name + "' must be a string");
                    } else if (spec.single_char && str->size() != 1) {
                        violations.push_back("param '" + spec.name + "' must be a single character");
                    }
                    break;
                }
                case ParamType::Bool:
                    if (!std::holds_alternative<bool>(value)) {
                        violations.push_back("param '" + spec.name + "' must be a boolean");
                    }
                    break;
            }
        }
        for (const auto& [key, _] : params) {
            bool known = false;
            for (const ParamSpec& spec : entry.params) {
                if (spec.name == key) {
                    known = true;
                    break;
                }
            }
            if (!known) violations.push_back("unknown param '" + key + "'");
        }
        return violations;
    }

    std::size_t size() const { return entries_.size(); }

    std::size_t count(Kind kind) const {
        std::size_t n = 0;
        for (const auto& [_, e] : entries_) {
            if (e.kind == kind) ++n;
        }
        return n;
    }

    std::vector<std::string> tags() const {
        std::vector<std::string> out;
        out.reserve(entries_.size());
        for (const auto& [tag, _] : entries_) out.push_back(tag);
        return out;
    }

    const std::map<std::string, RegistryEntry>& entries() const { return entries_; }

private:
    std::map<std::string, RegistryEntry> entries_;
};

namespace detail {

inline ParamSpec num_param(std::string name, double min_value, bool required = true) {
    return {std::move(name), ParamType::Number, required, min_value, false};
}

inline ParamSpec str_param(std::string name, bool required = true, bool single_char = false) {
    return {std::move(name), ParamType::String, required, std::nullopt, single_char};
}

inline ParamSpec bool_param(std::string name) {
    return {std::move(name), ParamType::Bool, false, std::nullopt, false};
}

inline void add_hard(ConstraintRegistry& reg, std::string tag, std::string description,
                     std::vector<ParamSpec> params, VerifierFn fn) {
    reg.add({std::move(tag), Kind::Hard, std::move(description), std::move(params), std::move(fn)});
}

inline void add_soft(ConstraintRegistry& reg, std::string tag, std::string description,
                     std::vector<ParamSpec> params = {}) {
    reg.add({std::move(tag), Kind::Soft, std::move(description), std::move(params), nullptr});
}

inline ConstraintRegistry build_default_registry() {
    using namespace verifiers;
    ConstraintRegistry reg;

    add_hard(reg, "word_count_min", "At least `min` words.",
             {num_param("min", 0)}, word_count);
    add_hard(reg, "word_count_max", "At most `max` words.",
             {num_param("max", 0)}, word_count);
    add_hard(reg, "word_count_exact", "Exactly `count` words.",
             {num_param("count", 0)}, word_count);
    add_hard(reg, "sentence_count_min", "At least `min` sentences.",
             {num_param("min", 0)}, sentence_count);
    add_hard(reg, "sentence_count_max", "At most `max` sentences.",
             {num_param("max", 0)}, sentence_count);
    add_hard(reg, "sentence_count_exact", "Exactly `count` sentences.",
             {num_param("count", 0)}, sentence_count);
    add_hard(reg, "paragraph_count_min", "At least `min` paragraphs (blank-line separated).",
             {num_param("min", 0)}, paragraph_count);
    add_hard(reg, "paragraph_count_max", "At most `max` paragraphs.",
             {num_param("max", 0)}, paragraph_count);
    add_hard(reg, "paragraph_count_exact", "Exactly `count` paragraphs.",
             {num_param("count", 0)}, paragraph_count);
    add_hard(reg, "keyword_include", "The keyword must appear at least once (token match).",
             {str_param("keyword"), bool_param("case_sensitive")}, keyword_include);
    add_hard(reg, "keyword_frequency", "Keyword occurrence count within [min, max].",
             {str_param("keyword"), num_param("min", 0), num_param("max", 0, false),
              bool_param("case_sensitive")},
             keyword_frequency);
    add_hard(reg, "letter_frequency", "A letter must occur within [min, max] times.",
             {str_param("letter", true, true), num_param("min", 0), num_param("max", 0, false),
              bool_param("case_insensitive")},
             letter_frequency);
    add_hard(reg, "forbidden_words", "None of the listed words may appear (comma/space separated).",
             {str_param("words"), bool_param("case_sensitive")}, forbidden_words);
    add_hard(reg, "forbidden_chars", "None of the listed characters may appear.",
             {str_param("chars")}, forbidden_chars);
    add_hard(reg, "all_caps_english", "Every letter is uppercase ASCII.", {}, all_caps_english);
    add_hard(reg, "all_lowercase_english", "Every letter is lowercase ASCII.", {},
             all_lowercase_english);
    add_hard(reg, "wrap_double_quotes", "The entire response is wrapped in double quotation marks.",
             {}, wrap_double_quotes);
    add_hard(reg, "title_double_angular", "A title wrapped in double angular brackets <<...>>.",
             {}, title_double_angular);
    add_hard(reg, "highlight_min", "At least `min` markdown-highlighted sections (*like this*).",
             {num_param("min", 1)}, highlight_min);
    add_hard(reg, "bullet_count_min", "At least `min` bullet list items.",
             {num_param("min", 0)}, bullet_count);
    add_hard(reg, "bullet_count_exact", "Exactly `count` bullet list items.",
             {num_param("count", 0)}, bullet_count);
    add_hard(reg, "section_count_min", "At least `min` markdown header sections.",
             {num_param("min", 1)}, section_count_min);
    add_hard(reg, "json_format", "The whole response parses as JSON (one code fence tolerated).",
             {}, json_format);
    add_hard(reg, "starts_with", "Response starts with the literal prefix.",
             {str_param("prefix")}, starts_with);
    add_hard(reg, "ends_with", "Response ends with the literal suffix.",
             {str_param("suffix")}, ends_with);
    add_hard(reg, "placeholder_count", "At least `min` square-bracket placeholders like [name].",
             {num_param("min", 0)}, placeholder_count);
    add_hard(reg, "english_only", "ASCII-alpha heuristic for \"respond in English\".",
             {}, english_only);
    add_hard(reg, "capital_word_frequency", "All-capital word count within [min, max].",
             {num_param("min", 0), num_param("max", 0, false)}, capital_word_frequency);

    add_soft(reg, "style_author", "Emulate a named author's style.", {str_param("author", false)});
    add_soft(reg, "style_form", "Use a specified stylistic form (encyclopedic, report, ...).",
             {str_param("form", false)});
    add_soft(reg, "tone_emotion", "Conform to an emotional tone (angry, sarcastic, ...).",
             {str_param("tone", false)});
    add_soft(reg, "audience_specific", "Tailor the response to a specific audience.",
             {str_param("audience", false)});
    add_soft(reg, "role_based", "Respond with a specific role identity.",
             {str_param("role", false)});
    add_soft(reg, "semantic_theme", "Focus on a theme, topic or stance.",
             {str_param("theme", false)});
    add_soft(reg, "element_inclusion", "Include a specific entity or element.",
             {str_param("element", false)});
    add_soft(reg, "scenario_inclusion", "Incorporate a described scenario.",
             {str_param("scenario", false)});
    add_soft(reg, "task_specific", "Address a defined situational task.");
    add_soft(reg, "complex_context", "Handle multi-faceted, nested context.");
    add_soft(reg, "example_pattern", "Conform to the pattern given by example pairs.");
    add_soft(reg, "inverse_exclusion", "Avoid a topic or response family.",
             {str_param("topic", false)});
    add_soft(reg, "contradictory_combination", "Requirements that are hard to satisfy together.");
    add_soft(reg, "rule_constraint", "Follow symbolic or logical operation rules.");
    add_soft(reg, "pragmatic_language", "Adapt to a dialect or language policy.",
             {str_param("language", false)});
    add_soft(reg, "syntactic_structure", "Follow phrase and clause structure requirements.");
    add_soft(reg, "morphological_form", "Control word formation (affixes, roots).");
    add_soft(reg, "phonological_form", "Sound-level requirements (rhyme, tongue twisters).");
    add_soft(reg, "document_count", "Produce a given number of documents or articles.",
             {num_param("count", 0, false)});
    add_soft(reg, "specialized_format", "Domain-specific format (medical record, ...).",
             {str_param("format", false)});
    add_soft(reg, "bespoke_format", "Custom formatting protocol described in the text.");
    add_soft(reg, "temporal_setting", "Impose time limits or temporal structure on the content.");
    add_soft(reg, "narrative_perspective", "Write from a given narrative perspective. (additive)",
             {str_param("perspective", false)});
    add_soft(reg, "reading_level", "Match a target reading level. (additive)",
             {str_param("level", false)});
    add_soft(reg, "formality_register", "Match a target formality register. (additive)",
             {str_param("register", false)});

    return reg;
}

} // namespace detail

// Shared immutable default registry: 28 hard tags, 25 soft tags.
inline const ConstraintRegistry& standard_registry() {
    static const ConstraintRegistry reg = detail::build_default_registry();
    return reg;
}

} // namespace ifreward
