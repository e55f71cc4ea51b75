#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

#include "ifreward/constraint.hpp"
#include "ifreward/registry.hpp"
#include "ifreward/text_transforms.hpp"
#include "ifreward/verdict.hpp"

namespace ifreward {

enum class VerifyMode { Strict, Loose };

inline const char* to_string(VerifyMode m) { return m == VerifyMode::Strict ? "strict" : "loose"; }

// Binary hard-constraint check. Strict verifies the reasoning-stripped text
// as-is; loose passes if any relaxed variant passes and records which one.
inline Verdict verify_hard(const std::string& response_text, const Constraint& constraint,
                           VerifyMode mode, const ConstraintRegistry& registry = standard_registry(),
                           const ReasoningMarkers& markers = {}) {
    if (constraint.kind != Kind::Hard) {
        throw KindError("verify_hard called with soft constraint '" + constraint.id + "'");
    }
    const RegistryEntry& entry = registry.lookup(constraint.type_tag);
    if (entry.kind != Kind::Hard || !entry.verifier) {
        throw RegistryError("tag '" + constraint.type_tag + "' has no hard verifier",
                            constraint.type_tag);
    }

    std::string stripped = strip_reasoning(response_text, markers).text;
    if (mode == VerifyMode::Strict) {
        Verdict v = entry.verifier(stripped, constraint.params);
        v.variant.clear();
        return v;
    }

    Verdict first_failure;
    bool have_failure = false;
    for (const LooseVariant& variant : loose_variants_labeled(stripped)) {
        Verdict v = entry.verifier(variant.text, constraint.params);
        if (v.satisfied) {
            v.variant = variant.name;
            return v;
        }
        if (!have_failure) {
            first_failure = v;
            have_failure = true;
        }
    }
    first_failure.variant.clear();
    return first_failure;
}

namespace detail {

inline std::string normalize_answer(std::string_view s) {
    std::string out;
    bool pending_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

// Last \boxed{...} span if present, else last fenced block, else last
// non-empty line.
inline std::string extract_final_answer(std::string_view text) {
    std::size_t boxed = text.rfind("\\boxed{");
    if (boxed != std::string_view::npos) {
        std::size_t start = boxed + 7;
        int depth = 1;
        for (std::size_t i = start; i < text.size(); ++i) {
            if (text[i] == '{') ++depth;
            if (text[i] == '}' && --depth == 0) {
                return std::string(text.substr(start, i - start));
            }
        }
    }
    std::size_t fence_close = text.rfind("```");
    if (fence_close != std::string_view::npos && fence_close > 0) {
        std::size_t fence_open = text.rfind("```", fence_close - 1);
        if (fence_open != std::string_view::npos) {
            std::size_t body_start = text.find('\n', fence_open);
            if (body_start != std::string_view::npos && body_start < fence_close) {
                return std::string(text.substr(body_start + 1, fence_close - body_start - 1));
            }
        }
    }
    std::size_t end = text.size();
    while (end > 0 && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::size_t line_start = 0;
    for (std::size_t i = end; i > 0; --i) {
        if (text[i - 1] == '\n') {
            line_start = i;
            break;
        }
    }
    return std::string(text.substr(line_start, end - line_start));
}

} // namespace detail

// Exact-match answer check for reasoning items. The extracted answer is
// compared whitespace-normalized and case-insensitive; a prose final line
// ("the answer is 42") matches when it ends with the key at a token boundary.
inline Verdict verify_answer(const std::string& response_text, const std::string& answer_key) {
    if (answer_key.empty()) throw ValidationError("answer_key must be non-empty");
    std::string extracted = detail::normalize_answer(detail::extract_final_answer(response_text));
    std::string key = detail::normalize_answer(answer_key);
    bool ok = extracted == key;
    if (!ok && extracted.size() > key.size() &&
        extracted.compare(extracted.size() - key.size(), key.size(), key) == 0) {
        char before = extracted[extracted.size() - key.size() - 1];
        ok = !std::isalnum(static_cast<unsigned char>(before));
    }
    if (ok) return pass("final answer matches key '" + answer_key + "'");
    return fail("final answer '" + extracted + "' does not match key '" + answer_key + "'");
}

} // namespace ifreward
