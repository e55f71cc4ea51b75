#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ifreward {

struct ReasoningMarkers {
    std::string open = "<think>";
    std::string close = "</think>";
};

struct StrippedText {
    std::string text;
    // Open marker present without a matching close marker.
    bool unbalanced = false;
};

namespace detail {

inline std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace detail

// Reasoning models emit a thinking block ahead of the answer; verification
// applies to the answer only. Removes at most one leading marker-delimited
// block and trims the remainder. An unclosed open marker keeps everything
// after it and raises the unbalanced flag.
inline StrippedText strip_reasoning(std::string_view text, const ReasoningMarkers& markers = {}) {
    std::string_view body = text;
    std::size_t lead = 0;
    while (lead < body.size() && std::isspace(static_cast<unsigned char>(body[lead]))) ++lead;

    if (body.substr(lead).rfind(markers.open, 0) != 0) {
        return {std::string(text), false};
    }
    std::size_t content_start = lead + markers.open.size();
    std::size_t close_pos = body.find(markers.close, content_start);
    if (close_pos == std::string_view::npos) {
        return {std::string(detail::trim_view(body.substr(content_start))), true};
    }
    return {std::string(detail::trim_view(body.substr(close_pos + markers.close.size()))), false};
}

struct LooseVariant {
    std::string name;
    std::string text;
};

namespace detail {

inline std::string remove_first_line(std::string_view s) {
    std::size_t nl = s.find('\n');
    if (nl == std::string_view::npos) return "";
    return std::string(s.substr(nl + 1));
}

inline std::string remove_last_line(std::string_view s) {
    std::size_t nl = s.rfind('\n');
    if (nl == std::string_view::npos) return "";
    return std::string(s.substr(0, nl));
}

inline std::string strip_emphasis(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '*') out.push_back(c);
    }
    return out;
}

} // namespace detail

// IFEval-style loose relaxation: the cross product of {original, first line
// removed, last line removed, both removed} with {as-is, '*' emphasis markers
// stripped}. The original text is always element 0; later duplicates are
// dropped.
inline std::vector<LooseVariant> loose_variants_labeled(std::string_view text) {
    const std::pair<const char*, std::string> line_forms[] = {
        {"original", std::string(text)},
        {"no_first_line", detail::remove_first_line(text)},
        {"no_last_line", detail::remove_last_line(text)},
        {"no_first_last_line", detail::remove_last_line(detail::remove_first_line(text))},
    };

    std::vector<LooseVariant> out;
    auto push_unique = [&out](std::string name, std::string value) {
        for (const auto& existing : out) {
            if (existing.text == value) return;
        }
        out.push_back({std::move(name), std::move(value)});
    };
    for (const auto& [name, form] : line_forms) {
        push_unique(name, form);
        push_unique(std::string(name) + "_no_emphasis", detail::strip_emphasis(form));
    }
    return out;
}

inline std::vector<std::string> loose_variants(std::string_view text) {
    std::vector<std::string> out;
    for (auto& v : loose_variants_labeled(text)) out.push_back(std::move(v.text));
    return out;
}

} // namespace ifreward
