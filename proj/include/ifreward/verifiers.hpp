#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ifreward/params.hpp"
#include "ifreward/segment.hpp"
#include "ifreward/verdict.hpp"

namespace ifreward::verifiers {

namespace detail {

inline std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Keywords are matched token-wise against the punctuation-stripped word list;
// multi-word keywords match consecutive token windows.
inline std::vector<std::string> keyword_tokens(std::string_view keyword, bool case_sensitive) {
    std::vector<std::string> toks;
    for (const std::string& w : segment_text(keyword).words) {
        toks.push_back(case_sensitive ? w : lower(w));
    }
    return toks;
}

inline std::size_t count_keyword(const TextSegmentation& seg, std::string_view keyword,
                                 bool case_sensitive) {
    std::vector<std::string> needle = keyword_tokens(keyword, case_sensitive);
    if (needle.empty()) return 0;
    std::vector<std::string> words;
    words.reserve(seg.words.size());
    for (const std::string& w : seg.words) {
        words.push_back(case_sensitive ? w : lower(w));
    }
    if (needle.size() > words.size()) return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + needle.size() <= words.size(); ++i) {
        if (std::equal(needle.begin(), needle.end(), words.begin() + i)) ++count;
    }
    return count;
}

inline Verdict check_count(std::size_t actual, const ParamMap& params, std::string_view unit) {
    auto min = find_num(params, "min");
    auto max = find_num(params, "max");
    auto exact = find_num(params, "count");
    std::string found = "found " + std::to_string(actual) + " " + std::string(unit);
    if (exact && actual != static_cast<std::size_t>(*exact)) {
        return fail(found + ", need exactly " + std::to_string(static_cast<long long>(*exact)));
    }
    if (min && actual < static_cast<std::size_t>(*min)) {
        return fail(found + ", need >= " + std::to_string(static_cast<long long>(*min)));
    }
    if (max && actual > static_cast<std::size_t>(*max)) {
        return fail(found + ", need <= " + std::to_string(static_cast<long long>(*max)));
    }
    return pass(found);
}

} // namespace detail

inline Verdict word_count(const std::string& text, const ParamMap& params) {
    return detail::check_count(segment_text(text).word_count(), params, "words");
}

inline Verdict sentence_count(const std::string& text, const ParamMap& params) {
    return detail::check_count(segment_text(text).sentence_count(), params, "sentences");
}

inline Verdict paragraph_count(const std::string& text, const ParamMap& params) {
    return detail::check_count(segment_text(text).paragraph_count(), params, "paragraphs");
}

inline Verdict keyword_include(const std::string& text, const ParamMap& params) {
    std::string keyword = get_str(params, "keyword");
    bool cs = get_bool(params, "case_sensitive", false);
    std::size_t n = detail::count_keyword(segment_text(text), keyword, cs);
    if (n == 0) return fail("keyword '" + keyword + "' not found");
    return pass("keyword '" + keyword + "' found " + std::to_string(n) + " times");
}

inline Verdict keyword_frequency(const std::string& text, const ParamMap& params) {
    std::string keyword = get_str(params, "keyword");
    bool cs = get_bool(params, "case_sensitive", false);
    std::size_t n = detail::count_keyword(segment_text(text), keyword, cs);
    ParamMap bounds;
    if (auto v = find_num(params, "min")) bounds["min"] = *v;
    if (auto v = find_num(params, "max")) bounds["max"] = *v;
    Verdict v = detail::check_count(n, bounds, "occurrences of '" + keyword + "'");
    return v;
}

inline Verdict letter_frequency(const std::string& text, const ParamMap& params) {
    std::string letter = get_str(params, "letter");
    if (letter.size() != 1) throw ValidationError("param 'letter' must be a single character");
    bool ci = get_bool(params, "case_insensitive", true);
    char needle = ci ? static_cast<char>(std::tolower(static_cast<unsigned char>(letter[0])))
                     : letter[0];
    std::size_t n = 0;
    for (char c : text) {
        char probe = ci ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c;
        if (probe == needle) ++n;
    }
    ParamMap bounds;
    if (auto v = find_num(params, "min")) bounds["min"] = *v;
    if (auto v = find_num(params, "max")) bounds["max"] = *v;
    return detail::check_count(n, bounds, "occurrences of letter '" + letter + "'");
}

// `words` is a comma- or whitespace-separated list.
inline Verdict forbidden_words(const std::string& text, const ParamMap& params) {
    std::string raw = get_str(params, "words");
    bool cs = get_bool(params, "case_sensitive", false);
    std::vector<std::string> banned;
    std::string current;
    for (char c : raw + ",") {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) banned.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    TextSegmentation seg = segment_text(text);
    for (const std::string& word : banned) {
        if (detail::count_keyword(seg, word, cs) > 0) {
            return fail("forbidden word '" + word + "' present");
        }
    }
    return pass("none of the forbidden words present");
}

inline Verdict forbidden_chars(const std::string& text, const ParamMap& params) {
    std::string chars = get_str(params, "chars");
    for (char c : chars) {
        std::size_t n = static_cast<std::size_t>(std::count(text.begin(), text.end(), c));
        if (n > 0) {
            return fail("forbidden character '" + std::string(1, c) + "' appears " +
                        std::to_string(n) + " times");
        }
    }
    return pass("no forbidden characters");
}

inline Verdict all_caps_english(const std::string& text, const ParamMap&) {
    std::size_t alpha = 0;
    for (char c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalpha(u)) {
            ++alpha;
            if (std::islower(u)) return fail("lowercase letter '" + std::string(1, c) + "' present");
        }
    }
    if (alpha == 0) return fail("no alphabetic characters");
    return pass("all " + std::to_string(alpha) + " letters uppercase");
}

inline Verdict all_lowercase_english(const std::string& text, const ParamMap&) {
    std::size_t alpha = 0;
    for (char c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalpha(u)) {
            ++alpha;
            if (std::isupper(u)) return fail("uppercase letter '" + std::string(1, c) + "' present");
        }
    }
    if (alpha == 0) return fail("no alphabetic characters");
    return pass("all " + std::to_string(alpha) + " letters lowercase");
}

inline Verdict wrap_double_quotes(const std::string& text, const ParamMap&) {
    std::string_view t = detail::trim(text);
    if (t.size() >= 2 && t.front() == '"' && t.back() == '"') {
        return pass("response wrapped in double quotes");
    }
    return fail("response is not wrapped in double quotation marks");
}

inline Verdict title_double_angular(const std::string& text, const ParamMap&) {
    std::size_t pos = 0;
    while ((pos = text.find("<<", pos)) != std::string::npos) {
        std::size_t close = text.find(">>", pos + 2);
        if (close == std::string::npos) break;
        std::string_view inner(text.data() + pos + 2, close - pos - 2);
        bool ok = !inner.empty() && inner.find('\n') == std::string_view::npos &&
                  !detail::trim(inner).empty();
        if (ok) return pass("title <<" + std::string(inner) + ">> found");
        pos = close + 2;
    }
    return fail("no title wrapped in double angular brackets <<...>>");
}

namespace detail {

// Counts non-overlapping *span* / **span** sections whose content is
// single-line, star-free and not all whitespace.
inline std::size_t count_highlights(std::string_view text) {
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '*') {
            ++i;
            continue;
        }
        std::size_t marker = (i + 1 < text.size() && text[i + 1] == '*') ? 2 : 1;
        std::string_view closer = marker == 2 ? "**" : "*";
        std::size_t start = i + marker;
        std::size_t close = text.find(closer, start);
        bool valid = false;
        if (close != std::string_view::npos) {
            std::string_view inner = text.substr(start, close - start);
            valid = !inner.empty() && inner.find('\n') == std::string_view::npos &&
                    inner.find('*') == std::string_view::npos && !trim(inner).empty();
        }
        if (valid) {
            ++count;
            i = close + marker;
        } else {
            i += marker;
        }
    }
    return count;
}

} // namespace detail

inline Verdict highlight_min(const std::string& text, const ParamMap& params) {
    std::size_t n = detail::count_highlights(text);
    ParamMap bounds;
    bounds["min"] = get_num(params, "min");
    return detail::check_count(n, bounds, "highlighted sections");
}

namespace detail {

inline std::size_t count_bullets(std::string_view text) {
    std::size_t count = 0;
    std::size_t line_start = 0;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == '\n') {
            std::string_view line = trim(text.substr(line_start, pos - line_start));
            if (line.size() >= 2 && (line[0] == '-' || line[0] == '*') && line[1] == ' ') ++count;
            line_start = pos + 1;
        }
    }
    return count;
}

inline std::size_t count_md_sections(std::string_view text) {
    std::size_t count = 0;
    std::size_t line_start = 0;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == '\n') {
            std::string_view line = text.substr(line_start, pos - line_start);
            std::size_t hashes = 0;
            while (hashes < line.size() && line[hashes] == '#') ++hashes;
            if (hashes >= 1 && hashes <= 6 && hashes < line.size() && line[hashes] == ' ') ++count;
            line_start = pos + 1;
        }
    }
    return count;
}

} // namespace detail

inline Verdict bullet_count(const std::string& text, const ParamMap& params) {
    return detail::check_count(detail::count_bullets(text), params, "bullet list items");
}

inline Verdict section_count_min(const std::string& text, const ParamMap& params) {
    ParamMap bounds;
    bounds["min"] = get_num(params, "min");
    return detail::check_count(detail::count_md_sections(text), bounds, "markdown sections");
}

// Whole response must parse as JSON; a single surrounding markdown code fence
// is stripped first because models habitually fence JSON output.
inline Verdict json_format(const std::string& text, const ParamMap&) {
    std::string_view body = detail::trim(text);
    if (body.rfind("```", 0) == 0) {
        std::size_t first_nl = body.find('\n');
        if (first_nl != std::string_view::npos && body.size() >= 3 &&
            body.substr(body.size() - 3) == "```") {
            body = detail::trim(body.substr(first_nl + 1, body.size() - first_nl - 1 - 3));
        }
    }
    if (body.empty()) return fail("empty response is not valid JSON");
    if (nlohmann::json::accept(body)) return pass("response parses as JSON");
    return fail("response does not parse as JSON");
}

inline Verdict starts_with(const std::string& text, const ParamMap& params) {
    std::string prefix = get_str(params, "prefix");
    std::string_view t = detail::trim(text);
    if (t.rfind(prefix, 0) == 0) return pass("response starts with '" + prefix + "'");
    return fail("response does not start with '" + prefix + "'");
}

inline Verdict ends_with(const std::string& text, const ParamMap& params) {
    std::string suffix = get_str(params, "suffix");
    std::string_view t = detail::trim(text);
    if (t.size() >= suffix.size() && t.substr(t.size() - suffix.size()) == suffix) {
        return pass("response ends with '" + suffix + "'");
    }
    return fail("response does not end with '" + suffix + "'");
}

inline Verdict placeholder_count(const std::string& text, const ParamMap& params) {
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = text.find('[', pos)) != std::string::npos) {
        std::size_t close = text.find(']', pos + 1);
        if (close == std::string::npos) break;
        std::string_view inner(text.data() + pos + 1, close - pos - 1);
        if (!inner.empty() && inner.find('[') == std::string_view::npos) {
            ++count;
            pos = close + 1;
        } else {
            ++pos;
        }
    }
    ParamMap bounds;
    bounds["min"] = get_num(params, "min");
    return detail::check_count(count, bounds, "placeholders like [name]");
}

// ASCII-only heuristic for "respond in English": every byte is ASCII and at
// least one ASCII letter appears.
inline Verdict english_only(const std::string& text, const ParamMap&) {
    std::size_t alpha = 0;
    for (char c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u >= 0x80) return fail("non-ASCII byte found; response is not plain English text");
        if (std::isalpha(u)) ++alpha;
    }
    if (alpha == 0) return fail("no alphabetic characters");
    return pass("ASCII English text");
}

inline Verdict capital_word_frequency(const std::string& text, const ParamMap& params) {
    std::size_t count = 0;
    for (const std::string& word : segment_text(text).words) {
        std::size_t alpha = 0;
        bool all_upper = true;
        for (char c : word) {
            unsigned char u = static_cast<unsigned char>(c);
            if (std::isalpha(u)) {
                ++alpha;
                if (!std::isupper(u)) {
                    all_upper = false;
                    break;
                }
            }
        }
        if (alpha > 0 && all_upper) ++count;
    }
    ParamMap bounds;
    if (auto v = find_num(params, "min")) bounds["min"] = *v;
    if (auto v = find_num(params, "max")) bounds["max"] = *v;
    return detail::check_count(count, bounds, "all-capital words");
}

} // namespace ifreward::verifiers
