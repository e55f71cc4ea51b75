#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ifreward {

// Half-open [begin, end) byte range into the original text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

struct TextSegmentation {
    std::vector<std::string> words;
    std::vector<Span> sentences;
    std::vector<Span> paragraphs;

    std::size_t word_count() const { return words.size(); }
    std::size_t sentence_count() const { return sentences.size(); }
    std::size_t paragraph_count() const { return paragraphs.size(); }
};

namespace detail {

inline bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

inline bool is_ascii_punct(char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

// Trim leading/trailing ASCII punctuation. "poem." -> "poem"; "--" -> "".
inline std::string_view strip_token_punct(std::string_view token) {
    while (!token.empty() && is_ascii_punct(token.front())) token.remove_prefix(1);
    while (!token.empty() && is_ascii_punct(token.back())) token.remove_suffix(1);
    return token;
}

inline bool is_sentence_terminator(char c) {
    return c == '.' || c == '!' || c == '?';
}

} // namespace detail

// Deterministic segmentation used by the count verifiers. Words are maximal
// non-whitespace runs with edge punctuation stripped (tokens that strip to
// nothing are dropped). Sentences end at '.', '!' or '?' followed by
// whitespace or end of text; a trailing fragment with no terminator still
// counts as a sentence. Paragraphs are blocks separated by blank lines.
// Abbreviations ("e.g.") split sentences; that is a documented limitation.
inline TextSegmentation segment_text(std::string_view text) {
    TextSegmentation seg;

    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && detail::is_space(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t start = i;
        while (i < text.size() && !detail::is_space(text[i])) ++i;
        std::string_view token = detail::strip_token_punct(text.substr(start, i - start));
        if (!token.empty()) seg.words.emplace_back(token);
    }

    std::size_t sent_start = std::string_view::npos;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        char c = text[pos];
        if (sent_start == std::string_view::npos) {
            if (detail::is_space(c)) continue;
            sent_start = pos;
        }
        if (detail::is_sentence_terminator(c) &&
            (pos + 1 >= text.size() || detail::is_space(text[pos + 1]))) {
            seg.sentences.push_back({sent_start, pos + 1});
            sent_start = std::string_view::npos;
        }
    }
    if (sent_start != std::string_view::npos) {
        std::size_t end = text.size();
        while (end > sent_start && detail::is_space(text[end - 1])) --end;
        if (end > sent_start) seg.sentences.push_back({sent_start, end});
    }

    std::size_t line_start = 0;
    std::size_t para_start = std::string_view::npos;
    std::size_t para_end = 0;
    auto flush_paragraph = [&] {
        if (para_start != std::string_view::npos) {
            seg.paragraphs.push_back({para_start, para_end});
            para_start = std::string_view::npos;
        }
    };
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == '\n') {
            std::string_view line = text.substr(line_start, pos - line_start);
            bool blank = true;
            for (char c : line) {
                if (!detail::is_space(c)) {
                    blank = false;
                    break;
                }
            }
            if (blank) {
                flush_paragraph();
            } else {
                std::size_t lead = 0;
                while (lead < line.size() && detail::is_space(line[lead])) ++lead;
                std::size_t trail = line.size();
                while (trail > lead && detail::is_space(line[trail - 1])) --trail;
                if (para_start == std::string_view::npos) para_start = line_start + lead;
                para_end = line_start + trail;
            }
            line_start = pos + 1;
        }
    }
    flush_paragraph();

    return seg;
}

} // namespace ifreward
