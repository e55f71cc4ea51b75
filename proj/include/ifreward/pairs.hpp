#pragma once

#include <map>
#include <string>
#include <vector>

#include "ifreward/constraint.hpp"
#include "ifreward/errors.hpp"

namespace ifreward {

enum class Polarity { Positive, Negative };

inline const char* to_string(Polarity p) {
    return p == Polarity::Positive ? "positive" : "negative";
}

struct PairSource {
    std::string instruction_id;
    int k = 1; // curriculum level of the constraint
    Polarity polarity = Polarity::Positive;
};

// Pseudo-labeled training pair: the level-k response is assumed to satisfy
// constraint c_k (label 1) while the level-(k-1) response is assumed not to
// (label 0). The labels are noisy by construction and used as-is.
struct LabeledPair {
    std::string response_text;
    Constraint constraint;
    int label = 1;
    PairSource source;
};

struct PairBuildResult {
    std::vector<LabeledPair> pairs;
    std::vector<std::string> warnings; // skipped pairs due to missing levels
};

// Emits (o_k, c_k, 1) and (o_{k-1}, c_k, 0) for every soft c_k. Hard
// constraints never need a learned scorer and are skipped. A missing level m
// drops only the pairs that need it, with a warning.
inline PairBuildResult build_pairs(const Instruction& instruction,
                                   const std::map<int, Response>& responses) {
    for (const auto& [level, response] : responses) {
        if (response.instruction_id != instruction.id) {
            throw MismatchError("response at level " + std::to_string(level) + " references '" +
                                response.instruction_id + "', expected '" + instruction.id + "'");
        }
    }

    PairBuildResult result;
    for (std::size_t idx = 0; idx < instruction.constraints.size(); ++idx) {
        const Constraint& ck = instruction.constraints[idx];
        if (ck.kind != Kind::Soft) continue;
        int k = static_cast<int>(idx) + 1;

        auto pos = responses.find(k);
        if (pos == responses.end()) {
            result.warnings.push_back("instruction '" + instruction.id + "': missing level " +
                                      std::to_string(k) + " response, skipping positive pair for '" +
                                      ck.id + "'");
        } else {
            result.pairs.push_back({pos->second.text, ck, 1,
                                    {instruction.id, k, Polarity::Positive}});
        }

        auto neg = responses.find(k - 1);
        if (neg == responses.end()) {
            result.warnings.push_back("instruction '" + instruction.id + "': missing level " +
                                      std::to_string(k - 1) + " response, skipping negative pair for '" +
                                      ck.id + "'");
        } else {
            result.pairs.push_back({neg->second.text, ck, 0,
                                    {instruction.id, k, Polarity::Negative}});
        }
    }
    return result;
}

} // namespace ifreward
