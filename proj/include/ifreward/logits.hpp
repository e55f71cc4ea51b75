#pragma once

#include <algorithm>
#include <cmath>

#include "ifreward/errors.hpp"

namespace ifreward {

// Two-class head output: index 0 = not satisfied, index 1 = satisfied.
struct ScorerLogits {
    double l0 = 0.0;
    double l1 = 0.0;
};

// Softmax probability of the "satisfied" class, computed against the max
// logit so extreme values cannot overflow.
inline double logits_to_prob(const ScorerLogits& logits) {
    if (!std::isfinite(logits.l0) || !std::isfinite(logits.l1)) {
        throw DomainError("logits must be finite");
    }
    double m = std::max(logits.l0, logits.l1);
    double e0 = std::exp(logits.l0 - m);
    double e1 = std::exp(logits.l1 - m);
    return e1 / (e0 + e1);
}

inline double logits_to_prob(double l0, double l1) { return logits_to_prob(ScorerLogits{l0, l1}); }

} // namespace ifreward
