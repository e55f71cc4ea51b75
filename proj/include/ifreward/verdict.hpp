#pragma once

#include <string>

namespace ifreward {

// Outcome of one programmatic check. `variant` names the loose transform
// that passed ("original", "no_first_line", ...); it stays empty in strict
// mode and on failure.
struct Verdict {
    bool satisfied = false;
    std::string evidence;
    std::string variant;
};

inline Verdict pass(std::string evidence) { return {true, std::move(evidence), ""}; }
inline Verdict fail(std::string evidence) { return {false, std::move(evidence), ""}; }

} // namespace ifreward
