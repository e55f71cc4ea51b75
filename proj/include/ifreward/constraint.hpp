#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifreward/params.hpp"

namespace ifreward {

enum class Kind { Hard, Soft };

inline const char* to_string(Kind k) { return k == Kind::Hard ? "hard" : "soft"; }

// One atomic requirement attached to an instruction. `type_tag` keys into the
// constraint registry; `text` is the natural-language rendering shown to the
// policy model.
struct Constraint {
    std::string id;
    Kind kind = Kind::Hard;
    std::string type_tag;
    ParamMap params;
    std::string text;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

enum class TaskDomain { InstructionFollowing, Math, Science };

inline const char* to_string(TaskDomain d) {
    switch (d) {
        case TaskDomain::Math: return "math";
        case TaskDomain::Science: return "science";
        default: return "instruction_following";
    }
}

// A base prompt plus its ordered constraint list. Math/Science items carry an
// answer key instead of constraints.
struct Instruction {
    std::string id;
    std::string base_prompt;
    std::vector<Constraint> constraints;
    TaskDomain domain = TaskDomain::InstructionFollowing;
    std::optional<std::string> answer_key;

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

// A model output generated for some curriculum level of an instruction.
// level 0 means the bare base prompt with no constraints attached.
struct Response {
    std::string instruction_id;
    int level = 0;
    std::string text;
    std::map<std::string, std::string> meta;

    friend bool operator==(const Response&, const Response&) = default;
};

} // namespace ifreward
