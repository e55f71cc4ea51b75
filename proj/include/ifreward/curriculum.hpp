#pragma once

#include <map>
#include <string>
#include <vector>

#include "ifreward/constraint.hpp"
#include "ifreward/errors.hpp"

namespace ifreward {

// Sub-instruction carrying the first k constraints of its parent.
struct CurriculumLevel {
    std::string instruction_id;
    int level = 1;
    std::string rendered_prompt;
    std::vector<Constraint> constraints;
};

struct PromptTemplate {
    std::string base_separator = "\n\n"; // between base prompt and constraint block
    std::string constraint_separator = "\n";
};

// Deterministic prompt assembly: base, blank line, one constraint per line.
inline std::string render_prompt(const std::string& base, const std::vector<Constraint>& constraints,
                                 const PromptTemplate& tmpl = {}) {
    if (constraints.empty()) return base;
    std::string out = base + tmpl.base_separator;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (i > 0) out += tmpl.constraint_separator;
        out += constraints[i].text;
    }
    return out;
}

// Levels k = 1..n, each with the parent's constraint prefix of length k.
// Items without constraints (reasoning data) are not decomposed.
inline std::vector<CurriculumLevel> decompose(const Instruction& instruction,
                                              const PromptTemplate& tmpl = {}) {
    std::vector<CurriculumLevel> levels;
    levels.reserve(instruction.constraints.size());
    for (std::size_t k = 1; k <= instruction.constraints.size(); ++k) {
        CurriculumLevel level;
        level.instruction_id = instruction.id;
        level.level = static_cast<int>(k);
        level.constraints.assign(instruction.constraints.begin(),
                                 instruction.constraints.begin() + static_cast<std::ptrdiff_t>(k));
        level.rendered_prompt = render_prompt(instruction.base_prompt, level.constraints, tmpl);
        levels.push_back(std::move(level));
    }
    return levels;
}

struct LevelStats {
    int level = 0;
    std::size_t instructions = 0;
    std::size_t constraints = 0;
    std::size_t soft = 0;
    std::size_t hard = 0;
};

struct StatsTable {
    std::vector<LevelStats> rows; // ascending by level
    std::size_t total_instructions = 0;
    std::size_t total_constraints = 0;
};

inline StatsTable curriculum_stats(const std::vector<CurriculumLevel>& dataset) {
    std::map<int, LevelStats> by_level;
    for (const CurriculumLevel& item : dataset) {
        LevelStats& row = by_level[item.level];
        row.level = item.level;
        ++row.instructions;
        row.constraints += item.constraints.size();
        for (const Constraint& c : item.constraints) {
            (c.kind == Kind::Soft ? row.soft : row.hard) += 1;
        }
    }
    StatsTable table;
    for (auto& [_, row] : by_level) {
        table.total_instructions += row.instructions;
        table.total_constraints += row.constraints;
        table.rows.push_back(row);
    }
    return table;
}

} // namespace ifreward
