#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "ifreward/json_io.hpp"

namespace ifreward {

// Per-level tallies in the shape of the curriculum statistics table: an
// instruction with k constraints is a level-k item.
struct LevelCount {
    std::size_t instructions = 0;
    std::size_t constraints = 0;
    std::size_t soft = 0;
    std::size_t hard = 0;
};

struct RecordIssue {
    std::size_t line = 0;
    std::string message;
};

struct ValidationReport {
    std::size_t records_total = 0;
    std::size_t records_valid = 0;
    std::size_t reasoning_items = 0; // math/science items, no constraints
    std::map<int, LevelCount> per_level;
    std::vector<RecordIssue> errors;

    bool ok() const { return errors.empty(); }
};

// Collects errors instead of throwing; invalid records are excluded from all
// counts. Blank lines are skipped.
inline ValidationReport validate_dataset(std::istream& jsonl, const ConstraintRegistry& registry) {
    ValidationReport report;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(jsonl, line)) {
        ++line_no;
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (blank) continue;
        ++report.records_total;
        try {
            Instruction inst = parse_instruction_record(line, registry, line_no);
            ++report.records_valid;
            if (inst.constraints.empty()) {
                ++report.reasoning_items;
                continue;
            }
            LevelCount& row = report.per_level[static_cast<int>(inst.constraints.size())];
            ++row.instructions;
            row.constraints += inst.constraints.size();
            for (const Constraint& c : inst.constraints) {
                (c.kind == Kind::Soft ? row.soft : row.hard) += 1;
            }
        } catch (const Error& e) {
            report.errors.push_back({line_no, e.what()});
        }
    }
    return report;
}

inline json to_json(const ValidationReport& report) {
    json levels = json::object();
    for (const auto& [level, row] : report.per_level) {
        levels[std::to_string(level)] = {{"instructions", row.instructions},
                                         {"constraints", row.constraints},
                                         {"soft", row.soft},
                                         {"hard", row.hard}};
    }
    json errors = json::array();
    for (const RecordIssue& issue : report.errors) {
        errors.push_back({{"line", issue.line}, {"message", issue.message}});
    }
    return json{{"records_total", report.records_total},
                {"records_valid", report.records_valid},
                {"reasoning_items", report.reasoning_items},
                {"per_level", std::move(levels)},
                {"errors", std::move(errors)}};
}

} // namespace ifreward
