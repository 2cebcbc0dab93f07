#pragma once

#include <string>
#include <utility>

namespace untwist {

// Outcome of one obstruction applied to one twist index.
// Not applicable implies passed. `inconclusive` marks a check that lacked the data to decide.
struct ObstructionResult {
    bool applicable = false;
    bool passed = true;
    bool inconclusive = false;
    std::string detail;

    bool obstructed() const { return applicable && !passed; }

    static ObstructionResult not_applicable(std::string d = {}) { return {false, true, false, std::move(d)}; }
    static ObstructionResult insufficient(std::string d) { return {false, true, true, std::move(d)}; }
    static ObstructionResult pass(std::string d = {}) { return {true, true, false, std::move(d)}; }
    static ObstructionResult fail(std::string d) { return {true, false, false, std::move(d)}; }
};

}  // namespace untwist
