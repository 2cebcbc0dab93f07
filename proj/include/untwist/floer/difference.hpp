#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace untwist {

// Conjunction of constraints x_u - x_v <= c over named integer unknowns.
class DifferenceSystem {
public:
    int add_variable(std::string name);
    int variable_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }

    void add_upper(int u, int v, std::int64_t c);                        // x_u - x_v <= c
    void add_range(int u, int v, std::int64_t lo, std::int64_t hi);      // lo <= x_u - x_v <= hi
    void add_equal(int u, int v, std::int64_t c) { add_range(u, v, c, c); }

    // Empty when feasible; otherwise the variables along a negative cycle.
    std::optional<std::vector<int>> negative_cycle() const;
    bool feasible() const { return !negative_cycle().has_value(); }
    // A feasible integer assignment with the given anchor at 0; nullopt if infeasible.
    std::optional<std::vector<std::int64_t>> solution(int anchor) const;

private:
    struct Edge {
        int from;
        int to;
        std::int64_t w;
    };
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
};

}  // namespace untwist
