#include "untwist/floer/difference.hpp"

#include <algorithm>

namespace untwist {

int DifferenceSystem::add_variable(std::string name) {
    names_.push_back(std::move(name));
    return variable_count() - 1;
}

void DifferenceSystem::add_upper(int u, int v, std::int64_t c) { edges_.push_back({v, u, c}); }

void DifferenceSystem::add_range(int u, int v, std::int64_t lo, std::int64_t hi) {
    add_upper(u, v, hi);
    add_upper(v, u, -lo);
}

std::optional<std::vector<int>> DifferenceSystem::negative_cycle() const {
    // Bellman-Ford from a virtual source joined to every node with weight 0.
    const int n = variable_count();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(n), 0);
    std::vector<int> pred(static_cast<std::size_t>(n), -1);
    int last = -1;
    for (int round = 0; round < n; ++round) {
        last = -1;
        for (const auto& e : edges_) {
            if (dist[e.from] + e.w < dist[e.to]) {
                dist[e.to] = dist[e.from] + e.w;
                pred[e.to] = e.from;
                last = e.to;
            }
        }
        if (last < 0) return std::nullopt;
    }
    if (last < 0) return std::nullopt;
    int v = last;
    for (int i = 0; i < n; ++i) v = pred[v];
    std::vector<int> cycle{v};
    for (int u = pred[v]; u != v; u = pred[u]) cycle.push_back(u);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

std::optional<std::vector<std::int64_t>> DifferenceSystem::solution(int anchor) const {
    if (negative_cycle()) return std::nullopt;
    const int n = variable_count();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (const auto& e : edges_)
            if (dist[e.from] + e.w < dist[e.to]) {
                dist[e.to] = dist[e.from] + e.w;
                changed = true;
            }
        if (!changed) break;
    }
    std::int64_t shift = dist[anchor];
    for (auto& d : dist) d -= shift;
    return dist;
}

}  // namespace untwist
