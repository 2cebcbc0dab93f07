#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "untwist/knot/dataset.hpp"
#include "untwist/knot/twist.hpp"
#include "untwist/numeric/rational.hpp"

namespace testing {

inline const std::vector<untwist::KnotRecord>& bundled() {
    static const auto data = untwist::load_dataset_file(std::string(UNTWIST_DATA_DIR) + "/knots.json");
    return data;
}

inline const untwist::KnotRecord& knot(const std::string& name) { return untwist::find_knot(bundled(), name); }

inline untwist::TwistIndex idx(const std::string& s) { return untwist::TwistIndex::parse(s); }

inline untwist::TwistSet set_of(std::initializer_list<const char*> xs) {
    untwist::TwistSet out;
    for (const char* x : xs) out.insert(untwist::TwistIndex::parse(x));
    return out;
}

inline untwist::Rational Q(std::int64_t n, std::int64_t d = 1) { return untwist::Rational(n, d); }

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace testing
