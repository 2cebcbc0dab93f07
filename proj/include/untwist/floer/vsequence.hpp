#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace untwist {

// V_0, V_1, ... : nonnegative, nonincreasing, steps of at most one, zero from some index on.
// Stored without trailing zeros.
class VSequence {
public:
    VSequence() = default;
    // Throws std::invalid_argument if the axioms fail.
    explicit VSequence(std::vector<std::int64_t> values);

    std::int64_t operator[](std::int64_t k) const;
    // First index k with V_k = 0.
    std::int64_t nu_plus() const { return static_cast<std::int64_t>(values_.size()); }
    bool is_zero() const { return values_.empty(); }
    const std::vector<std::int64_t>& values() const { return values_; }
    std::string str() const;

    friend bool operator==(const VSequence&, const VSequence&) = default;

private:
    std::vector<std::int64_t> values_;
};

// Empty string if the values satisfy the axioms, otherwise a description of the first failure.
std::string vsequence_violation(const std::vector<std::int64_t>& values);

}  // namespace untwist
