#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "untwist/floer/vsequence.hpp"
#include "untwist/knot/twist.hpp"
#include "untwist/numeric/rational.hpp"
#include "untwist/obstruction.hpp"

namespace untwist {

// V_k = max(floor((-sigma + 2(1-k))/4), 0).
VSequence alternating_v(std::int64_t sigma);

// Values (index, V_index) forced on K by an l^- unknotting twist, l >= 1.
std::vector<std::pair<std::int64_t, std::int64_t>> required_v(std::int64_t l);

// Linking numbers l >= 1 compatible with some nu+ in [nu_lo, nu_hi].
std::set<std::int64_t> l_interval(std::int64_t nu_lo, std::int64_t nu_hi);

// Indices allowed for an alternating (or thin) knot of the given signature.
TwistSet alternating_allowed(std::int64_t sigma);

// Partial knowledge of V(K).
struct PartialV {
    struct DiffBound {
        std::int64_t i;
        std::int64_t j;
        std::int64_t lo;
        std::int64_t hi;  // lo <= V_i - V_j <= hi
    };
    std::map<std::int64_t, std::int64_t> known;
    std::vector<DiffBound> diff_bounds;
    std::optional<std::int64_t> zero_from;  // V_k = 0 for k >= zero_from

    static PartialV from(const VSequence& v);
};

struct PartnerRow {
    std::int64_t i;
    std::int64_t j;
    Rational s;
};

// Rows i = 0..floor(n/2) of j(i) = [l i + beta]_n and s(i), n = l^2 + 1.
std::vector<PartnerRow> partner_table(std::int64_t l);

// Feasibility of V(K) together with a partner sequence V(J') under an l^- twist.
ObstructionResult partner_v_check(const PartialV& v, std::int64_t l);

}  // namespace untwist
