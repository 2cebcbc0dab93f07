#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "untwist/knot/knot_record.hpp"
#include "untwist/knot/twist.hpp"
#include "untwist/obstruction.hpp"

namespace untwist {

// Odd l only: arf 0 needs l = +-1 mod 8, arf 1 needs l = +-3 mod 8.
ObstructionResult arf_check(const KnotRecord& k, const TwistIndex& idx);

// Allowed sigma_{r/l}(K) for a twist: l^- gives {-2r(l-r), -2r(l-r)+2}, l^+ the negation.
std::pair<std::int64_t, std::int64_t> allowed_signatures(const TwistIndex& idx, std::int64_t r);

ObstructionResult signature_twist_check(const KnotRecord& k, const TwistIndex& idx);

// Pairs violating the gcd trichotomy (gcd 1, equal indices, or {2-, 2+}).
std::vector<std::pair<TwistIndex, TwistIndex>> gcd_conflicts(const TwistSet& indices);
bool gcd_pair_check(const TwistSet& indices);

// Minimum genus of a knot with {k-, (k+1)+} among its unknotting indices.
std::int64_t genus_pair_bound(std::int64_t k);

ObstructionResult branched_rank_check(const KnotRecord& k, const TwistIndex& idx, std::int64_t q);

}  // namespace untwist
