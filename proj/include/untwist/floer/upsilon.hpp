#pragma once

#include <cstdint>
#include <optional>

#include "untwist/floer/vsequence.hpp"
#include "untwist/numeric/pl_function.hpp"
#include "untwist/obstruction.hpp"

namespace untwist {

// Upsilon of a staircase (L-space or thin) complex: -2 min_s (V_s + s t / 2) on [0,1], symmetric about 1.
PLFunction upsilon_from_v(const VSequence& v);

// Pointwise max over the forced pairs (s, V_s) of required_v(l) of -s t - 2 V_s, symmetric about 1.
PLFunction upsilon_lower_bound(std::int64_t l);

// Pointwise min over forced pairs of max(g t - 2V_s + 2, -g t + 2g - 2s - 2V_s + 2), g > 0.
PLFunction upsilon_upper_bound(std::int64_t l, std::int64_t genus);

// Upsilon of K against the bounds for an l^- twist; the upper bound is used only when genus is given.
ObstructionResult upsilon_check(const PLFunction& upsilon, std::int64_t l,
                                std::optional<std::int64_t> genus = std::nullopt);

}  // namespace untwist
