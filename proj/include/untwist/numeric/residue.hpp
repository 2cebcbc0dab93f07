#pragma once

#include <cstdint>

#include "untwist/numeric/rational.hpp"

namespace untwist {

// a_n: the unique value in [0, n) congruent to a mod n. Requires n >= 2.
Rational residue(const Rational& a, std::int64_t n);

// [a]_n = |(a + (n-1)/2)_n - (n-1)/2|, the residue folded into [0, n/2].
Rational bracket(const Rational& a, std::int64_t n);

}  // namespace untwist
