#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "untwist/knot/knot_record.hpp"
#include "untwist/numeric/rational.hpp"

namespace untwist {

// Raised when x puts a lattice point on one of the two counting segments.
class JumpPointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Tristram-Levine signature sigma_x(T(p,q)) at omega = e^{2 pi i x}, 0 < x < 1, by lattice count.
std::int64_t torus_signature(std::int64_t p, std::int64_t q, const Rational& x);

// sigma-bar = -sigma: the count (p-1)(q-1) - 2(#C1 + #C2). Same preconditions.
std::int64_t torus_signature_bar(std::int64_t p, std::int64_t q, const Rational& x);

struct SignatureBounds {
    Rational approx;  // 2pq x (1 - x)
    Rational lower;   // (p-1)(q-1) - pq x^2 - pq (1-x)^2
};
SignatureBounds torus_signature_bounds(std::int64_t p, std::int64_t q, const Rational& x);

// Value at x if it is unambiguous: directly off the segments, otherwise when both sides
// x -+ 1/(4 p^2 q^2) agree.
std::optional<std::int64_t> torus_signature_near(std::int64_t p, std::int64_t q, const Rational& x);

// Dispatch: torus records by lattice count, sums by summing, otherwise stored samples
// (x = 1/2 falls back to the classical signature, a constant range is used everywhere). nullopt means unknown.
std::optional<std::int64_t> signature_at(const KnotRecord& k, const Rational& x);

// Exact (min, max) of sigma_x over generic x, from the record or from torus structure.
std::optional<std::pair<std::int64_t, std::int64_t>> signature_extent(const KnotRecord& k);

}  // namespace untwist
