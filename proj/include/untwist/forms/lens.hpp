#pragma once

#include <cstdint>
#include <vector>

#include "untwist/floer/vsequence.hpp"
#include "untwist/numeric/rational.hpp"

namespace untwist {

// One spin^c structure: its d-invariant and the order of its difference with the spin structure
// (0 when no unique spin structure exists).
struct SpinCValue {
    Rational d;
    std::int64_t order = 0;
    friend bool operator==(const SpinCValue&, const SpinCValue&) = default;
};

struct DSpectrum {
    std::vector<SpinCValue> values;

    std::size_t size() const { return values.size(); }
    DSpectrum negated() const;
    // Spectrum of the connected sum: all pairwise sums, orders combined by lcm.
    DSpectrum sum(const DSpectrum& other) const;
    std::vector<Rational> d_values() const;
};

// R(p, q, i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - R(q, p mod q, i mod q), R(1, 0, 0) = 0.
Rational lens_R(std::int64_t p, std::int64_t q, std::int64_t i);
// d(L(p, q), i); the paper's list for -L(p, q) is its negation.
Rational lens_d(std::int64_t p, std::int64_t q, std::int64_t i);
// Label i0 of the spin structure (2 i0 = q - 1 mod p), p odd.
std::int64_t lens_spin_index(std::int64_t p, std::int64_t q);
// Entries indexed by i = 0 .. p-1.
DSpectrum lens_spectrum(std::int64_t p, std::int64_t q);

// d(S^3_n(K), i) = ((2i - n)^2 - n) / (4n) - 2 V_i, 0 <= i <= n/2.
Rational surgery_d(const VSequence& v, std::int64_t n, std::int64_t i);

}  // namespace untwist
