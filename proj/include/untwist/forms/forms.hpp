#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "untwist/forms/lens.hpp"
#include "untwist/knot/knot_record.hpp"
#include "untwist/numeric/form2.hpp"
#include "untwist/obstruction.hpp"

namespace untwist {

struct LinkingSet {
    std::int64_t order = 1;
    std::set<std::int64_t> selflinks;
    friend bool operator==(const LinkingSet&, const LinkingSet&) = default;
};

// {a i^2 mod D : gcd(i, D) = 1}; requires gcd(a, D) = 1.
LinkingSet selflink_set(std::int64_t a, std::int64_t D);

// What an even-l twist forces on the rank-2 form bounded by the double branched cover.
struct TwistForm {
    std::int64_t k = 0;            // l = 2k
    std::int64_t sigma_n = 0;      // sigma(K) + 2s(1 - k^2)
    Parity parity = Parity::odd;   // parity of a: a + k = 1 mod 2
    bool use_mirror = false;       // the positive definite side is bounded by M_2(-K)
    std::vector<Form2> forms;      // candidates (definite ones made positive)
};

// nullopt for odd l.
std::optional<TwistForm> twist_form(const KnotRecord& k, const TwistIndex& idx);

// sigma(N) in {-2, 0, 2} and some form of determinant det(K) with the forced parity.
ObstructionResult intersection_form_check(const KnotRecord& k, const TwistIndex& idx);

ObstructionResult linking_form_check(const KnotRecord& k, const TwistIndex& idx);

// d-invariants of M_2(K) with spin^c orders, when they can be assembled from the record.
std::optional<DSpectrum> double_cover_spectrum(const KnotRecord& k);

ObstructionResult d_invariant_check(const KnotRecord& k, const TwistIndex& idx);

}  // namespace untwist
