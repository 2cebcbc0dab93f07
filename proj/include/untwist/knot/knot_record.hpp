#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "untwist/floer/vsequence.hpp"
#include "untwist/knot/twist.hpp"
#include "untwist/numeric/pl_function.hpp"
#include "untwist/numeric/rational.hpp"

namespace untwist {

struct TorusParams {
    std::int64_t p = 0;
    std::int64_t q = 0;
    bool mirrored = false;  // true for -T(p,q)
    friend bool operator==(const TorusParams&, const TorusParams&) = default;
};

struct ExternalObstruction {
    TwistIndex index;
    std::string reason;
};

// Every invariant of one knot that some obstruction reads. Signatures follow sigma(T(2,3)) = -2.
struct KnotRecord {
    std::string name;
    bool alternating = false;
    bool thin = false;
    std::int64_t signature = 0;
    std::int64_t determinant = 1;
    int arf = 0;
    std::int64_t genus = 0;
    std::optional<std::int64_t> genus4;
    std::optional<std::int64_t> tau;
    std::optional<VSequence> v_seq;
    std::optional<VSequence> v_seq_mirror;
    std::map<Rational, std::int64_t> signature_samples;
    std::optional<std::pair<std::int64_t, std::int64_t>> signature_range;
    std::optional<std::pair<std::int64_t, std::int64_t>> two_bridge;
    std::map<std::int64_t, std::int64_t> branched_ranks;
    std::optional<bool> e1_trivial;
    std::optional<Rational> d_spin_double_cover;
    TwistSet known_indices;

    // Structure kept for signature dispatch, Upsilon and double-cover spectra.
    std::string construction;
    std::optional<TorusParams> torus;
    std::vector<KnotRecord> summands;
    std::optional<PLFunction> upsilon;
    std::vector<ExternalObstruction> external_obstructions;

    bool is_sum() const { return !summands.empty(); }
    bool is_unknot() const { return genus == 0; }

    // Throws std::invalid_argument naming the failing invariant.
    void validate() const;
};

// Arf invariant forced by the determinant: 0 iff det = +-1 mod 8. Throws for even det.
int arf_from_determinant(std::int64_t det);

// Integer coefficients of the torus-knot Alexander polynomial, lowest degree first (degree 2g).
std::vector<std::int64_t> alexander_torus(std::int64_t p, std::int64_t q);
VSequence torsion_v(std::int64_t p, std::int64_t q);
KnotRecord torus_knot(std::int64_t p, std::int64_t q);

KnotRecord mirror(const KnotRecord& k);
KnotRecord connected_sum(const KnotRecord& a, const KnotRecord& b);

// Fills V-sequences and Upsilon for alternating or thin records from the signature.
void fill_thin_invariants(KnotRecord& k);

}  // namespace untwist
