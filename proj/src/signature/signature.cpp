#include "untwist/signature/signature.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace untwist {

namespace {

void check_torus_args(std::int64_t p, std::int64_t q, const Rational& x) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw std::domain_error("T(" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime p, q >= 1");
    if (x <= Rational(0) || x >= Rational(1)) throw std::domain_error("signature argument must lie in (0, 1)");
}

enum class Side { below, on, above };

struct Count {
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;
    bool on_segment = false;
};

// Lattice points (i, j), 1 <= i < q, 1 <= j < p, compared through i p + j q against pq x and pq (1 + x).
Count lattice_count(std::int64_t p, std::int64_t q, const Rational& x) {
    Count c;
    BigInt num = x.num(), den = x.den();
    BigInt lo = BigInt(static_cast<long>(p * q)) * num;        // pq x * den
    BigInt hi = BigInt(static_cast<long>(p * q)) * (num + den);  // pq (1 + x) * den
    bool small = den.fits_slong_p() && lo.fits_slong_p() && hi.fits_slong_p();
    __int128 d128 = small ? den.get_si() : 0, lo128 = small ? lo.get_si() : 0, hi128 = small ? hi.get_si() : 0;
    for (std::int64_t i = 1; i < q; ++i) {
        for (std::int64_t j = 1; j < p; ++j) {
            std::int64_t v = i * p + j * q;
            int clo, chi;
            if (small) {
                __int128 w = static_cast<__int128>(v) * d128;
                clo = w < lo128 ? -1 : (w > lo128 ? 1 : 0);
                chi = w < hi128 ? -1 : (w > hi128 ? 1 : 0);
            } else {
                BigInt w = BigInt(static_cast<long>(v)) * den;
                clo = cmp(w, lo);
                chi = cmp(w, hi);
            }
            if (clo == 0 || chi == 0) c.on_segment = true;
            if (clo < 0) ++c.c1;
            if (chi > 0) ++c.c2;
        }
    }
    return c;
}

}  // namespace

std::int64_t torus_signature_bar(std::int64_t p, std::int64_t q, const Rational& x) {
    check_torus_args(p, q, x);
    Count c = lattice_count(p, q, x);
    if (c.on_segment)
        throw JumpPointError("x = " + x.str() + " puts a lattice point on a counting segment of T(" +
                             std::to_string(p) + "," + std::to_string(q) + ")");
    return (p - 1) * (q - 1) - 2 * (c.c1 + c.c2);
}

std::int64_t torus_signature(std::int64_t p, std::int64_t q, const Rational& x) {
    return -torus_signature_bar(p, q, x);
}

SignatureBounds torus_signature_bounds(std::int64_t p, std::int64_t q, const Rational& x) {
    Rational pq(p * q);
    Rational one(1);
    return {Rational(2) * pq * x * (one - x),
            Rational((p - 1) * (q - 1)) - pq * x * x - pq * (one - x) * (one - x)};
}

std::optional<std::int64_t> torus_signature_near(std::int64_t p, std::int64_t q, const Rational& x) {
    check_torus_args(p, q, x);
    if (!lattice_count(p, q, x).on_segment) return torus_signature(p, q, x);
    Rational eps(1, 4 * p * p * q * q);
    std::int64_t left = torus_signature(p, q, x - eps);
    std::int64_t right = torus_signature(p, q, x + eps);
    if (left != right) return std::nullopt;
    return left;
}

std::optional<std::int64_t> signature_at(const KnotRecord& k, const Rational& x) {
    if (x <= Rational(0) || x >= Rational(1)) throw std::domain_error("signature argument must lie in (0, 1)");
    if (k.torus) {
        auto v = torus_signature_near(k.torus->p, k.torus->q, x);
        if (v && k.torus->mirrored) *v = -*v;
        return v;
    }
    if (k.is_sum()) {
        std::int64_t total = 0;
        for (const auto& s : k.summands) {
            auto v = signature_at(s, x);
            if (!v) return std::nullopt;
            total += *v;
        }
        return total;
    }
    if (auto it = k.signature_samples.find(x); it != k.signature_samples.end()) return it->second;
    if (x == Rational(1, 2)) return k.signature;
    if (k.is_unknot()) return 0;
    if (k.signature_range && k.signature_range->first == k.signature_range->second) return k.signature_range->first;
    return std::nullopt;
}

namespace {

// Candidate jump locations of a record built from torus knots; nullopt if some part is not a torus knot.
std::optional<std::vector<Rational>> torus_jump_grid(const KnotRecord& k) {
    std::vector<Rational> grid;
    if (k.torus) {
        std::int64_t n = k.torus->p * k.torus->q;
        for (std::int64_t i = 1; i < n; ++i) grid.emplace_back(i, n);
        return grid;
    }
    if (!k.is_sum()) {
        if (k.is_unknot()) return grid;
        return std::nullopt;
    }
    for (const auto& s : k.summands) {
        auto g = torus_jump_grid(s);
        if (!g) return std::nullopt;
        grid.insert(grid.end(), g->begin(), g->end());
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> signature_extent(const KnotRecord& k) {
    if (k.signature_range) return k.signature_range;
    auto grid = torus_jump_grid(k);
    if (!grid) return std::nullopt;
    std::vector<Rational> pts{Rational(0)};
    pts.insert(pts.end(), grid->begin(), grid->end());
    pts.emplace_back(1);
    std::int64_t lo = 0, hi = 0;
    bool first = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Rational mid = (pts[i] + pts[i + 1]) / Rational(2);
        auto v = signature_at(k, mid);
        if (!v) return std::nullopt;
        lo = first ? *v : std::min(lo, *v);
        hi = first ? *v : std::max(hi, *v);
        first = false;
    }
    return std::make_pair(lo, hi);
}

}  // namespace untwist
