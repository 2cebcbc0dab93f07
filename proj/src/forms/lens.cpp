#include "untwist/forms/lens.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace untwist {

DSpectrum DSpectrum::negated() const {
    DSpectrum out = *this;
    for (auto& v : out.values) v.d = -v.d;
    return out;
}

DSpectrum DSpectrum::sum(const DSpectrum& other) const {
    DSpectrum out;
    for (const auto& a : values)
        for (const auto& b : other.values)
            out.values.push_back({a.d + b.d, (a.order && b.order) ? std::lcm(a.order, b.order) : 0});
    return out;
}

std::vector<Rational> DSpectrum::d_values() const {
    std::vector<Rational> out;
    for (const auto& v : values) out.push_back(v.d);
    return out;
}

Rational lens_R(std::int64_t p, std::int64_t q, std::int64_t i) {
    if (p < 1) throw std::domain_error("lens space needs p >= 1");
    if (p == 1) return Rational(0);
    q = ((q % p) + p) % p;
    if (std::gcd(p, q) != 1)
        throw std::domain_error("L(" + std::to_string(p) + "," + std::to_string(q) + ") needs gcd(p, q) = 1");
    if (i < 0 || i >= p) throw std::domain_error("lens spin^c label out of range");
    Rational head(static_cast<std::int64_t>((2 * i + 1 - p - q) * (2 * i + 1 - p - q) - p * q), 4 * p * q);
    return head - lens_R(q, p % q, i % q);
}

Rational lens_d(std::int64_t p, std::int64_t q, std::int64_t i) { return lens_R(p, q, i); }

std::int64_t lens_spin_index(std::int64_t p, std::int64_t q) {
    if (p % 2 == 0) throw std::domain_error("spin structure is not unique for even p");
    q = ((q % p) + p) % p;
    std::int64_t inv2 = (p + 1) / 2;  // 2 * inv2 = 1 mod p
    std::int64_t qm1 = ((q - 1) % p + p) % p;
    return static_cast<std::int64_t>((static_cast<__int128>(qm1) * inv2) % p);
}

DSpectrum lens_spectrum(std::int64_t p, std::int64_t q) {
    DSpectrum out;
    const bool odd = p % 2 == 1;
    const std::int64_t i0 = odd ? lens_spin_index(p, q) : 0;
    for (std::int64_t i = 0; i < p; ++i) {
        std::int64_t order = odd ? p / std::gcd(((i - i0) % p + p) % p, p) : 0;
        out.values.push_back({lens_d(p, q, i), order});
    }
    return out;
}

Rational surgery_d(const VSequence& v, std::int64_t n, std::int64_t i) {
    if (n < 1) throw std::domain_error("surgery coefficient must be positive");
    if (i < 0 || 2 * i > n) throw std::out_of_range("spin^c label must satisfy 0 <= i <= n/2");
    return Rational((2 * i - n) * (2 * i - n) - n, 4 * n) - Rational(2 * v[i]);
}

}  // namespace untwist
