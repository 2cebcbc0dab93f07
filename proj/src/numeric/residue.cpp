#include "untwist/numeric/residue.hpp"

#include <stdexcept>
#include <string>

namespace untwist {

Rational residue(const Rational& a, std::int64_t n) {
    if (n < 2) throw std::domain_error("residue modulus must be >= 2, got " + std::to_string(n));
    Rational q(Rational(a / Rational(n)).floor(), BigInt(1));
    return a - q * Rational(n);
}

Rational bracket(const Rational& a, std::int64_t n) {
    Rational half(n - 1, 2);
    return (residue(a + half, n) - half).abs();
}

}  // namespace untwist
