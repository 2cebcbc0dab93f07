#include "untwist/numeric/form2.hpp"

#include <algorithm>
#include <stdexcept>

namespace untwist {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive: return "positive";
        case Definiteness::negative: return "negative";
        default: return "indefinite";
    }
}

Definiteness Form2::definiteness() const {
    if (det() > 0) return a > 0 ? Definiteness::positive : Definiteness::negative;
    return Definiteness::indefinite;
}

std::string Form2::str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<Form2> enumerate_forms(std::int64_t D, Parity parity_a, Definiteness definiteness) {
    if (D < 1) throw std::domain_error("form determinant must be positive");
    std::vector<Form2> out;
    for (std::int64_t d1 = 1; d1 * d1 <= D; ++d1) {
        if (D % d1 != 0) continue;
        std::int64_t d2 = D / d1;
        if ((d1 + d2) % 2 != 0) continue;
        std::int64_t big = (d1 + d2) / 2, small = (d2 - d1) / 2;
        Form2 f = definiteness == Definiteness::indefinite ? Form2{small, big} : Form2{big, small};
        if (definiteness == Definiteness::negative) f.a = -f.a;
        bool even = f.a % 2 == 0;
        if (even != (parity_a == Parity::even)) continue;
        out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace untwist
