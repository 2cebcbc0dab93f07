#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace untwist {

enum class Parity { even, odd };
enum class Definiteness { positive, negative, indefinite };

std::string to_string(Parity p);
std::string to_string(Definiteness d);

// The symmetric form [[a, b], [b, a]].
struct Form2 {
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t det() const { return a * a - b * b; }
    Definiteness definiteness() const;
    std::string str() const;

    friend auto operator<=>(const Form2&, const Form2&) = default;
};

// One representative per class under (a, b) ~ (a, -b), with |a^2 - b^2| = D and the
// requested parity of a and definiteness. Representatives have b >= 0; indefinite ones a >= 0.
std::vector<Form2> enumerate_forms(std::int64_t D, Parity parity_a, Definiteness definiteness);

}  // namespace untwist
