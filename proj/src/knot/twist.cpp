#include "untwist/knot/twist.hpp"

#include <charconv>
#include <stdexcept>

namespace untwist {

TwistIndex TwistIndex::parse(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed twist index '" + std::string(text) + "'"); };
    if (text.size() < 2) throw bad();
    char s = text.back();
    if (s != '+' && s != '-') throw bad();
    std::string_view digits = text.substr(0, text.size() - 1);
    std::int64_t l = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), l);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || l < 0) throw bad();
    return {l, s == '+' ? Sign::plus : Sign::minus};
}

std::string TwistIndex::str() const { return std::to_string(l) + (sign == Sign::plus ? "+" : "-"); }

std::string to_string(const TwistSet& s) {
    std::string out = "{";
    for (const auto& t : s) out += (out.size() > 1 ? ", " : "") + t.str();
    return out + "}";
}

TwistSet flipped(const TwistSet& s) {
    TwistSet out;
    for (const auto& t : s) out.insert(t.flipped());
    return out;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::known: return "KNOWN";
        case Status::possible: return "POSSIBLE";
        default: return "OBSTRUCTED";
    }
}

}  // namespace untwist
