#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace untwist {

enum class Sign { minus, plus };

// l^sign, written "2-" or "0+".
struct TwistIndex {
    std::int64_t l = 0;
    Sign sign = Sign::minus;

    static TwistIndex parse(std::string_view text);
    std::string str() const;
    TwistIndex flipped() const { return {l, sign == Sign::minus ? Sign::plus : Sign::minus}; }

    friend auto operator<=>(const TwistIndex&, const TwistIndex&) = default;
};

using TwistSet = std::set<TwistIndex>;

std::string to_string(const TwistSet& s);
TwistSet flipped(const TwistSet& s);

enum class Status { known, possible, obstructed };
std::string to_string(Status s);

struct Reason {
    std::string check;
    std::string detail;
    friend bool operator==(const Reason&, const Reason&) = default;
};

struct TwistVerdict {
    TwistIndex index;
    Status status = Status::possible;
    std::vector<Reason> reasons;       // failing checks
    std::vector<Reason> inconclusive;  // checks that lacked data
};

}  // namespace untwist
