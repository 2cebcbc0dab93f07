#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "untwist/knot/knot_record.hpp"
#include "untwist/knot/twist.hpp"

namespace untwist {

struct Config {
    std::int64_t max_l = 16;
    bool parallel = false;  // run candidates concurrently; output is identical either way
};

// A KNOWN index was obstructed: the dataset and the obstruction suite disagree.
class CalibrationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct NuBounds {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool exact = false;  // from a full V-sequence
    std::string source;
};

// Bounds on nu+(K) (Sign::minus) or nu+(-K) (Sign::plus).
NuBounds nu_bounds(const KnotRecord& k, Sign side, const Config& config = {});

TwistSet candidates(const KnotRecord& k, const Config& config = {});

// Every check on one index; status is KNOWN/POSSIBLE/OBSTRUCTED before the soundness guard.
TwistVerdict evaluate_index(const KnotRecord& k, const TwistIndex& idx);

struct AnalysisReport {
    std::string knot;
    std::vector<TwistVerdict> verdicts;  // ordered by (l, sign)
    std::string convention_note;
    TwistSet known;
    TwistSet possible;
    std::vector<std::string> notes;
};

AnalysisReport analyze(const KnotRecord& k, const Config& config = {});

extern const char* const kConventionNote;

}  // namespace untwist
