#pragma once

#include <string>
#include <vector>

#include "untwist/numeric/rational.hpp"

namespace untwist {

struct Breakpoint {
    Rational t;
    Rational value;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Continuous piecewise-linear function on [0, 2] with exact rational breakpoints.
class PLFunction {
public:
    // Breakpoints must be strictly increasing in t, starting at 0 and ending at 2.
    explicit PLFunction(std::vector<Breakpoint> points);

    static PLFunction zero();
    static PLFunction line(const Rational& slope, const Rational& intercept);
    // Builds f on [0,1] from the given breakpoints (t from 0 to 1) and extends by f(2-t) = f(t).
    static PLFunction symmetric(const std::vector<Breakpoint>& half);

    Rational operator()(const Rational& t) const;
    const std::vector<Breakpoint>& breakpoints() const { return points_; }
    // Slope on the piece containing (t, t+) ; t < 2.
    Rational slope_after(const Rational& t) const;

    // Same function with collinear interior breakpoints removed.
    PLFunction simplified() const;

    std::string str() const;

    friend bool operator==(const PLFunction& a, const PLFunction& b);

private:
    std::vector<Breakpoint> points_;
};

enum class PLMode { add, max, negate_f };

PLFunction pl_combine(const PLFunction& f, const PLFunction& g, PLMode mode);

PLFunction operator+(const PLFunction& f, const PLFunction& g);
PLFunction operator-(const PLFunction& f);
PLFunction operator-(const PLFunction& f, const PLFunction& g);
PLFunction pl_max(const PLFunction& f, const PLFunction& g);
PLFunction pl_min(const PLFunction& f, const PLFunction& g);

}  // namespace untwist
