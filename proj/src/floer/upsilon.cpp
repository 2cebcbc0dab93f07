#include "untwist/floer/upsilon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "untwist/floer/floer.hpp"

namespace untwist {

namespace {

struct Line {
    Rational slope;
    Rational intercept;
};

PLFunction max_of_lines(const std::vector<Line>& lines) {
    PLFunction f = PLFunction::line(lines.front().slope, lines.front().intercept);
    for (std::size_t i = 1; i < lines.size(); ++i) f = pl_max(f, PLFunction::line(lines[i].slope, lines[i].intercept));
    return f;
}

// Keeps f on [0,1] and mirrors it onto [1,2].
PLFunction symmetrize(const PLFunction& f) {
    std::vector<Breakpoint> half;
    for (const auto& p : f.breakpoints())
        if (p.t < Rational(1)) half.push_back(p);
    half.push_back({Rational(1), f(Rational(1))});
    return PLFunction::symmetric(half).simplified();
}

std::vector<Rational> union_ts(const PLFunction& f, const PLFunction& g) {
    std::vector<Rational> ts;
    for (const auto& p : f.breakpoints()) ts.push_back(p.t);
    for (const auto& p : g.breakpoints()) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

// Point where hi - lo is most negative (smallest t on ties), if negative anywhere.
std::optional<Rational> worst_violation(const PLFunction& lo, const PLFunction& hi) {
    std::optional<Rational> where;
    Rational worst(0);
    for (const auto& t : union_ts(lo, hi)) {
        Rational gap = hi(t) - lo(t);
        if (gap < worst) {
            worst = gap;
            where = t;
        }
    }
    return where;
}

}  // namespace

PLFunction upsilon_from_v(const VSequence& v) {
    std::vector<Line> lines;
    for (std::int64_t s = 0; s <= v.nu_plus(); ++s) lines.push_back({Rational(-s), Rational(-2 * v[s])});
    return symmetrize(max_of_lines(lines));
}

PLFunction upsilon_lower_bound(std::int64_t l) {
    std::vector<Line> lines;
    for (const auto& [s, vs] : required_v(l)) lines.push_back({Rational(-s), Rational(-2 * vs)});
    return symmetrize(max_of_lines(lines));
}

PLFunction upsilon_upper_bound(std::int64_t l, std::int64_t genus) {
    if (genus <= 0) throw std::domain_error("upper bound needs positive genus");
    std::optional<PLFunction> bound;
    for (const auto& [s, vs] : required_v(l)) {
        PLFunction u = pl_max(PLFunction::line(Rational(genus), Rational(-2 * vs + 2)),
                              PLFunction::line(Rational(-genus), Rational(2 * genus - 2 * s - 2 * vs + 2)));
        bound = bound ? pl_min(*bound, u) : u;
    }
    return *bound;
}

ObstructionResult upsilon_check(const PLFunction& upsilon, std::int64_t l, std::optional<std::int64_t> genus) {
    PLFunction lower = upsilon_lower_bound(l);
    if (auto t = worst_violation(lower, upsilon)) {
        std::ostringstream os;
        os << "Upsilon(" << *t << ") = " << upsilon(*t) << " < " << lower(*t) << " = lower bound at t = " << *t;
        return ObstructionResult::fail(os.str());
    }
    if (genus && *genus > 0) {
        PLFunction upper = upsilon_upper_bound(l, *genus);
        if (auto t = worst_violation(upsilon, upper)) {
            std::ostringstream os;
            os << "Upsilon(" << *t << ") = " << upsilon(*t) << " > " << upper(*t) << " = upper bound (genus "
               << *genus << ") at t = " << *t;
            return ObstructionResult::fail(os.str());
        }
    }
    return ObstructionResult::pass("Upsilon within the bounds forced by l = " + std::to_string(l));
}

}  // namespace untwist
