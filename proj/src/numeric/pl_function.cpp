#include "untwist/numeric/pl_function.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace untwist {

namespace {

const Rational kEnd(2);

std::vector<Rational> merged_ts(const PLFunction& f, const PLFunction& g) {
    std::vector<Rational> ts;
    for (const auto& p : f.breakpoints()) ts.push_back(p.t);
    for (const auto& p : g.breakpoints()) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

}  // namespace

PLFunction::PLFunction(std::vector<Breakpoint> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw std::invalid_argument("PLFunction needs at least two breakpoints");
    if (points_.front().t != Rational(0) || points_.back().t != kEnd)
        throw std::invalid_argument("PLFunction must span exactly [0, 2]");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i - 1].t < points_[i].t))
            throw std::invalid_argument("PLFunction breakpoints must be strictly increasing");
}

PLFunction PLFunction::zero() { return PLFunction({{0, 0}, {2, 0}}); }

PLFunction PLFunction::line(const Rational& slope, const Rational& intercept) {
    return PLFunction({{0, intercept}, {2, intercept + slope * kEnd}});
}

PLFunction PLFunction::symmetric(const std::vector<Breakpoint>& half) {
    if (half.empty() || half.front().t != Rational(0) || half.back().t != Rational(1))
        throw std::invalid_argument("half function must span exactly [0, 1]");
    std::vector<Breakpoint> pts = half;
    for (auto it = half.rbegin() + 1; it != half.rend(); ++it) pts.push_back({kEnd - it->t, it->value});
    return PLFunction(std::move(pts));
}

Rational PLFunction::operator()(const Rational& t) const {
    if (t < Rational(0) || t > kEnd) throw std::domain_error("PLFunction evaluated outside [0, 2]");
    auto it = std::lower_bound(points_.begin(), points_.end(), t,
                               [](const Breakpoint& p, const Rational& x) { return p.t < x; });
    if (it->t == t) return it->value;
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    return lo.value + (hi.value - lo.value) * (t - lo.t) / (hi.t - lo.t);
}

Rational PLFunction::slope_after(const Rational& t) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), t,
                               [](const Rational& x, const Breakpoint& p) { return x < p.t; });
    if (it == points_.end()) throw std::domain_error("no piece after t = 2");
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    return (hi.value - lo.value) / (hi.t - lo.t);
}

PLFunction PLFunction::simplified() const {
    std::vector<Breakpoint> out{points_.front()};
    for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
        const Breakpoint& a = out.back();
        const Breakpoint& b = points_[i];
        const Breakpoint& c = points_[i + 1];
        if ((b.value - a.value) * (c.t - b.t) != (c.value - b.value) * (b.t - a.t)) out.push_back(b);
    }
    out.push_back(points_.back());
    return PLFunction(std::move(out));
}

std::string PLFunction::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < points_.size(); ++i)
        os << (i ? " " : "") << "(" << points_[i].t << ", " << points_[i].value << ")";
    return os.str();
}

bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.simplified().points_ == b.simplified().points_;
}

PLFunction pl_combine(const PLFunction& f, const PLFunction& g, PLMode mode) {
    if (mode == PLMode::negate_f) {
        std::vector<Breakpoint> pts;
        for (const auto& p : f.breakpoints()) pts.push_back({p.t, -p.value});
        return PLFunction(std::move(pts));
    }
    std::vector<Rational> ts = merged_ts(f, g);
    std::vector<Breakpoint> pts;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rational fv = f(ts[i]), gv = g(ts[i]);
        if (mode == PLMode::add) {
            pts.push_back({ts[i], fv + gv});
            continue;
        }
        pts.push_back({ts[i], std::max(fv, gv)});
        if (i + 1 == ts.size()) continue;
        // Both are linear on [ts[i], ts[i+1]]; insert the crossing if the order flips strictly inside.
        Rational d0 = fv - gv;
        Rational d1 = f(ts[i + 1]) - g(ts[i + 1]);
        if (d0.sign() * d1.sign() < 0) {
            Rational tc = ts[i] + (ts[i + 1] - ts[i]) * d0 / (d0 - d1);
            pts.push_back({tc, f(tc)});
        }
    }
    return PLFunction(std::move(pts)).simplified();
}

PLFunction operator+(const PLFunction& f, const PLFunction& g) { return pl_combine(f, g, PLMode::add); }
PLFunction operator-(const PLFunction& f) { return pl_combine(f, f, PLMode::negate_f); }
PLFunction operator-(const PLFunction& f, const PLFunction& g) { return f + (-g); }
PLFunction pl_max(const PLFunction& f, const PLFunction& g) { return pl_combine(f, g, PLMode::max); }
PLFunction pl_min(const PLFunction& f, const PLFunction& g) { return -pl_max(-f, -g); }

}  // namespace untwist
