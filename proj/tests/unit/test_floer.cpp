#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "untwist/floer/difference.hpp"
#include "untwist/floer/floer.hpp"
#include "untwist/floer/upsilon.hpp"
#include "untwist/floer/vsequence.hpp"
#include "untwist/knot/knot_record.hpp"

using namespace untwist;
using testing::idx;
using testing::Q;

namespace {

using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

// l >= 1 with l(l-1) >= 2 lo and l(l-3) < 2 hi, the squared forms of the two square-root bounds.
std::set<std::int64_t> l_interval_oracle(std::int64_t lo, std::int64_t hi) {
    std::set<std::int64_t> out;
    for (std::int64_t l = 1; l * (l - 3) < 2 * hi || l < 4; ++l)
        if (l * (l - 1) >= 2 * lo && l * (l - 3) < 2 * hi) out.insert(l);
    return out;
}

bool triangular(std::int64_t n) {
    for (std::int64_t m = 0; m * (m + 1) / 2 <= n; ++m)
        if (m * (m + 1) / 2 == n) return true;
    return false;
}

// Known points extend to a V-sequence iff consecutive ones drop by at most the index gap and never rise.
bool extendable(const Pairs& pts) {
    auto p = pts;
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        auto [a, va] = p[i];
        auto [b, vb] = p[i + 1];
        if (va < vb || va - vb > b - a || vb < 0) return false;
    }
    return true;
}

Rational upsilon_at_formula(const std::vector<std::pair<Rational, Rational>>& lines, const Rational& t) {
    // max over lines slope * t + intercept
    Rational best = lines.front().first * t + lines.front().second;
    for (const auto& [m, c] : lines) best = std::max(best, m * t + c);
    return best;
}

}  // namespace

TEST_SUITE("floer") {

TEST_CASE("VSequence axioms") {
    CHECK_NOTHROW(VSequence({3, 2, 2, 1, 0, 0}));
    CHECK(VSequence({3, 2, 2, 1, 0, 0}).values() == std::vector<std::int64_t>{3, 2, 2, 1});
    CHECK(VSequence({3, 2, 2, 1, 0, 0}).nu_plus() == 4);
    CHECK(VSequence({2, 1})[10] == 0);
    CHECK_THROWS(VSequence({2, 0}));
    CHECK_THROWS(VSequence({1, 2}));
    CHECK_THROWS(VSequence({-1}));
}

TEST_CASE("alternating_v") {
    CHECK(alternating_v(-2).values() == std::vector<std::int64_t>{1});
    CHECK(alternating_v(4).is_zero());
    CHECK(alternating_v(-12).values() == std::vector<std::int64_t>{3, 3, 2, 2, 1, 1});
    CHECK_THROWS_AS(alternating_v(-3), std::domain_error);
    for (std::int64_t k = 1; k <= 30; ++k) CHECK(alternating_v(-2 * k) == torsion_v(2, 2 * k + 1));
}

TEST_CASE("required_v") {
    CHECK(required_v(7) == Pairs{{0, 6}, {7, 3}, {14, 1}, {21, 0}});
    CHECK(required_v(4) == Pairs{{2, 1}, {6, 0}});
    CHECK(required_v(1) == Pairs{{0, 0}});
    for (std::int64_t l = 1; l <= 30; ++l) {
        auto req = required_v(l);
        CHECK(extendable(req));
        DifferenceSystem sys;
        int zero = sys.add_variable("0");
        std::int64_t top = req.back().first + 1;
        std::vector<int> v;
        for (std::int64_t i = 0; i <= top; ++i) v.push_back(sys.add_variable("V" + std::to_string(i)));
        for (std::int64_t i = 0; i < top; ++i) sys.add_range(v[i], v[i + 1], 0, 1);
        sys.add_equal(v[top], zero, 0);
        for (auto [i, val] : req) sys.add_equal(v[i], zero, val);
        CHECK(sys.feasible());
    }
    auto t78 = torsion_v(7, 8);
    for (std::int64_t l : {7, 8})
        for (auto [i, val] : required_v(l)) CHECK(t78[i] == val);
}

TEST_CASE("l_interval") {
    CHECK(l_interval(21, 21) == std::set<std::int64_t>{7, 8});
    CHECK(l_interval(0, 0) == std::set<std::int64_t>{1, 2});
    CHECK(l_interval(5, 7) == std::set<std::int64_t>{4, 5});
    for (std::int64_t lo = 0; lo <= 120; ++lo)
        for (std::int64_t hi = lo; hi <= 120; ++hi) REQUIRE(l_interval(lo, hi) == l_interval_oracle(lo, hi));
    for (std::int64_t nu = 0; nu <= 10000; ++nu) {
        auto s = l_interval(nu, nu);
        REQUIRE(s.size() <= 2);
        REQUIRE((s.size() == 2) == triangular(nu));
        for (std::int64_t l : s) {
            // the forced nu+ of an l^- twist sits in the same window
            REQUIRE(l_interval_oracle(nu, nu).count(l));
        }
    }
}

TEST_CASE("difference systems") {
    DifferenceSystem s;
    int a = s.add_variable("a"), b = s.add_variable("b"), c = s.add_variable("c");
    s.add_upper(a, b, 1);
    s.add_upper(b, c, 1);
    s.add_upper(c, a, -2);
    CHECK(s.feasible());
    auto sol = s.solution(a);
    REQUIRE(sol);
    CHECK((*sol)[a] == 0);
    CHECK((*sol)[a] - (*sol)[b] <= 1);
    CHECK((*sol)[c] - (*sol)[a] <= -2);
    s.add_upper(c, a, -3);
    CHECK_FALSE(s.feasible());
    auto cyc = s.negative_cycle();
    REQUIRE(cyc);
    CHECK(cyc->size() == 3);
    CHECK_FALSE(s.solution(a).has_value());
}

TEST_CASE("partner table for l = 4") {
    auto rows = partner_table(4);
    REQUIRE(rows.size() == 9);
    const std::vector<std::int64_t> j = {0, 4, 8, 5, 1, 3, 7, 6, 2};
    const std::vector<std::int64_t> s = {4, 2, 1, 1, 2, 1, 0, 0, 1};
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(rows[i].i == static_cast<std::int64_t>(i));
        CHECK(rows[i].j == j[i]);
        CHECK(rows[i].s == Q(s[i]));
    }
}

TEST_CASE("partner_v_check examples") {
    auto r = partner_v_check(PartialV::from(torsion_v(3, 17)), 7);
    CHECK(r.obstructed());
    CHECK(r.detail.find("V_9 - V_16 = 3 > 2") != std::string::npos);

    PartialV zero;
    zero.known[0] = 0;
    CHECK(partner_v_check(zero, 0).passed);
    PartialV one;
    one.known[0] = 1;
    CHECK(partner_v_check(one, 0).obstructed());

    // T(2,3) admits 2- and 3-
    CHECK(partner_v_check(PartialV::from(torsion_v(2, 3)), 2).passed);
    CHECK(partner_v_check(PartialV::from(torsion_v(2, 3)), 3).passed);
    // T(7,8) admits both 7- and 8-
    CHECK(partner_v_check(PartialV::from(torsion_v(7, 8)), 7).passed);
    CHECK(partner_v_check(PartialV::from(torsion_v(7, 8)), 8).passed);
}

TEST_CASE("alternating knots have no negative twist with l >= 5") {
    for (std::int64_t sigma = -40; sigma <= 0; sigma += 2) {
        auto v = alternating_v(sigma);
        for (std::int64_t l = 5; l <= 30; ++l) {
            bool forced_ok = true;
            for (auto [i, val] : required_v(l)) forced_ok = forced_ok && v[i] == val;
            INFO("sigma = " << sigma << " l = " << l);
            CHECK((!forced_ok || partner_v_check(PartialV::from(v), l).obstructed()));
        }
    }
}

TEST_CASE("alternating_allowed") {
    CHECK(alternating_allowed(0) == testing::set_of({"2-", "1-", "0-", "0+", "1+", "2+"}));
    CHECK(alternating_allowed(6) == testing::set_of({"1-", "4+"}));
    CHECK(alternating_allowed(-10) == testing::set_of({"1+"}));
    CHECK(alternating_allowed(10) == testing::set_of({"1-"}));
    CHECK(alternating_allowed(-2) == testing::set_of({"1+", "0+", "2-", "3-"}));
    CHECK(alternating_allowed(4) == testing::set_of({"1-", "3+"}));
    CHECK(alternating_allowed(-8) == testing::set_of({"1+", "4-"}));
}

TEST_CASE("upsilon_from_v") {
    auto t38 = upsilon_from_v(torsion_v(3, 8));
    for (int k = 0; k <= 30; ++k) {
        Rational t(k, 30);
        Rational expect = t <= Q(2, 3) ? Q(-7) * t : -t - Q(4);
        CHECK(t38(t) == expect);
        CHECK(t38(Q(2) - t) == expect);
    }
    auto t225 = upsilon_from_v(torsion_v(2, 25));
    CHECK(t225 == PLFunction::symmetric({{Q(0), Q(0)}, {Q(1), Q(-12)}}));
    CHECK(upsilon_from_v(VSequence{}) == PLFunction::zero());
}

TEST_CASE("upsilon bounds") {
    auto b4 = upsilon_lower_bound(4);
    auto b5 = upsilon_lower_bound(5);
    for (int k = 0; k <= 60; ++k) {
        Rational t(k, 60);
        CHECK(b4(t) == upsilon_at_formula({{Q(-2), Q(-2)}, {Q(-6), Q(0)}}, t));
        CHECK(b5(t) == upsilon_at_formula({{Q(0), Q(-6)}, {Q(-5), Q(-2)}, {Q(-10), Q(0)}}, t));
        CHECK(b4(Q(2) - t) == b4(t));
    }
    const auto& k = testing::knot("T(2,25)#-T(3,8)");
    REQUIRE(k.upsilon);
    auto r4 = upsilon_check(*k.upsilon, 4);
    CHECK(r4.obstructed());
    CHECK(r4.detail == "Upsilon(1) = -7 < -4 = lower bound at t = 1");
    auto r5 = upsilon_check(*k.upsilon, 5);
    CHECK(r5.obstructed());
    CHECK(r5.detail == "Upsilon(1) = -7 < -6 = lower bound at t = 1");
    CHECK(upsilon_check(upsilon_from_v(torsion_v(2, 3)), 2).passed);
}

TEST_CASE("upsilon of L-space knots obeys the two-sided bounds and the slope bound") {
    for (std::int64_t p = 2; p <= 7; ++p)
        for (std::int64_t q = p + 1; q <= 13; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto v = torsion_v(p, q);
            std::int64_t g = (p - 1) * (q - 1) / 2;
            auto u = upsilon_from_v(v);
            for (const auto& bp : u.breakpoints())
                if (bp.t < Q(2)) REQUIRE(u.slope_after(bp.t).abs() <= Q(g));
            for (int k = 0; k <= 24; ++k) {
                Rational t(k, 24);
                for (std::int64_t s = 0; s <= g; ++s) {
                    Rational vs(v[s]);
                    REQUIRE(u(t) >= -Q(s) * t - Q(2) * vs);
                    Rational up = std::max(Q(g) * t - Q(2) * vs + Q(2),
                                           -Q(g) * t + Q(2 * g - 2 * s) - Q(2) * vs + Q(2));
                    REQUIRE(u(t) <= up);
                }
            }
            // its own forced values pass the lower bound check
            for (std::int64_t l : l_interval(v.nu_plus(), v.nu_plus())) {
                bool forced_ok = true;
                for (auto [i, val] : required_v(l)) forced_ok = forced_ok && v[i] == val;
                if (forced_ok) CHECK(upsilon_check(u, l, g).passed);
            }
        }
}

}  // TEST_SUITE
