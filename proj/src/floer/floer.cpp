#include "untwist/floer/floer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "untwist/floer/difference.hpp"
#include "untwist/numeric/residue.hpp"

namespace untwist {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

std::string v_name(std::int64_t i, const char* knot) {
    return "V_" + std::to_string(i) + "(" + knot + ")";
}

// Nodes of the combined system; y_j stands for -V_j(J') so every partner relation is a difference.
struct PartnerSystem {
    DifferenceSystem sys;
    int zero = -1;
    std::vector<int> k;
    std::vector<int> y;
};

PartnerSystem build_system(const PartialV& v, std::int64_t k_max, std::int64_t j_max) {
    PartnerSystem ps;
    ps.zero = ps.sys.add_variable("0");
    for (std::int64_t i = 0; i <= k_max; ++i) ps.k.push_back(ps.sys.add_variable(v_name(i, "K")));
    for (std::int64_t j = 0; j <= j_max; ++j) ps.y.push_back(ps.sys.add_variable("-" + v_name(j, "J'")));
    for (std::int64_t i = 0; i <= k_max; ++i) {
        ps.sys.add_upper(ps.zero, ps.k[i], 0);
        if (i < k_max) ps.sys.add_range(ps.k[i], ps.k[i + 1], 0, 1);
    }
    for (const auto& [i, val] : v.known)
        if (i <= k_max) ps.sys.add_equal(ps.k[i], ps.zero, val);
    if (v.zero_from && *v.zero_from <= k_max) ps.sys.add_equal(ps.k[*v.zero_from], ps.zero, 0);
    for (const auto& d : v.diff_bounds) ps.sys.add_range(ps.k[d.i], ps.k[d.j], d.lo, d.hi);
    for (std::int64_t j = 0; j <= j_max; ++j) {
        ps.sys.add_upper(ps.y[j], ps.zero, 0);
        if (j < j_max) ps.sys.add_range(ps.y[j + 1], ps.y[j], 0, 1);
    }
    return ps;
}

std::string describe_cycle(const PartnerSystem& ps, const std::vector<int>& cycle) {
    std::string out;
    for (int node : cycle) {
        if (node == ps.zero) continue;
        out += (out.empty() ? "" : ", ") + ps.sys.name(node);
    }
    return out;
}

}  // namespace

VSequence alternating_v(std::int64_t sigma) {
    if (sigma % 2 != 0) throw std::domain_error("signature must be even, got " + std::to_string(sigma));
    std::vector<std::int64_t> vals;
    for (std::int64_t k = 0;; ++k) {
        std::int64_t v = floor_div(-sigma + 2 * (1 - k), 4);
        if (v <= 0) break;
        vals.push_back(v);
    }
    return VSequence(std::move(vals));
}

std::vector<std::pair<std::int64_t, std::int64_t>> required_v(std::int64_t l) {
    if (l < 1) throw std::domain_error("required_v needs l >= 1");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (l % 2 == 1) {
        std::int64_t alpha = (l - 1) / 2;
        for (std::int64_t k = 0; k <= alpha; ++k) out.emplace_back(k * l, (alpha - k) * (alpha - k + 1) / 2);
    } else {
        std::int64_t beta = (l - 2) / 2;
        for (std::int64_t k = 0; k <= beta; ++k)
            out.emplace_back((2 * k + 1) * l / 2, (beta - k) * (beta - k + 1) / 2);
    }
    return out;
}

std::set<std::int64_t> l_interval(std::int64_t nu_lo, std::int64_t nu_hi) {
    if (nu_lo < 0 || nu_lo > nu_hi) throw std::domain_error("l_interval needs 0 <= nu_lo <= nu_hi");
    std::set<std::int64_t> out;
    for (std::int64_t l = 1;; ++l) {
        __int128 a = 2 * l - 3;
        if (a >= 0 && a * a >= 9 + 8 * static_cast<__int128>(nu_hi)) break;
        __int128 b = 2 * l - 1;
        if (b * b >= 1 + 8 * static_cast<__int128>(nu_lo)) out.insert(l);
    }
    return out;
}

TwistSet alternating_allowed(std::int64_t sigma) {
    if (sigma % 2 != 0) throw std::domain_error("signature must be even, got " + std::to_string(sigma));
    const Sign m = Sign::minus, p = Sign::plus;
    if (sigma == 0) return {{2, m}, {1, m}, {0, m}, {0, p}, {1, p}, {2, p}};
    // Rows are stated for sigma > 0; negative sigma is the mirror image.
    Sign down = sigma > 0 ? m : p;
    Sign up = sigma > 0 ? p : m;
    std::int64_t a = sigma > 0 ? sigma : -sigma;
    if (a == 2) return {{1, down}, {0, down}, {2, up}, {3, up}};
    if (a == 4) return {{1, down}, {3, up}};
    if (a == 6 || a == 8) return {{1, down}, {4, up}};
    return {{1, down}};
}

PartialV PartialV::from(const VSequence& v) {
    PartialV p;
    for (std::int64_t i = 0; i < v.nu_plus(); ++i) p.known[i] = v[i];
    p.zero_from = v.nu_plus();
    return p;
}

std::vector<PartnerRow> partner_table(std::int64_t l) {
    if (l < 1) throw std::domain_error("partner table needs l >= 1");
    const std::int64_t n = l * l + 1;
    const Rational beta = l % 2 == 0 ? Rational(0) : Rational(n / 2);
    std::vector<PartnerRow> rows;
    for (std::int64_t i = 0; i <= n / 2; ++i) {
        Rational j = bracket(Rational(l * i) + beta, n);
        Rational s = Rational(-1, 4) - Rational(i, 2) - j / Rational(2) + Rational(i * i, 2 * n) +
                     j * j / Rational(2 * n) + Rational(n, 4);
        rows.push_back({i, j.to_int64(), s});
    }
    return rows;
}

ObstructionResult partner_v_check(const PartialV& v, std::int64_t l) {
    if (l < 0) throw std::domain_error("linking number must be nonnegative");
    std::int64_t k_max = 0;
    for (const auto& [i, val] : v.known) k_max = std::max(k_max, i);
    for (const auto& d : v.diff_bounds) k_max = std::max({k_max, d.i, d.j});
    if (v.zero_from) k_max = std::max(k_max, *v.zero_from);

    if (l == 0) {
        PartnerSystem ps = build_system(v, k_max, -1);
        ps.sys.add_equal(ps.k[0], ps.zero, 0);
        if (auto cyc = ps.sys.negative_cycle()) {
            if (auto it = v.known.find(0); it != v.known.end() && it->second != 0)
                return ObstructionResult::fail("l = 0 forces V_0(K) = 0, but V_0(K) = " +
                                               std::to_string(it->second));
            return ObstructionResult::fail("l = 0 forces V_0(K) = 0, contradicting the known values (" +
                                           describe_cycle(ps, *cyc) + ")");
        }
        if (v.known.count(0) || (v.zero_from && *v.zero_from == 0))
            return ObstructionResult::pass("V_0(K) = 0");
        return ObstructionResult::pass("V_0(K) = 0 is consistent with the partial data");
    }

    const auto rows = partner_table(l);
    for (const auto& r : rows)
        if (!r.s.is_integer())
            return ObstructionResult::fail("s(" + std::to_string(r.i) + ") = " + r.s.str() + " is not an integer");

    std::vector<std::string> violations;
    auto known_at = [&](std::int64_t i) -> std::optional<std::int64_t> {
        if (auto it = v.known.find(i); it != v.known.end()) return it->second;
        if (v.zero_from && i >= *v.zero_from) return 0;
        return std::nullopt;
    };
    for (const auto& r : rows) {
        auto vi = known_at(r.i);
        if (vi && r.s.to_int64() - *vi < 0)
            violations.push_back(v_name(r.j, "J'") + " = s(" + std::to_string(r.i) + ") - " + v_name(r.i, "K") +
                                 " = " + std::to_string(r.s.to_int64() - *vi) + " < 0");
    }
    // Adjacent partner indices give the pairwise inequalities
    // s(a) - s(b) - (j(b) - j(a)) <= V_a(K) - V_b(K) <= s(a) - s(b).
    std::vector<PartnerRow> by_j = rows;
    std::stable_sort(by_j.begin(), by_j.end(), [](const PartnerRow& x, const PartnerRow& y) { return x.j < y.j; });
    for (std::size_t x = 0; x + 1 < by_j.size(); ++x) {
        for (std::size_t y = x + 1; y < by_j.size() && by_j[y].j <= by_j[x].j + 1; ++y) {
            const auto& a = by_j[x];
            const auto& b = by_j[y];
            auto va = known_at(a.i), vb = known_at(b.i);
            if (!va || !vb) continue;
            std::int64_t hi = a.s.to_int64() - b.s.to_int64();
            std::int64_t lo = hi - (b.j - a.j);
            std::int64_t d = *va - *vb;
            if (d < lo || d > hi) {
                std::ostringstream os;
                os << "V_" << a.i << " - V_" << b.i << " = " << d << (d > hi ? " > " : " < ") << (d > hi ? hi : lo)
                   << " (partner indices j = " << a.j << ", " << b.j << " force " << lo << " <= V_" << a.i
                   << " - V_" << b.i << " <= " << hi << ")";
                violations.push_back(os.str());
            }
        }
    }
    if (!violations.empty()) {
        std::string detail = violations.front();
        for (std::size_t i = 1; i < std::min<std::size_t>(violations.size(), 3); ++i) detail += "; " + violations[i];
        if (violations.size() > 3) detail += "; +" + std::to_string(violations.size() - 3) + " more";
        return ObstructionResult::fail(detail);
    }

    std::int64_t j_max = 0;
    for (const auto& r : rows) {
        k_max = std::max(k_max, r.i);
        j_max = std::max(j_max, r.j);
    }
    PartnerSystem ps = build_system(v, k_max, j_max);
    for (const auto& r : rows) ps.sys.add_equal(ps.y[r.j], ps.k[r.i], -r.s.to_int64());
    if (auto cyc = ps.sys.negative_cycle())
        return ObstructionResult::fail("no partner V-sequence exists (infeasible through " + describe_cycle(ps, *cyc) +
                                       ")");
    return ObstructionResult::pass("partner V-sequence feasible for n = " + std::to_string(l * l + 1));
}

}  // namespace untwist
