#include "untwist/classical/classical.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "untwist/signature/signature.hpp"

namespace untwist {

ObstructionResult arf_check(const KnotRecord& k, const TwistIndex& idx) {
    if (idx.l % 2 == 0) return ObstructionResult::not_applicable("even l");
    std::int64_t r = idx.l % 8;
    bool plus_minus_one = r == 1 || r == 7;
    bool ok = k.arf == 0 ? plus_minus_one : !plus_minus_one;
    std::string d = "Arf = " + std::to_string(k.arf) + ", l = " + std::to_string(r) + " mod 8";
    if (ok) return ObstructionResult::pass(d);
    return ObstructionResult::fail(d + (k.arf == 0 ? " (needs l = +-1 mod 8)" : " (needs l = +-3 mod 8)"));
}

std::pair<std::int64_t, std::int64_t> allowed_signatures(const TwistIndex& idx, std::int64_t r) {
    std::int64_t base = 2 * r * (idx.l - r);
    if (idx.sign == Sign::minus) return {-base, -base + 2};
    return {base - 2, base};
}

ObstructionResult signature_twist_check(const KnotRecord& k, const TwistIndex& idx) {
    if (idx.l == 1) return ObstructionResult::not_applicable("l = 1");
    if (idx.l == 0) {
        // A 0^+ twist needs every sigma value in {-2, 0}; 0^- needs {0, 2}.
        const std::int64_t lo = idx.sign == Sign::plus ? -2 : 0;
        const std::int64_t hi = lo + 2;
        std::vector<std::pair<std::string, std::int64_t>> values{{"sigma(K)", k.signature}};
        for (const auto& [x, s] : k.signature_samples) values.emplace_back("sigma_" + x.str(), s);
        if (auto ext = signature_extent(k)) {
            values.emplace_back("min sigma_x", ext->first);
            values.emplace_back("max sigma_x", ext->second);
        }
        for (const auto& [what, s] : values)
            if (s < lo || s > hi)
                return ObstructionResult::fail(what + " = " + std::to_string(s) + " not in {" + std::to_string(lo) +
                                               ", " + std::to_string(hi) + "}");
        return ObstructionResult::pass("all known signature values in {" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "}");
    }
    std::vector<std::int64_t> unknown;
    for (std::int64_t r = 1; r < idx.l; ++r) {
        Rational x(r, idx.l);
        auto s = signature_at(k, x);
        if (!s) {
            unknown.push_back(r);
            continue;
        }
        auto [a, b] = allowed_signatures(idx, r);
        if (*s != a && *s != b) {
            std::ostringstream os;
            os << "sigma_" << x << "(K) = " << *s << " not in {" << a << ", " << b << "}";
            return ObstructionResult::fail(os.str());
        }
    }
    if (unknown.size() == static_cast<std::size_t>(idx.l - 1)) {
        std::ostringstream os;
        os << "insufficient data: no sigma_{r/" << idx.l << "} sample known";
        return ObstructionResult::insufficient(os.str());
    }
    std::ostringstream os;
    os << "sigma_{r/" << idx.l << "} consistent";
    if (!unknown.empty()) {
        os << " (inconclusive at r =";
        for (auto r : unknown) os << " " << r;
        os << ")";
    }
    return ObstructionResult::pass(os.str());
}

std::vector<std::pair<TwistIndex, TwistIndex>> gcd_conflicts(const TwistSet& indices) {
    std::vector<std::pair<TwistIndex, TwistIndex>> out;
    for (auto a = indices.begin(); a != indices.end(); ++a) {
        for (auto b = std::next(a); b != indices.end(); ++b) {
            if (a->l < 2 || b->l < 2) continue;
            if (std::gcd(a->l, b->l) == 1) continue;
            if (a->l == b->l && (a->sign == b->sign || a->l == 2)) continue;
            out.emplace_back(*a, *b);
        }
    }
    return out;
}

bool gcd_pair_check(const TwistSet& indices) { return gcd_conflicts(indices).empty(); }

std::int64_t genus_pair_bound(std::int64_t k) {
    if (k < 1) throw std::domain_error("genus_pair_bound needs k >= 1");
    std::int64_t n = 2 * k * k * k + 3 * k * k - 11 * k + 6;
    if (n % 6 != 0) throw std::logic_error("genus bound not integral");
    return n / 6;
}

ObstructionResult branched_rank_check(const KnotRecord& k, const TwistIndex& idx, std::int64_t q) {
    if (q < 2) throw std::domain_error("branched cover degree must be >= 2");
    if (idx.l == 0 && k.e1_trivial && !*k.e1_trivial)
        return ObstructionResult::fail("E_1(K) is nontrivial: the infinite cyclic cover is not that of the unknot");
    if (idx.l % q != 0) return ObstructionResult::not_applicable(std::to_string(q) + " does not divide l");
    auto it = k.branched_ranks.find(q);
    if (it == k.branched_ranks.end())
        return ObstructionResult::not_applicable("rank of H_1(M_" + std::to_string(q) + ") not given");
    std::string d = "rank H_1(M_" + std::to_string(q) + "(K)) = " + std::to_string(it->second);
    if (it->second > q) return ObstructionResult::fail(d + " > " + std::to_string(q));
    return ObstructionResult::pass(d);
}

}  // namespace untwist
