#include "untwist/forms/forms.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "untwist/forms/mq.hpp"

namespace untwist {

namespace {

std::string set_str(const std::set<std::int64_t>& s) {
    std::string out = "{";
    for (auto v : s) out += (out.size() > 1 ? ", " : "") + std::to_string(v);
    return out + "}";
}

}  // namespace

LinkingSet selflink_set(std::int64_t a, std::int64_t D) {
    if (D < 1) throw std::domain_error("linking form order must be positive");
    if (std::gcd(a, D) != 1) throw std::domain_error("self-linking generator must be a unit mod D");
    LinkingSet s{D, {}};
    if (D == 1) {
        s.selflinks.insert(0);
        return s;
    }
    for (std::int64_t i = 1; i < D; ++i)
        if (std::gcd(i, D) == 1) {
            __int128 v = static_cast<__int128>(a) * i % D * i % D;
            s.selflinks.insert(static_cast<std::int64_t>((v + D) % D));
        }
    return s;
}

std::optional<TwistForm> twist_form(const KnotRecord& k, const TwistIndex& idx) {
    if (idx.l % 2 != 0) return std::nullopt;
    TwistForm f;
    f.k = idx.l / 2;
    const std::int64_t s = idx.sign == Sign::plus ? 1 : -1;
    f.sigma_n = k.signature + 2 * s * (1 - f.k * f.k);
    f.parity = f.k % 2 == 0 ? Parity::odd : Parity::even;
    if (f.sigma_n == 0) {
        f.forms = enumerate_forms(k.determinant, f.parity, Definiteness::indefinite);
    } else if (f.sigma_n == 2 || f.sigma_n == -2) {
        f.use_mirror = f.sigma_n < 0;
        f.forms = enumerate_forms(k.determinant, f.parity, Definiteness::positive);
    }
    return f;
}

ObstructionResult intersection_form_check(const KnotRecord& k, const TwistIndex& idx) {
    auto f = twist_form(k, idx);
    if (!f) return ObstructionResult::not_applicable("odd l");
    if (f->sigma_n != 0 && f->sigma_n != 2 && f->sigma_n != -2)
        return ObstructionResult::fail("sigma(N) = " + std::to_string(f->sigma_n) + " is impossible for a rank-2 form");
    std::string kind = f->sigma_n == 0 ? "indefinite" : "definite";
    if (f->forms.empty())
        return ObstructionResult::fail("no " + kind + " form [[a,b],[b,a]] with |a^2 - b^2| = " +
                                       std::to_string(k.determinant) + " and a " + to_string(f->parity));
    return ObstructionResult::pass(std::to_string(f->forms.size()) + " " + kind + " candidate form(s)");
}

ObstructionResult linking_form_check(const KnotRecord& k, const TwistIndex& idx) {
    auto f = twist_form(k, idx);
    if (!f) return ObstructionResult::not_applicable("odd l");
    if (f->sigma_n != 2 && f->sigma_n != -2) return ObstructionResult::not_applicable("form not forced definite");
    if (!k.two_bridge) return ObstructionResult::not_applicable("no two-bridge data");
    auto [p, q] = *k.two_bridge;
    if (f->use_mirror) q = ((p - q) % p + p) % p;
    const LinkingSet actual = selflink_set(q, p);
    std::ostringstream tried;
    for (const Form2& form : f->forms) {
        if (std::gcd(form.a, form.b) != 1) continue;  // non-cyclic cokernel
        LinkingSet cand = selflink_set(form.a, k.determinant);
        tried << " " << form.str() << ":" << set_str(cand.selflinks);
        if (cand == actual)
            return ObstructionResult::pass("Q = " + form.str() + " realizes the self-linking set " +
                                           set_str(actual.selflinks));
    }
    return ObstructionResult::fail("self-linking set of L(" + std::to_string(p) + "," + std::to_string(q) + ") is " +
                                   set_str(actual.selflinks) + "; candidates" +
                                   (tried.str().empty() ? std::string(" none") : tried.str()));
}

std::optional<DSpectrum> double_cover_spectrum(const KnotRecord& k) {
    if (k.two_bridge) return lens_spectrum(k.two_bridge->first, k.two_bridge->second);
    if (k.is_sum()) {
        DSpectrum total{{{Rational(0), 1}}};
        for (const auto& s : k.summands) {
            auto part = double_cover_spectrum(s);
            if (!part) return std::nullopt;
            total = total.sum(*part);
        }
        return total;
    }
    if (k.determinant == 1 && k.d_spin_double_cover) return DSpectrum{{{*k.d_spin_double_cover, 1}}};
    if (k.is_unknot()) return DSpectrum{{{Rational(0), 1}}};
    return std::nullopt;
}

ObstructionResult d_invariant_check(const KnotRecord& k, const TwistIndex& idx) {
    auto f = twist_form(k, idx);
    if (!f) return ObstructionResult::not_applicable("odd l");
    if (f->sigma_n != 2 && f->sigma_n != -2) return ObstructionResult::not_applicable("form not forced definite");
    auto spectrum = double_cover_spectrum(k);
    if (!spectrum) return ObstructionResult::insufficient("insufficient data: d-invariants of M_2(K) unknown");
    if (f->forms.empty()) return ObstructionResult::not_applicable("no candidate form");
    // The positive definite N is bounded by M_2(K), or by M_2(-K) = -M_2(K).
    const DSpectrum y = f->use_mirror ? spectrum->negated() : *spectrum;
    std::vector<std::string> failures;
    for (const Form2& form : f->forms) {
        ObstructionResult r = d_match_check(y, m_q(form));
        if (!r.obstructed()) return ObstructionResult::pass(r.detail);
        failures.push_back(r.detail);
    }
    std::string detail = std::string(f->use_mirror ? "M_2(-K)" : "M_2(K)") + ": ";
    for (std::size_t i = 0; i < failures.size(); ++i) detail += (i ? "; " : "") + failures[i];
    return ObstructionResult::fail(detail);
}

}  // namespace untwist
