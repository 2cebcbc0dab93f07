#include "untwist/knot/knot_record.hpp"

#include <numeric>
#include <stdexcept>

#include "untwist/floer/floer.hpp"
#include "untwist/floer/upsilon.hpp"
#include "untwist/signature/signature.hpp"

namespace untwist {

namespace {

using Poly = std::vector<std::int64_t>;

Poly multiply(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// t^n - 1
Poly cyclotomic_factor(std::int64_t n) {
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    return p;
}

// Exact division by a monic polynomial; throws if there is a remainder.
Poly divide_exact(Poly num, const Poly& den) {
    const std::size_t dn = den.size() - 1;
    Poly quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        std::int64_t c = num[k];
        quot[k - dn] = c;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

void require_coprime(std::int64_t p, std::int64_t q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::domain_error("torus knot T(" + std::to_string(p) + "," + std::to_string(q) +
                                ") needs coprime p, q >= 2");
}

std::string torus_name(std::int64_t p, std::int64_t q) {
    return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::string mirror_name(const std::string& n) {
    if (n.empty()) return n;
    if (n[0] == '-') return n.substr(1);
    if (n.find(' ') != std::string::npos) return "-(" + n + ")";
    return "-" + n;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

void append_summands(std::vector<KnotRecord>& out, const KnotRecord& k) {
    if (k.is_sum())
        out.insert(out.end(), k.summands.begin(), k.summands.end());
    else
        out.push_back(k);
}

}  // namespace

int arf_from_determinant(std::int64_t det) {
    if (det % 2 == 0) throw std::domain_error("knot determinant must be odd");
    std::int64_t r = mod_pos(det, 8);
    return (r == 1 || r == 7) ? 0 : 1;
}

void KnotRecord::validate() const {
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("record '" + name + "': " + what);
    };
    if (determinant < 1 || determinant % 2 == 0) fail("determinant must be a positive odd integer");
    if (signature % 2 != 0) fail("signature must be even");
    if (arf != 0 && arf != 1) fail("arf must be 0 or 1");
    if (arf != arf_from_determinant(determinant))
        fail("Arf/determinant consistency: det " + std::to_string(determinant) + " = " +
             std::to_string(mod_pos(determinant, 8)) + " mod 8 forces arf " +
             std::to_string(arf_from_determinant(determinant)));
    if (genus < 0) fail("genus must be nonnegative");
    if ((signature < 0 ? -signature : signature) > 2 * genus) fail("|signature| <= 2 genus violated");
    if (genus4 && (*genus4 < 0 || *genus4 > genus)) fail("genus4 must lie in [0, genus]");
    if (two_bridge) {
        auto [p, q] = *two_bridge;
        if (p != determinant) fail("two_bridge p must equal the determinant");
        if (std::gcd(p, q) != 1) fail("two_bridge (p, q) must be coprime");
    }
    auto check_v = [&](const std::optional<VSequence>& v, const char* field) {
        if (v && v->nu_plus() > genus) fail(std::string(field) + " must vanish from index genus on");
    };
    check_v(v_seq, "v_seq");
    check_v(v_seq_mirror, "v_seq_mirror");
    for (const auto& [x, s] : signature_samples) {
        if (x <= Rational(0) || x >= Rational(1)) fail("signature sample at " + x.str() + " outside (0, 1)");
        if (s % 2 != 0) fail("signature sample at " + x.str() + " is odd");
        if (signature_range && (s < signature_range->first || s > signature_range->second))
            fail("signature sample at " + x.str() + " outside signature_range");
    }
    if (signature_range) {
        if (signature_range->first > signature_range->second) fail("signature_range min exceeds max");
        if (signature < signature_range->first || signature > signature_range->second)
            fail("signature outside signature_range");
    }
    for (const auto& [q, r] : branched_ranks)
        if (q < 2 || r < 0) fail("branched_ranks needs q >= 2 and rank >= 0");
    for (const auto& s : summands) s.validate();
}

std::vector<std::int64_t> alexander_torus(std::int64_t p, std::int64_t q) {
    require_coprime(p, q);
    Poly num = multiply(cyclotomic_factor(p * q), cyclotomic_factor(1));
    Poly den = multiply(cyclotomic_factor(p), cyclotomic_factor(q));
    return divide_exact(num, den);
}

VSequence torsion_v(std::int64_t p, std::int64_t q) {
    const Poly c = alexander_torus(p, q);
    const std::int64_t g = (static_cast<std::int64_t>(c.size()) - 1) / 2;
    auto a = [&](std::int64_t j) -> std::int64_t {
        return (j < -g || j > g) ? 0 : c[static_cast<std::size_t>(j + g)];
    };
    std::vector<std::int64_t> t;
    for (std::int64_t j = 0; j <= g; ++j) {
        std::int64_t sum = 0;
        for (std::int64_t i = 1; j + i <= g; ++i) sum += i * a(j + i);
        t.push_back(sum);
    }
    return VSequence(std::move(t));
}

KnotRecord torus_knot(std::int64_t p, std::int64_t q) {
    require_coprime(p, q);
    KnotRecord k;
    k.name = torus_name(p, q);
    k.construction = k.name;
    k.torus = TorusParams{p, q, false};
    k.alternating = k.thin = (p == 2 || q == 2);
    k.genus = (p - 1) * (q - 1) / 2;
    const Poly c = alexander_torus(p, q);
    std::int64_t at_minus_one = 0;
    for (std::size_t i = 0; i < c.size(); ++i) at_minus_one += (i % 2 == 0 ? c[i] : -c[i]);
    k.determinant = at_minus_one < 0 ? -at_minus_one : at_minus_one;
    k.arf = arf_from_determinant(k.determinant);
    k.signature = *torus_signature_near(p, q, Rational(1, 2));
    k.tau = k.genus;
    k.genus4 = k.genus;
    k.v_seq = torsion_v(p, q);
    k.v_seq_mirror = VSequence();
    k.upsilon = upsilon_from_v(*k.v_seq);
    if (p == 2 || q == 2) {
        std::int64_t n = p == 2 ? q : p;
        k.two_bridge = std::make_pair(n, std::int64_t{1});
        k.branched_ranks[2] = 1;
    }
    return k;
}

KnotRecord mirror(const KnotRecord& k) {
    KnotRecord m = k;
    m.name = mirror_name(k.name);
    if (!k.construction.empty()) m.construction = mirror_name(k.construction);
    m.signature = -k.signature;
    if (k.tau) m.tau = -*k.tau;
    m.v_seq = k.v_seq_mirror;
    m.v_seq_mirror = k.v_seq;
    m.signature_samples.clear();
    for (const auto& [x, s] : k.signature_samples) m.signature_samples[x] = -s;
    if (k.signature_range) m.signature_range = std::make_pair(-k.signature_range->second, -k.signature_range->first);
    if (k.two_bridge) {
        auto [p, q] = *k.two_bridge;
        m.two_bridge = std::make_pair(p, mod_pos(p - q, p));
    }
    if (k.d_spin_double_cover) m.d_spin_double_cover = -*k.d_spin_double_cover;
    m.known_indices = flipped(k.known_indices);
    if (k.torus) m.torus->mirrored = !k.torus->mirrored;
    for (auto& s : m.summands) s = mirror(s);
    if (k.upsilon) m.upsilon = -*k.upsilon;
    for (auto& e : m.external_obstructions) e.index = e.index.flipped();
    return m;
}

KnotRecord connected_sum(const KnotRecord& a, const KnotRecord& b) {
    if (a.is_unknot() && !a.is_sum()) return b;
    if (b.is_unknot() && !b.is_sum()) return a;
    KnotRecord k;
    k.name = a.name + " # " + b.name;
    k.construction = (a.construction.empty() ? a.name : a.construction) + " # " +
                     (b.construction.empty() ? b.name : b.construction);
    append_summands(k.summands, a);
    append_summands(k.summands, b);
    k.alternating = a.alternating && b.alternating;
    k.thin = a.thin && b.thin;
    k.signature = a.signature + b.signature;
    k.determinant = a.determinant * b.determinant;
    k.arf = a.arf ^ b.arf;
    k.genus = a.genus + b.genus;
    if (a.tau && b.tau) k.tau = *a.tau + *b.tau;
    if (a.d_spin_double_cover && b.d_spin_double_cover)
        k.d_spin_double_cover = *a.d_spin_double_cover + *b.d_spin_double_cover;
    if (a.upsilon && b.upsilon) k.upsilon = *a.upsilon + *b.upsilon;
    fill_thin_invariants(k);
    return k;
}

void fill_thin_invariants(KnotRecord& k) {
    if (!(k.alternating || k.thin)) return;
    if (!k.v_seq) k.v_seq = alternating_v(k.signature);
    if (!k.v_seq_mirror) k.v_seq_mirror = alternating_v(-k.signature);
    if (!k.tau) k.tau = -k.signature / 2;
    if (!k.upsilon) k.upsilon = upsilon_from_v(*k.v_seq) - upsilon_from_v(*k.v_seq_mirror);
}

}  // namespace untwist
