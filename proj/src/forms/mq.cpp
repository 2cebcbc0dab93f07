#include "untwist/forms/mq.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace untwist {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::string vec_str(const Vec2& v) { return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")"; }

}  // namespace

Vec2 MqTable::key_of(const Vec2& v) const {
    const std::int64_t a = form.a, b = form.b, D = form.det();
    return {mod_pos(a * v[0] - b * v[1], D), mod_pos(-b * v[0] + a * v[1], D)};
}

const CosetMin& MqTable::at(const Vec2& v) const {
    Vec2 k = key_of(v);
    for (const auto& c : cosets)
        if (c.key == k) return c;
    throw std::out_of_range("coset not found");
}

MqTable m_q(const Form2& q, std::int64_t widen) {
    if (q.definiteness() != Definiteness::positive)
        throw std::domain_error("m_Q needs a positive definite form, got " + q.str());
    if (widen < 0) throw std::domain_error("box widening must be nonnegative");
    MqTable t{q, {}};
    const std::int64_t a = q.a, b = q.b, D = q.det();
    // xi^T Q^{-1} xi = xi^T adj(Q) xi / D; minimize the integer numerator per coset.
    std::map<Vec2, std::pair<std::int64_t, Vec2>> best;
    const std::int64_t lo = -a - widen, hi = a - 2 + widen;
    for (std::int64_t x = lo; x <= hi; ++x) {
        if (mod_pos(x - a, 2) != 0) continue;
        for (std::int64_t y = lo; y <= hi; ++y) {
            if (mod_pos(y - a, 2) != 0) continue;
            std::int64_t n = a * x * x - 2 * b * x * y + a * y * y;
            // odd det: xi itself meets each coset once; even det: shift to 2 Z^2 and halve
            Vec2 key = D % 2 ? t.key_of({x, y}) : t.key_of({(x - a % 2) / 2, (y - a % 2) / 2});
            auto it = best.find(key);
            if (it == best.end() || n < it->second.first) best[key] = {n, {x, y}};
        }
    }
    if (static_cast<std::int64_t>(best.size()) != D)
        throw std::logic_error("covector box misses a coset of " + q.str());
    std::map<Vec2, Vec2> labels;
    for (std::int64_t i = D - 1; i >= 0; --i) labels[t.key_of({0, i})] = {0, i};
    for (const auto& [key, entry] : best) {
        Vec2 label = labels.count(key) ? labels[key] : key;
        std::int64_t g = std::gcd(std::gcd(key[0], key[1]), D);
        Rational value = (Rational(entry.first, D) - Rational(2)) / Rational(4);
        t.cosets.push_back({key, label, entry.second, D / g, value});
    }
    std::sort(t.cosets.begin(), t.cosets.end(), [](const CosetMin& x, const CosetMin& y) { return x.label < y.label; });
    return t;
}

ObstructionResult d_match_check(const DSpectrum& spectrum, const MqTable& mq) {
    if (spectrum.size() != mq.cosets.size())
        throw std::domain_error("spectrum size " + std::to_string(spectrum.size()) + " differs from |Z^2/QZ^2| = " +
                                std::to_string(mq.cosets.size()));
    const std::string form = "Q = " + mq.form.str();
    std::vector<std::vector<std::size_t>> cand(mq.cosets.size());
    for (std::size_t c = 0; c < mq.cosets.size(); ++c) {
        const CosetMin& g = mq.cosets[c];
        std::vector<Rational> congruent;
        for (std::size_t s = 0; s < spectrum.size(); ++s) {
            const SpinCValue& v = spectrum.values[s];
            if (v.order && v.order != g.order) continue;
            if (!congruent_mod(v.d, g.value, 2)) continue;
            congruent.push_back(v.d);
            if (v.d <= g.value) cand[c].push_back(s);
        }
        if (cand[c].empty()) {
            std::ostringstream os;
            os << form << ": candidate set at g = " << vec_str(g.label) << " is empty: m_Q = " << g.value;
            if (congruent.empty()) {
                os << ", no d-invariant of order " << g.order << " is congruent mod 2";
            } else {
                std::sort(congruent.begin(), congruent.end());
                congruent.erase(std::unique(congruent.begin(), congruent.end()), congruent.end());
                os << ", congruent values {";
                for (std::size_t i = 0; i < congruent.size(); ++i) os << (i ? ", " : "") << congruent[i];
                os << "} all exceed it";
            }
            return ObstructionResult::fail(os.str());
        }
    }
    // Kuhn's augmenting paths for a perfect matching cosets -> spectrum entries.
    std::vector<int> owner(spectrum.size(), -1);
    std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t c, std::vector<char>& seen) {
        for (std::size_t s : cand[c]) {
            if (seen[s]) continue;
            seen[s] = 1;
            if (owner[s] < 0 || augment(static_cast<std::size_t>(owner[s]), seen)) {
                owner[s] = static_cast<int>(c);
                return true;
            }
        }
        return false;
    };
    for (std::size_t c = 0; c < cand.size(); ++c) {
        std::vector<char> seen(spectrum.size(), 0);
        if (!augment(c, seen))
            return ObstructionResult::fail(form + ": every coset has candidates but no perfect matching exists (fails at g = " +
                                           vec_str(mq.cosets[c].label) + ")");
    }
    return ObstructionResult::pass(form + ": d-invariants matched under m_Q bounds");
}

}  // namespace untwist
