// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "untwist/engine/engine.hpp"
#include "untwist/engine/table.hpp"
#include "untwist/floer/floer.hpp"
#include "untwist/floer/upsilon.hpp"
#include "untwist/floer/vsequence.hpp"
#include "untwist/forms/forms.hpp"
#include "untwist/forms/lens.hpp"
#include "untwist/forms/mq.hpp"
#include "untwist/knot/dataset.hpp"
#include "untwist/knot/knot_record.hpp"
#include "untwist/numeric/residue.hpp"
#include "untwist/signature/signature.hpp"

using namespace untwist;

namespace {

Rational Q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::vector<KnotRecord> g_data;
std::vector<TableRow> g_table;

Outcome c1_table() {
    Outcome o;
    auto diff = reproduce_table(g_data, g_table);
    std::size_t bad = diff.mismatches();
    if (diff.rows.size() != 35) o.fail(std::to_string(diff.rows.size()) + " rows, expected 35");
    if (bad) {
        std::ostringstream os;
        os << bad << " of " << diff.rows.size() << " rows differ:";
        for (const auto& r : diff.rows)
            if (!r.match())
                os << " " << r.knot << " (known " << to_string(r.actual.known) << " vs "
                   << to_string(r.expected.known) << ", unknown " << to_string(r.actual.unknown) << " vs "
                   << to_string(r.expected.unknown) << ")";
        o.fail(os.str());
    }
    if (o.ok) o.detail = "35/35 rows";
    return o;
}

Outcome c2_lens() {
    Outcome o;
    std::vector<Rational> expect = {Q(29, 46), Q(1, 46),  Q(-11, 46), Q(-7, 46), Q(13, 46), Q(49, 46),
                                    Q(9, 46),  Q(-15, 46), Q(-1, 2),  Q(-15, 46), Q(9, 46),  Q(49, 46),
                                    Q(13, 46), Q(-7, 46), Q(-11, 46), Q(1, 46),  Q(29, 46), Q(73, 46),
                                    Q(41, 46), Q(25, 46), Q(25, 46), Q(41, 46), Q(73, 46)};
    std::vector<Rational> got;
    for (std::int64_t i = 0; i < 23; ++i) got.push_back(-lens_R(23, 17, i));
    auto a = got, b = expect;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) o.fail("multiset differs");
    if (std::count(got.begin(), got.end(), Q(-1, 2)) != 1) o.fail("-1/2 does not occur exactly once");
    if (std::find(got.begin(), got.end(), Q(29, 46)) == got.end()) o.fail("29/46 missing");
    if (o.ok) o.detail = "23 values, -R(23,17,0) = " + got[0].str();
    return o;
}

Outcome c3_mq() {
    Outcome o;
    auto t = m_q({2, 1});
    std::vector<Rational> vals;
    for (const auto& c : t.cosets) vals.push_back(c.value);
    std::sort(vals.begin(), vals.end());
    if (vals != std::vector<Rational>{Q(-1, 2), Q(1, 6), Q(1, 6)}) o.fail("m_Q((2,1)) wrong");
    if (m_q({12, 11}).at({0, 4}).value != Q(-19, 46)) o.fail("m_Q((12,11)) at (0,4) != -19/46");
    auto r = analyze(find_knot(g_data, "9_5"));
    bool cited = false;
    for (const auto& v : r.verdicts)
        if (v.index == TwistIndex::parse("2-") && v.status == Status::obstructed)
            for (const auto& reason : v.reasons)
                if (reason.check == "d_invariant" && reason.detail.find("(0,4)") != std::string::npos &&
                    reason.detail.find("-19/46") != std::string::npos)
                    cited = true;
    if (!cited) o.fail("9_5 report does not obstruct 2- at coset (0,4)");
    if (o.ok) o.detail = "(2,1) -> {-1/2, 1/6, 1/6}; (12,11) at (0,4) -> -19/46; 9_5 2- obstructed";
    return o;
}

Outcome c4_torsion() {
    Outcome o;
    for (std::int64_t k = 1; k <= 30; ++k) {
        std::vector<std::int64_t> closed;
        for (std::int64_t i = 0; i < k; ++i) closed.push_back(k % 2 == 0 ? k / 2 - i / 2 : (k + 1) / 2 - (i + 1) / 2);
        while (!closed.empty() && closed.back() == 0) closed.pop_back();
        if (torsion_v(2, 2 * k + 1).values() != closed) o.fail("T(2," + std::to_string(2 * k + 1) + ") differs");
    }
    auto t78 = torsion_v(7, 8);
    if (t78[0] != 6 || t78[7] != 3 || t78[14] != 1 || t78[21] != 0) o.fail("T(7,8) differs");
    if (torsion_v(3, 17).values() != std::vector<std::int64_t>{6, 5, 5, 5, 4, 4, 4, 3, 3, 3, 2, 2, 2, 1, 1, 1})
        o.fail("T(3,17) differs");
    if (o.ok) o.detail = "T(2,2k+1) k <= 30, T(7,8), T(3,17)";
    return o;
}

Outcome c5_signature() {
    Outcome o;
    if (torus_signature(5, 7, Q(3, 5)) != -16) o.fail("torus_signature(5,7,3/5) != -16");
    std::mt19937_64 gen(7);
    const std::int64_t den = 10007;
    auto sample = [&](const Rational& lo, const Rational& hi) {
        std::int64_t a = (lo * Q(den)).floor().get_si() + 1, b = (hi * Q(den)).ceil().get_si() - 1;
        return Rational(std::uniform_int_distribution<std::int64_t>(a, b)(gen), den);
    };
    int pairs = 0;
    for (std::int64_t p = 2; p <= 100; ++p)
        for (std::int64_t q = p + 1; p * q <= 100; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++pairs;
            Rational first(1, p * q);
            for (int s = 0; s < 10; ++s) {
                if (torus_signature_bar(p, q, sample(Q(0), first)) != 0) o.fail("nonzero below 1/pq");
                Rational x = sample(first, Q(1, 2));
                std::int64_t bar = torus_signature_bar(p, q, x);
                std::ostringstream at;
                at << "T(" << p << "," << q << ") at " << x.str();
                if (bar <= 0) o.fail("not positive: " + at.str());
                if (Q(bar) <= torus_signature_bounds(p, q, x).lower) o.fail("lower bound not strict: " + at.str());
            }
        }
    if (o.ok) o.detail = std::to_string(pairs) + " torus knots, 20 samples each";
    return o;
}

Outcome c6_partner() {
    Outcome o;
    const std::vector<std::int64_t> j = {0, 4, 8, 5, 1, 3, 7, 6, 2};
    const std::vector<std::int64_t> s = {4, 2, 1, 1, 2, 1, 0, 0, 1};
    auto rows = partner_table(4);
    if (rows.size() != 9) o.fail("l = 4 table has " + std::to_string(rows.size()) + " rows");
    for (std::size_t i = 0; i < std::min<std::size_t>(rows.size(), 9); ++i)
        if (rows[i].j != j[i] || rows[i].s != Q(s[i])) o.fail("row " + std::to_string(i) + " differs");
    auto r = partner_v_check(PartialV::from(torsion_v(3, 17)), 7);
    if (!r.obstructed()) o.fail("T(3,17), l = 7 not obstructed");
    if (r.detail.find("V_9 - V_16 = 3 > 2") == std::string::npos) o.fail("reason: " + r.detail);
    if (o.ok) o.detail = "9 rows; " + r.detail;
    return o;
}

Outcome c7_upsilon() {
    Outcome o;
    const auto& k = find_knot(g_data, "T(2,25)#-T(3,8)");
    if (!k.upsilon) {
        o.fail("no Upsilon for T(2,25)#-T(3,8)");
        return o;
    }
    auto r4 = upsilon_check(*k.upsilon, 4);
    auto r5 = upsilon_check(*k.upsilon, 5);
    if (r4.detail != "Upsilon(1) = -7 < -4 = lower bound at t = 1" || !r4.obstructed()) o.fail("l = 4: " + r4.detail);
    if (r5.detail != "Upsilon(1) = -7 < -6 = lower bound at t = 1" || !r5.obstructed()) o.fail("l = 5: " + r5.detail);
    if (o.ok) o.detail = "l = 4 and l = 5 fail at t = 1";
    return o;
}

Outcome c8_properties() {
    Outcome o;
    // V-sequences produced by the library
    for (std::int64_t p = 2; p <= 20; ++p)
        for (std::int64_t q = p + 1; q <= 40; ++q)
            if (std::gcd(p, q) == 1 && !vsequence_violation(torsion_v(p, q).values()).empty())
                o.fail("torsion_v(" + std::to_string(p) + "," + std::to_string(q) + ") violates the axioms");
    for (std::int64_t sig = 0; sig >= -60; sig -= 2)
        if (!vsequence_violation(alternating_v(sig).values()).empty()) o.fail("alternating_v violates the axioms");
    for (const auto& k : g_data)
        for (const auto* v : {&k.v_seq, &k.v_seq_mirror})
            if (*v && !vsequence_violation((*v)->values()).empty()) o.fail(k.name + " V violates the axioms");

    // bracket and residue identities
    std::mt19937_64 gen(11);
    for (int t = 0; t < 10000; ++t) {
        std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 60)(gen);
        std::int64_t a = std::uniform_int_distribution<std::int64_t>(-500, 500)(gen);
        std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 2)(gen);  // integers and half-integers
        Rational x(a, d);
        Rational r = residue(x, n);
        if (r < Q(0) || r >= Q(n) || !((r - x) / Q(n)).is_integer()) o.fail("residue identity");
        Rational b = bracket(x, n);
        Rational h = Q(n - 1, 2);
        if (b != (residue(x + h, n) - h).abs() || b != bracket(x + Q(n), n) || b < Q(0) || Q(2) * b > Q(n))
            o.fail("bracket identity");
    }

    // m_Q unchanged by widening
    for (std::int64_t a = 1; a <= 60; ++a)
        for (std::int64_t b = 0; b < a; ++b) {
            if (a * a - b * b > 100) continue;
            auto base = m_q({a, b}), wide = m_q({a, b}, 2 * a);
            for (std::size_t i = 0; i < base.cosets.size(); ++i)
                if (base.cosets[i].value != wide.cosets[i].value) o.fail("m_Q widening changes a value");
        }

    // L(n,1) against the surgery formula with V = 0
    for (std::int64_t n = 1; n <= 50; ++n) {
        auto s = lens_spectrum(n, n == 1 ? 0 : 1);
        for (std::int64_t i = 0; i < n; ++i)
            if (s.values[static_cast<std::size_t>(i)].d != surgery_d(VSequence{}, n, std::min(i, n - i)))
                o.fail("L(" + std::to_string(n) + ",1) differs from the surgery formula");
    }

    // mirror duality and the soundness guard
    std::size_t verdicts = 0;
    for (const auto& k : g_data) {
        auto m = mirror(k);
        for (const auto& idx : candidates(k)) {
            auto a = evaluate_index(k, idx);
            auto b = evaluate_index(m, idx.flipped());
            ++verdicts;
            if (a.status != b.status) o.fail("mirror duality: " + k.name + " " + idx.str());
        }
        try {
            analyze(k);
            analyze(m);
        } catch (const CalibrationError& e) {
            o.fail(std::string("soundness: ") + e.what());
        }
    }
    if (o.ok) o.detail = std::to_string(verdicts) + " verdicts mirror dual; no known index obstructed";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <knots.json> <expected-table>\n";
        return 2;
    }
    try {
        g_data = load_dataset_file(argv[1]);
        g_table = load_expected_table(argv[2]);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table reproduction", c1_table},   {"lens spectrum L(23,17)", c2_lens},
        {"m_Q anchors", c3_mq},             {"torus V oracle", c4_torsion},
        {"signature count", c5_signature},  {"partner table and V check", c6_partner},
        {"Upsilon example", c7_upsilon},    {"property suites", c8_properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    return failed ? 1 : 0;
}
