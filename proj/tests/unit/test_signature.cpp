#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include <Eigen/Dense>

#include "helpers.hpp"
#include "untwist/knot/knot_record.hpp"
#include "untwist/signature/signature.hpp"

using namespace untwist;
using testing::Q;

namespace {

// Independent oracle: signature of (1 - w) V + (1 - conj w) V^T for the Seifert matrix
// V = -(V_p (x) V_q) of T(p,q), V_n bidiagonal with 1 on the diagonal and -1 above it.
int seifert_signature(int p, int q, double x) {
    auto bidiag = [](int n) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n - 1, n - 1);
        for (int i = 0; i < n - 1; ++i) {
            m(i, i) = 1;
            if (i + 1 < n - 1) m(i, i + 1) = -1;
        }
        return m;
    };
    Eigen::MatrixXd vp = bidiag(p), vq = bidiag(q);
    const int n = (p - 1) * (q - 1);
    Eigen::MatrixXd v(n, n);
    for (int i = 0; i < p - 1; ++i)
        for (int j = 0; j < p - 1; ++j) v.block(i * (q - 1), j * (q - 1), q - 1, q - 1) = -vp(i, j) * vq;
    const std::complex<double> w = std::polar(1.0, 2 * M_PI * x);
    Eigen::MatrixXcd h = (1.0 - w) * v.cast<std::complex<double>>() +
                         (1.0 - std::conj(w)) * v.transpose().cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    int sig = 0;
    for (int i = 0; i < n; ++i) {
        double e = es.eigenvalues()(i);
        REQUIRE(std::abs(e) > 1e-9);
        sig += e > 0 ? 1 : -1;
    }
    return sig;
}

// Rationals with a large prime denominator never sit on a jump for pq < 10007.
Rational generic_point(const Rational& lo, const Rational& hi) {
    const std::int64_t den = 10007;
    Rational a = lo * Q(den), b = hi * Q(den);
    std::int64_t from = static_cast<std::int64_t>(a.floor().get_si()) + 1;
    std::int64_t to = static_cast<std::int64_t>(b.ceil().get_si()) - 1;
    return Rational(testing::uniform(from, to), den);
}

}  // namespace

TEST_SUITE("signature") {

TEST_CASE("torus_signature examples") {
    CHECK(torus_signature(5, 7, Q(3, 5)) == -16);
    CHECK(torus_signature_bar(5, 7, Q(3, 5)) == 16);
    CHECK(torus_signature(2, 3, Q(1, 2) - Q(1, 100)) == -2);
    CHECK(torus_signature(7, 11, Q(1, 78)) == 0);
    CHECK(torus_signature(2, 3, Q(1, 2)) == -2);
    // a lattice point on a counting segment
    CHECK_THROWS_AS(torus_signature(2, 3, Q(5, 6)), JumpPointError);
    CHECK_THROWS_AS(torus_signature(2, 3, Q(1, 6)), JumpPointError);
    CHECK_THROWS_AS(torus_signature(4, 6, Q(1, 3)), std::domain_error);
    CHECK_THROWS_AS(torus_signature(2, 3, Q(0)), std::domain_error);
}

TEST_CASE("torus_signature_bounds examples") {
    auto b = torus_signature_bounds(5, 7, Q(3, 5));
    CHECK(b.approx == Q(84, 5));
    CHECK(b.lower < Q(16));
    auto c = torus_signature_bounds(3, 5, Q(1, 2));
    CHECK(c.lower == Q(1, 2));
    CHECK(torus_signature_bar(3, 5, Q(1, 2)) >= 1);
    auto z = torus_signature_bounds(4, 9, Q(1, 1000));
    CHECK(z.lower < Q(0));
}

TEST_CASE("signature_at dispatch") {
    CHECK(signature_at(torus_knot(5, 7), Q(3, 5)) == -16);
    CHECK(signature_at(mirror(torus_knot(5, 7)), Q(3, 5)) == 16);
    CHECK(signature_at(testing::knot("12a_369"), Q(1, 4)) == 2);
    CHECK_FALSE(signature_at(testing::knot("12a_369"), Q(1, 9)).has_value());
    CHECK(signature_at(testing::knot("12a_369"), Q(1, 2)) == 6);
    CHECK(signature_at(testing::knot("3T(2,3)"), Q(1, 2)) == -6);
    CHECK(signature_at(testing::knot("T(2,25)#-T(3,8)"), Q(1, 4)) == -4);
    CHECK(signature_at(testing::knot("WhT23"), Q(1, 7)) == 0);
    // jump of T(2,3) at 1/6 is a genuine jump: both sides disagree
    CHECK_FALSE(signature_at(torus_knot(2, 3), Q(1, 6)).has_value());
    // 8_19 = T(3,4): x = 1/4 has x pq = 3 but no lattice point on a segment
    CHECK(signature_at(testing::knot("8_19"), Q(1, 4)) == -4);
}

TEST_CASE("lattice count agrees with the Seifert-form oracle") {
    for (int p = 2; p <= 7; ++p)
        for (int q = p + 1; q <= 11; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int trial = 0; trial < 12; ++trial) {
                Rational x = generic_point(Q(0), Q(1));
                INFO("T(" << p << "," << q << ") at " << x);
                REQUIRE(torus_signature(p, q, x) == seifert_signature(p, q, x.to_double()));
            }
        }
    CHECK(seifert_signature(5, 7, 0.6) == -16);
}

TEST_CASE("sign pattern, strict lower bound and approximation band") {
    for (std::int64_t p = 2; p <= 100; ++p)
        for (std::int64_t q = p + 1; p * q <= 100; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Rational first(1, p * q);
            for (int s = 0; s < 10; ++s) {
                Rational lo_x = generic_point(Q(0), first);
                REQUIRE(torus_signature_bar(p, q, lo_x) == 0);
                Rational x = generic_point(first, Q(1, 2));
                std::int64_t bar = torus_signature_bar(p, q, x);
                INFO("T(" << p << "," << q << ") at " << x);
                REQUIRE(bar > 0);
                auto b = torus_signature_bounds(p, q, x);
                REQUIRE(Q(bar) > b.lower);
                REQUIRE((Q(bar) - b.approx).abs() <= Q(p + q));
                REQUIRE(torus_signature_bar(p, q, Q(1) - x) == bar);
            }
        }
}

TEST_CASE("symmetry at random points") {
    for (int trial = 0; trial < 50; ++trial) {
        std::int64_t p = testing::uniform(2, 9), q = testing::uniform(p + 1, 20);
        if (std::gcd(p, q) != 1) continue;
        Rational x = generic_point(Q(0), Q(1));
        CHECK(torus_signature(p, q, x) == torus_signature(p, q, Q(1) - x));
    }
}

TEST_CASE("T(2,2k+1) just below 1/2 has signature -2k") {
    for (std::int64_t k = 1; k <= 40; ++k) {
        std::int64_t n = 2 * (2 * k + 1);
        CHECK(torus_signature(2, 2 * k + 1, Q(1, 2) - Q(1, 4 * n)) == -2 * k);
        CHECK(torus_knot(2, 2 * k + 1).signature == -2 * k);
    }
}

TEST_CASE("signature_extent") {
    auto e = signature_extent(torus_knot(2, 5));
    REQUIRE(e);
    CHECK(e->first == -4);
    CHECK(e->second == 0);
    CHECK(signature_extent(testing::knot("12a_369")) == std::pair<std::int64_t, std::int64_t>{0, 6});
    CHECK_FALSE(signature_extent(KnotRecord{.name = "x", .genus = 1}).has_value());
}

}  // TEST_SUITE
