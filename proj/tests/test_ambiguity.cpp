#include <doctest.h>

#include <random>

#include "laz/ambiguity.hpp"
#include "laz/construct.hpp"
#include "oracle.hpp"

using namespace laz;

namespace {

SequenceSet ones(std::int64_t n) { return SequenceSet({UnimodSequence(std::vector<Phase>(n, Phase::rational(0, 1)))}); }

}  // namespace

TEST_SUITE("ambiguity") {

TEST_CASE("trivial values") {
    std::mt19937_64 rng(3);
    const UnimodSequence a = oracle::random_float(rng, 13);
    CHECK(std::abs(periodic_af(a, a, 0, 0) - 13.0) < 1e-12);
    CHECK(std::abs(aperiodic_af(a, a, 0, 0) - 13.0) < 1e-12);
    const UnimodSequence b = oracle::random_float(rng, 13);
    CHECK(std::abs(aperiodic_af(a, b, 12, 0) - a[0].value() * std::conj(b[12].value())) < 1e-12);
    CHECK(aperiodic_af(a, b, 13, 4) == std::complex<double>(0.0));
    CHECK(aperiodic_af(a, b, -13, 4) == std::complex<double>(0.0));

    const UnimodSequence one = ones(9)[0];
    for (std::int64_t tau = -3; tau <= 3; ++tau) {
        for (std::int64_t v = -10; v <= 10; ++v) {
            CHECK(std::abs(periodic_af(one, one, tau, v)) == doctest::Approx(v % 9 == 0 ? 9.0 : 0.0));
        }
    }
    const auto row = af_row(one, one, 0, AfKind::periodic);
    CHECK(std::abs(row(0) - 9.0) < 1e-12);
    for (std::int64_t v = 1; v < 9; ++v) CHECK(std::abs(row(v)) < 1e-12);
}

TEST_CASE("delta_k") {
    CHECK(delta_k(0, 5) == 5);
    CHECK(delta_k(10, 5) == 5);
    CHECK(delta_k(3, 5) == 0);
    CHECK(delta_k(-5, 5) == 5);
}

TEST_CASE("property: direct and fft paths against the definition") {
    std::mt19937_64 rng(2024);
    for (std::int64_t n : {7, 21, 49, 77}) {
        const SequenceSet rational({oracle::random_rational(rng, n, 12), oracle::random_rational(rng, n, 7)});
        const SequenceSet floating({oracle::random_float(rng, n), oracle::random_float(rng, n)});
        for (const SequenceSet* set : {&rational, &floating}) {
            const AfEvaluator ev(*set);
            const auto a = oracle::values((*set)[0]), b = oracle::values((*set)[1]);
            for (AfKind kind : {AfKind::periodic, AfKind::aperiodic}) {
                for (std::int64_t tau = -n + 1; tau < n; tau += std::max<std::int64_t>(1, n / 9)) {
                    const auto fft = ev.row(0, 1, tau, kind);
                    const auto plain = af_row((*set)[0], (*set)[1], tau, kind);
                    for (std::int64_t v = 0; v < n; ++v) {
                        const auto ref = kind == AfKind::periodic ? oracle::periodic(a, b, tau, v) : oracle::aperiodic(a, b, tau, v);
                        CAPTURE(n);
                        CAPTURE(tau);
                        CAPTURE(v);
                        CHECK(oracle::close(fft(v), ref));
                        CHECK(oracle::close(plain(v), ref));
                        CHECK(oracle::close(ev.point(0, 1, tau, v, kind), ref));
                    }
                }
            }
        }
    }
}

TEST_CASE("property: conjugate symmetry and the aperiodic triangle bound") {
    std::mt19937_64 rng(8);
    const auto a = oracle::random_rational(rng, 15, 5), b = oracle::random_rational(rng, 15, 5);
    for (AfKind kind : {AfKind::periodic, AfKind::aperiodic}) {
        for (std::int64_t tau = -14; tau <= 14; ++tau) {
            for (std::int64_t v = -7; v <= 7; ++v) {
                const auto x = af(a, b, tau, v, kind);
                const auto y = af(b, a, -tau, -v, kind);
                const auto rot = std::polar(1.0, -2.0 * oracle::kPi * static_cast<double>(v * tau) / 15.0);
                CHECK(oracle::close(y, rot * std::conj(x)));
                if (kind == AfKind::aperiodic) CHECK(std::abs(x) <= 15.0 - std::abs(tau) + 1e-9);
            }
        }
    }
}

TEST_CASE("structural form matches direct evaluation") {
    struct Case {
        std::int64_t n, k;
        HKind h;
    };
    for (const Case c : {Case{7, 7, HKind::legendre}, Case{7, 11, HKind::legendre}, Case{5, 9, HKind::dft_submatrix}}) {
        const ZFunc f = quad_lpnf(c.n, 1, 0, c.k);
        const HMatrix h = make_h(c.h, c.n);
        const SequenceSet s = build_laz_set(f, h);
        for (AfKind kind : {AfKind::periodic, AfKind::aperiodic}) {
            for (std::int64_t i = 0; i < c.n; i += 2) {
                for (std::int64_t j = 0; j < c.n; j += 3) {
                    for (std::int64_t tau = -2 * c.n; tau <= 2 * c.n; tau += 3) {
                        for (std::int64_t v = -c.k; v <= c.k; ++v) {
                            CAPTURE(tau);
                            CAPTURE(v);
                            CHECK(oracle::close(structural_af(f, h, i, j, tau, v, kind), af(s[i], s[j], tau, v, kind)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("structural special cases") {
    const ZFunc f = quad_lpnf(7, 1, 0, 7);
    const HMatrix h = legendre_shifts(7);
    CHECK(std::abs(structural_af(f, h, 2, 2, 0, 0, AfKind::periodic) - 49.0) < 1e-9);
    // tau = 7 tau1, v = 7 v1: K sum_n h_i(n) h_j*(n) omega_N^{n v1} omega_K^{-tau1 f(n)}.
    for (std::int64_t tau1 : {0, 3}) {
        for (std::int64_t v1 = -3; v1 <= 3; ++v1) {
            std::complex<double> expect = 0.0;
            for (std::int64_t n = 0; n < 7; ++n) {
                expect += h(1, n).value() * std::conj(h(4, n).value()) * oracle::omega(oracle::wrap(n * v1, 7), 7) *
                          oracle::omega(oracle::wrap(-tau1 * f(n), 7), 7);
            }
            CHECK(oracle::close(structural_af(f, h, 1, 4, 7 * tau1, 7 * v1, AfKind::periodic), 7.0 * expect));
        }
    }
}

TEST_CASE("constructed set: zero-delay Doppler cut") {
    const SequenceSet s = build_laz_set(quad_lpnf(7, 1, 0, 7), legendre_shifts(7));
    for (std::int64_t i = 0; i < 7; ++i) {
        for (std::int64_t v = -48; v < 49; ++v) {
            if (v == 0 || v % 7 == 0) continue;
            CHECK(std::abs(periodic_af(s[i], s[i], 0, v)) < 1e-9);
        }
    }
}

TEST_CASE("theta_max") {
    const SequenceSet s = build_laz_set(quad_lpnf(7, 1, 0, 7), legendre_shifts(7));
    const ThetaReport direct = theta_max(s, {7, 7}, AfKind::periodic, AfMethod::direct);
    const ThetaReport fft = theta_max(s, {7, 7}, AfKind::periodic, AfMethod::fft);
    CHECK(direct.theta_max == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(fft.theta_max == doctest::Approx(direct.theta_max).epsilon(1e-12));
    CHECK(fft.witness.i == direct.witness.i);
    CHECK(fft.witness.tau == direct.witness.tau);
    CHECK(fft.witness.v == direct.witness.v);
    CHECK(std::abs(af(s[direct.witness.i], s[direct.witness.j], direct.witness.tau, direct.witness.v, AfKind::periodic)) ==
          doctest::Approx(direct.witness.magnitude));

    const ThetaReport single = theta_max(ones(9), {1, 2}, AfKind::periodic);
    CHECK(single.theta_a < 1e-12);
    CHECK(single.theta_c == 0.0);
}

TEST_CASE("af grid") {
    const SequenceSet s = build_laz_set(quad_lpnf(7, 1, 0, 11), legendre_shifts(7));
    const AfGrid g = af_grid(s, 1, 3, {7, 5}, AfKind::aperiodic);
    CHECK(g.tau_min == -6);
    CHECK(g.v_max == 4);
    CHECK(g.values.rows() == 13);
    CHECK(g.values.cols() == 9);
    CHECK(oracle::close(g.at(-2, 3), aperiodic_af(s[1], s[3], -2, 3)));
    CHECK(g.magnitudes().maxCoeff() <= 17.0 + 1e-9);
}

}
