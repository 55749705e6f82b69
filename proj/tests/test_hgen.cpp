#include <doctest.h>

#include <cmath>

#include "laz/error.hpp"
#include "laz/hgen.hpp"
#include "oracle.hpp"

using namespace laz;

namespace {

std::vector<int> signs(const UnimodSequence& s) {
    std::vector<int> out;
    for (std::int64_t t = 0; t < s.length(); ++t) out.push_back(s[t].value().real() > 0 ? 1 : -1);
    return out;
}

// max over i != j and all v of |sum_n h_i(n) h_j*(n) omega_N^{nv}|, by definition.
double brute_modulated(const HMatrix& h) {
    const std::int64_t n = h.order();
    double best = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto a = oracle::values(h.row(i)), b = oracle::values(h.row(j));
            for (std::int64_t v = 0; v < n; ++v) best = std::max(best, std::abs(oracle::periodic(a, b, 0, v)));
        }
    }
    return best;
}

}  // namespace

TEST_SUITE("hgen") {

TEST_CASE("dft submatrix") {
    const HMatrix h = dft_submatrix(2);
    CHECK(h.row(0) == UnimodSequence({Phase::rational(0, 1), Phase::rational(0, 1)}));
    CHECK(h.row(1) == UnimodSequence({Phase::rational(0, 1), Phase::rational(1, 3)}));
    const HReport r = verify_h_constraints(h);
    CHECK(r.pass);
    CHECK(r.max_offdiag_inner == doctest::Approx(1.0).epsilon(1e-12));

    const HReport r35 = verify_h_constraints(dft_submatrix(35));
    CHECK(r35.pass);
    CHECK(r35.max_offdiag_inner == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("legendre shifts") {
    const HMatrix h = legendre_shifts(7);
    CHECK(signs(h.row(0)) == std::vector<int>{1, 1, 1, -1, 1, -1, -1});
    CHECK(h.row(3) == cyclic_shift(h.row(0), 3));
    const HReport r = verify_h_constraints(h);
    CHECK(r.pass);
    CHECK(r.max_offdiag_inner == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(legendre_shifts(9), PreconditionError);
}

TEST_CASE("m-sequence shifts") {
    CHECK(default_primitive_polynomial(3) == 0b1011);
    CHECK(msequence_bits(3) == std::vector<int>{1, 1, 1, 0, 1, 0, 0});
    const HMatrix h = msequence_shifts(3);
    CHECK(signs(h.row(0)) == std::vector<int>{-1, -1, -1, 1, -1, 1, 1});
    CHECK(verify_h_constraints(h).pass);
    CHECK_THROWS_AS(msequence_shifts(1), PreconditionError);
    CHECK(is_primitive_gf2(0b10011));
    CHECK_FALSE(is_primitive_gf2(0b11111));
}

TEST_CASE("bjorck shifts") {
    const HMatrix h5 = bjorck_shifts(5);
    const double theta = std::acos(1.0 / (1.0 + std::sqrt(5.0)));
    CHECK(std::abs(h5(0, 0).value() - 1.0) < 1e-12);
    CHECK(std::abs(h5(0, 1).value() - std::polar(1.0, theta)) < 1e-12);
    CHECK(std::abs(h5(0, 2).value() - std::polar(1.0, -theta)) < 1e-12);
    // theta is exactly 2 pi / 5 here, so row 1 is a Doppler-shifted row 0.
    const HReport r5 = verify_h_constraints(h5);
    CHECK_FALSE(r5.pass);
    CHECK(r5.max_modulated == doctest::Approx(5.0));
    CHECK(verify_h_constraints(bjorck_shifts(13)).pass);

    const HMatrix h7 = bjorck_shifts(7);
    const double phi = std::acos(-6.0 / 8.0);
    CHECK(std::abs(h7(0, 1).value() - 1.0) < 1e-12);
    CHECK(std::abs(h7(0, 3).value() - std::polar(1.0, phi)) < 1e-12);
    CHECK(verify_h_constraints(h7).pass);
}

TEST_CASE("duplicate rows fail with a v = 0 witness") {
    const HMatrix d = dft_submatrix(3);
    const HMatrix bad(SequenceSet({d.row(2), d.row(2), d.row(1)}), HKind::custom);
    const HReport rep = verify_h_constraints(bad);
    CHECK_FALSE(rep.pass);
    CHECK(rep.i == 0);
    CHECK(rep.j == 1);
    CHECK(rep.v == 0);
    CHECK(rep.max_modulated == doctest::Approx(3.0));
}

TEST_CASE("property: report matches the brute-force maximum") {
    for (HKind kind : {HKind::dft_submatrix, HKind::legendre, HKind::msequence, HKind::bjorck}) {
        for (std::int64_t n : supported_orders(kind, 31)) {
            const HMatrix h = make_h(kind, n);
            CAPTURE(n);
            CHECK(verify_h_constraints(h).max_modulated == doctest::Approx(brute_modulated(h)).epsilon(1e-9));
        }
    }
}

TEST_CASE("supported orders") {
    CHECK(supported_orders(HKind::legendre, 31) == std::vector<std::int64_t>{3, 7, 11, 19, 23, 31});
    CHECK(supported_orders(HKind::msequence, 127) == std::vector<std::int64_t>{3, 7, 15, 31, 63, 127});
    CHECK(supported_orders(HKind::bjorck, 13) == std::vector<std::int64_t>{7, 11, 13});
    CHECK(parse_hkind("mseq") == HKind::msequence);
    CHECK_THROWS(parse_hkind("hadamard"));
}

}
