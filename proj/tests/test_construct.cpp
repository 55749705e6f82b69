#include <doctest.h>

#include "laz/construct.hpp"
#include "laz/error.hpp"
#include "oracle.hpp"

using namespace laz;

namespace {
const Phase kOne = Phase::rational(0, 1);
const Phase kMinus = Phase::rational(1, 2);
}  // namespace

TEST_SUITE("construct") {

TEST_CASE("a matrix") {
    const SequenceSet zero = build_a_matrix(ZFunc(5, std::vector<std::int64_t>(3, 0)));
    for (std::int64_t k = 0; k < zero.size(); ++k) CHECK(zero[k] == UnimodSequence(std::vector<Phase>(5, kOne)));
    const SequenceSet a = build_a_matrix(quad_lpnf(5, 1, 0, 8));
    CHECK(a.size() == 5);
    CHECK(a.length() == 8);
    for (std::int64_t t = 0; t < 8; ++t) CHECK(a[2][t] == Phase::rational(4 * t, 8));
    CHECK(a[0] == UnimodSequence(std::vector<Phase>(8, kOne)));
}

TEST_CASE("interleave") {
    const std::vector<UnimodSequence> cols{UnimodSequence({kOne, kOne}), UnimodSequence({kOne, kMinus})};
    CHECK(interleave(cols) == UnimodSequence({kOne, kOne, kOne, kMinus}));
    const UnimodSequence single({kOne, kMinus, Phase::rational(1, 4)});
    CHECK(interleave(std::vector<UnimodSequence>{single}) == single);

    const Phase a = Phase::rational(1, 8), b = Phase::rational(2, 8), c = Phase::rational(3, 8), d = Phase::rational(4, 8),
                e = Phase::rational(5, 8), f = Phase::rational(6, 8);
    const std::vector<UnimodSequence> three{UnimodSequence({a, b}), UnimodSequence({c, d}), UnimodSequence({e, f})};
    const UnimodSequence u = interleave(three);
    CHECK(u == UnimodSequence({a, c, e, b, d, f}));
    CHECK(deinterleave(u, 3) == three);
    CHECK_THROWS_AS(deinterleave(u, 4), PreconditionError);
}

TEST_CASE("laz set shape and t = 0 slice") {
    const ZFunc f = quad_lpnf(7, 1, 0, 7);
    const HMatrix h = legendre_shifts(7);
    const SequenceSet s = build_laz_set(f, h);
    CHECK(s.size() == 7);
    CHECK(s.length() == 49);
    for (std::int64_t n = 0; n < 7; ++n) {
        for (std::int64_t m = 0; m < 7; ++m) {
            CHECK(s[n][m] == h(n, m));
            for (std::int64_t t = 0; t < 7; ++t) CHECK(s[n][t * 7 + m] == h(n, m) * Phase::rational(t * f(m), 7));
        }
    }
    const SequenceSet big = build_laz_set(quad_lpnf(35, 1, 0, 35), dft_submatrix(35));
    CHECK(big.size() == 35);
    CHECK(big.length() == 1225);
}

TEST_CASE("construction refuses a mismatched or failing H") {
    CHECK_THROWS_AS(build_laz_set(quad_lpnf(7, 1, 0, 7), dft_submatrix(5)), PreconditionError);
    CHECK_THROWS_AS(build_laz_set(quad_lpnf(5, 1, 0, 5), legendre_shifts(5)), PreconditionError);
}

TEST_CASE("predicted parameters") {
    CHECK(predicted_params(35, 35, AfKind::periodic) == LazParams{35, 1225, {5, 35}, 35.0, AfKind::periodic});
    CHECK(predicted_params(35, 35, AfKind::aperiodic) == LazParams{35, 1225, {5, 35}, 39.0, AfKind::aperiodic});
    CHECK(predicted_params(7, 11, AfKind::periodic) == LazParams{7, 77, {7, 5}, 11.0, AfKind::periodic});
    CHECK(predicted_params(25, 49, AfKind::aperiodic).theta == 53.0);
    CHECK(params_for_zone(6, 7, {6, 7}, AfKind::aperiodic).theta == 12.0);
}

}
