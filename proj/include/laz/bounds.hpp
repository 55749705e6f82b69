#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "laz/construct.hpp"

namespace laz {

/// Which zone regime of the quadratic construction a (N, K) pair falls in.
enum class Regime { k_equals_n, k_between, k_large, unclassified };

std::string to_string(Regime r);
/// Strict inequalities: K = N, N < K < 2N-1, K >= 2N-1. Throws for K < N.
Regime classify_regime(std::int64_t n, std::int64_t k);

/// Lower bound on the periodic theta_max of any unimodular (M, N, Pi) set.
double periodic_lower_bound(std::int64_t m, std::int64_t length, std::int64_t zx, std::int64_t zy);
/// Aperiodic counterpart.
double aperiodic_lower_bound(std::int64_t m, std::int64_t length, std::int64_t zx, std::int64_t zy);
double lower_bound(AfKind kind, std::int64_t m, std::int64_t length, std::int64_t zx, std::int64_t zy);

struct BoundReport {
    AfKind kind = AfKind::periodic;
    double bound_value = 0.0;
    double theta = 0.0;
    double rho = 0.0;  ///< theta / bound_value
    Regime regime = Regime::unclassified;
    std::optional<double> gamma_limit;  ///< sqrt(K/N) when K > N
};

/// Packages theta against the bound; the regime is read off K = length / M.
BoundReport optimality_factor(double theta, std::int64_t m, std::int64_t length, std::int64_t zx, std::int64_t zy,
                              AfKind kind);
BoundReport optimality_factor(const LazParams& params);

/// Closed-form optimality factor of the quadratic construction with
/// parameters (N, K), written out per regime.
double asymptotic_rho(std::int64_t n, std::int64_t k, AfKind kind);

}  // namespace laz
