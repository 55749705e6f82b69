#include "laz/bounds.hpp"

#include <cmath>

#include "laz/arith.hpp"
#include "laz/error.hpp"

namespace laz {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::k_equals_n: return "K=N";
        case Regime::k_between: return "N<K<2N-1";
        case Regime::k_large: return "K>=2N-1";
        case Regime::unclassified: break;
    }
    return "unclassified";
}

Regime classify_regime(std::int64_t n, std::int64_t k) {
    if (k < n) throw PreconditionError("K < N is not a valid construction regime");
    if (k == n) return Regime::k_equals_n;
    if (k < 2 * n - 1) return Regime::k_between;
    return Regime::k_large;
}

namespace {

void require_nonvacuous(std::int64_t m, std::int64_t zx, std::int64_t zy, std::int64_t length) {
    if (m < 1 || zx < 1 || zy < 1 || length < 1) throw PreconditionError("bound inputs must be positive");
    if (m * zx <= 1) throw PreconditionError("bound is vacuous: M * Z_x must exceed 1");
}

}  // namespace

double periodic_lower_bound(std::int64_t m, std::int64_t length, std::int64_t zx, std::int64_t zy) {
    require_nonvacuous(m, zx, zy, length);
    const double n = static_cast<double>(length);
    const double mzx = static_cast<double>(m) * static_cast<double>(zx);
    const double radicand = (mzx * static_cast<double>(zy) / n - 1.0) / (mzx - 1.0);
    if (radicand < 0.0) throw PreconditionError("periodic bound is vacuous: M Z_x Z_y < N");
    return n / std::sqrt(static_cast<double>(zy)) * std::sqrt(radicand);
}

double aperiodic_lower_bound(std::int64_t m, std::int64_t length, std::int64_t zx, std::int64_t zy) {
    require_nonvacuous(m, zx, zy, length);
    const double n = static_cast<double>(length);
    const double x = static_cast<double>(zx);
    const double mzx = static_cast<double>(m) * x;
    const double radicand = (mzx * static_cast<double>(zy) - n - x + 1.0) / ((n + x - 1.0) * (mzx - 1.0));
    if (radicand < 0.0) throw PreconditionError("aperiodic bound is vacuous: M Z_x Z_y < N + Z_x - 1");
    return n / std::sqrt(static_cast<double>(zy)) * std::sqrt(radicand);
}

double lower_bound(AfKind kind, std::int64_t m, std::int64_t length, std::int64_t zx, std::int64_t zy) {
    return kind == AfKind::periodic ? periodic_lower_bound(m, length, zx, zy) : aperiodic_lower_bound(m, length, zx, zy);
}

BoundReport optimality_factor(double theta, std::int64_t m, std::int64_t length, std::int64_t zx, std::int64_t zy,
                              AfKind kind) {
    BoundReport r;
    r.kind = kind;
    r.theta = theta;
    r.bound_value = lower_bound(kind, m, length, zx, zy);
    r.rho = theta / r.bound_value;
    if (length % m == 0 && length / m >= m) {
        const std::int64_t k = length / m;
        r.regime = classify_regime(m, k);
        if (k > m) r.gamma_limit = std::sqrt(static_cast<double>(k) / static_cast<double>(m));
    }
    return r;
}

BoundReport optimality_factor(const LazParams& p) {
    return optimality_factor(p.theta, p.set_size, p.length, p.zone.zx, p.zone.zy, p.kind);
}

double asymptotic_rho(std::int64_t n_int, std::int64_t k_int, AfKind kind) {
    const Regime regime = classify_regime(n_int, k_int);
    const double n = static_cast<double>(n_int);
    const double k = static_cast<double>(k_int);
    const double p = static_cast<double>(smallest_prime_factor(n_int));
    const double np = n * p;

    if (kind == AfKind::periodic) {
        switch (regime) {
            case Regime::k_equals_n: return std::sqrt((np - 1.0) / (np - n));
            case Regime::k_between: {
                const double zy = k - n + 1.0;
                if (zy * p <= k) throw PreconditionError("asymptotic_rho: bound is vacuous for this (N, K)");
                return std::sqrt(zy * p * k / (zy * p * n - k * n) - zy * k / (zy * p * n * n - k * n * n));
            }
            case Regime::k_large: return std::sqrt(k / n) * std::sqrt((np - 1.0) / (np - n));
            case Regime::unclassified: break;
        }
    } else {
        switch (regime) {
            case Regime::k_equals_n:
                return (n + p - 1.0) / (n * std::sqrt(n)) *
                       std::sqrt((np - 1.0) / (p - 1.0) + p * (np - 1.0) / ((n * n - 1.0) * (p - 1.0)));
            case Regime::k_between: {
                const double zy = k - n + 1.0;
                if (n * zy * p - n * k - p + 1.0 <= 0.0) {
                    throw PreconditionError("asymptotic_rho: bound is vacuous for this (N, K)");
                }
                return (k + p - 1.0) * std::sqrt(zy) / (n * k) *
                       std::sqrt((n * k + p - 1.0) * (np - 1.0) / (n * zy * p - n * k - p + 1.0));
            }
            case Regime::k_large:
                return (k + p - 1.0) / (n * std::sqrt(k)) *
                       std::sqrt((np - 1.0) / (p - 1.0) + p * (np - 1.0) / ((n * k - 1.0) * (p - 1.0)));
            case Regime::unclassified: break;
        }
    }
    throw PreconditionError("asymptotic_rho: unclassified regime");
}

}  // namespace laz
