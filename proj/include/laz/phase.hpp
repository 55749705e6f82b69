#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

namespace laz {

/// A point on the unit circle.
///
/// Rational phases exp(2*pi*i*num/den) are kept exact in lowest terms with
/// 0 <= num < den; everything else (Bjorck entries, user angles) is stored as
/// an angle in [0, 2*pi). Products of rational phases stay rational.
class Phase {
public:
    /// The unit phase 0/1.
    constexpr Phase() = default;

    static Phase rational(std::int64_t num, std::int64_t den);
    static Phase angle(double radians);
    /// omega_n^k.
    static Phase root(std::int64_t k, std::int64_t n) { return rational(k, n); }

    bool is_rational() const { return rational_; }
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    /// Angle in [0, 2*pi).
    double radians() const;

    std::complex<double> value() const;
    Phase conj() const;

    friend Phase operator*(const Phase& p, const Phase& q);
    friend bool operator==(const Phase& p, const Phase& q) = default;

private:
    bool rational_ = true;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    double angle_ = 0.0;
};

/// Entry-wise equality: exact for two rational phases, 1e-9 radians on the
/// circle otherwise.
bool phases_match(const Phase& p, const Phase& q, double tol = 1e-9);

/// Recover the nearest rational with denominator `den` from a complex value
/// on the unit circle; `angle_error` receives the residual.
Phase nearest_rational(std::complex<double> z, std::int64_t den, double* angle_error = nullptr);

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace laz
