#include "laz/phase.hpp"

#include <cmath>

#include "laz/arith.hpp"
#include "laz/error.hpp"

namespace laz {

namespace {

double wrap_angle(double radians) {
    double a = std::fmod(radians, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

double angular_distance(double a, double b) {
    const double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, kTwoPi - d);
}

}  // namespace

Phase Phase::rational(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw PreconditionError("phase denominator must be positive");
    Phase p;
    num = mod(num, den);
    const std::int64_t g = std::gcd(num, den);
    p.num_ = num / g;
    p.den_ = den / g;
    return p;
}

Phase Phase::angle(double radians) {
    Phase p;
    p.rational_ = false;
    p.angle_ = wrap_angle(radians);
    return p;
}

double Phase::radians() const {
    if (!rational_) return angle_;
    return kTwoPi * static_cast<double>(num_) / static_cast<double>(den_);
}

std::complex<double> Phase::value() const {
    if (rational_ && (4 * num_) % den_ == 0) {
        switch ((4 * num_) / den_) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, radians());
}

Phase Phase::conj() const {
    if (rational_) return rational(den_ - num_, den_);
    return angle(-angle_);
}

Phase operator*(const Phase& p, const Phase& q) {
    if (p.rational_ && q.rational_) {
        const std::int64_t l = lcm(p.den_, q.den_);
        const __int128 n = static_cast<__int128>(p.num_) * (l / p.den_) +
                           static_cast<__int128>(q.num_) * (l / q.den_);
        return Phase::rational(static_cast<std::int64_t>(n % l), l);
    }
    return Phase::angle(p.radians() + q.radians());
}

bool phases_match(const Phase& p, const Phase& q, double tol) {
    if (p.is_rational() && q.is_rational()) return p == q;
    return angular_distance(p.radians(), q.radians()) <= tol;
}

Phase nearest_rational(std::complex<double> z, std::int64_t den, double* angle_error) {
    const double a = wrap_angle(std::arg(z));
    const auto k = static_cast<std::int64_t>(std::llround(a * static_cast<double>(den) / kTwoPi));
    Phase p = Phase::rational(k, den);
    if (angle_error) *angle_error = angular_distance(a, p.radians());
    return p;
}

}  // namespace laz
