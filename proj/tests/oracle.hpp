#pragma once

// Textbook definitions evaluated on plain complex vectors. Kept free of the
// library's kernels so the tests compare two independent computations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "laz/sequence.hpp"

namespace oracle {

using cvec = std::vector<std::complex<double>>;

inline constexpr double kPi = 3.14159265358979323846;

inline std::complex<double> omega(std::int64_t k, std::int64_t n) {
    const double a = 2.0 * kPi * static_cast<double>(k % n) / static_cast<double>(n);
    return {std::cos(a), std::sin(a)};
}

inline cvec values(const laz::UnimodSequence& s) {
    cvec out;
    for (std::int64_t t = 0; t < s.length(); ++t) out.push_back(s[t].value());
    return out;
}

inline std::int64_t wrap(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

inline std::complex<double> periodic(const cvec& a, const cvec& b, std::int64_t tau, std::int64_t v) {
    const auto n = static_cast<std::int64_t>(a.size());
    std::complex<double> acc = 0.0;
    for (std::int64_t t = 0; t < n; ++t) acc += a[t] * std::conj(b[wrap(t + tau, n)]) * omega(wrap(v * t, n), n);
    return acc;
}

inline std::complex<double> aperiodic(const cvec& a, const cvec& b, std::int64_t tau, std::int64_t v) {
    const auto n = static_cast<std::int64_t>(a.size());
    std::complex<double> acc = 0.0;
    for (std::int64_t t = 0; t < n; ++t) {
        if (t + tau < 0 || t + tau >= n) continue;
        acc += a[t] * std::conj(b[t + tau]) * omega(wrap(v * t, n), n);
    }
    return acc;
}

inline laz::UnimodSequence random_rational(std::mt19937_64& rng, std::int64_t n, std::int64_t den) {
    std::uniform_int_distribution<std::int64_t> pick(0, den - 1);
    std::vector<laz::Phase> e;
    for (std::int64_t t = 0; t < n; ++t) e.push_back(laz::Phase::rational(pick(rng), den));
    return laz::UnimodSequence(std::move(e));
}

inline laz::UnimodSequence random_float(std::mt19937_64& rng, std::int64_t n) {
    std::uniform_real_distribution<double> pick(0.0, 2.0 * kPi);
    std::vector<laz::Phase> e;
    for (std::int64_t t = 0; t < n; ++t) e.push_back(laz::Phase::angle(pick(rng)));
    return laz::UnimodSequence(std::move(e));
}

inline bool close(std::complex<double> x, std::complex<double> y, double rel = 1e-9) {
    return std::abs(x - y) <= rel * std::max(1.0, std::abs(y));
}

}  // namespace oracle
