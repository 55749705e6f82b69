#pragma once

// Internal numeric helpers shared by hgen, ambiguity and verify.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "laz/arith.hpp"
#include "laz/sequence.hpp"

namespace laz::detail {

/// omega_q^k for k in [0, q).
class RootTable {
public:
    explicit RootTable(std::int64_t q) : q_(q), roots_(static_cast<std::size_t>(q)) {
        for (std::int64_t k = 0; k < q; ++k) roots_[static_cast<std::size_t>(k)] = Phase::rational(k, q).value();
    }
    std::int64_t modulus() const { return q_; }
    const std::complex<double>& operator[](std::int64_t k) const { return roots_[static_cast<std::size_t>(k)]; }

private:
    std::int64_t q_;
    std::vector<std::complex<double>> roots_;
};

inline constexpr std::int64_t kMaxRootTable = std::int64_t{1} << 24;

/// Integer exponents e(i, t) with s_i(t) = omega_D^{e(i, t)}; only for
/// all-rational sets.
struct ExponentSet {
    std::int64_t denominator = 1;
    std::vector<std::vector<std::int64_t>> rows;
};

inline std::optional<ExponentSet> exponents_of(std::span<const UnimodSequence> members) {
    std::int64_t d = 1;
    for (const auto& m : members) {
        if (!m.all_rational()) return std::nullopt;
        d = lcm(d, m.common_denominator());
        if (d > kMaxRootTable) return std::nullopt;
    }
    ExponentSet out;
    out.denominator = d;
    for (const auto& m : members) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(m.length()));
        for (std::int64_t t = 0; t < m.length(); ++t) row[static_cast<std::size_t>(t)] = m[t].num() * (d / m[t].den());
        out.rows.push_back(std::move(row));
    }
    return out;
}

/// out(v) = sum_t x(t) omega_N^{v t}, v in [0, N).
inline ComplexVector<double> doppler_transform(const ComplexVector<double>& x) {
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    ComplexVector<double> out(x.size());
    fft.inv(out, x);
    return out;
}

}  // namespace laz::detail
