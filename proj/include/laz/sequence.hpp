#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "laz/phase.hpp"

namespace laz {

/// Finite unimodular sequence; immutable after construction.
class UnimodSequence {
public:
    explicit UnimodSequence(std::vector<Phase> entries);

    std::int64_t length() const { return static_cast<std::int64_t>(entries_.size()); }
    const Phase& operator[](std::int64_t t) const { return entries_[static_cast<std::size_t>(t)]; }
    std::span<const Phase> entries() const { return entries_; }

    bool all_rational() const;
    /// lcm of all rational denominators (1 if there are none).
    std::int64_t common_denominator() const;

    friend bool operator==(const UnimodSequence&, const UnimodSequence&) = default;

private:
    std::vector<Phase> entries_;
};

/// Members sharing one length.
class SequenceSet {
public:
    explicit SequenceSet(std::vector<UnimodSequence> members);

    std::int64_t size() const { return static_cast<std::int64_t>(members_.size()); }
    std::int64_t length() const { return length_; }
    const UnimodSequence& operator[](std::int64_t i) const { return members_[static_cast<std::size_t>(i)]; }
    std::span<const UnimodSequence> members() const { return members_; }

    bool all_rational() const;
    std::int64_t common_denominator() const;

    friend bool operator==(const SequenceSet&, const SequenceSet&) = default;

private:
    std::vector<UnimodSequence> members_;
    std::int64_t length_ = 0;
};

/// Open integer rectangle (-zx, zx) x (-zy, zy) around the delay-Doppler origin.
struct Zone {
    std::int64_t zx = 1;
    std::int64_t zy = 1;

    friend bool operator==(const Zone&, const Zone&) = default;
};

/// result(t) = s(<t + tau>_N)
UnimodSequence cyclic_shift(const UnimodSequence& s, std::int64_t tau);

/// Entry-wise product with a constant phase.
UnimodSequence scale(const UnimodSequence& s, const Phase& c);

struct ShiftWitness {
    std::int64_t tau = 0;
    Phase phase;
};

/// Finds tau (and a unimodular scalar when allow_phase) with
/// t == phase * cyclic_shift(s, tau). Exact for rational entries, 1e-9 per
/// entry otherwise. Throws PreconditionError on length mismatch.
std::optional<ShiftWitness> equal_up_to_shift(const UnimodSequence& s, const UnimodSequence& t,
                                              bool allow_phase);

template <typename Scalar = double>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar = double>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
ComplexVector<Scalar> to_vector(const UnimodSequence& s) {
    ComplexVector<Scalar> out(s.length());
    for (std::int64_t t = 0; t < s.length(); ++t) {
        const std::complex<double> z = s[t].value();
        out(t) = {static_cast<Scalar>(z.real()), static_cast<Scalar>(z.imag())};
    }
    return out;
}

/// Members as rows.
template <typename Scalar = double>
ComplexMatrix<Scalar> to_matrix(const SequenceSet& set) {
    ComplexMatrix<Scalar> out(set.size(), set.length());
    for (std::int64_t i = 0; i < set.size(); ++i) out.row(i) = to_vector<Scalar>(set[i]).transpose();
    return out;
}

}  // namespace laz
