#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>

#include "laz/construct.hpp"
#include "laz/hgen.hpp"
#include "laz/lpnf.hpp"
#include "laz/sequence.hpp"

namespace laz {

/// Periodic cross-AF: sum_t a(t) b*(<t+tau>_N) omega_N^{vt}.
std::complex<double> periodic_af(const UnimodSequence& a, const UnimodSequence& b, std::int64_t tau, std::int64_t v);

/// Aperiodic cross-AF; zero when |tau| >= N.
std::complex<double> aperiodic_af(const UnimodSequence& a, const UnimodSequence& b, std::int64_t tau, std::int64_t v);

std::complex<double> af(const UnimodSequence& a, const UnimodSequence& b, std::int64_t tau, std::int64_t v, AfKind kind);

/// AF(tau, v) for v = 0 .. N-1 through one N-point DFT of the lag product.
ComplexVector<double> af_row(const UnimodSequence& a, const UnimodSequence& b, std::int64_t tau, AfKind kind);

/// K when x = 0 mod K, else 0.
std::int64_t delta_k(std::int64_t x, std::int64_t k);

/// Closed-form AF of members i, j of build_laz_set(f, h), evaluated from f and
/// h only (no interleaved sequence is materialized).
std::complex<double> structural_af(const ZFunc& f, const HMatrix& h, std::int64_t i, std::int64_t j,
                                   std::int64_t tau, std::int64_t v, AfKind kind);

/// Evaluates AFs between members of one set. Exact-phase sets are summed from
/// integer exponents through a root-of-unity table, others from complex samples.
class AfEvaluator {
public:
    explicit AfEvaluator(const SequenceSet& set);
    ~AfEvaluator();
    AfEvaluator(AfEvaluator&&) noexcept;
    AfEvaluator& operator=(AfEvaluator&&) noexcept;

    std::int64_t length() const;
    std::int64_t size() const;
    bool exact() const;

    /// Direct defining sum.
    std::complex<double> point(std::int64_t i, std::int64_t j, std::int64_t tau, std::int64_t v, AfKind kind) const;
    /// All v in [0, N) at one delay, by DFT.
    ComplexVector<double> row(std::int64_t i, std::int64_t j, std::int64_t tau, AfKind kind) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// AF values over tau in [tau_min, tau_max] x v in [v_min, v_max].
struct AfGrid {
    std::int64_t tau_min = 0, tau_max = 0;
    std::int64_t v_min = 0, v_max = 0;
    ComplexMatrix<double> values;  ///< rows: tau, cols: v
    std::int64_t i = 0, j = 0;
    AfKind kind = AfKind::periodic;

    std::complex<double> at(std::int64_t tau, std::int64_t v) const { return values(tau - tau_min, v - v_min); }
    Eigen::MatrixXd magnitudes() const { return values.cwiseAbs(); }
};

/// Grid over the open zone for members i, j.
AfGrid af_grid(const SequenceSet& set, std::int64_t i, std::int64_t j, const Zone& zone, AfKind kind);

enum class AfMethod { automatic, direct, fft };

struct AfWitness {
    std::int64_t i = 0, j = 0, tau = 0, v = 0;
    double magnitude = 0.0;
};

struct ThetaReport {
    double theta_a = 0.0;  ///< auto terms, origin excluded
    double theta_c = 0.0;  ///< ordered pairs i != j
    double theta_max = 0.0;
    AfWitness witness;     ///< maximizer of theta_max
    AfWitness witness_a;
    AfWitness witness_c;
};

/// Exhaustive maximum AF magnitude over the open zone. Ties resolve to the
/// lexicographically first (i, j, tau, v).
ThetaReport theta_max(const SequenceSet& set, const Zone& zone, AfKind kind, AfMethod method = AfMethod::automatic);

}  // namespace laz
