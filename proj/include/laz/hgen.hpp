#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laz/sequence.hpp"

namespace laz {

enum class HKind { dft_submatrix, legendre, msequence, bjorck, custom };

std::string to_string(HKind kind);
/// Accepts the CLI spellings too: dft, legendre, mseq, bjorck, custom.
HKind parse_hkind(const std::string& name);

/// Square unimodular companion matrix; rows are h_0 .. h_{N-1}.
class HMatrix {
public:
    HMatrix(SequenceSet rows, HKind provenance);

    std::int64_t order() const { return rows_.size(); }
    const SequenceSet& rows() const { return rows_; }
    const UnimodSequence& row(std::int64_t i) const { return rows_[i]; }
    const Phase& operator()(std::int64_t i, std::int64_t n) const { return rows_[i][n]; }
    HKind provenance() const { return provenance_; }

    ComplexMatrix<double> matrix() const { return to_matrix<double>(rows_); }

private:
    SequenceSet rows_;
    HKind provenance_;
};

/// h_i(n) = omega_{N+1}^{i n}: the (N+1)-point DFT matrix without its last row
/// and column.
HMatrix dft_submatrix(std::int64_t n);

/// Cyclic left shifts of the Legendre sequence of odd prime length N with
/// L(0) = +1. Meets the companion constraints for N = 3 mod 4.
HMatrix legendre_shifts(std::int64_t n);

/// GF(2) polynomials as bitmasks: bit k is the coefficient of x^k.
bool is_primitive_gf2(std::uint64_t poly);
/// Smallest primitive polynomial of degree m by bitmask value.
std::uint64_t default_primitive_polynomial(int m);
/// One period of b(t) = sum_k c_k b(t-k) from the all-ones state.
std::vector<int> msequence_bits(int m, std::optional<std::uint64_t> poly = std::nullopt);

/// Cyclic shifts of (-1)^{b(t)} for a binary m-sequence of period 2^m - 1.
HMatrix msequence_shifts(int m, std::optional<std::uint64_t> poly = std::nullopt);

/// Cyclic shifts of the Bjorck sequence of odd prime length (float phases).
HMatrix bjorck_shifts(std::int64_t p);

/// Generator dispatch by kind; `n` is the order (for msequence, 2^m - 1).
HMatrix make_h(HKind kind, std::int64_t n);

/// Orders <= max_order for which `kind` is expected to satisfy the constraints.
std::vector<std::int64_t> supported_orders(HKind kind, std::int64_t max_order);

struct HReport {
    double max_offdiag_inner = 0.0;  ///< max_{i!=j} |<h_i, h_j>|
    double max_modulated = 0.0;      ///< max_{i!=j, v} |sum_n h_i h_j^* omega_N^{nv}|
    bool pass = false;
    std::int64_t i = 0, j = 0, v = 0;  ///< witness for max_modulated
};

/// Exhaustive check of the companion constraints over i != j, 0 <= v < N.
HReport verify_h_constraints(const HMatrix& h);

}  // namespace laz
