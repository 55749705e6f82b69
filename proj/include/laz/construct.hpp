#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laz/hgen.hpp"
#include "laz/lpnf.hpp"
#include "laz/sequence.hpp"

namespace laz {

enum class AfKind { periodic, aperiodic };

std::string to_string(AfKind kind);
AfKind parse_af_kind(const std::string& name);

/// (M, N_len, Pi, theta) claim for a LAZ sequence set.
struct LazParams {
    std::int64_t set_size = 0;
    std::int64_t length = 0;
    Zone zone;
    double theta = 0.0;
    AfKind kind = AfKind::periodic;

    friend bool operator==(const LazParams&, const LazParams&) = default;
};

/// a_k(t) = omega_K^{t f(k)}: N sequences of length K.
SequenceSet build_a_matrix(const ZFunc& f);

/// u(t M + m) = columns[m](t).
UnimodSequence interleave(std::span<const UnimodSequence> columns);
/// Inverse of interleave for `m` columns.
std::vector<UnimodSequence> deinterleave(const UnimodSequence& u, std::int64_t m);

/// s_n(t N + m) = h_n(m) omega_K^{t f(m)}. Refuses an H that fails
/// verify_h_constraints or whose order differs from the domain of f.
SequenceSet build_laz_set(const ZFunc& f, const HMatrix& h);

/// Parameters guaranteed for a quadratic-LPNF construction.
LazParams predicted_params(std::int64_t n, std::int64_t k, AfKind kind);

/// Parameters for a construction from any f that is locally perfect
/// nonlinear on `zone`: theta = K (periodic) or K + zx - 1 (aperiodic).
LazParams params_for_zone(std::int64_t n, std::int64_t k, const LocalZone& zone, AfKind kind);

}  // namespace laz
