#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "laz/ambiguity.hpp"
#include "laz/bounds.hpp"
#include "laz/construct.hpp"

namespace laz {

enum class DistinctMode { exact, phase };

struct DistinctWitness {
    std::int64_t i = 0, j = 0;
    std::int64_t tau = 0;
    Phase phase;  ///< s_j = phase * cyclic_shift(s_i, tau)
};

struct DistinctReport {
    bool distinct = true;
    std::optional<DistinctWitness> witness;
};

/// Pairwise over i < j; phase mode also allows a constant unimodular factor.
DistinctReport cyclic_distinct(const SequenceSet& set, DistinctMode mode);

struct LazCertificate {
    LazParams claimed;
    double measured_theta = 0.0;
    double tolerance = 0.0;  ///< 1e-6 * length
    bool pass = false;
    ThetaReport theta;
    std::optional<BoundReport> bound_report;  ///< measured theta against the lower bound
    bool cyclically_distinct = false;
};

/// Exhaustive theta_max over the claimed open zone; pass iff the measured
/// value stays within claimed.theta + 1e-6 * length.
LazCertificate certify_laz(const SequenceSet& set, const LazParams& claimed);

/// Pareto-maximal (zx, zy) with every |AF| inside the open rectangle (origin
/// excluded for auto terms) at most theta_budget, scanning (-N, N)^2.
std::vector<Zone> empirical_zone(const SequenceSet& set, double theta_budget, AfKind kind);

/// One printed parameter row of a published table.
struct TableRow {
    std::int64_t set_size;
    std::int64_t length;
    std::int64_t zx, zy;
    std::int64_t theta;
    double printed_rho;
};

struct TableCheck {
    TableRow row;
    AfKind kind;
    double computed_rho;        ///< from the printed parameters
    bool consistent;            ///< printed zone/theta equal predicted_params
    Zone evaluated_zone;        ///< zone behind `rho`
    double rho;                 ///< value compared against printed_rho
    bool zone_erratum = false;  ///< printed zone inconsistent; predicted zone used
    bool pass = false;
};

/// Table ids 1, 2 (periodic) and 4, 5 (aperiodic).
std::span<const TableRow> published_table(int id);
AfKind table_kind(int id);
std::vector<TableCheck> reproduce_table(int id, double tol = 1e-5);

}  // namespace laz
