#include "laz/construct.hpp"

#include "laz/error.hpp"

namespace laz {

std::string to_string(AfKind kind) { return kind == AfKind::periodic ? "periodic" : "aperiodic"; }

AfKind parse_af_kind(const std::string& name) {
    if (name == "periodic") return AfKind::periodic;
    if (name == "aperiodic") return AfKind::aperiodic;
    throw PreconditionError("unknown AF kind '" + name + "'");
}

SequenceSet build_a_matrix(const ZFunc& f) {
    const std::int64_t k = f.codomain_size();
    std::vector<UnimodSequence> rows;
    for (std::int64_t x = 0; x < f.domain_size(); ++x) {
        std::vector<Phase> row;
        for (std::int64_t t = 0; t < k; ++t) row.push_back(Phase::root(t * f(x), k));
        rows.emplace_back(std::move(row));
    }
    return SequenceSet(std::move(rows));
}

UnimodSequence interleave(std::span<const UnimodSequence> columns) {
    if (columns.empty()) throw PreconditionError("interleave needs at least one column");
    const std::int64_t rows = columns.front().length();
    for (const auto& c : columns) {
        if (c.length() != rows) throw PreconditionError("interleave: column length mismatch");
    }
    std::vector<Phase> out;
    out.reserve(static_cast<std::size_t>(rows) * columns.size());
    for (std::int64_t t = 0; t < rows; ++t) {
        for (const auto& c : columns) out.push_back(c[t]);
    }
    return UnimodSequence(std::move(out));
}

std::vector<UnimodSequence> deinterleave(const UnimodSequence& u, std::int64_t m) {
    if (m < 1 || u.length() % m != 0) throw PreconditionError("deinterleave: length not divisible by column count");
    std::vector<UnimodSequence> columns;
    for (std::int64_t c = 0; c < m; ++c) {
        std::vector<Phase> col;
        for (std::int64_t t = c; t < u.length(); t += m) col.push_back(u[t]);
        columns.emplace_back(std::move(col));
    }
    return columns;
}

SequenceSet build_laz_set(const ZFunc& f, const HMatrix& h) {
    const std::int64_t n = f.domain_size();
    if (h.order() != n) {
        throw PreconditionError("H order " + std::to_string(h.order()) + " differs from LPNF domain " + std::to_string(n));
    }
    if (const HReport report = verify_h_constraints(h); !report.pass) {
        throw PreconditionError("H (" + to_string(h.provenance()) + ") fails the companion constraints: max inner " +
                                std::to_string(report.max_offdiag_inner) + ", max modulated " +
                                std::to_string(report.max_modulated));
    }
    const SequenceSet a = build_a_matrix(f);
    std::vector<UnimodSequence> members;
    for (std::int64_t row = 0; row < n; ++row) {
        std::vector<UnimodSequence> columns;
        for (std::int64_t m = 0; m < n; ++m) columns.push_back(scale(a[m], h(row, m)));
        members.push_back(interleave(columns));
    }
    return SequenceSet(std::move(members));
}

LazParams params_for_zone(std::int64_t n, std::int64_t k, const LocalZone& zone, AfKind kind) {
    LazParams p;
    p.set_size = n;
    p.length = n * k;
    p.zone = {zone.zx, zone.zy};
    p.kind = kind;
    p.theta = static_cast<double>(kind == AfKind::periodic ? k : k + zone.zx - 1);
    return p;
}

LazParams predicted_params(std::int64_t n, std::int64_t k, AfKind kind) {
    return params_for_zone(n, k, lpnf_zone_for(n, k), kind);
}

}  // namespace laz
