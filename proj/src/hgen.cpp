#include "laz/hgen.hpp"

#include <cmath>
#include <map>

#include "kernels.hpp"
#include "laz/arith.hpp"
#include "laz/error.hpp"
#include "laz/parallel.hpp"

namespace laz {

std::string to_string(HKind kind) {
    switch (kind) {
        case HKind::dft_submatrix: return "dft_submatrix";
        case HKind::legendre: return "legendre";
        case HKind::msequence: return "msequence";
        case HKind::bjorck: return "bjorck";
        case HKind::custom: return "custom";
    }
    return "custom";
}

HKind parse_hkind(const std::string& name) {
    static const std::map<std::string, HKind> names = {
        {"dft", HKind::dft_submatrix},  {"dft_submatrix", HKind::dft_submatrix},
        {"legendre", HKind::legendre},  {"mseq", HKind::msequence},
        {"msequence", HKind::msequence}, {"bjorck", HKind::bjorck},
        {"custom", HKind::custom}};
    const auto it = names.find(name);
    if (it == names.end()) throw PreconditionError("unknown H kind '" + name + "'");
    return it->second;
}

HMatrix::HMatrix(SequenceSet rows, HKind provenance) : rows_(std::move(rows)), provenance_(provenance) {
    if (rows_.size() != rows_.length()) throw PreconditionError("H must be square");
}

namespace {

HMatrix shifts_of(const UnimodSequence& first, HKind kind) {
    std::vector<UnimodSequence> rows;
    for (std::int64_t i = 0; i < first.length(); ++i) rows.push_back(cyclic_shift(first, i));
    return HMatrix(SequenceSet(std::move(rows)), kind);
}

void require_odd_prime(std::int64_t p, const char* what) {
    if (p < 3 || !is_prime(p)) {
        throw PreconditionError(std::string(what) + " needs an odd prime order (got " + std::to_string(p) + ")");
    }
}

int degree_of(std::uint64_t poly) {
    int d = -1;
    for (int k = 0; k < 64; ++k) {
        if (poly >> k & 1) d = k;
    }
    return d;
}

}  // namespace

HMatrix dft_submatrix(std::int64_t n) {
    if (n < 2) throw PreconditionError("dft_submatrix needs N >= 2");
    std::vector<UnimodSequence> rows;
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<Phase> row;
        for (std::int64_t c = 0; c < n; ++c) row.push_back(Phase::root(i * c, n + 1));
        rows.emplace_back(std::move(row));
    }
    return HMatrix(SequenceSet(std::move(rows)), HKind::dft_submatrix);
}

HMatrix legendre_shifts(std::int64_t n) {
    require_odd_prime(n, "legendre_shifts");
    std::vector<Phase> first;
    for (std::int64_t t = 0; t < n; ++t) first.push_back(Phase::rational(legendre_symbol(t, n) >= 0 ? 0 : 1, 2));
    return shifts_of(UnimodSequence(std::move(first)), HKind::legendre);
}

bool is_primitive_gf2(std::uint64_t poly) {
    const int m = degree_of(poly);
    if (m < 1 || m > 32 || !(poly & 1)) return false;
    // Maximal period from a nonzero state <=> primitive.
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    std::uint64_t state = full;  // bit k holds b(t-1-k)
    std::uint64_t period = 0;
    do {
        const std::uint64_t feedback = static_cast<std::uint64_t>(__builtin_parityll(state & (poly >> 1)));
        state = ((state << 1) | feedback) & full;
        ++period;
    } while (state != full && period <= full);
    return period == full;
}

std::uint64_t default_primitive_polynomial(int m) {
    if (m < 2 || m > 32) throw PreconditionError("m-sequence degree must lie in [2, 32]");
    const std::uint64_t lo = std::uint64_t{1} << m;
    for (std::uint64_t poly = lo | 1; poly < (lo << 1); poly += 2) {
        if (is_primitive_gf2(poly)) return poly;
    }
    throw PreconditionError("no primitive polynomial found");  // unreachable for m >= 1
}

std::vector<int> msequence_bits(int m, std::optional<std::uint64_t> poly) {
    if (m < 2) throw PreconditionError("m-sequence degree must be at least 2");
    const std::uint64_t c = poly ? *poly : default_primitive_polynomial(m);
    if (degree_of(c) != m) throw PreconditionError("polynomial degree does not match m");
    if (!is_primitive_gf2(c)) throw PreconditionError("polynomial is not primitive over GF(2)");
    const std::int64_t n = (std::int64_t{1} << m) - 1;
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int t = 0; t < m; ++t) b[static_cast<std::size_t>(t)] = 1;
    for (std::int64_t t = m; t < n; ++t) {
        int acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (c >> k & 1) acc ^= b[static_cast<std::size_t>(t - k)];
        }
        b[static_cast<std::size_t>(t)] = acc;
    }
    return b;
}

HMatrix msequence_shifts(int m, std::optional<std::uint64_t> poly) {
    std::vector<Phase> first;
    for (int bit : msequence_bits(m, poly)) first.push_back(Phase::rational(bit, 2));
    return shifts_of(UnimodSequence(std::move(first)), HKind::msequence);
}

HMatrix bjorck_shifts(std::int64_t p) {
    require_odd_prime(p, "bjorck_shifts");
    const double pd = static_cast<double>(p);
    std::vector<Phase> first;
    if (p % 4 == 1) {
        const double theta = std::acos(1.0 / (1.0 + std::sqrt(pd)));
        for (std::int64_t t = 0; t < p; ++t) {
            const int chi = legendre_symbol(t, p);
            first.push_back(chi == 0 ? Phase{} : Phase::angle(theta * chi));
        }
    } else {
        const double phi = std::acos((1.0 - pd) / (1.0 + pd));
        for (std::int64_t t = 0; t < p; ++t) {
            first.push_back(legendre_symbol(t, p) == -1 ? Phase::angle(phi) : Phase{});
        }
    }
    return shifts_of(UnimodSequence(std::move(first)), HKind::bjorck);
}

HMatrix make_h(HKind kind, std::int64_t n) {
    switch (kind) {
        case HKind::dft_submatrix: return dft_submatrix(n);
        case HKind::legendre: return legendre_shifts(n);
        case HKind::bjorck: return bjorck_shifts(n);
        case HKind::msequence: {
            int m = 1;
            while (((std::int64_t{1} << m) - 1) < n && m < 62) ++m;
            if (((std::int64_t{1} << m) - 1) != n) {
                throw PreconditionError("m-sequence order must be 2^m - 1 (got " + std::to_string(n) + ")");
            }
            return msequence_shifts(m);
        }
        case HKind::custom: break;
    }
    throw PreconditionError("custom H matrices must be loaded from a file");
}

std::vector<std::int64_t> supported_orders(HKind kind, std::int64_t max_order) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 2; n <= max_order; ++n) {
        switch (kind) {
            case HKind::dft_submatrix: out.push_back(n); break;
            case HKind::legendre:
                if (n > 2 && is_prime(n) && n % 4 == 3) out.push_back(n);
                break;
            case HKind::bjorck:
                // p = 3, 5: the phase is exactly 2 pi / p, so shifts are modulations of each other.
                if (n >= 7 && is_prime(n)) out.push_back(n);
                break;
            case HKind::msequence:
                if (n >= 3 && ((n + 1) & n) == 0) out.push_back(n);
                break;
            case HKind::custom: break;
        }
    }
    return out;
}

HReport verify_h_constraints(const HMatrix& h) {
    const std::int64_t n = h.order();
    const auto exps = detail::exponents_of(h.rows().members());
    const double tol = exps ? 1e-12 : 1e-9;
    const double margin = exps ? 1e-12 : 1e-6;
    const std::optional<detail::RootTable> roots =
        exps ? std::optional<detail::RootTable>(std::in_place, exps->denominator) : std::nullopt;
    const ComplexMatrix<double> values = exps ? ComplexMatrix<double>() : h.matrix();

    struct PairResult {
        double inner = 0.0;
        double modulated = 0.0;
        std::int64_t v = 0;
    };
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<PairResult> results(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        ComplexVector<double> prod(n);
        for (std::int64_t c = 0; c < n; ++c) {
            if (exps) {
                const auto& ri = exps->rows[static_cast<std::size_t>(i)];
                const auto& rj = exps->rows[static_cast<std::size_t>(j)];
                prod(c) = (*roots)[mod(ri[static_cast<std::size_t>(c)] - rj[static_cast<std::size_t>(c)], exps->denominator)];
            } else {
                prod(c) = values(i, c) * std::conj(values(j, c));
            }
        }
        const ComplexVector<double> row = detail::doppler_transform(prod);
        PairResult r;
        r.inner = std::abs(prod.sum());
        for (std::int64_t v = 0; v < n; ++v) {
            const double mag = std::abs(row(v));
            if (mag > r.modulated + 1e-9) r = {r.inner, mag, v};
        }
        results[k] = r;
    });

    HReport report;
    bool first = true;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& r = results[k];
        report.max_offdiag_inner = std::max(report.max_offdiag_inner, r.inner);
        if (first || r.modulated > report.max_modulated + 1e-9) {
            report.max_modulated = r.modulated;
            report.i = pairs[k].first;
            report.j = pairs[k].second;
            report.v = r.v;
            first = false;
        }
    }
    report.pass = report.max_offdiag_inner <= 1.0 + tol &&
                  report.max_modulated <= static_cast<double>(n) - margin;
    return report;
}

}  // namespace laz
