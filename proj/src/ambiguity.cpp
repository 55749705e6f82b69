#include "laz/ambiguity.hpp"

#include <cmath>

#include "kernels.hpp"
#include "laz/arith.hpp"
#include "laz/error.hpp"
#include "laz/parallel.hpp"

namespace laz {

struct AfEvaluator::Impl {
    std::int64_t length = 0;
    std::int64_t size = 0;
    // Exact path: s_i(t) = omega_D^{e(i,t)}, summed on omega_Q, Q = lcm(D, N).
    std::optional<detail::ExponentSet> exps;
    std::int64_t q = 0;
    std::int64_t scale_d = 0;  // Q / D
    std::int64_t scale_n = 0;  // Q / N
    std::optional<detail::RootTable> roots;
    // Float path.
    ComplexMatrix<double> samples;
    std::optional<detail::RootTable> doppler;

    // [t_begin, t_end) of valid t for this delay, and whether the partner index wraps.
    std::pair<std::int64_t, std::int64_t> range(std::int64_t tau, AfKind kind) const {
        if (kind == AfKind::periodic) return {0, length};
        if (tau >= length || tau <= -length) return {0, 0};
        return tau >= 0 ? std::pair{std::int64_t{0}, length - tau} : std::pair{-tau, length};
    }

    std::int64_t partner(std::int64_t t, std::int64_t tau, AfKind kind) const {
        return kind == AfKind::periodic ? mod(t + tau, length) : t + tau;
    }

    std::complex<double> lag_product(std::int64_t i, std::int64_t j, std::int64_t t, std::int64_t u) const {
        if (exps) {
            const auto& ri = exps->rows[static_cast<std::size_t>(i)];
            const auto& rj = exps->rows[static_cast<std::size_t>(j)];
            return (*roots)[mod(ri[static_cast<std::size_t>(t)] - rj[static_cast<std::size_t>(u)], exps->denominator) * scale_d];
        }
        return samples(i, t) * std::conj(samples(j, u));
    }
};

AfEvaluator::AfEvaluator(const SequenceSet& set) : impl_(std::make_unique<Impl>()) {
    impl_->length = set.length();
    impl_->size = set.size();
    impl_->exps = detail::exponents_of(set.members());
    if (impl_->exps) {
        const std::int64_t q = lcm(impl_->exps->denominator, set.length());
        if (q > detail::kMaxRootTable) {
            impl_->exps.reset();
        } else {
            impl_->q = q;
            impl_->scale_d = q / impl_->exps->denominator;
            impl_->scale_n = q / set.length();
            impl_->roots.emplace(q);
        }
    }
    if (!impl_->exps) {
        impl_->samples = to_matrix<double>(set);
        impl_->doppler.emplace(set.length());
    }
}

AfEvaluator::~AfEvaluator() = default;
AfEvaluator::AfEvaluator(AfEvaluator&&) noexcept = default;
AfEvaluator& AfEvaluator::operator=(AfEvaluator&&) noexcept = default;

std::int64_t AfEvaluator::length() const { return impl_->length; }
std::int64_t AfEvaluator::size() const { return impl_->size; }
bool AfEvaluator::exact() const { return impl_->exps.has_value(); }

std::complex<double> AfEvaluator::point(std::int64_t i, std::int64_t j, std::int64_t tau, std::int64_t v,
                                        AfKind kind) const {
    const Impl& d = *impl_;
    const auto [lo, hi] = d.range(tau, kind);
    const std::int64_t vv = mod(v, d.length);
    std::complex<double> acc{0.0, 0.0};
    if (d.exps) {
        const auto& ri = d.exps->rows[static_cast<std::size_t>(i)];
        const auto& rj = d.exps->rows[static_cast<std::size_t>(j)];
        const std::int64_t step = vv * d.scale_n % d.q;
        std::int64_t doppler = lo * step % d.q;
        for (std::int64_t t = lo; t < hi; ++t) {
            const std::int64_t u = d.partner(t, tau, kind);
            const std::int64_t e = (ri[static_cast<std::size_t>(t)] - rj[static_cast<std::size_t>(u)]) * d.scale_d + doppler;
            acc += (*d.roots)[mod(e, d.q)];
            doppler += step;
            if (doppler >= d.q) doppler -= d.q;
        }
        return acc;
    }
    for (std::int64_t t = lo; t < hi; ++t) {
        const std::int64_t u = d.partner(t, tau, kind);
        acc += d.samples(i, t) * std::conj(d.samples(j, u)) * (*d.doppler)[vv * t % d.length];
    }
    return acc;
}

ComplexVector<double> AfEvaluator::row(std::int64_t i, std::int64_t j, std::int64_t tau, AfKind kind) const {
    const Impl& d = *impl_;
    const auto [lo, hi] = d.range(tau, kind);
    ComplexVector<double> prod = ComplexVector<double>::Zero(d.length);
    for (std::int64_t t = lo; t < hi; ++t) prod(t) = d.lag_product(i, j, t, d.partner(t, tau, kind));
    return detail::doppler_transform(prod);
}

namespace {

void require_same_length(const UnimodSequence& a, const UnimodSequence& b) {
    if (a.length() != b.length()) throw PreconditionError("AF operands must have equal lengths");
}

}  // namespace

std::complex<double> af(const UnimodSequence& a, const UnimodSequence& b, std::int64_t tau, std::int64_t v,
                        AfKind kind) {
    require_same_length(a, b);
    return AfEvaluator(SequenceSet({a, b})).point(0, 1, tau, v, kind);
}

std::complex<double> periodic_af(const UnimodSequence& a, const UnimodSequence& b, std::int64_t tau, std::int64_t v) {
    return af(a, b, tau, v, AfKind::periodic);
}

std::complex<double> aperiodic_af(const UnimodSequence& a, const UnimodSequence& b, std::int64_t tau, std::int64_t v) {
    return af(a, b, tau, v, AfKind::aperiodic);
}

ComplexVector<double> af_row(const UnimodSequence& a, const UnimodSequence& b, std::int64_t tau, AfKind kind) {
    require_same_length(a, b);
    return AfEvaluator(SequenceSet({a, b})).row(0, 1, tau, kind);
}

std::int64_t delta_k(std::int64_t x, std::int64_t k) {
    if (k < 1) throw PreconditionError("delta_K needs K >= 1");
    return mod(x, k) == 0 ? k : 0;
}

std::complex<double> structural_af(const ZFunc& f, const HMatrix& h, std::int64_t i, std::int64_t j,
                                   std::int64_t tau, std::int64_t v, AfKind kind) {
    const std::int64_t n = f.domain_size();
    const std::int64_t k = f.codomain_size();
    const std::int64_t len = n * k;
    if (h.order() != n) throw PreconditionError("structural_af: H order differs from LPNF domain");
    if (kind == AfKind::aperiodic && (tau >= len || tau <= -len)) return {0.0, 0.0};

    // tau = N tau1 + tau2 with 0 <= tau2 < N.
    const std::int64_t shifted = kind == AfKind::periodic ? mod(tau, len) : tau;
    const std::int64_t tau1 = floor_div(shifted, n);
    const std::int64_t tau2 = shifted - n * tau1;

    std::complex<double> total{0.0, 0.0};
    for (std::int64_t c = 0; c < n; ++c) {
        const bool wrapped = c + tau2 >= n;
        const std::int64_t m = wrapped ? c + tau2 - n : c + tau2;
        const std::int64_t d = tau1 + (wrapped ? 1 : 0);
        const std::int64_t diff = f(c) - f(m) + v;

        // Inner AF of a_c against a_m at row lag d: omega_K^{-d f(m)} sum_t omega_K^{t diff}.
        std::complex<double> inner = static_cast<double>(delta_k(diff, k));
        if (kind == AfKind::aperiodic && d != 0) {
            // Remove the |d| rows that fall off either end of the K x N array.
            const std::int64_t first = d > 0 ? std::max<std::int64_t>(0, k - d) : 0;
            const std::int64_t last = d > 0 ? k : std::min(k, -d);
            for (std::int64_t t = first; t < last; ++t) inner -= Phase::root(diff * t, k).value();
        }
        if (inner == std::complex<double>{0.0, 0.0}) continue;
        const Phase outer = h(i, c) * h(j, m).conj() * Phase::root(mod(v, len) * c, len) *
                            Phase::root(-d * f(m), k);
        total += outer.value() * inner;
    }
    return total;
}

AfGrid af_grid(const SequenceSet& set, std::int64_t i, std::int64_t j, const Zone& zone, AfKind kind) {
    if (zone.zx < 1 || zone.zy < 1 || zone.zx > set.length() || zone.zy > set.length()) {
        throw PreconditionError("zone must satisfy 0 < zx, zy <= sequence length");
    }
    if (i < 0 || j < 0 || i >= set.size() || j >= set.size()) throw PreconditionError("member index out of range");
    AfEvaluator eval(set);
    AfGrid grid;
    grid.tau_min = -zone.zx + 1;
    grid.tau_max = zone.zx - 1;
    grid.v_min = -zone.zy + 1;
    grid.v_max = zone.zy - 1;
    grid.i = i;
    grid.j = j;
    grid.kind = kind;
    grid.values.resize(2 * zone.zx - 1, 2 * zone.zy - 1);
    const std::int64_t len = set.length();
    parallel_for(static_cast<std::size_t>(2 * zone.zx - 1), [&](std::size_t r) {
        const std::int64_t tau = grid.tau_min + static_cast<std::int64_t>(r);
        const ComplexVector<double> row = eval.row(i, j, tau, kind);
        for (std::int64_t v = grid.v_min; v <= grid.v_max; ++v) grid.values(static_cast<Eigen::Index>(r), v - grid.v_min) = row(mod(v, len));
    });
    return grid;
}

namespace {

// Magnitudes within this of the maximum count as ties.
double tie_tolerance(double best) { return 1e-9 * std::max(1.0, best); }

}  // namespace

ThetaReport theta_max(const SequenceSet& set, const Zone& zone, AfKind kind, AfMethod method) {
    const std::int64_t len = set.length();
    if (zone.zx < 1 || zone.zy < 1 || zone.zx > len || zone.zy > len) {
        throw PreconditionError("zone must satisfy 0 < zx, zy <= sequence length");
    }
    const std::int64_t dopplers = 2 * zone.zy - 1;
    if (method == AfMethod::automatic) {
        const double log_len = std::log2(static_cast<double>(len)) + 1.0;
        method = static_cast<double>(dopplers) <= 4.0 * log_len + 8.0 ? AfMethod::direct : AfMethod::fft;
    }
    const AfEvaluator eval(set);
    const std::int64_t m = set.size();

    // Per ordered pair: exact maximum plus the first (tau, v) within tie tolerance of it.
    std::vector<AfWitness> per_pair(static_cast<std::size_t>(m * m));
    parallel_for(per_pair.size(), [&](std::size_t idx) {
        const std::int64_t i = static_cast<std::int64_t>(idx) / m;
        const std::int64_t j = static_cast<std::int64_t>(idx) % m;
        std::vector<AfWitness> points;
        points.reserve(static_cast<std::size_t>((2 * zone.zx - 1) * dopplers));
        double peak = -1.0;
        for (std::int64_t tau = -zone.zx + 1; tau < zone.zx; ++tau) {
            ComplexVector<double> row;
            if (method == AfMethod::fft) row = eval.row(i, j, tau, kind);
            for (std::int64_t v = -zone.zy + 1; v < zone.zy; ++v) {
                if (i == j && tau == 0 && v == 0) continue;
                const double mag = std::abs(method == AfMethod::fft ? row(mod(v, len)) : eval.point(i, j, tau, v, kind));
                points.push_back({i, j, tau, v, mag});
                peak = std::max(peak, mag);
            }
        }
        AfWitness best{i, j, 0, 0, -1.0};
        for (const AfWitness& w : points) {
            if (w.magnitude >= peak - tie_tolerance(peak)) {
                best = w;
                best.magnitude = peak;
                break;
            }
        }
        per_pair[idx] = best;
    });

    auto reduce = [&](auto&& keep) {
        AfWitness best{0, 0, 0, 0, -1.0};
        for (const AfWitness& w : per_pair) {
            if (w.magnitude >= 0.0 && keep(w) && w.magnitude > best.magnitude) best = w;
        }
        // First pair (in (i, j) order) that ties the maximum.
        for (const AfWitness& w : per_pair) {
            if (w.magnitude >= 0.0 && keep(w) && w.magnitude >= best.magnitude - tie_tolerance(best.magnitude)) {
                return AfWitness{w.i, w.j, w.tau, w.v, best.magnitude};
            }
        }
        return AfWitness{0, 0, 0, 0, 0.0};
    };

    ThetaReport report;
    report.witness_a = reduce([](const AfWitness& w) { return w.i == w.j; });
    report.witness_c = reduce([](const AfWitness& w) { return w.i != w.j; });
    report.witness = reduce([](const AfWitness&) { return true; });
    report.theta_a = report.witness_a.magnitude;
    report.theta_c = report.witness_c.magnitude;
    report.theta_max = report.witness.magnitude;
    return report;
}

}  // namespace laz
