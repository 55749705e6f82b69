#include "laz/lpnf.hpp"

#include <numeric>
#include <string>

#include "laz/arith.hpp"
#include "laz/error.hpp"

namespace laz {

ZFunc::ZFunc(std::int64_t codomain, std::vector<std::int64_t> table)
    : codomain_(codomain), table_(std::move(table)) {
    if (codomain_ < 1) throw PreconditionError("codomain size must be positive");
    if (table_.empty()) throw PreconditionError("domain size must be positive");
    for (std::int64_t y : table_) {
        if (y < 0 || y >= codomain_) throw PreconditionError("table entry outside [0, K)");
    }
}

std::int64_t ZFunc::operator()(std::int64_t x) const {
    return table_[static_cast<std::size_t>(mod(x, domain_size()))];
}

Nonlinearity nonlinearity(const ZFunc& f, const LocalZone& zone) {
    const std::int64_t n = f.domain_size();
    const std::int64_t k = f.codomain_size();
    if (zone.zx < 1 || zone.zx > n || zone.zy < 1 || zone.zy > k) {
        throw PreconditionError("local zone must satisfy 0 < zx <= N and 0 < zy <= K");
    }
    Nonlinearity best;
    std::vector<std::int64_t> hist(static_cast<std::size_t>(k));
    for (std::int64_t a = -zone.zx + 1; a < zone.zx; ++a) {
        if (a == 0) continue;
        std::fill(hist.begin(), hist.end(), 0);
        for (std::int64_t x = 0; x < n; ++x) ++hist[static_cast<std::size_t>(mod(f(x + a) - f(x), k))];
        for (std::int64_t b = -zone.zy + 1; b < zone.zy; ++b) {
            const std::int64_t count = hist[static_cast<std::size_t>(mod(b, k))];
            if (count > best.measure) best = {count, a, b};
        }
    }
    return best;
}

std::int64_t nonlinearity_measure(const ZFunc& f, const LocalZone& zone) {
    return nonlinearity(f, zone).measure;
}

bool is_lpnf(const ZFunc& f, const LocalZone& zone) { return nonlinearity_measure(f, zone) == 1; }

bool is_pnf(const ZFunc& f) {
    const std::int64_t n = f.domain_size();
    const std::int64_t k = f.codomain_size();
    if (n == 1) return true;  // no nonzero shift exists
    const std::int64_t expected = (n + k - 1) / k;
    return nonlinearity_measure(f, {n, k}) == expected;
}

namespace {

void require_odd_modulus(std::int64_t n, std::int64_t k) {
    if (n <= 2 || n % 2 == 0) throw PreconditionError("N must be odd and greater than 2 (N=" + std::to_string(n) + ")");
    if (k < n) throw PreconditionError("K must satisfy K >= N (K=" + std::to_string(k) + ", N=" + std::to_string(n) + ")");
}

}  // namespace

ZFunc quad_lpnf(std::int64_t n, std::int64_t a2, std::int64_t a1, std::int64_t k) {
    require_odd_modulus(n, k);
    if (std::gcd(mod(a2, n), n) != 1) {
        throw PreconditionError("gcd(a2, N) must be 1 (a2=" + std::to_string(a2) + ", N=" + std::to_string(n) + ")");
    }
    if (a1 < 0 || a1 >= n) throw PreconditionError("a1 must lie in [0, N)");
    std::vector<std::int64_t> table(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x) {
        table[static_cast<std::size_t>(x)] = mod(mod(a2, n) * (x * x % n) + a1 * x, n);
    }
    return ZFunc(k, std::move(table));
}

LocalZone lpnf_zone_for(std::int64_t n, std::int64_t k) {
    require_odd_modulus(n, k);
    const std::int64_t p = smallest_prime_factor(n);
    if (k == n) return {p, n};
    if (k < 2 * n - 1) return {p, k - n + 1};
    return {p, k};
}

ZFunc power_lpnf(std::int64_t p, std::int64_t alpha) {
    if (!is_prime(p)) throw PreconditionError("power map needs a prime modulus (p=" + std::to_string(p) + ")");
    if (p < 3) throw PreconditionError("power map needs p >= 3");
    if (!is_primitive_root(alpha, p)) {
        throw PreconditionError("alpha=" + std::to_string(alpha) + " is not a primitive root mod " + std::to_string(p));
    }
    std::vector<std::int64_t> table(static_cast<std::size_t>(p - 1));
    std::int64_t y = 1;
    for (auto& entry : table) {
        entry = y;
        y = y * mod(alpha, p) % p;
    }
    return ZFunc(p, std::move(table));
}

std::vector<std::int64_t> diff_table(const ZFunc& f, std::int64_t a) {
    const std::int64_t n = f.domain_size();
    if (mod(a, n) == 0) throw PreconditionError("difference shift must be nonzero mod N");
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    for (std::int64_t x = 0; x < n; ++x) {
        out[static_cast<std::size_t>(x)] = mod(f(x + a) - f(x), f.codomain_size());
    }
    return out;
}

}  // namespace laz
