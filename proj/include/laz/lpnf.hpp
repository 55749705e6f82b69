#pragma once

#include <cstdint>
#include <vector>

namespace laz {

/// Function table f: Z_N -> Z_K.
class ZFunc {
public:
    ZFunc(std::int64_t codomain, std::vector<std::int64_t> table);

    std::int64_t domain_size() const { return static_cast<std::int64_t>(table_.size()); }
    std::int64_t codomain_size() const { return codomain_; }
    /// f(x) with x reduced mod N.
    std::int64_t operator()(std::int64_t x) const;
    const std::vector<std::int64_t>& table() const { return table_; }

    friend bool operator==(const ZFunc&, const ZFunc&) = default;

private:
    std::int64_t codomain_;
    std::vector<std::int64_t> table_;
};

/// C = (-zx, zx) of shifts, D = (-zy, zy) of integer differences.
struct LocalZone {
    std::int64_t zx = 1;
    std::int64_t zy = 1;

    friend bool operator==(const LocalZone&, const LocalZone&) = default;
};

struct Nonlinearity {
    std::int64_t measure = 0;  ///< P_f
    std::int64_t a = 0;        ///< first maximizing shift
    std::int64_t b = 0;        ///< first maximizing difference (an integer in D)
};

/// Exact max over a in C\{0}, b in D of #{x : f(x+a) - f(x) = b (mod K)}.
/// Witness is the lexicographically first maximizer in (a, b).
Nonlinearity nonlinearity(const ZFunc& f, const LocalZone& zone);
std::int64_t nonlinearity_measure(const ZFunc& f, const LocalZone& zone);
bool is_lpnf(const ZFunc& f, const LocalZone& zone);

/// Global criterion: max solution count equals ceil(N / K).
bool is_pnf(const ZFunc& f);

/// x -> a2 x^2 + a1 x (mod N), viewed in Z_K.
ZFunc quad_lpnf(std::int64_t n, std::int64_t a2, std::int64_t a1, std::int64_t k);

/// Zone on which quad_lpnf(N, ., ., K) is locally perfect nonlinear.
LocalZone lpnf_zone_for(std::int64_t n, std::int64_t k);

/// x -> alpha^x mod p on Z_{p-1} -> Z_p.
ZFunc power_lpnf(std::int64_t p, std::int64_t alpha);

/// x -> f(<x+a>_N) - f(x) mod K.
std::vector<std::int64_t> diff_table(const ZFunc& f, std::int64_t a);

}  // namespace laz
