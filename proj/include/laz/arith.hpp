#pragma once

#include <cstdint>
#include <numeric>

namespace laz {

// Non-negative residue of x modulo m (m > 0).
constexpr std::int64_t mod(std::int64_t x, std::int64_t m) {
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

// Floor division for m > 0.
constexpr std::int64_t floor_div(std::int64_t x, std::int64_t m) {
    return (x - mod(x, m)) / m;
}

constexpr std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// Trial division; inputs are desk-scale.
constexpr std::int64_t smallest_prime_factor(std::int64_t n) {
    if (n < 2) return n;
    if (n % 2 == 0) return 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return d;
    }
    return n;
}

constexpr bool is_prime(std::int64_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

constexpr std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t result = 1 % m;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

// Multiplicative order of a modulo prime p; 0 if a is divisible by p.
constexpr std::int64_t multiplicative_order(std::int64_t a, std::int64_t p) {
    a = mod(a, p);
    if (a == 0) return 0;
    std::int64_t x = a;
    std::int64_t k = 1;
    while (x != 1) {
        x = x * a % p;
        ++k;
    }
    return k;
}

constexpr bool is_primitive_root(std::int64_t a, std::int64_t p) {
    return is_prime(p) && multiplicative_order(a, p) == p - 1;
}

// Legendre symbol (t | p) for odd prime p: 0, +1 or -1.
constexpr int legendre_symbol(std::int64_t t, std::int64_t p) {
    t = mod(t, p);
    if (t == 0) return 0;
    return pow_mod(t, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace laz
