#pragma once

// Exact integer and modular arithmetic shared by every other module,
// plus the 3x+1 dynamics primitives T and E.

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace collatz {

// Arbitrary-precision nonnegative integer. Orbits and back traced values
// are always held exactly; there is no overflow regime anywhere.
using Nat = mpz_class;

// A congruence class value mod modulus, kept normalized to [0, modulus).
struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 1;

    friend bool operator==(const Residue&, const Residue&) = default;
};

Residue make_residue(std::uint64_t value, std::uint64_t modulus);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t gcd64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm64(std::uint64_t a, std::uint64_t b);

// Inverse of a mod m; requires gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// (prime, exponent) pairs by trial division, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// T(x) = x/2 for even x, (3x+1)/2 for odd x. Requires x >= 1.
Nat t_step(const Nat& x);

// [x, T(x), ..., T^steps(x)], so steps+1 entries.
std::vector<Nat> t_orbit(const Nat& x, std::uint64_t steps);

// E(x) = 3x/2 for even x, (x+1)/2 for odd x; conjugate of T by x+1:
// e_step(x) = t_step(x-1) + 1 for x >= 2.
Nat e_step(const Nat& x);

// Smallest k >= 1 with a^k = 1 mod modulus. Requires modulus >= 2 and
// gcd(value, modulus) = 1 (throws std::invalid_argument otherwise).
std::uint64_t mult_order(const Residue& a);

// A ratio of red arrows: red_count successes out of total_count arrows.
struct RedFraction {
    std::uint64_t red_count = 0;
    std::uint64_t total_count = 1;
};

// The comparison base for cmp_log_ratio: ln2/ln3 when m == 0, otherwise
// ln2/ln(3 + 1/m).
struct LogBase {
    Nat m = 0;

    static LogBase three() { return LogBase{0}; }
    static LogBase three_plus_inv(Nat m) { return LogBase{std::move(m)}; }
};

// Exact three-way comparison of red_count/total_count against the base,
// by integer powering only: r/n <=> ln2/ln3 reduces to 3^r <=> 2^n, and
// r/n <=> ln2/ln(3+1/m) reduces to (3m+1)^r <=> 2^n * m^r. No floating
// point is involved; criteria that need strict inequalities treat
// equivalent as failure.
std::strong_ordering cmp_log_ratio(const RedFraction& f, const LogBase& base);

}  // namespace collatz
