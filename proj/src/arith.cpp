#include "collatz/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace collatz {

Residue make_residue(std::uint64_t value, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("modulus must be positive");
    return Residue{value % modulus, modulus};
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    // extended Euclid on (a, m)
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = m, new_r = a % m;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(m))
                 : static_cast<std::uint64_t>(t);
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = 1;
    for (auto [p, e] : factorize(n)) {
        std::uint64_t pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

Nat t_step(const Nat& x) {
    if (x < 1) throw std::invalid_argument("t_step requires x >= 1");
    if (mpz_even_p(x.get_mpz_t())) return x / 2;
    return (3 * x + 1) / 2;
}

std::vector<Nat> t_orbit(const Nat& x, std::uint64_t steps) {
    std::vector<Nat> orbit;
    orbit.reserve(steps + 1);
    orbit.push_back(x);
    for (std::uint64_t i = 0; i < steps; ++i)
        orbit.push_back(t_step(orbit.back()));
    return orbit;
}

Nat e_step(const Nat& x) {
    if (x < 1) throw std::invalid_argument("e_step requires x >= 1");
    if (mpz_even_p(x.get_mpz_t())) return 3 * x / 2;
    return (x + 1) / 2;
}

std::uint64_t mult_order(const Residue& a) {
    if (a.modulus < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
    if (gcd64(a.value % a.modulus, a.modulus) != 1)
        throw std::invalid_argument("mult_order: value not coprime to modulus");
    // The order divides phi(m); strip prime factors while the power stays 1.
    std::uint64_t k = euler_phi(a.modulus);
    for (auto [p, e] : factorize(k)) {
        (void)e;
        while (k % p == 0 && pow_mod(a.value, k / p, a.modulus) == 1) k /= p;
    }
    return k;
}

std::strong_ordering cmp_log_ratio(const RedFraction& f, const LogBase& base) {
    if (f.total_count == 0)
        throw std::invalid_argument("cmp_log_ratio: total_count must be >= 1");
    if (f.red_count > f.total_count)
        throw std::invalid_argument("cmp_log_ratio: red_count exceeds total_count");
    Nat lhs, rhs;
    if (base.m == 0) {
        // r/n vs ln2/ln3  <=>  3^r vs 2^n
        mpz_ui_pow_ui(lhs.get_mpz_t(), 3, f.red_count);
        mpz_ui_pow_ui(rhs.get_mpz_t(), 2, f.total_count);
    } else {
        // r/n vs ln2/ln(3+1/m)  <=>  (3m+1)^r vs 2^n * m^r
        Nat b = 3 * base.m + 1;
        mpz_pow_ui(lhs.get_mpz_t(), b.get_mpz_t(), f.red_count);
        mpz_pow_ui(rhs.get_mpz_t(), base.m.get_mpz_t(), f.red_count);
        rhs <<= f.total_count;
    }
    int c = cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace collatz
