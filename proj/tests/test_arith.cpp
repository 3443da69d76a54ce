#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <random>

#include "collatz/arith.hpp"

using namespace collatz;

TEST_CASE("t_step basics") {
    CHECK(t_step(7) == 11);
    CHECK(t_step(2) == 1);
    CHECK(t_step(26) == 13);
    CHECK_THROWS_AS(t_step(0), std::invalid_argument);
}

TEST_CASE("t_orbit reproduces the 7 orbit") {
    std::vector<Nat> want = {7, 11, 17, 26, 13, 20, 10, 5, 8, 4, 2, 1};
    CHECK(t_orbit(7, 11) == want);
    CHECK(t_orbit(1, 4) == std::vector<Nat>{1, 2, 1, 2, 1});
    CHECK(t_orbit(8, 3) == std::vector<Nat>{8, 4, 2, 1});
}

TEST_CASE("e_step and the E orbit of 8") {
    CHECK(e_step(8) == 12);
    CHECK(e_step(27) == 14);
    CHECK(e_step(2) == 3);
    CHECK(e_step(3) == 2);
    std::vector<Nat> orbit = {8};
    for (int i = 0; i < 11; ++i) orbit.push_back(e_step(orbit.back()));
    CHECK(orbit == std::vector<Nat>{8, 12, 18, 27, 14, 21, 11, 6, 9, 5, 3, 2});
}

TEST_CASE("t_step matches parity-split arithmetic and E conjugacy up to 1e6") {
    for (std::uint64_t x = 1; x <= 1000000; ++x) {
        Nat tx = t_step(x);
        Nat want = (x % 2 == 0) ? Nat(x / 2) : Nat((3 * Nat(x) + 1) / 2);
        REQUIRE(tx == want);
        if (x >= 2) REQUIRE(e_step(x) == t_step(Nat(x) - 1) + 1);
    }
}

TEST_CASE("mult_order examples") {
    CHECK(mult_order(make_residue(2, 9)) == 6);
    CHECK(mult_order(make_residue(2, 7)) == 3);
    CHECK(mult_order(make_residue(1, 5)) == 1);
    CHECK(mult_order(make_residue(1, 999)) == 1);
    CHECK_THROWS_AS(mult_order(make_residue(3, 9)), std::invalid_argument);
    CHECK_THROWS_AS(mult_order(make_residue(2, 1)), std::invalid_argument);
}

TEST_CASE("mult_order divides phi and matches naive powering") {
    for (std::uint64_t m = 2; m <= 2000; ++m) {
        std::uint64_t phi = euler_phi(m);
        for (std::uint64_t a = 1; a < m; ++a) {
            if (gcd64(a, m) != 1) continue;
            std::uint64_t k = mult_order(make_residue(a, m));
            REQUIRE(phi % k == 0);
            REQUIRE(pow_mod(a, k, m) == 1);
        }
    }
    // naive cross-check on sampled moduli up to 1e4
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t m = 2 + rng() % 9999;
        std::uint64_t a = 1 + rng() % (m - 1);
        if (gcd64(a, m) != 1) continue;
        std::uint64_t k = mult_order(make_residue(a, m));
        std::uint64_t v = a % m;
        for (std::uint64_t i = 1; i < k; ++i) {
            REQUIRE(v != 1);
            v = mul_mod(v, a, m);
        }
        REQUIRE((v == 1 || k == 1));
    }
}

TEST_CASE("cmp_log_ratio examples") {
    CHECK((cmp_log_ratio({2, 3}, LogBase::three()) == std::strong_ordering::greater));
    CHECK((cmp_log_ratio({1, 2}, LogBase::three()) == std::strong_ordering::less));
    CHECK((cmp_log_ratio({0, 5}, LogBase::three()) == std::strong_ordering::less));
    Nat m = Nat(1) << 60;
    CHECK((cmp_log_ratio({0, 5}, LogBase::three_plus_inv(m)) == std::strong_ordering::less));
    // ln2/ln(3+1/m) is slightly below ln2/ln3, so 2/3 still lands above it
    CHECK((cmp_log_ratio({2, 3}, LogBase::three_plus_inv(m)) == std::strong_ordering::greater));
}

static std::strong_ordering mpfr_ratio_cmp(std::uint64_t r, std::uint64_t n, bool plus_inv,
                                     double* out_gap) {
    mpfr_t ratio, bound, num, den;
    mpfr_inits2(256, ratio, bound, num, den, (mpfr_ptr) nullptr);
    mpfr_set_ui(ratio, r, MPFR_RNDN);
    mpfr_div_ui(ratio, ratio, n, MPFR_RNDN);
    mpfr_set_ui(num, 2, MPFR_RNDN);
    mpfr_log(num, num, MPFR_RNDN);
    if (plus_inv) {
        mpfr_set_ui(den, 1, MPFR_RNDN);
        mpfr_div_2ui(den, den, 60, MPFR_RNDN);
        mpfr_add_ui(den, den, 3, MPFR_RNDN);
    } else {
        mpfr_set_ui(den, 3, MPFR_RNDN);
    }
    mpfr_log(den, den, MPFR_RNDN);
    mpfr_div(bound, num, den, MPFR_RNDN);
    int c = mpfr_cmp(ratio, bound);
    mpfr_sub(ratio, ratio, bound, MPFR_RNDN);
    *out_gap = std::abs(mpfr_get_d(ratio, MPFR_RNDN));
    mpfr_clears(ratio, bound, num, den, (mpfr_ptr) nullptr);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

TEST_CASE("cmp_log_ratio agrees with 256-bit floating comparison") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        std::uint64_t n = 1 + rng() % 10000;
        std::uint64_t r = rng() % (n + 1);
        for (bool plus_inv : {false, true}) {
            auto base = plus_inv ? LogBase::three_plus_inv(Nat(1) << 60)
                                 : LogBase::three();
            double gap = 0;
            auto fl = mpfr_ratio_cmp(r, n, plus_inv, &gap);
            auto exact = cmp_log_ratio({r, n}, base);
            // the big-integer verdict is authoritative; floating agreement is
            // only demanded outside a tiny error band around the bound
            if (gap > 1e-60) REQUIRE((exact == fl));
        }
    }
}

TEST_CASE("cmp_log_ratio equality is impossible for r,n >= 1") {
    for (std::uint64_t n = 1; n <= 64; ++n)
        for (std::uint64_t r = 1; r <= n; ++r)
            CHECK((cmp_log_ratio({r, n}, LogBase::three()) != std::strong_ordering::equal));
}

TEST_CASE("helper arithmetic") {
    CHECK(inv_mod(2, 9) == 5);
    CHECK(inv_mod(3, 16) == 11);
    CHECK_THROWS_AS(inv_mod(3, 9), std::invalid_argument);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(1000) == 400);
    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(f[1] == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(f[2] == std::pair<std::uint64_t, unsigned>{5, 1});
}
