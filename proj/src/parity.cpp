#include "collatz/parity.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace collatz {

namespace {

constexpr unsigned kMaxExponent = 62;

void check_exponent(unsigned n) {
    if (n < 1 || n > kMaxExponent)
        throw std::invalid_argument("power-of-two exponent out of range");
}

// modulus must be 2^n; returns n
unsigned exponent_of(std::uint64_t modulus) {
    if (modulus < 2 || (modulus & (modulus - 1)) != 0)
        throw std::invalid_argument("modulus is not a power of two");
    unsigned n = 0;
    while ((std::uint64_t(1) << n) != modulus) ++n;
    return n;
}

}  // namespace

ParityBits make_parity_bits(std::initializer_list<int> bits) {
    ParityBits v;
    v.bits.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("parity bits must be 0 or 1");
        v.bits.push_back(static_cast<std::uint8_t>(b));
    }
    return v;
}

ParityBits parity_vector(const Nat& x, unsigned n) {
    check_exponent(n);
    if (x < 0) throw std::invalid_argument("parity_vector requires x >= 0");
    Nat rem = x % (Nat(1) << n);
    std::uint64_t v = rem.get_ui();
    ParityBits out;
    out.bits.resize(n);
    if (n <= 38) {
        // values stay below 2^38 * (3/2)^38 < 2^61
        for (unsigned i = 0; i < n; ++i) {
            out.bits[i] = static_cast<std::uint8_t>(v & 1);
            v = (v & 1) ? (3 * v + 1) / 2 : v / 2;
        }
    } else {
        Nat w = v;
        for (unsigned i = 0; i < n; ++i) {
            bool odd = mpz_odd_p(w.get_mpz_t());
            out.bits[i] = odd ? 1 : 0;
            if (odd)
                w = (3 * w + 1) / 2;
            else
                w /= 2;
        }
    }
    return out;
}

Residue phi_mod(const ParityBits& v) {
    unsigned n = static_cast<unsigned>(v.size());
    check_exponent(n);
    std::uint64_t x = 0;       // bits recovered so far
    std::uint64_t c = 0;       // T^i(x) = (3^r x + c) / 2^i
    std::uint64_t three_r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (v[i] > 1) throw std::invalid_argument("parity bits must be 0 or 1");
        std::uint64_t mod = std::uint64_t(1) << (i + 1);
        std::uint64_t mask = mod - 1;
        std::uint64_t rhs =
            ((std::uint64_t(v[i]) << i) - c - three_r * x) & mask;
        assert((rhs & ((std::uint64_t(1) << i) - 1)) == 0);
        x |= rhs;  // rhs is 0 or 2^i
        if (v[i]) {
            c = 3 * c + (std::uint64_t(1) << i);
            three_r *= 3;
        }
        // only the low n bits of c and 3^r ever matter
        if (n < 64) {
            c &= (std::uint64_t(1) << n) - 1;
            three_r &= (std::uint64_t(1) << n) - 1;
        }
    }
    return Residue{x, std::uint64_t(1) << n};
}

ParityBits bit_complement(const ParityBits& v) {
    ParityBits out = v;
    for (auto& b : out.bits) b ^= 1;
    return out;
}

ParityBits mk_map(const ParityBits& v, unsigned k) {
    if (k < 2) throw std::invalid_argument("mk_map requires k >= 2");
    if (v.size() < k) throw std::invalid_argument("mk_map input shorter than window");
    ParityBits out;
    out.bits.resize(v.size() - (k - 1));
    for (std::size_t i = 0; i < out.bits.size(); ++i) {
        std::uint8_t s = 0;
        for (unsigned j = 0; j < k; ++j) s ^= v[i + j];
        out.bits[i] = s;
    }
    return out;
}

Residue omega_mod(const Residue& x) {
    unsigned n = exponent_of(x.modulus);
    return phi_mod(bit_complement(parity_vector(Nat(x.value), n)));
}

Residue h_mk_mod(const Residue& x, unsigned k) {
    unsigned big = exponent_of(x.modulus);
    if (k < 2 || big < k)
        throw std::invalid_argument("h_mk_mod requires 2 <= k <= source exponent");
    return phi_mod(mk_map(parity_vector(Nat(x.value), big), k));
}

bool ResidueMap2n::is_permutation() const {
    if (source_exponent != target_exponent) return false;
    std::vector<bool> seen(table.size(), false);
    for (std::uint64_t y : table) {
        if (y >= table.size() || seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

bool ResidueMap2n::is_involution() const {
    if (!is_permutation()) return false;
    for (std::uint64_t x = 0; x < table.size(); ++x)
        if (table[table[x]] != x) return false;
    return true;
}

ResidueMap2n omega_table(unsigned n) {
    check_exponent(n);
    ResidueMap2n map{n, n, {}};
    map.table.resize(std::uint64_t(1) << n);
    std::uint64_t mod = std::uint64_t(1) << n;
    for (std::uint64_t x = 0; x < mod; ++x)
        map.table[x] = omega_mod(Residue{x, mod}).value;
    return map;
}

ResidueMap2n h_mk_table(unsigned source_exponent, unsigned k) {
    check_exponent(source_exponent);
    if (k < 2 || source_exponent < k)
        throw std::invalid_argument("h_mk_table requires 2 <= k <= source exponent");
    ResidueMap2n map{source_exponent, source_exponent - (k - 1), {}};
    std::uint64_t mod = std::uint64_t(1) << source_exponent;
    map.table.resize(mod);
    for (std::uint64_t x = 0; x < mod; ++x)
        map.table[x] = h_mk_mod(Residue{x, mod}, k).value;
    return map;
}

std::vector<std::uint64_t> map_preimage(const ResidueMap2n& map,
                                        const std::vector<std::uint64_t>& targets) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < map.table.size(); ++x)
        if (std::find(targets.begin(), targets.end(), map.table[x]) != targets.end())
            out.push_back(x);
    return out;
}

void write_map_csv(const ResidueMap2n& map, std::ostream& out) {
    out << "input,output\n";
    for (std::uint64_t x = 0; x < map.table.size(); ++x)
        out << x << ',' << map.table[x] << '\n';
}

}  // namespace collatz
