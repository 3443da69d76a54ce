#pragma once

// Finite-precision parity-vector machinery: the parity vector function
// and its inverse mod 2^n, the bit complement V, the window-sum maps M_k
// (M_2 is the discrete derivative D), and the induced residue maps
// Omega = Phi o V o Phi^-1 and H_{M_k} = Phi o M_k o Phi^-1.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "collatz/arith.hpp"

namespace collatz {

// A finite 0/1 sequence.
struct ParityBits {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits[i]; }
    friend bool operator==(const ParityBits&, const ParityBits&) = default;
};

ParityBits make_parity_bits(std::initializer_list<int> bits);

// First n parities of the T-orbit: bit i = T^i(x) mod 2. Depends only on
// x mod 2^n, so x is reduced first. Accepts x >= 0 (T fixes 0). n <= 62.
ParityBits parity_vector(const Nat& x, unsigned n);

// The unique residue x mod 2^n whose parity vector is v (Bernstein).
// Computed by bit-by-bit lifting: each constraint
//   3^{r_i} x + c_i = v_i 2^i (mod 2^{i+1})
// forces one further bit of x, where T^i(x) = (3^{r_i} x + c_i)/2^i.
Residue phi_mod(const ParityBits& v);

// V: flips every bit.
ParityBits bit_complement(const ParityBits& v);

// M_k: output bit i = v_i + ... + v_{i+k-1} mod 2, shortening the length
// by k-1. Requires 2 <= k <= v.size(). k = 2 is the discrete derivative D.
ParityBits mk_map(const ParityBits& v, unsigned k);

// Omega on Z/2^nZ: phi_mod(bit_complement(parity_vector(x))). The modulus
// of x must be a power of two. An involution that flips parity.
Residue omega_mod(const Residue& x);

// H_{M_k} as the induced 2^{k-1}-to-1 map Z/2^{n+k-1}Z -> Z/2^nZ. The
// modulus of x must be 2^{n+k-1} with n >= 1.
Residue h_mk_mod(const Residue& x, unsigned k);

// A precomputed residue map between power-of-two moduli, one table entry
// per source residue.
struct ResidueMap2n {
    unsigned source_exponent = 0;
    unsigned target_exponent = 0;
    std::vector<std::uint64_t> table;

    std::uint64_t operator()(std::uint64_t x) const { return table[x]; }
    bool is_permutation() const;
    bool is_involution() const;
};

ResidueMap2n omega_table(unsigned n);
ResidueMap2n h_mk_table(unsigned source_exponent, unsigned k);

// Sorted preimage of a set of target residues.
std::vector<std::uint64_t> map_preimage(const ResidueMap2n& map,
                                        const std::vector<std::uint64_t>& targets);

// CSV with an "input,output" header row.
void write_map_csv(const ResidueMap2n& map, std::ostream& out);

}  // namespace collatz
