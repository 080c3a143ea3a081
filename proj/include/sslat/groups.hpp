#pragma once

#include <cstdint>
#include <vector>

#include "sslat/lattice.hpp"
#include "sslat/perm.hpp"

namespace sslat {

/// Two composition series of the cyclic group of order p_1...p_n, described
/// by subgroup orders: H_i = p_1...p_i and K_j = p_{pi^-1(1)}...p_{pi^-1(j)}.
/// Subgroups correspond to divisors, intersection to gcd and product to lcm.
struct CyclicCslInstance {
  std::vector<std::uint64_t> primes;
  Permutation pi;
  std::vector<std::uint64_t> h_orders;  // H_0 = 1, ..., H_n
  std::vector<std::uint64_t> k_orders;  // K_0 = 1, ..., K_n
  std::vector<std::uint64_t> elements;  // {gcd(H_i, K_j)}, ascending
};

/// The first n primes, 2, 3, 5, ...
std::vector<std::uint64_t> first_primes(int n);

/// Throws LengthMismatch, NotPrime, DuplicatePrime or Overflow.
CyclicCslInstance csl_build(std::vector<std::uint64_t> primes, const Permutation& pi);

/// The elements ordered by divisibility; element k is elements[k].
FiniteLattice csl_lattice(const CyclicCslInstance& inst);

/// Position of an order in inst.elements. Throws OutOfRange if absent.
Element csl_element(const CyclicCslInstance& inst, std::uint64_t order);

/// The dual of csl_lattice with left chain H_n, ..., H_0 and right chain
/// K_n, ..., K_0.
BorderedDiagram csl_dual_diagram(const CyclicCslInstance& inst);

/// sigma(i) = the j with |H_i / H_{i-1}| = |K_j / K_{j-1}|.
Permutation jordan_holder_permutation(const CyclicCslInstance& inst);

/// Subgroups X < Y with A Y = B, A n Y = X, C Y = D and C n Y = X for
/// A = H_{i-1}, B = H_i, C = K_{j-1}, D = K_j, given as orders.
struct ProjectivityWitness {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t prime = 0;
};

/// x = gcd(H_{i-1}, K_{j-1}) and y = p x. Throws OutOfRange, or
/// FactorMismatch when the two factors have different orders.
ProjectivityWitness projectivity_witness(const CyclicCslInstance& inst, int i, int j);

}  // namespace sslat
