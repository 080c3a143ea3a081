#include "sslat/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/prime.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "sslat/error.hpp"

namespace sslat {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "product of the primes exceeds 64 bits");
  }
  return out;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  return boost::multiprecision::miller_rabin_test(p, 25);
}

std::vector<Element> chain_ids(const CyclicCslInstance& inst,
                               const std::vector<std::uint64_t>& orders) {
  std::vector<Element> ids;
  for (auto it = orders.rbegin(); it != orders.rend(); ++it) ids.push_back(csl_element(inst, *it));
  return ids;
}

}  // namespace

std::vector<std::uint64_t> first_primes(int n) {
  if (n < 0 || n > static_cast<int>(boost::math::max_prime) + 1) {
    throw Error(ErrorCode::OutOfRange, "cannot list " + std::to_string(n) + " primes");
  }
  std::vector<std::uint64_t> out;
  for (int k = 0; k < n; ++k) out.push_back(boost::math::prime(static_cast<unsigned>(k)));
  return out;
}

CyclicCslInstance csl_build(std::vector<std::uint64_t> primes, const Permutation& pi) {
  const int n = pi.size();
  if (static_cast<int>(primes.size()) != n) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(primes.size()) +
                                               " primes for a permutation of degree " +
                                               std::to_string(n));
  }
  for (std::size_t a = 0; a < primes.size(); ++a) {
    if (!is_prime(primes[a])) throw Error(ErrorCode::NotPrime, std::to_string(primes[a]));
    for (std::size_t b = 0; b < a; ++b) {
      if (primes[a] == primes[b]) {
        throw Error(ErrorCode::DuplicatePrime, std::to_string(primes[a]) + " repeats");
      }
    }
  }

  const Permutation inv = pi.inverse();
  std::vector<std::uint64_t> h{1};
  std::vector<std::uint64_t> k{1};
  for (int i = 1; i <= n; ++i) {
    h.push_back(checked_mul(h.back(), primes[static_cast<std::size_t>(i - 1)]));
    k.push_back(checked_mul(k.back(), primes[static_cast<std::size_t>(inv(i) - 1)]));
  }
  std::vector<std::uint64_t> elements;
  for (std::uint64_t a : h) {
    for (std::uint64_t b : k) elements.push_back(std::gcd(a, b));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return CyclicCslInstance{std::move(primes), pi, std::move(h), std::move(k), std::move(elements)};
}

Element csl_element(const CyclicCslInstance& inst, std::uint64_t order) {
  const auto it = std::lower_bound(inst.elements.begin(), inst.elements.end(), order);
  if (it == inst.elements.end() || *it != order) {
    throw Error(ErrorCode::OutOfRange, std::to_string(order) + " is not an element");
  }
  return static_cast<Element>(it - inst.elements.begin());
}

FiniteLattice csl_lattice(const CyclicCslInstance& inst) {
  const auto& e = inst.elements;
  const auto size = e.size();
  std::vector<CoverPair> covers;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      if (e[b] % e[a] != 0) continue;
      bool between = false;
      for (std::size_t c = a + 1; c < b && !between; ++c) {
        between = e[c] % e[a] == 0 && e[b] % e[c] == 0;
      }
      if (!between) covers.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
    }
  }
  return FiniteLattice::from_covers(static_cast<int>(size), covers);
}

BorderedDiagram csl_dual_diagram(const CyclicCslInstance& inst) {
  return BorderedDiagram(dual(csl_lattice(inst)), chain_ids(inst, inst.h_orders),
                         chain_ids(inst, inst.k_orders));
}

Permutation jordan_holder_permutation(const CyclicCslInstance& inst) {
  const int n = inst.pi.size();
  std::vector<int> images;
  for (int i = 1; i <= n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const std::uint64_t factor = inst.h_orders[ui] / inst.h_orders[ui - 1];
    int match = 0;
    for (int j = 1; j <= n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (inst.k_orders[uj] / inst.k_orders[uj - 1] == factor) match = j;
    }
    images.push_back(match);
  }
  return Permutation::from_images(std::move(images));
}

ProjectivityWitness projectivity_witness(const CyclicCslInstance& inst, int i, int j) {
  const int n = inst.pi.size();
  if (i < 1 || j < 1 || i > n || j > n) {
    throw Error(ErrorCode::OutOfRange, "factor indices (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") outside 1.." +
                                           std::to_string(n));
  }
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  const std::uint64_t a = inst.h_orders[ui - 1];
  const std::uint64_t b = inst.h_orders[ui];
  const std::uint64_t c = inst.k_orders[uj - 1];
  const std::uint64_t d = inst.k_orders[uj];
  const std::uint64_t p = b / a;
  if (d / c != p) {
    throw Error(ErrorCode::FactorMismatch, "H_" + std::to_string(i) + "/H_" +
                                               std::to_string(i - 1) + " has order " +
                                               std::to_string(p) + ", K_" + std::to_string(j) +
                                               "/K_" + std::to_string(j - 1) + " has order " +
                                               std::to_string(d / c));
  }
  const std::uint64_t x = std::gcd(a, c);
  const std::uint64_t y = p * x;
  if (std::lcm(a, y) != b || std::gcd(a, y) != x || std::lcm(c, y) != d || std::gcd(c, y) != x) {
    throw std::logic_error("projectivity equations fail for (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
  }
  return {x, y, p};
}

}  // namespace sslat
