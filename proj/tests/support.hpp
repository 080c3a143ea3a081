#pragma once

#include <utility>
#include <vector>

#include "sslat/lattice.hpp"
#include "sslat/perm.hpp"

namespace testing {

inline sslat::Permutation P(std::vector<int> images) {
  return sslat::Permutation::from_images(std::move(images));
}

inline std::vector<int> raw(const sslat::Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

inline std::vector<std::pair<int, int>> raw_covers(const sslat::FiniteLattice& L) {
  return {L.cover_pairs().begin(), L.cover_pairs().end()};
}

inline sslat::FiniteLattice lattice(int size, std::vector<sslat::CoverPair> covers) {
  return sslat::FiniteLattice::from_covers(size, covers);
}

// 0 < 1 < ... < n
inline sslat::FiniteLattice chain(int n) {
  std::vector<sslat::CoverPair> covers;
  for (int k = 1; k <= n; ++k) covers.emplace_back(k - 1, k);
  return lattice(n + 1, covers);
}

// 0 < a=1, b=2 < 3
inline sslat::FiniteLattice b2() { return lattice(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// 0 < 1, 2, 3 < 4
inline sslat::FiniteLattice m3() {
  return lattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

// 0 < a=1 < c=3 < 4, 0 < b=2 < 4
inline sslat::FiniteLattice n5() { return lattice(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}); }

}  // namespace testing
