#pragma once

// Brute-force reference implementations used only by the tests. Each one
// works straight from the definitions on raw arrays and shares no code with
// the library beyond plain containers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // 1-based images
using Block = std::pair<int, int>;

inline bool closed(const Perm& s, int u, int v) {
  for (int i = u; i <= v; ++i) {
    const int image = s[static_cast<std::size_t>(i - 1)];
    if (image < u || image > v) return false;
  }
  return true;
}

inline bool section(const Perm& s, int u, int v) {
  const int n = static_cast<int>(s.size());
  return u <= v && closed(s, 1, u - 1) && closed(s, u, v) && closed(s, v + 1, n);
}

/// Minimal sections, found by testing every interval.
inline std::vector<Block> segments(const Perm& s) {
  const int n = static_cast<int>(s.size());
  std::vector<Block> out;
  for (int u = 1; u <= n; ++u) {
    for (int v = u; v <= n; ++v) {
      if (!section(s, u, v)) continue;
      bool minimal = true;
      for (int a = u; a <= v && minimal; ++a) {
        for (int b = a; b <= v && minimal; ++b) {
          if ((a != u || b != v) && section(s, a, b)) minimal = false;
        }
      }
      if (minimal) out.emplace_back(u, v);
    }
  }
  return out;
}

inline Perm restrict_to(const Perm& s, Block b) {
  Perm out;
  for (int i = b.first; i <= b.second; ++i) out.push_back(s[static_cast<std::size_t>(i - 1)] - b.first + 1);
  return out;
}

inline Perm invert(const Perm& s) {
  Perm out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[static_cast<std::size_t>(s[i] - 1)] = static_cast<int>(i) + 1;
  return out;
}

inline bool rho(const Perm& s, const Perm& m) {
  if (s.size() != m.size()) return false;
  const auto seg = segments(s);
  if (seg != segments(m)) return false;
  for (Block b : seg) {
    const Perm rs = restrict_to(s, b);
    const Perm rm = restrict_to(m, b);
    if (rm != rs && rm != invert(rs)) return false;
  }
  return true;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Number of rho-classes of S_n by merging every rho-related pair.
inline int class_count(int n) {
  const auto perms = all_perms(n);
  std::vector<int> parent(perms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = a + 1; b < perms.size(); ++b) {
      if (rho(perms[a], perms[b])) parent[static_cast<std::size_t>(find(static_cast<int>(b)))] = find(static_cast<int>(a));
    }
  }
  int classes = 0;
  for (std::size_t x = 0; x < perms.size(); ++x) classes += find(static_cast<int>(x)) == static_cast<int>(x) ? 1 : 0;
  return classes;
}

/// Reflexive-transitive closure of a cover list.
inline std::vector<std::vector<bool>> order(int size, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(size), std::vector<bool>(static_cast<std::size_t>(size), false));
  for (int x = 0; x < size; ++x) leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = true;
  for (auto [a, b] : covers) leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  for (int k = 0; k < size; ++k) {
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j), uk = static_cast<std::size_t>(k);
        if (leq[ui][uk] && leq[uk][uj]) leq[ui][uj] = true;
      }
    }
  }
  return leq;
}

/// Least upper bound by scanning all upper bounds; nullopt when none is least.
inline std::optional<int> join(const std::vector<std::vector<bool>>& leq, int a, int b) {
  const int size = static_cast<int>(leq.size());
  auto L = [&](int x, int y) { return static_cast<bool>(leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]); };
  for (int u = 0; u < size; ++u) {
    if (!L(a, u) || !L(b, u)) continue;
    bool least = true;
    for (int v = 0; v < size && least; ++v) {
      if (L(a, v) && L(b, v) && !L(u, v)) least = false;
    }
    if (least) return u;
  }
  return std::nullopt;
}

/// Order isomorphism by trying every bijection.
inline bool isomorphic(int size, const std::vector<std::pair<int, int>>& ca, const std::vector<std::pair<int, int>>& cb) {
  const auto la = order(size, ca);
  const auto lb = order(size, cb);
  Perm f(static_cast<std::size_t>(size));
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < size && ok; ++x) {
      for (int y = 0; y < size && ok; ++y) {
        ok = la[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
             lb[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])][static_cast<std::size_t>(f[static_cast<std::size_t>(y)])];
      }
    }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

/// Join-congruence of the (n+1) x (n+1) grid generated by `pairs`, by
/// iterating "add translates, take the equivalence closure" on a relation
/// matrix until nothing changes. Returns block labels indexed by i*(n+1)+j,
/// each label being the smallest index in the block.
inline std::vector<int> grid_congruence(int n, const std::vector<std::pair<Block, Block>>& pairs) {
  const int side = n + 1;
  const int size = side * side;
  auto id = [&](Block p) { return p.first * side + p.second; };
  auto pt = [&](int x) { return Block{x / side, x % side}; };
  auto jn = [&](Block a, Block b) { return Block{std::max(a.first, b.first), std::max(a.second, b.second)}; };
  std::vector<std::vector<bool>> R(static_cast<std::size_t>(size), std::vector<bool>(static_cast<std::size_t>(size), false));
  auto set = [&](int a, int b) {
    bool changed = !R[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    R[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    R[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    return changed;
  };
  for (int x = 0; x < size; ++x) set(x, x);
  for (auto [a, b] : pairs) set(id(a), id(b));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < size; ++k) {
      for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
          if (R[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && R[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) changed |= set(i, j);
        }
      }
    }
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        if (!R[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) continue;
        for (int z = 0; z < size; ++z) changed |= set(id(jn(pt(x), pt(z))), id(jn(pt(y), pt(z))));
      }
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) {
    int first = x;
    for (int y = 0; y < x; ++y) {
      if (R[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) { first = y; break; }
    }
    labels[static_cast<std::size_t>(x)] = first;
  }
  return labels;
}

/// The cells (i, s(i)) as generating pairs: both upper edges of each cell.
inline std::vector<std::pair<Block, Block>> cell_pairs(const Perm& s) {
  std::vector<std::pair<Block, Block>> out;
  for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
    const int j = s[static_cast<std::size_t>(i - 1)];
    out.push_back({{i - 1, j}, {i, j}});
    out.push_back({{i, j - 1}, {i, j}});
  }
  return out;
}

/// Grid quotient by a join-congruence: cover pairs on block ids 0..k-1
/// (blocks numbered by first occurrence) and the block count.
inline std::pair<int, std::vector<std::pair<int, int>>> quotient(int n, const std::vector<int>& labels) {
  const int side = n + 1;
  std::map<int, int> number;
  for (int label : labels) number.emplace(label, static_cast<int>(number.size()));
  const int k = static_cast<int>(number.size());
  auto block = [&](int i, int j) { return number.at(labels[static_cast<std::size_t>(i * side + j)]); };
  std::vector<std::vector<bool>> leq(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(k), false));
  // X <= Y iff some x in X lies below some y in Y.
  for (int a = 0; a < side * side; ++a) {
    for (int b = 0; b < side * side; ++b) {
      const int ai = a / side, aj = a % side, bi = b / side, bj = b % side;
      if (ai <= bi && aj <= bj) leq[static_cast<std::size_t>(block(ai, aj))][static_cast<std::size_t>(block(bi, bj))] = true;
    }
  }
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (x == y || !leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) continue;
      bool cover = true;
      for (int z = 0; z < k && cover; ++z) {
        if (z != x && z != y && leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] && leq[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)]) cover = false;
      }
      if (cover) covers.emplace_back(x, y);
    }
  }
  return {k, covers};
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// {H_i n K_j} for the squarefree cyclic group, with subgroups as prime sets.
inline std::set<std::uint64_t> csl_elements(const std::vector<std::uint64_t>& primes, const Perm& s) {
  const int n = static_cast<int>(primes.size());
  const Perm inv = invert(s);
  std::set<std::uint64_t> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      std::uint64_t order = 1;
      for (int t = 1; t <= i; ++t) {
        bool in_k = false;
        for (int u = 1; u <= j; ++u) in_k |= inv[static_cast<std::size_t>(u - 1)] == t;
        if (in_k) order *= primes[static_cast<std::size_t>(t - 1)];
      }
      out.insert(order);
    }
  }
  return out;
}

}  // namespace oracle
