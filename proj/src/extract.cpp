#include "sslat/extract.hpp"

#include <algorithm>
#include <string>

#include "sslat/error.hpp"

namespace sslat {

namespace {

void require_slim_semimodular(const FiniteLattice& L) {
  if (!is_slim(L)) throw Error(ErrorCode::NotSlimSemimodular, "lattice is not slim");
  if (!is_semimodular(L)) throw Error(ErrorCode::NotSlimSemimodular, "lattice is not semimodular");
}

void require_valid(const BorderedDiagram& D) {
  require_slim_semimodular(D.lattice());
  if (!D.has_boundary_invariants()) {
    throw Error(ErrorCode::InvalidDiagram,
                "chains do not cover Ji(L) or meet outside the narrows");
  }
}

std::string edge_str(CoverPair e) {
  return "[" + std::to_string(e.first) + "," + std::to_string(e.second) + "]";
}

// Prime intervals are indexed by their position in the sorted cover list.
int edge_id(const FiniteLattice& L, CoverPair e) {
  const auto covers = L.cover_pairs();
  const auto it = std::lower_bound(covers.begin(), covers.end(), e);
  return static_cast<int>(it - covers.begin());
}

std::vector<std::vector<int>> opposite_edges(const FiniteLattice& L) {
  std::vector<std::vector<int>> adj(L.cover_pairs().size());
  auto link = [&](CoverPair p, CoverPair q) {
    const int a = edge_id(L, p);
    const int b = edge_id(L, q);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (const CoveringSquare& s : covering_squares(L)) {
    link({s.bottom, s.left}, {s.right, s.top});
    link({s.bottom, s.right}, {s.left, s.top});
  }
  // Each prime interval lies in at most two cells, so components are paths.
  for (const auto& nbrs : adj) {
    if (nbrs.size() > 2) {
      throw Error(ErrorCode::TrajectoryAmbiguous, "a prime interval lies in more than two squares");
    }
  }
  return adj;
}

std::vector<CoverPair> chain_edges(std::span<const Element> chain) {
  std::vector<CoverPair> out;
  for (std::size_t k = 1; k < chain.size(); ++k) out.emplace_back(chain[k - 1], chain[k]);
  return out;
}

Permutation checked_permutation(std::vector<int> images, ErrorCode code, const char* what) {
  try {
    return Permutation::from_images(std::move(images));
  } catch (const Error& e) {
    throw Error(code, std::string(what) + ": " + e.what());
  }
}

// Component of one left edge, plus the right-chain index (1-based) it hits.
struct Walk {
  Trajectory trajectory;
  int right_index = 0;
};

Walk walk_from(const BorderedDiagram& D, const std::vector<std::vector<int>>& adj, int i) {
  const FiniteLattice& L = D.lattice();
  const auto covers = L.cover_pairs();
  const auto left = chain_edges(D.left_chain());
  const auto right = chain_edges(D.right_chain());
  const CoverPair start = left[static_cast<std::size_t>(i - 1)];

  if (adj[static_cast<std::size_t>(edge_id(L, start))].size() > 1) {
    throw Error(ErrorCode::TrajectoryAmbiguous, "left edge " + edge_str(start) +
                                                    " lies in two squares");
  }

  Walk walk;
  int prev = -1;
  int cur = edge_id(L, start);
  while (cur >= 0) {
    const CoverPair e = covers[static_cast<std::size_t>(cur)];
    walk.trajectory.edges.push_back(e);
    int next = -1;
    for (int n : adj[static_cast<std::size_t>(cur)]) {
      if (n != prev) next = n;
    }
    prev = cur;
    cur = next;
  }

  int lefts = 0;
  for (const CoverPair& e : walk.trajectory.edges) {
    lefts += std::count(left.begin(), left.end(), e) > 0 ? 1 : 0;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (right[j] != e) continue;
      if (walk.right_index != 0) {
        throw Error(ErrorCode::TrajectoryAmbiguous,
                    "trajectory of " + edge_str(start) + " meets the right chain twice");
      }
      walk.right_index = static_cast<int>(j) + 1;
    }
  }
  if (lefts != 1 || walk.right_index == 0) {
    throw Error(ErrorCode::TrajectoryAmbiguous,
                "trajectory of " + edge_str(start) + " does not join the two chains");
  }
  return walk;
}

}  // namespace

std::vector<Trajectory> trajectories(const BorderedDiagram& D) {
  require_valid(D);
  const auto adj = opposite_edges(D.lattice());
  std::vector<Trajectory> out;
  for (int i = 1; i <= D.length(); ++i) out.push_back(walk_from(D, adj, i).trajectory);
  return out;
}

Permutation pi1_trajectories(const BorderedDiagram& D) {
  require_valid(D);
  const auto adj = opposite_edges(D.lattice());
  std::vector<int> images;
  for (int i = 1; i <= D.length(); ++i) images.push_back(walk_from(D, adj, i).right_index);
  return checked_permutation(std::move(images), ErrorCode::TrajectoryAmbiguous,
                             "two trajectories end on the same edge");
}

Permutation pi2_meet_irreducibles(const BorderedDiagram& D) {
  require_valid(D);
  const FiniteLattice& L = D.lattice();
  const auto c = D.left_chain();
  const auto d = D.right_chain();
  std::vector<int> images;
  for (int i = 1; i <= D.length(); ++i) {
    const Element lo = c[static_cast<std::size_t>(i - 1)];
    const Element hi = c[static_cast<std::size_t>(i)];
    std::vector<Element> block;
    for (Element x = 0; x < L.size(); ++x) {
      if (L.leq(lo, x) && !L.leq(hi, x)) block.push_back(x);
    }
    Element u = block.front();
    for (Element x : block) {
      if (!L.comparable(x, u)) {
        throw Error(ErrorCode::UniquenessViolated,
                    "up(c_" + std::to_string(i - 1) + ") minus up(c_" + std::to_string(i) +
                        ") is not a chain");
      }
      if (L.less(u, x)) u = x;
    }
    if (L.upper_covers(u).size() != 1) {
      throw Error(ErrorCode::UniquenessViolated,
                  "element " + std::to_string(u) + " is not meet-irreducible");
    }
    int j = 0;
    while (j < static_cast<int>(d.size()) && L.leq(d[static_cast<std::size_t>(j)], u)) ++j;
    if (j == static_cast<int>(d.size())) {
      throw Error(ErrorCode::UniquenessViolated, "right chain lies below " + std::to_string(u));
    }
    images.push_back(j);
  }
  return checked_permutation(std::move(images), ErrorCode::UniquenessViolated,
                             "meet-irreducible extraction is not a permutation");
}

Permutation pi2_right_to_left(const BorderedDiagram& D) {
  return pi2_meet_irreducibles(D.reflected());
}

Permutation pi3_source_cells(const BorderedDiagram& D) {
  require_valid(D);
  const FiniteLattice& L = D.lattice();
  const auto c = D.left_chain();
  const auto d = D.right_chain();
  auto eta = [&](int i, int j) {
    return L.join(c[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]);
  };
  const int n = D.length();
  std::vector<int> images;
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    int found = 0;
    for (int j = 1; j <= n; ++j) {
      const Element top = eta(i, j);
      if (eta(i - 1, j) != top || eta(i, j - 1) != top || eta(i - 1, j - 1) == top) continue;
      if (found != 0 || hit[static_cast<std::size_t>(j)]) {
        throw Error(ErrorCode::SourceCellDuplicated,
                    "second source cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      found = j;
    }
    if (found == 0) {
      throw Error(ErrorCode::SourceCellMissing, "no source cell in row " + std::to_string(i));
    }
    hit[static_cast<std::size_t>(found)] = true;
    images.push_back(found);
  }
  return Permutation::from_images(std::move(images));
}

Permutation extract_permutation(const BorderedDiagram& D, ExtractMode mode) {
  const Permutation p2 = pi2_meet_irreducibles(D);
  if (mode == ExtractMode::Fast) return p2;
  const Permutation p1 = pi1_trajectories(D);
  const Permutation p3 = pi3_source_cells(D);
  if (p1 != p2 || p2 != p3) {
    throw Error(ErrorCode::ExtractorDisagreement, "trajectories " + p1.one_line() +
                                                      ", meet-irreducibles " + p2.one_line() +
                                                      ", source cells " + p3.one_line());
  }
  return p2;
}

BoundaryChains boundary_chains(const FiniteLattice& L) {
  require_slim_semimodular(L);
  const auto nar = narrows(L);
  const auto ji = join_irreducibles(L);
  auto is_ji = [&](Element x) { return std::binary_search(ji.begin(), ji.end(), x); };

  // Climb from `from` to `to`, preferring the join-irreducible upper cover.
  auto climb = [&](Element from, Element to, std::vector<Element>& chain) {
    Element x = from;
    while (x != to) {
      const auto up = L.upper_covers(x);
      std::vector<Element> inside;
      for (Element y : up) {
        if (L.leq(y, to)) inside.push_back(y);
      }
      if (inside.size() == 1) {
        x = inside.front();
      } else if (inside.size() == 2 && is_ji(inside[0]) != is_ji(inside[1])) {
        x = is_ji(inside[0]) ? inside[0] : inside[1];
      } else {
        throw Error(ErrorCode::NotSlimSemimodular,
                    "cannot follow the boundary above element " + std::to_string(x));
      }
      chain.push_back(x);
    }
  };

  BoundaryChains out{{nar.front()}, {nar.front()}};
  for (std::size_t k = 1; k < nar.size(); ++k) {
    const Element lo = nar[k - 1];
    const Element hi = nar[k];
    if (L.covers(lo, hi)) {
      out.left.push_back(hi);
      out.right.push_back(hi);
      continue;
    }
    const auto up = L.upper_covers(lo);
    if (up.size() != 2) {
      throw Error(ErrorCode::NotSlimSemimodular,
                  "narrow " + std::to_string(lo) + " does not have two upper covers");
    }
    out.left.push_back(up[0]);
    out.right.push_back(up[1]);
    climb(up[0], hi, out.left);
    climb(up[1], hi, out.right);
  }
  return out;
}

std::vector<BorderedDiagram> diagrams_of(const FiniteLattice& L) {
  const BoundaryChains base = boundary_chains(L);
  const auto nar = narrows(L);

  // Height ranges of the components that have two distinct chains.
  std::vector<std::pair<int, int>> components;
  for (std::size_t k = 1; k < nar.size(); ++k) {
    const int lo = L.height(nar[k - 1]);
    const int hi = L.height(nar[k]);
    if (hi - lo >= 2) components.emplace_back(lo, hi);
  }

  std::vector<BorderedDiagram> found;
  const std::size_t subsets = std::size_t{1} << components.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    auto left = base.left;
    auto right = base.right;
    for (std::size_t k = 0; k < components.size(); ++k) {
      if ((mask >> k & 1U) == 0) continue;
      const auto [lo, hi] = components[k];
      for (int h = lo; h <= hi; ++h) {
        std::swap(left[static_cast<std::size_t>(h)], right[static_cast<std::size_t>(h)]);
      }
    }
    BorderedDiagram candidate(L, std::move(left), std::move(right));
    const bool seen = std::any_of(found.begin(), found.end(), [&](const BorderedDiagram& d) {
      return boundarily_similar(d, candidate);
    });
    if (!seen) found.push_back(std::move(candidate));
  }
  return found;
}

std::size_t diagram_count(const FiniteLattice& L) { return diagrams_of(L).size(); }

}  // namespace sslat
