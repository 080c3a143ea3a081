#include "sslat/grid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sslat/error.hpp"

namespace sslat {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(static_cast<std::size_t>(n)), size_(parent_.size(), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    int root = x;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(x)] != root) {
      const int next = parent_[static_cast<std::size_t>(x)];
      parent_[static_cast<std::size_t>(x)] = root;
      x = next;
    }
    return root;
  }

  // Returns false when x and y were already together.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[static_cast<std::size_t>(x)] < size_[static_cast<std::size_t>(y)]) std::swap(x, y);
    parent_[static_cast<std::size_t>(y)] = x;
    size_[static_cast<std::size_t>(x)] += size_[static_cast<std::size_t>(y)];
    return true;
  }

  std::vector<int> labels() {
    std::vector<int> out(parent_.size());
    for (std::size_t x = 0; x < parent_.size(); ++x) out[x] = find(static_cast<int>(x));
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

std::string point_str(GridPoint p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

void require_same_degree(const Grid& grid, const Permutation& pi) {
  if (pi.size() != grid.n()) {
    throw Error(ErrorCode::LengthMismatch, "permutation of degree " + std::to_string(pi.size()) +
                                               " on a grid of side " + std::to_string(grid.n()));
  }
}

std::vector<std::pair<GridPoint, GridPoint>> upper_edge_pairs(std::span<const GridCell> cells) {
  std::vector<std::pair<GridPoint, GridPoint>> pairs;
  for (const GridCell& c : cells) {
    const GridPoint top{c.i, c.j};
    pairs.emplace_back(GridPoint{c.i - 1, c.j}, top);
    pairs.emplace_back(GridPoint{c.i, c.j - 1}, top);
  }
  return pairs;
}

}  // namespace

Grid::Grid(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative grid side");
}

GridPoint Grid::join(GridPoint a, GridPoint b) noexcept {
  return {std::max(a.i, b.i), std::max(a.j, b.j)};
}

GridPoint Grid::meet(GridPoint a, GridPoint b) noexcept {
  return {std::min(a.i, b.i), std::min(a.j, b.j)};
}

std::vector<PrimeEdge> Grid::prime_edges() const {
  std::vector<PrimeEdge> edges;
  for (int i = 0; i <= n_; ++i) {
    for (int j = 0; j <= n_; ++j) {
      if (i > 0) edges.push_back({{i - 1, j}, {i, j}});
      if (j > 0) edges.push_back({{i, j - 1}, {i, j}});
    }
  }
  return edges;
}

std::vector<GridCell> Grid::cells() const {
  std::vector<GridCell> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out.push_back({i, j});
  }
  return out;
}

bool Grid::is_prime_edge(PrimeEdge e) const noexcept {
  if (!contains(e.lower) || !contains(e.upper)) return false;
  const int di = e.upper.i - e.lower.i;
  const int dj = e.upper.j - e.lower.j;
  return (di == 1 && dj == 0) || (di == 0 && dj == 1);
}

FiniteLattice Grid::lattice() const {
  std::vector<CoverPair> covers;
  for (const PrimeEdge& e : prime_edges()) covers.emplace_back(index(e.lower), index(e.upper));
  return FiniteLattice::from_covers(size(), covers);
}

GridCongruence GridCongruence::identity(int n) {
  std::vector<int> labels(static_cast<std::size_t>(Grid(n).size()));
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(n, std::move(labels));
}

GridCongruence GridCongruence::from_labels(int n, std::vector<int> labels) {
  const Grid grid(n);
  if (static_cast<int>(labels.size()) != grid.size()) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(grid.size()) + " labels");
  }
  std::vector<int> canonical(labels.size());
  std::vector<std::pair<int, int>> seen;  // (raw label, canonical id)
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& entry) { return entry.first == labels[x]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[x], static_cast<int>(seen.size()));
      canonical[x] = seen.back().second;
    } else {
      canonical[x] = it->second;
    }
  }
  return GridCongruence(n, std::move(canonical), static_cast<int>(seen.size()));
}

int GridCongruence::block_of(GridPoint p) const {
  const Grid grid(n_);
  if (!grid.contains(p)) throw Error(ErrorCode::OutOfRange, "grid point " + point_str(p));
  return labels_[static_cast<std::size_t>(grid.index(p))];
}

std::vector<std::vector<GridPoint>> GridCongruence::blocks() const {
  const Grid grid(n_);
  std::vector<std::vector<GridPoint>> out(static_cast<std::size_t>(block_count_));
  for (int x = 0; x < grid.size(); ++x) {
    out[static_cast<std::size_t>(labels_[static_cast<std::size_t>(x)])].push_back(grid.point(x));
  }
  return out;
}

bool GridCongruence::is_join_compatible() const {
  const Grid grid(n_);
  std::vector<GridPoint> rep(static_cast<std::size_t>(block_count_), GridPoint{-1, -1});
  for (int x = 0; x < grid.size(); ++x) {
    auto& r = rep[static_cast<std::size_t>(labels_[static_cast<std::size_t>(x)])];
    if (r.i < 0) r = grid.point(x);
  }
  for (int x = 0; x < grid.size(); ++x) {
    const GridPoint px = grid.point(x);
    const GridPoint r = rep[static_cast<std::size_t>(labels_[static_cast<std::size_t>(x)])];
    for (int z = 0; z < grid.size(); ++z) {
      const GridPoint pz = grid.point(z);
      if (!same_block(Grid::join(px, pz), Grid::join(r, pz))) return false;
    }
  }
  return true;
}

bool GridCongruence::has_convex_join_closed_blocks() const {
  for (const auto& members : blocks()) {
    GridPoint top = members.front();
    for (const GridPoint& p : members) top = Grid::join(top, p);
    const int id = block_of(members.front());
    if (block_of(top) != id) return false;
    for (const GridPoint& a : members) {
      for (int i = a.i; i <= top.i; ++i) {
        for (int j = a.j; j <= top.j; ++j) {
          if (block_of({i, j}) != id) return false;
        }
      }
    }
  }
  return true;
}

GridCongruence congruence_closure(const Grid& grid,
                                  std::span<const std::pair<GridPoint, GridPoint>> pairs) {
  DisjointSet classes(grid.size());
  std::vector<std::pair<GridPoint, GridPoint>> worklist;
  for (const auto& [a, b] : pairs) {
    if (!grid.contains(a) || !grid.contains(b)) {
      throw Error(ErrorCode::OutOfRange, "pair " + point_str(a) + "~" + point_str(b) +
                                             " outside the grid");
    }
    worklist.emplace_back(a, b);
  }
  // Every pair that causes a merge has all of its join-translates queued;
  // translates of translates are translates, so this reaches the fixpoint.
  while (!worklist.empty()) {
    const auto [a, b] = worklist.back();
    worklist.pop_back();
    if (!classes.unite(grid.index(a), grid.index(b))) continue;
    for (int z = 0; z < grid.size(); ++z) {
      const GridPoint pz = grid.point(z);
      const GridPoint az = Grid::join(a, pz);
      const GridPoint bz = Grid::join(b, pz);
      if (az != bz) worklist.emplace_back(az, bz);
    }
  }
  return GridCongruence::from_labels(grid.n(), classes.labels());
}

GridCongruence congruence_join(const GridCongruence& a, const GridCongruence& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::LengthMismatch, "congruences on different grids");
  const Grid grid(a.n());
  std::vector<std::pair<GridPoint, GridPoint>> pairs;
  for (const auto* kappa : {&a, &b}) {
    for (const auto& members : kappa->blocks()) {
      for (std::size_t k = 1; k < members.size(); ++k) pairs.emplace_back(members[0], members[k]);
    }
  }
  return congruence_closure(grid, pairs);
}

GridCongruence jcong_cell(const Grid& grid, GridCell cell) {
  if (cell.i < 1 || cell.j < 1 || cell.i > grid.n() || cell.j > grid.n()) {
    throw Error(ErrorCode::CellOutOfRange, "cell (" + std::to_string(cell.i) + "," +
                                               std::to_string(cell.j) + ") on a grid of side " +
                                               std::to_string(grid.n()));
  }
  const GridCell cells[] = {cell};
  return congruence_closure(grid, upper_edge_pairs(cells));
}

std::vector<GridCell> permutation_cells(const Permutation& pi) {
  std::vector<GridCell> cells;
  for (int i = 1; i <= pi.size(); ++i) cells.push_back({i, pi(i)});
  return cells;
}

GridCongruence beta_from_perm(const Grid& grid, const Permutation& pi) {
  require_same_degree(grid, pi);
  const auto cells = permutation_cells(pi);
  GridCongruence beta = congruence_closure(grid, upper_edge_pairs(cells));
#ifdef SSLAT_CROSS_CHECK
  if (beta != beta_from_formula(pi)) {
    throw std::logic_error("closure and closed form disagree on beta for " + pi.one_line());
  }
#endif
  return beta;
}

GridCongruence beta_from_perm(const Permutation& pi) { return beta_from_perm(Grid(pi.size()), pi); }

bool beta_formula(const Permutation& pi, PrimeEdge edge) {
  const Grid grid(pi.size());
  if (!grid.is_prime_edge(edge)) {
    throw Error(ErrorCode::NotAPrimeInterval,
                point_str(edge.lower) + "-" + point_str(edge.upper) + " is not a prime interval");
  }
  const int i = edge.upper.i;
  const int j = edge.upper.j;
  if (edge.lower.i == i - 1) return pi(i) <= j;
  // d-direction: pi^-1(j) <= i, i.e. some t <= i has pi(t) = j.
  for (int t = 1; t <= i; ++t) {
    if (pi(t) == j) return true;
  }
  return false;
}

GridCongruence beta_from_formula(const Permutation& pi) {
  const Grid grid(pi.size());
  DisjointSet classes(grid.size());
  for (const PrimeEdge& e : grid.prime_edges()) {
    if (beta_formula(pi, e)) classes.unite(grid.index(e.lower), grid.index(e.upper));
  }
  return GridCongruence::from_labels(grid.n(), classes.labels());
}

std::vector<GridCell> forbidden_cells(const GridCongruence& kappa) {
  std::vector<GridCell> out;
  for (const GridCell& c : kappa.grid().cells()) {
    const int w = kappa.block_of({c.i - 1, c.j - 1});
    const int a = kappa.block_of({c.i - 1, c.j});
    const int b = kappa.block_of({c.i, c.j - 1});
    const int t = kappa.block_of({c.i, c.j});
    if (w != a && w != b && a != b && (t == a || t == b)) out.push_back(c);
  }
  return out;
}

bool is_cover_preserving(const GridCongruence& kappa) { return forbidden_cells(kappa).empty(); }

std::vector<GridCell> source_cells(const GridCongruence& kappa) {
  std::vector<GridCell> out;
  for (const GridCell& c : kappa.grid().cells()) {
    const int t = kappa.block_of({c.i, c.j});
    if (kappa.block_of({c.i - 1, c.j}) == t && kappa.block_of({c.i, c.j - 1}) == t &&
        kappa.block_of({c.i - 1, c.j - 1}) != t) {
      out.push_back(c);
    }
  }
  return out;
}

GridCongruence regenerate(const GridCongruence& kappa) {
  if (!kappa.is_join_compatible()) {
    throw Error(ErrorCode::HypothesisViolated, "not a join-congruence");
  }
  for (int k = 1; k <= kappa.n(); ++k) {
    if (kappa.same_block({k - 1, 0}, {k, 0})) {
      throw Error(ErrorCode::HypothesisViolated, "collapses (c_" + std::to_string(k - 1) + ", c_" +
                                                     std::to_string(k) + ")");
    }
    if (kappa.same_block({0, k - 1}, {0, k})) {
      throw Error(ErrorCode::HypothesisViolated, "collapses (d_" + std::to_string(k - 1) + ", d_" +
                                                     std::to_string(k) + ")");
    }
  }
  if (!is_cover_preserving(kappa)) {
    throw Error(ErrorCode::HypothesisViolated, "has a forbidden cell");
  }
  const auto cells = source_cells(kappa);
  return congruence_closure(kappa.grid(), upper_edge_pairs(cells));
}

CanonicalDiagram canonical_diagram(const Permutation& pi) {
  const Grid grid(pi.size());
  GridCongruence beta = beta_from_perm(grid, pi);

  // Represent each block by its top; index order of tops is a linear extension.
  std::vector<GridPoint> tops;
  for (const auto& members : beta.blocks()) {
    GridPoint top = members.front();
    for (const GridPoint& p : members) top = Grid::join(top, p);
    tops.push_back(top);
  }
  std::sort(tops.begin(), tops.end(),
            [&](GridPoint a, GridPoint b) { return grid.index(a) < grid.index(b); });
  const auto k = tops.size();
  std::vector<int> element_of_block(k);
  for (std::size_t e = 0; e < k; ++e) {
    element_of_block[static_cast<std::size_t>(beta.block_of(tops[e]))] = static_cast<int>(e);
  }
  auto element_of = [&](GridPoint p) {
    return element_of_block[static_cast<std::size_t>(beta.block_of(p))];
  };

  // X <= Y iff top(X) v top(Y) lies in Y.
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      leq[x][y] = element_of(Grid::join(tops[x], tops[y])) == static_cast<int>(y);
    }
  }
  std::vector<CoverPair> covers;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      if (x == y || !leq[x][y]) continue;
      bool cover = true;
      for (std::size_t z = 0; z < k && cover; ++z) {
        if (z != x && z != y && leq[x][z] && leq[z][y]) cover = false;
      }
      if (cover) covers.emplace_back(static_cast<Element>(x), static_cast<Element>(y));
    }
  }
  auto lattice = FiniteLattice::from_covers(static_cast<int>(k), covers);

  std::vector<Element> left;
  std::vector<Element> right;
  for (int t = 0; t <= pi.size(); ++t) {
    left.push_back(element_of({t, 0}));
    right.push_back(element_of({0, t}));
  }
  return CanonicalDiagram{BorderedDiagram(std::move(lattice), std::move(left), std::move(right)),
                          std::move(tops), std::move(beta)};
}

BorderedDiagram phi0(const Permutation& pi) { return canonical_diagram(pi).diagram; }

}  // namespace sslat
