#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sslat/lattice.hpp"
#include "sslat/perm.hpp"

namespace sslat {

/// Grid element c_i v d_j, written (i, j).
struct GridPoint {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// The 4-cell whose top is (i, j), 1 <= i, j <= n. Its coatoms are
/// (i-1, j) and (i, j-1); its bottom is (i-1, j-1).
struct GridCell {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

/// A prime interval of the grid: lower is covered by upper.
struct PrimeEdge {
  GridPoint lower;
  GridPoint upper;
  friend auto operator<=>(const PrimeEdge&, const PrimeEdge&) = default;
};

/// The square grid {0..n} x {0..n}: the direct product of the chains
/// c_0 < ... < c_n and d_0 < ... < d_n. Join and meet are coordinatewise.
class Grid {
 public:
  explicit Grid(int n);

  int n() const noexcept { return n_; }
  int size() const noexcept { return (n_ + 1) * (n_ + 1); }

  int index(GridPoint p) const noexcept { return p.i * (n_ + 1) + p.j; }
  GridPoint point(int index) const noexcept { return {index / (n_ + 1), index % (n_ + 1)}; }
  bool contains(GridPoint p) const noexcept {
    return p.i >= 0 && p.j >= 0 && p.i <= n_ && p.j <= n_;
  }

  static GridPoint join(GridPoint a, GridPoint b) noexcept;
  static GridPoint meet(GridPoint a, GridPoint b) noexcept;

  /// All 2n(n+1) prime intervals.
  std::vector<PrimeEdge> prime_edges() const;
  /// Cells (i, j) for 1 <= i, j <= n, row by row.
  std::vector<GridCell> cells() const;

  bool is_prime_edge(PrimeEdge e) const noexcept;

  /// The grid as a FiniteLattice; element ids follow index().
  FiniteLattice lattice() const;

 private:
  int n_;
};

/// A partition of the grid, normally a join-congruence. Block ids are
/// numbered by first occurrence in index order, so equal partitions compare
/// equal. Immutable once built.
class GridCongruence {
 public:
  static GridCongruence identity(int n);

  /// Wraps an arbitrary labelling without checking join-compatibility; see
  /// is_join_compatible().
  static GridCongruence from_labels(int n, std::vector<int> labels);

  int n() const noexcept { return n_; }
  Grid grid() const { return Grid(n_); }

  int block_of(GridPoint p) const;
  bool same_block(GridPoint a, GridPoint b) const { return block_of(a) == block_of(b); }
  bool collapses(PrimeEdge e) const { return same_block(e.lower, e.upper); }
  int block_count() const noexcept { return block_count_; }
  std::span<const int> labels() const noexcept { return labels_; }

  /// Members of each block, in index order.
  std::vector<std::vector<GridPoint>> blocks() const;

  bool is_identity() const noexcept { return block_count_ == Grid(n_).size(); }

  /// x ~ y implies x v z ~ y v z for all z.
  bool is_join_compatible() const;
  /// Every block is convex and contains the join of its members.
  bool has_convex_join_closed_blocks() const;

  friend bool operator==(const GridCongruence&, const GridCongruence&) = default;

 private:
  GridCongruence(int n, std::vector<int> labels, int block_count)
      : n_(n), labels_(std::move(labels)), block_count_(block_count) {}

  int n_ = 0;
  std::vector<int> labels_;
  int block_count_ = 0;
};

/// Smallest join-congruence of the grid containing every pair. Throws
/// OutOfRange for points outside the grid.
GridCongruence congruence_closure(const Grid& grid,
                                  std::span<const std::pair<GridPoint, GridPoint>> pairs);

/// Join of two congruences in the congruence lattice.
GridCongruence congruence_join(const GridCongruence& a, const GridCongruence& b);

/// Smallest join-congruence collapsing the two upper edges of the cell.
/// Throws CellOutOfRange.
GridCongruence jcong_cell(const Grid& grid, GridCell cell);

/// The cells (i, pi(i)), i = 1..n.
std::vector<GridCell> permutation_cells(const Permutation& pi);

/// beta_pi: the join of jcong_cell over (i, pi(i)), computed by closure.
/// Throws LengthMismatch when pi does not act on {1..grid.n()}.
GridCongruence beta_from_perm(const Grid& grid, const Permutation& pi);
GridCongruence beta_from_perm(const Permutation& pi);

/// Closed form for membership of a prime interval in beta_pi: an edge
/// ((i-1,j),(i,j)) is collapsed iff pi(i) <= j, and ((i,j-1),(i,j)) iff
/// pi^-1(j) <= i. Throws NotAPrimeInterval.
bool beta_formula(const Permutation& pi, PrimeEdge edge);

/// beta_pi assembled edge by edge from beta_formula.
GridCongruence beta_from_formula(const Permutation& pi);

/// Cells whose bottom and coatoms lie in three different blocks while the
/// top shares a block with one coatom.
std::vector<GridCell> forbidden_cells(const GridCongruence& kappa);
bool is_cover_preserving(const GridCongruence& kappa);

/// Cells whose coatoms are congruent to the top but the bottom is not.
std::vector<GridCell> source_cells(const GridCongruence& kappa);

/// Join of jcong_cell over the source cells. Throws HypothesisViolated when
/// kappa is not a cover-preserving join-congruence or collapses a boundary
/// prime interval.
GridCongruence regenerate(const GridCongruence& kappa);

/// phi0(pi) together with the grid point on top of each quotient block
/// (element k of the diagram is the block whose top is tops[k]).
struct CanonicalDiagram {
  BorderedDiagram diagram;
  std::vector<GridPoint> tops;
  GridCongruence beta;
};

/// The quotient lattice G / beta_pi with left chain the blocks of c_0..c_n
/// and right chain the blocks of d_0..d_n.
CanonicalDiagram canonical_diagram(const Permutation& pi);
BorderedDiagram phi0(const Permutation& pi);

}  // namespace sslat
