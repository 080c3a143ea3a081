#pragma once

#include <vector>

#include "sslat/lattice.hpp"
#include "sslat/perm.hpp"

namespace sslat {

/// A maximal sequence of prime intervals in which consecutive members are
/// opposite edges of a covering square. Starts at a left-boundary edge and
/// ends at a right-boundary edge.
struct Trajectory {
  std::vector<CoverPair> edges;
};

/// One trajectory per left-boundary edge [c_{i-1}, c_i], i = 1..n.
/// Throws NotSlimSemimodular or TrajectoryAmbiguous.
std::vector<Trajectory> trajectories(const BorderedDiagram& diagram);

/// pi(i) = j when the trajectory of [c_{i-1}, c_i] ends at [d_{j-1}, d_j].
Permutation pi1_trajectories(const BorderedDiagram& diagram);

/// pi(i) = min{ j : d_j not <= u } where u is the largest element of
/// up(c_{i-1}) \ up(c_i). Throws NotSlimSemimodular or UniquenessViolated.
Permutation pi2_meet_irreducibles(const BorderedDiagram& diagram);

/// The same procedure run from the right chain; always the inverse of
/// pi2_meet_irreducibles.
Permutation pi2_right_to_left(const BorderedDiagram& diagram);

/// pi(i) = the unique j with c_{i-1} v d_j = c_i v d_{j-1} = c_i v d_j while
/// c_{i-1} v d_{j-1} differs. Throws NotSlimSemimodular, SourceCellMissing
/// or SourceCellDuplicated.
Permutation pi3_source_cells(const BorderedDiagram& diagram);

enum class ExtractMode {
  Verify,  // run all three extractors and compare
  Fast,    // meet-irreducible extractor only
};

/// The permutation of a bordered slim semimodular diagram. In Verify mode
/// throws ExtractorDisagreement if the extractors differ.
Permutation extract_permutation(const BorderedDiagram& diagram,
                                ExtractMode mode = ExtractMode::Verify);

/// A left and a right boundary chain of a slim semimodular lattice, built
/// component by component between consecutive narrows.
struct BoundaryChains {
  std::vector<Element> left;
  std::vector<Element> right;
};
BoundaryChains boundary_chains(const FiniteLattice& lattice);

/// Every bordered diagram of the lattice up to boundary similarity, in a
/// deterministic order. Throws NotSlimSemimodular.
std::vector<BorderedDiagram> diagrams_of(const FiniteLattice& lattice);
std::size_t diagram_count(const FiniteLattice& lattice);

}  // namespace sslat
