#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace sslat {

using Element = int;
using CoverPair = std::pair<Element, Element>;  // (lower, upper)

/// A finite lattice given by its cover relation. Construction validates the
/// input and precomputes the order, join and meet tables and heights, so all
/// queries afterwards are O(1). Immutable once built.
class FiniteLattice {
 public:
  /// Throws OutOfRange (bad index), Cyclic, NotReduced (a cover pair that is
  /// implied transitively) or NotALattice.
  static FiniteLattice from_covers(int size, std::span<const CoverPair> covers);

  int size() const noexcept { return size_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element a, Element b) const { return up_[idx(a)][rank_[idx(b)]]; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
  /// a is covered by b.
  bool covers(Element a, Element b) const;

  Element join(Element a, Element b) const { return join_[idx(a) * n() + idx(b)]; }
  Element meet(Element a, Element b) const { return meet_[idx(a) * n() + idx(b)]; }

  /// Length of the longest chain from bottom to x.
  int height(Element x) const { return height_[idx(x)]; }
  int length() const { return height(top_); }

  std::span<const Element> upper_covers(Element x) const { return upper_[idx(x)]; }
  std::span<const Element> lower_covers(Element x) const { return lower_[idx(x)]; }

  /// All cover pairs, sorted.
  std::span<const CoverPair> cover_pairs() const noexcept { return cover_pairs_; }

  /// Elements sorted by (height, index).
  std::vector<Element> by_height() const;

  /// True iff the sequence runs from bottom to top through successive covers.
  bool is_maximal_chain(std::span<const Element> chain) const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.size_ == b.size_ && a.cover_pairs_ == b.cover_pairs_;
  }

 private:
  FiniteLattice() = default;
  std::size_t n() const noexcept { return static_cast<std::size_t>(size_); }
  static std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

  int size_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<CoverPair> cover_pairs_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  // rank_ is a linear extension; up_[x] holds the ranks of elements >= x.
  std::vector<int> rank_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<int> height_;
};

bool is_semimodular(const FiniteLattice& lattice);

/// Elements with exactly one lower cover.
std::vector<Element> join_irreducibles(const FiniteLattice& lattice);
/// Elements with exactly one upper cover.
std::vector<Element> meet_irreducibles(const FiniteLattice& lattice);

/// No three pairwise incomparable join-irreducible elements.
bool is_slim(const FiniteLattice& lattice);
bool is_dually_slim(const FiniteLattice& lattice);

/// Elements comparable with every element, sorted by height. Always holds
/// bottom and top.
std::vector<Element> narrows(const FiniteLattice& lattice);
/// Glued-sum indecomposable: |L| = 1 or |Nar L| = 2 < |L|.
bool is_indecomposable(const FiniteLattice& lattice);

bool is_chain(const FiniteLattice& lattice);

/// Same elements, cover relation reversed.
FiniteLattice dual(const FiniteLattice& lattice);

/// The interval [lo, hi] as a lattice of its own. `members[k]` is the
/// original element behind new element k.
struct Sublattice {
  FiniteLattice lattice;
  std::vector<Element> members;
};
Sublattice interval(const FiniteLattice& lattice, Element lo, Element hi);

/// Cover-preserving four-element sublattice {bottom, left, right, top};
/// left < right by index.
struct CoveringSquare {
  Element bottom;
  Element left;
  Element right;
  Element top;
  friend bool operator==(const CoveringSquare&, const CoveringSquare&) = default;
};
std::vector<CoveringSquare> covering_squares(const FiniteLattice& lattice);

inline constexpr int kDefaultIsomorphismCap = 200;

/// An order isomorphism from `a` onto `b` extending the prescribed `seed`
/// pairs, or nullopt. The witness maps element x of `a` to witness[x].
/// Throws TooLarge when either lattice exceeds `cap` elements.
std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& a,
                                                     const FiniteLattice& b,
                                                     std::span<const CoverPair> seed = {},
                                                     int cap = kDefaultIsomorphismCap);
bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b,
                   int cap = kDefaultIsomorphismCap);

/// A lattice with a distinguished left and right maximal chain, the
/// combinatorial stand-in for a planar diagram up to boundary similarity.
class BorderedDiagram {
 public:
  /// Throws InvalidDiagram unless both chains are maximal chains.
  BorderedDiagram(FiniteLattice lattice, std::vector<Element> left_chain,
                  std::vector<Element> right_chain);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  std::span<const Element> left_chain() const noexcept { return left_; }
  std::span<const Element> right_chain() const noexcept { return right_; }
  int length() const noexcept { return lattice_.length(); }

  /// Left and right chains interchanged.
  BorderedDiagram reflected() const;

  /// Union of the two chains, sorted.
  std::vector<Element> boundary() const;

  /// Ji(L) is inside the boundary and the chains meet exactly in Nar(L).
  bool has_boundary_invariants() const;

  friend bool operator==(const BorderedDiagram&, const BorderedDiagram&) = default;

 private:
  FiniteLattice lattice_;
  std::vector<Element> left_;
  std::vector<Element> right_;
};

/// The interval between the chain elements at heights `from` and `to`,
/// bordered by the corresponding chain pieces. Both endpoints must be shared
/// by the two chains. Throws InvalidDiagram otherwise.
BorderedDiagram subdiagram(const BorderedDiagram& diagram, int from, int to);

/// A lattice isomorphism carries left chain onto left chain and right chain
/// onto right chain.
bool boundarily_similar(const BorderedDiagram& a, const BorderedDiagram& b);

}  // namespace sslat
