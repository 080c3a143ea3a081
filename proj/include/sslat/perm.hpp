#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sslat {

/// Closed interval {first, ..., last} of 1-based positions; empty when
/// first > last.
struct Interval {
  int first = 1;
  int last = 0;

  bool empty() const noexcept { return first > last; }
  int length() const noexcept { return empty() ? 0 : last - first + 1; }
  bool contains(int i) const noexcept { return first <= i && i <= last; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A permutation of {1, ..., n} in one-line notation. Immutable once built.
class Permutation {
 public:
  /// The empty permutation (n = 0).
  Permutation() = default;

  /// Validates `images` (images[i-1] is the image of i).
  /// Throws DuplicateValue or OutOfRange.
  static Permutation from_images(std::vector<int> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of the 1-based point i.
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }

  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;

  /// Restriction to a closed interval, reindexed onto {1, ..., |I|}.
  /// Throws IntervalOutOfRange when I is out of range or not closed.
  Permutation restricted(Interval interval) const;

  bool is_involution() const;

  /// Conjugate by the order-reversing map i -> n+1-i.
  Permutation flipped() const;

  /// "2,3,1"
  std::string one_line() const;
  /// "(1 2 3)(5 6)"; the identity prints as "()".
  std::string cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// Parses "2,3,1", "[2,3,1]", "2 3 1" or cycle notation "(1 2 3)(5 6)".
/// In cycle notation the degree is `degree` when positive, otherwise the
/// largest point mentioned. Throws ParseError or a validation error.
Permutation parse_permutation(std::string_view text, int degree = 0);

/// The ordered segment partition of a permutation: consecutive intervals
/// covering {1, ..., n}, each a minimal section.
class SegmentPartition {
 public:
  SegmentPartition() = default;
  explicit SegmentPartition(std::vector<Interval> segments);

  std::span<const Interval> segments() const noexcept { return segments_; }
  std::size_t count() const noexcept { return segments_.size(); }

  /// The segment containing the 1-based point i.
  const Interval& segment_of(int i) const;

  /// u_0 = 0 < u_1 < ... < u_t = n.
  std::vector<int> cut_points() const;

  friend bool operator==(const SegmentPartition&, const SegmentPartition&) = default;

 private:
  std::vector<Interval> segments_;
};

/// True iff sigma maps I into I. The empty interval is closed.
bool is_closed(const Permutation& sigma, Interval interval);

/// True iff I is nonempty and I together with both of its complements in
/// {1, ..., n} are closed.
bool is_section(const Permutation& sigma, Interval interval);

SegmentPartition segments(const Permutation& sigma);

/// The "sectionally inverted or equal" relation. Throws LengthMismatch.
bool rho_equivalent(const Permutation& sigma, const Permutation& mu);

/// Every member of the rho-class, sorted lexicographically.
std::vector<Permutation> rho_class(const Permutation& sigma);

/// Number of members of the rho-class, without enumerating it.
std::size_t rho_class_size(const Permutation& sigma);

/// Lexicographically least member of the rho-class.
Permutation canonical_rep(const Permutation& sigma);

inline constexpr int kDefaultEnumerationCap = 9;

/// Canonical representatives of all rho-classes of S_n, in lexicographic
/// order. Throws TooLarge when n > cap, OutOfRange when n < 0.
std::vector<Permutation> enumerate_reps(int n, int cap = kDefaultEnumerationCap);
std::size_t count_classes(int n, int cap = kDefaultEnumerationCap);

/// n! for small n.
std::size_t factorial(int n);

/// All n! permutations of {1, ..., n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace sslat
