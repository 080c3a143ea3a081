#include "sslat/lattice.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "sslat/error.hpp"

namespace sslat {

namespace {

std::string pair_str(Element a, Element b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(int size, std::span<const CoverPair> covers) {
  if (size < 1) throw Error(ErrorCode::NotALattice, "a lattice has at least one element");
  const auto n = static_cast<std::size_t>(size);

  FiniteLattice L;
  L.size_ = size;
  L.cover_pairs_.assign(covers.begin(), covers.end());
  for (const auto& [lo, hi] : L.cover_pairs_) {
    if (lo < 0 || hi < 0 || lo >= size || hi >= size) {
      throw Error(ErrorCode::OutOfRange, "cover " + pair_str(lo, hi) + " has an index outside 0.." +
                                             std::to_string(size - 1));
    }
    if (lo == hi) throw Error(ErrorCode::Cyclic, "self-loop at " + std::to_string(lo));
  }
  std::sort(L.cover_pairs_.begin(), L.cover_pairs_.end());
  L.cover_pairs_.erase(std::unique(L.cover_pairs_.begin(), L.cover_pairs_.end()),
                       L.cover_pairs_.end());

  L.upper_.assign(n, {});
  L.lower_.assign(n, {});
  for (const auto& [lo, hi] : L.cover_pairs_) {
    L.upper_[idx(lo)].push_back(hi);
    L.lower_[idx(hi)].push_back(lo);
  }

  // Kahn's algorithm, smallest index first.
  std::vector<int> indegree(n);
  for (std::size_t x = 0; x < n; ++x) indegree[x] = static_cast<int>(L.lower_[x].size());
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push(static_cast<Element>(x));
  }
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    const Element x = ready.top();
    ready.pop();
    order.push_back(x);
    for (Element y : L.upper_[idx(x)]) {
      if (--indegree[idx(y)] == 0) ready.push(y);
    }
  }
  if (order.size() != n) throw Error(ErrorCode::Cyclic, "the cover relation contains a cycle");

  L.rank_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) L.rank_[idx(order[r])] = static_cast<int>(r);

  L.up_.assign(n, boost::dynamic_bitset<>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& row = L.up_[idx(*it)];
    row.set(static_cast<std::size_t>(L.rank_[idx(*it)]));
    for (Element y : L.upper_[idx(*it)]) row |= L.up_[idx(y)];
  }

  for (const auto& [lo, hi] : L.cover_pairs_) {
    for (Element y : L.upper_[idx(lo)]) {
      if (y != hi && L.leq(y, hi)) {
        throw Error(ErrorCode::NotReduced, "cover " + pair_str(lo, hi) + " is implied via " +
                                               std::to_string(y));
      }
    }
  }

  L.height_.assign(n, 0);
  for (Element x : order) {
    for (Element y : L.upper_[idx(x)]) {
      L.height_[idx(y)] = std::max(L.height_[idx(y)], L.height_[idx(x)] + 1);
    }
  }

  std::vector<Element> minimal;
  std::vector<Element> maximal;
  for (std::size_t x = 0; x < n; ++x) {
    if (L.lower_[x].empty()) minimal.push_back(static_cast<Element>(x));
    if (L.upper_[x].empty()) maximal.push_back(static_cast<Element>(x));
  }
  if (minimal.size() != 1) {
    throw Error(ErrorCode::NotALattice, "minimal elements " + pair_str(minimal[0], minimal[1]) +
                                            " have no meet");
  }
  if (maximal.size() != 1) {
    throw Error(ErrorCode::NotALattice, "maximal elements " + pair_str(maximal[0], maximal[1]) +
                                            " have no join");
  }
  L.bottom_ = minimal.front();
  L.top_ = maximal.front();

  // Down-sets in reversed rank space, so find_first() yields the greatest
  // candidate of a linear extension.
  std::vector<boost::dynamic_bitset<>> down(n, boost::dynamic_bitset<>(n));
  for (Element x : order) {
    auto& row = down[idx(x)];
    row.set(n - 1 - static_cast<std::size_t>(L.rank_[idx(x)]));
    for (Element y : L.lower_[idx(x)]) row |= down[idx(y)];
  }

  L.join_.assign(n * n, 0);
  L.meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto ub = L.up_[a] & L.up_[b];
      const Element j = order[ub.find_first()];
      if (!ub.is_subset_of(L.up_[idx(j)])) {
        throw Error(ErrorCode::NotALattice,
                    "elements " + pair_str(static_cast<Element>(a), static_cast<Element>(b)) +
                        " have no least upper bound");
      }
      const auto lb = down[a] & down[b];
      const Element m = order[n - 1 - lb.find_first()];
      if (!lb.is_subset_of(down[idx(m)])) {
        throw Error(ErrorCode::NotALattice,
                    "elements " + pair_str(static_cast<Element>(a), static_cast<Element>(b)) +
                        " have no greatest lower bound");
      }
      L.join_[a * n + b] = L.join_[b * n + a] = j;
      L.meet_[a * n + b] = L.meet_[b * n + a] = m;
    }
  }
  return L;
}

bool FiniteLattice::covers(Element a, Element b) const {
  const auto& up = upper_[idx(a)];
  return std::find(up.begin(), up.end(), b) != up.end();
}

std::vector<Element> FiniteLattice::by_height() const {
  std::vector<Element> elems(n());
  for (std::size_t x = 0; x < n(); ++x) elems[x] = static_cast<Element>(x);
  std::stable_sort(elems.begin(), elems.end(),
                   [&](Element a, Element b) { return height(a) < height(b); });
  return elems;
}

bool FiniteLattice::is_maximal_chain(std::span<const Element> chain) const {
  if (chain.empty() || chain.front() != bottom_ || chain.back() != top_) return false;
  for (Element x : chain) {
    if (x < 0 || x >= size_) return false;
  }
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (!covers(chain[k - 1], chain[k])) return false;
  }
  return true;
}

bool is_semimodular(const FiniteLattice& L) {
  for (const auto& [a, b] : L.cover_pairs()) {
    for (Element c = 0; c < L.size(); ++c) {
      const Element ac = L.join(a, c);
      const Element bc = L.join(b, c);
      if (ac != bc && !L.covers(ac, bc)) return false;
    }
  }
  return true;
}

std::vector<Element> join_irreducibles(const FiniteLattice& L) {
  std::vector<Element> out;
  for (Element x = 0; x < L.size(); ++x) {
    if (L.lower_covers(x).size() == 1) out.push_back(x);
  }
  return out;
}

std::vector<Element> meet_irreducibles(const FiniteLattice& L) {
  std::vector<Element> out;
  for (Element x = 0; x < L.size(); ++x) {
    if (L.upper_covers(x).size() == 1) out.push_back(x);
  }
  return out;
}

bool is_slim(const FiniteLattice& L) {
  // The bottom is comparable with everything, so Ji(L) alone decides.
  const auto ji = join_irreducibles(L);
  for (std::size_t a = 0; a < ji.size(); ++a) {
    for (std::size_t b = a + 1; b < ji.size(); ++b) {
      if (L.comparable(ji[a], ji[b])) continue;
      for (std::size_t c = b + 1; c < ji.size(); ++c) {
        if (!L.comparable(ji[a], ji[c]) && !L.comparable(ji[b], ji[c])) return false;
      }
    }
  }
  return true;
}

bool is_dually_slim(const FiniteLattice& L) { return is_slim(dual(L)); }

std::vector<Element> narrows(const FiniteLattice& L) {
  std::vector<Element> out;
  for (Element x : L.by_height()) {
    bool all = true;
    for (Element y = 0; y < L.size() && all; ++y) all = L.comparable(x, y);
    if (all) out.push_back(x);
  }
  return out;
}

bool is_indecomposable(const FiniteLattice& L) {
  return L.size() == 1 || (narrows(L).size() == 2 && L.size() > 2);
}

bool is_chain(const FiniteLattice& L) {
  return static_cast<int>(narrows(L).size()) == L.size();
}

FiniteLattice dual(const FiniteLattice& L) {
  std::vector<CoverPair> reversed;
  reversed.reserve(L.cover_pairs().size());
  for (const auto& [lo, hi] : L.cover_pairs()) reversed.emplace_back(hi, lo);
  return FiniteLattice::from_covers(L.size(), reversed);
}

Sublattice interval(const FiniteLattice& L, Element lo, Element hi) {
  if (lo < 0 || hi < 0 || lo >= L.size() || hi >= L.size() || !L.leq(lo, hi)) {
    throw Error(ErrorCode::OutOfRange, "not an interval: " + pair_str(lo, hi));
  }
  std::vector<Element> members;
  std::vector<int> position(static_cast<std::size_t>(L.size()), -1);
  for (Element x = 0; x < L.size(); ++x) {
    if (L.leq(lo, x) && L.leq(x, hi)) {
      position[static_cast<std::size_t>(x)] = static_cast<int>(members.size());
      members.push_back(x);
    }
  }
  std::vector<CoverPair> covers;
  for (const auto& [a, b] : L.cover_pairs()) {
    const int pa = position[static_cast<std::size_t>(a)];
    const int pb = position[static_cast<std::size_t>(b)];
    if (pa >= 0 && pb >= 0) covers.emplace_back(pa, pb);
  }
  auto sub = FiniteLattice::from_covers(static_cast<int>(members.size()), covers);
  return Sublattice{std::move(sub), std::move(members)};
}

std::vector<CoveringSquare> covering_squares(const FiniteLattice& L) {
  std::vector<CoveringSquare> squares;
  for (Element w = 0; w < L.size(); ++w) {
    const auto up = L.upper_covers(w);
    for (std::size_t p = 0; p < up.size(); ++p) {
      for (std::size_t q = p + 1; q < up.size(); ++q) {
        const Element a = std::min(up[p], up[q]);
        const Element b = std::max(up[p], up[q]);
        const Element t = L.join(a, b);
        if (L.covers(a, t) && L.covers(b, t)) squares.push_back({w, a, b, t});
      }
    }
  }
  return squares;
}

BorderedDiagram::BorderedDiagram(FiniteLattice lattice, std::vector<Element> left_chain,
                                 std::vector<Element> right_chain)
    : lattice_(std::move(lattice)), left_(std::move(left_chain)), right_(std::move(right_chain)) {
  if (!lattice_.is_maximal_chain(left_)) {
    throw Error(ErrorCode::InvalidDiagram, "left chain is not a maximal chain");
  }
  if (!lattice_.is_maximal_chain(right_)) {
    throw Error(ErrorCode::InvalidDiagram, "right chain is not a maximal chain");
  }
}

BorderedDiagram BorderedDiagram::reflected() const {
  return BorderedDiagram(lattice_, right_, left_);
}

std::vector<Element> BorderedDiagram::boundary() const {
  std::vector<Element> out(left_.begin(), left_.end());
  out.insert(out.end(), right_.begin(), right_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool BorderedDiagram::has_boundary_invariants() const {
  const auto bound = boundary();
  for (Element x : join_irreducibles(lattice_)) {
    if (!std::binary_search(bound.begin(), bound.end(), x)) return false;
  }
  std::vector<Element> l(left_.begin(), left_.end());
  std::vector<Element> r(right_.begin(), right_.end());
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  std::vector<Element> shared;
  std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(shared));
  auto nar = narrows(lattice_);
  std::sort(nar.begin(), nar.end());
  return shared == nar;
}

BorderedDiagram subdiagram(const BorderedDiagram& D, int from, int to) {
  const auto left = D.left_chain();
  const auto right = D.right_chain();
  if (from < 0 || to < from || to >= static_cast<int>(left.size())) {
    throw Error(ErrorCode::InvalidDiagram, "heights out of range");
  }
  const auto f = static_cast<std::size_t>(from);
  const auto t = static_cast<std::size_t>(to);
  if (left[f] != right[f] || left[t] != right[t]) {
    throw Error(ErrorCode::InvalidDiagram, "subdiagram endpoints must lie on both chains");
  }
  auto sub = interval(D.lattice(), left[f], left[t]);
  std::vector<int> position(static_cast<std::size_t>(D.lattice().size()), -1);
  for (std::size_t k = 0; k < sub.members.size(); ++k) {
    position[static_cast<std::size_t>(sub.members[k])] = static_cast<int>(k);
  }
  std::vector<Element> l;
  std::vector<Element> r;
  for (std::size_t k = f; k <= t; ++k) {
    l.push_back(position[static_cast<std::size_t>(left[k])]);
    r.push_back(position[static_cast<std::size_t>(right[k])]);
  }
  return BorderedDiagram(std::move(sub.lattice), std::move(l), std::move(r));
}

bool boundarily_similar(const BorderedDiagram& a, const BorderedDiagram& b) {
  if (a.lattice().size() != b.lattice().size()) return false;
  if (a.left_chain().size() != b.left_chain().size()) return false;
  std::vector<CoverPair> seed;
  for (std::size_t k = 0; k < a.left_chain().size(); ++k) {
    seed.emplace_back(a.left_chain()[k], b.left_chain()[k]);
    seed.emplace_back(a.right_chain()[k], b.right_chain()[k]);
  }
  return find_isomorphism(a.lattice(), b.lattice(), seed).has_value();
}

}  // namespace sslat
