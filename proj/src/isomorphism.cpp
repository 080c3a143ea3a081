#include <algorithm>
#include <array>
#include <string>

#include "sslat/error.hpp"
#include "sslat/lattice.hpp"

namespace sslat {

namespace {

using Signature = std::array<int, 5>;

// (height, #lower covers, #upper covers, |down-set|, |up-set|)
std::vector<Signature> signatures(const FiniteLattice& L) {
  std::vector<Signature> sig(static_cast<std::size_t>(L.size()));
  for (Element x = 0; x < L.size(); ++x) {
    int below = 0;
    int above = 0;
    for (Element y = 0; y < L.size(); ++y) {
      below += L.leq(y, x) ? 1 : 0;
      above += L.leq(x, y) ? 1 : 0;
    }
    sig[static_cast<std::size_t>(x)] = {L.height(x), static_cast<int>(L.lower_covers(x).size()),
                                        static_cast<int>(L.upper_covers(x).size()), below, above};
  }
  return sig;
}

class Matcher {
 public:
  Matcher(const FiniteLattice& a, const FiniteLattice& b, std::vector<Signature> sig_a,
          std::vector<Signature> sig_b, std::vector<Element> forced)
      : a_(a),
        b_(b),
        sig_a_(std::move(sig_a)),
        sig_b_(std::move(sig_b)),
        forced_(std::move(forced)),
        order_(a.by_height()),
        map_(static_cast<std::size_t>(a.size()), -1),
        used_(static_cast<std::size_t>(b.size()), false) {}

  bool run() { return extend(0); }
  std::vector<Element> witness() const { return map_; }

 private:
  bool consistent(Element x, Element fx, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Element y = order_[k];
      const Element fy = map_[static_cast<std::size_t>(y)];
      if (a_.leq(x, y) != b_.leq(fx, fy) || a_.leq(y, x) != b_.leq(fy, fx)) return false;
    }
    return true;
  }

  bool try_candidate(Element x, Element fx, std::size_t depth) {
    const auto ux = static_cast<std::size_t>(x);
    const auto ufx = static_cast<std::size_t>(fx);
    if (used_[ufx] || sig_a_[ux] != sig_b_[ufx] || !consistent(x, fx, depth)) return false;
    map_[ux] = fx;
    used_[ufx] = true;
    if (extend(depth + 1)) return true;
    map_[ux] = -1;
    used_[ufx] = false;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Element x = order_[depth];
    const Element forced = forced_[static_cast<std::size_t>(x)];
    if (forced >= 0) return try_candidate(x, forced, depth);
    if (x == a_.bottom()) return try_candidate(x, b_.bottom(), depth);
    // Any lower cover is already mapped; x must go to an upper cover of its image.
    const Element parent = a_.lower_covers(x).front();
    const Element image = map_[static_cast<std::size_t>(parent)];
    for (Element fx : b_.upper_covers(image)) {
      if (try_candidate(x, fx, depth)) return true;
    }
    return false;
  }

  const FiniteLattice& a_;
  const FiniteLattice& b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<Element> forced_;
  std::vector<Element> order_;
  std::vector<Element> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& a,
                                                     const FiniteLattice& b,
                                                     std::span<const CoverPair> seed, int cap) {
  if (a.size() > cap || b.size() > cap) {
    throw Error(ErrorCode::TooLarge, "isomorphism search is capped at " + std::to_string(cap) +
                                         " elements");
  }
  if (a.size() != b.size() || a.cover_pairs().size() != b.cover_pairs().size()) {
    return std::nullopt;
  }

  auto sig_a = signatures(a);
  auto sig_b = signatures(b);
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Element> forced(static_cast<std::size_t>(a.size()), -1);
  for (const auto& [x, fx] : seed) {
    if (x < 0 || x >= a.size() || fx < 0 || fx >= b.size()) {
      throw Error(ErrorCode::OutOfRange, "seed pair outside the lattices");
    }
    auto& slot = forced[static_cast<std::size_t>(x)];
    if (slot >= 0 && slot != fx) return std::nullopt;
    slot = fx;
  }

  Matcher matcher(a, b, std::move(sig_a), std::move(sig_b), std::move(forced));
  if (!matcher.run()) return std::nullopt;
  return matcher.witness();
}

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b, int cap) {
  return find_isomorphism(a, b, {}, cap).has_value();
}

}  // namespace sslat
