#include "sslat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sslat/error.hpp"

namespace sslat {

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t pos = 0; pos < images.size(); ++pos) {
    const int v = images[pos];
    if (v < 1 || v > n) {
      throw Error(ErrorCode::OutOfRange, "image " + std::to_string(v) + " at position " +
                                             std::to_string(pos + 1) + " is outside 1.." +
                                             std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorCode::DuplicateValue, "value " + std::to_string(v) + " appears twice");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative degree");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t pos = 0; pos < images_.size(); ++pos) {
    inv[static_cast<std::size_t>(images_[pos] - 1)] = static_cast<int>(pos + 1);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::restricted(Interval interval) const {
  if (interval.empty()) return Permutation();
  if (!is_closed(*this, interval)) {
    throw Error(ErrorCode::IntervalOutOfRange, "restriction to a non-closed interval");
  }
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(interval.length()));
  const int offset = interval.first - 1;
  for (int i = interval.first; i <= interval.last; ++i) images.push_back((*this)(i) - offset);
  return Permutation(std::move(images));
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)((*this)(i)) != i) return false;
  }
  return true;
}

Permutation Permutation::flipped() const {
  const int n = size();
  std::vector<int> images(images_.size());
  for (int i = 1; i <= n; ++i) {
    images[static_cast<std::size_t>(i - 1)] = n + 1 - (*this)(n + 1 - i);
  }
  return Permutation(std::move(images));
}

std::string Permutation::one_line() const {
  std::string out;
  for (std::size_t pos = 0; pos < images_.size(); ++pos) {
    if (pos) out += ',';
    out += std::to_string(images_[pos]);
  }
  return out;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (done[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    out += '(';
    int i = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(i);
      done[static_cast<std::size_t>(i - 1)] = true;
      i = (*this)(i);
    } while (i != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas and whitespace; every token must be a positive integer.
std::vector<int> parse_integers(std::string_view s) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char ch = s[pos];
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::ParseError, "unexpected character '" + std::string(1, ch) + "'");
    }
    long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + (s[pos] - '0');
      if (value > 1'000'000) throw Error(ErrorCode::ParseError, "integer too large");
      ++pos;
    }
    values.push_back(static_cast<int>(value));
  }
  return values;
}

Permutation parse_cycles(std::string_view s, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation");
    const std::size_t close = s.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unbalanced '('");
    cycles.push_back(parse_integers(s.substr(pos + 1, close - pos - 1)));
    pos = close + 1;
  }

  int n = std::max(degree, 0);
  for (const auto& cycle : cycles) {
    for (int point : cycle) {
      if (point < 1) throw Error(ErrorCode::OutOfRange, "cycle point must be positive");
      if (degree > 0 && point > degree) {
        throw Error(ErrorCode::OutOfRange, "cycle point " + std::to_string(point) +
                                               " exceeds degree " + std::to_string(degree));
      }
      n = std::max(n, point);
    }
  }

  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int point = cycle[k];
      if (used[static_cast<std::size_t>(point - 1)]) {
        throw Error(ErrorCode::DuplicateValue, "point " + std::to_string(point) +
                                                   " occurs in more than one cycle position");
      }
      used[static_cast<std::size_t>(point - 1)] = true;
      images[static_cast<std::size_t>(point - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

Permutation parse_permutation(std::string_view text, int degree) {
  std::string_view s = trim(text);
  if (s.find('(') != std::string_view::npos) return parse_cycles(s, degree);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::ParseError, "unbalanced '['");
    s = s.substr(1, s.size() - 2);
  }
  auto perm = Permutation::from_images(parse_integers(s));
  if (degree > 0 && perm.size() != degree) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(degree) + " images");
  }
  return perm;
}

SegmentPartition::SegmentPartition(std::vector<Interval> segments)
    : segments_(std::move(segments)) {}

const Interval& SegmentPartition::segment_of(int i) const {
  for (const auto& seg : segments_) {
    if (seg.contains(i)) return seg;
  }
  throw Error(ErrorCode::OutOfRange, "point " + std::to_string(i) + " is in no segment");
}

std::vector<int> SegmentPartition::cut_points() const {
  std::vector<int> cuts{0};
  for (const auto& seg : segments_) cuts.push_back(seg.last);
  return cuts;
}

bool is_closed(const Permutation& sigma, Interval interval) {
  if (interval.empty()) return true;
  if (interval.first < 1 || interval.last > sigma.size()) {
    throw Error(ErrorCode::IntervalOutOfRange,
                "interval [" + std::to_string(interval.first) + "," +
                    std::to_string(interval.last) + "] outside 1.." + std::to_string(sigma.size()));
  }
  for (int i = interval.first; i <= interval.last; ++i) {
    if (!interval.contains(sigma(i))) return false;
  }
  return true;
}

bool is_section(const Permutation& sigma, Interval interval) {
  if (interval.empty()) return false;
  return is_closed(sigma, interval) && is_closed(sigma, Interval{1, interval.first - 1}) &&
         is_closed(sigma, Interval{interval.last + 1, sigma.size()});
}

SegmentPartition segments(const Permutation& sigma) {
  // Cut after k iff {1..k} is closed under sigma and its inverse.
  const Permutation inv = sigma.inverse();
  std::vector<Interval> parts;
  int start = 1;
  int reach = 0;
  int inv_reach = 0;
  for (int k = 1; k <= sigma.size(); ++k) {
    reach = std::max(reach, sigma(k));
    inv_reach = std::max(inv_reach, inv(k));
    if (reach == k && inv_reach == k) {
      parts.push_back(Interval{start, k});
      start = k + 1;
    }
  }
  return SegmentPartition(std::move(parts));
}

bool rho_equivalent(const Permutation& sigma, const Permutation& mu) {
  if (sigma.size() != mu.size()) {
    throw Error(ErrorCode::LengthMismatch, "permutations of different degree");
  }
  const SegmentPartition seg = segments(sigma);
  if (seg != segments(mu)) return false;
  for (const Interval& part : seg.segments()) {
    const Permutation s = sigma.restricted(part);
    const Permutation m = mu.restricted(part);
    if (m != s && m != s.inverse()) return false;
  }
  return true;
}

namespace {

// Per segment, the distinct choices among {sigma|I, (sigma|I)^-1}, smaller first.
std::vector<std::vector<Permutation>> segment_choices(const Permutation& sigma,
                                                      const SegmentPartition& seg) {
  std::vector<std::vector<Permutation>> choices;
  for (const Interval& part : seg.segments()) {
    Permutation r = sigma.restricted(part);
    Permutation inv = r.inverse();
    if (r == inv) {
      choices.push_back({std::move(r)});
    } else if (inv < r) {
      choices.push_back({std::move(inv), std::move(r)});
    } else {
      choices.push_back({std::move(r), std::move(inv)});
    }
  }
  return choices;
}

}  // namespace

std::vector<Permutation> rho_class(const Permutation& sigma) {
  const SegmentPartition seg = segments(sigma);
  const auto choices = segment_choices(sigma, seg);
  std::vector<Permutation> members;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(sigma.size()));
    for (std::size_t s = 0; s < choices.size(); ++s) {
      const int offset = seg.segments()[s].first - 1;
      for (int v : choices[s][pick[s]].images()) images.push_back(v + offset);
    }
    members.push_back(Permutation::from_images(std::move(images)));

    std::size_t s = 0;
    while (s < pick.size() && ++pick[s] == choices[s].size()) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

std::size_t rho_class_size(const Permutation& sigma) {
  std::size_t size = 1;
  const SegmentPartition seg = segments(sigma);
  for (const Interval& part : seg.segments()) {
    if (!sigma.restricted(part).is_involution()) size *= 2;
  }
  return size;
}

Permutation canonical_rep(const Permutation& sigma) {
  // Segments occupy consecutive positions, so the lexicographic minimum is
  // obtained segment by segment.
  const SegmentPartition seg = segments(sigma);
  const auto choices = segment_choices(sigma, seg);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(sigma.size()));
  for (std::size_t s = 0; s < choices.size(); ++s) {
    const int offset = seg.segments()[s].first - 1;
    for (int v : choices[s].front().images()) images.push_back(v + offset);
  }
  return Permutation::from_images(std::move(images));
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative degree");
  if (n > 10) throw Error(ErrorCode::TooLarge, "refusing to enumerate S_" + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> all;
  all.reserve(factorial(n));
  do {
    all.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return all;
}

std::vector<Permutation> enumerate_reps(int n, int cap) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative degree");
  if (n > cap) {
    throw Error(ErrorCode::TooLarge,
                "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<Permutation> reps;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    auto perm = Permutation::from_images(images);
    if (canonical_rep(perm) == perm) reps.push_back(std::move(perm));
  } while (std::next_permutation(images.begin(), images.end()));
  return reps;
}

std::size_t count_classes(int n, int cap) { return enumerate_reps(n, cap).size(); }

}  // namespace sslat
