#include "sslat/io.hpp"

#include <sstream>

#include "sslat/error.hpp"
#include "sslat/extract.hpp"

namespace sslat {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> as_int_array(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(as_int(x, what));
  return out;
}

std::string node(Element x) { return "n" + std::to_string(x); }

void rank_by_height(std::ostringstream& out, const FiniteLattice& L) {
  std::vector<std::vector<Element>> levels(static_cast<std::size_t>(L.length()) + 1);
  for (Element x : L.by_height()) levels[static_cast<std::size_t>(L.height(x))].push_back(x);
  for (const auto& level : levels) {
    if (level.size() < 2) continue;
    out << "  { rank=same;";
    for (Element x : level) out << ' ' << node(x) << ';';
    out << " }\n";
  }
}

}  // namespace

Json to_json(const Permutation& pi) { return Json(std::vector<int>(pi.images().begin(), pi.images().end())); }

Permutation permutation_from_json(const Json& j) {
  return Permutation::from_images(as_int_array(j, "permutation"));
}

Json to_json(const SegmentPartition& segments) {
  Json out = Json::array();
  for (const Interval& s : segments.segments()) out.push_back({s.first, s.last});
  return out;
}

Json to_json(const FiniteLattice& L) {
  Json covers = Json::array();
  for (const auto& [a, b] : L.cover_pairs()) covers.push_back({a, b});
  return Json{{"size", L.size()}, {"covers", std::move(covers)}};
}

FiniteLattice lattice_from_json(const Json& j) {
  const int size = as_int(field(j, "size"), "size");
  const Json& covers = field(j, "covers");
  if (!covers.is_array()) parse_fail("covers must be an array");
  std::vector<CoverPair> pairs;
  for (const Json& c : covers) {
    const auto pair = as_int_array(c, "cover");
    if (pair.size() != 2) parse_fail("each cover must be a pair");
    pairs.emplace_back(pair[0], pair[1]);
  }
  return FiniteLattice::from_covers(size, pairs);
}

Json to_json(const BorderedDiagram& D) {
  Json out = to_json(D.lattice());
  out["left_chain"] = std::vector<int>(D.left_chain().begin(), D.left_chain().end());
  out["right_chain"] = std::vector<int>(D.right_chain().begin(), D.right_chain().end());
  return out;
}

BorderedDiagram diagram_from_json(const Json& j) {
  FiniteLattice L = lattice_from_json(j);
  const bool has_left = j.contains("left_chain");
  const bool has_right = j.contains("right_chain");
  if (has_left != has_right) parse_fail("give both chains or neither");
  if (!has_left) {
    auto chains = boundary_chains(L);
    return BorderedDiagram(std::move(L), std::move(chains.left), std::move(chains.right));
  }
  return BorderedDiagram(std::move(L), as_int_array(j.at("left_chain"), "left_chain"),
                         as_int_array(j.at("right_chain"), "right_chain"));
}

BorderedDiagram parse_diagram(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    parse_fail(e.what());
  }
  return diagram_from_json(j);
}

Json to_json(const GridCongruence& kappa) {
  Json rows = Json::array();
  for (int i = 0; i <= kappa.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j <= kappa.n(); ++j) row.push_back(kappa.block_of({i, j}));
    rows.push_back(std::move(row));
  }
  return Json{{"n", kappa.n()}, {"blocks", std::move(rows)}};
}

GridCongruence congruence_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) parse_fail("n must be nonnegative");
  const Json& rows = field(j, "blocks");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n + 1) {
    parse_fail("blocks must have n+1 rows");
  }
  std::vector<int> labels;
  for (const Json& row : rows) {
    const auto values = as_int_array(row, "block");
    if (static_cast<int>(values.size()) != n + 1) parse_fail("blocks must have n+1 columns");
    labels.insert(labels.end(), values.begin(), values.end());
  }
  return GridCongruence::from_labels(n, std::move(labels));
}

std::string to_dot(const FiniteLattice& L, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n  edge [dir=none];\n";
  for (Element x = 0; x < L.size(); ++x) out << "  " << node(x) << " [label=\"" << x << "\"];\n";
  rank_by_height(out, L);
  for (const auto& [a, b] : L.cover_pairs()) out << "  " << node(a) << " -> " << node(b) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const BorderedDiagram& D, std::string_view name,
                   const std::vector<GridPoint>& tops) {
  const FiniteLattice& L = D.lattice();
  auto on_chain = [](std::span<const Element> chain, Element a, Element b) {
    for (std::size_t k = 1; k < chain.size(); ++k) {
      if (chain[k - 1] == a && chain[k] == b) return true;
    }
    return false;
  };
  const bool positioned = static_cast<int>(tops.size()) == L.size();

  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n  edge [dir=none];\n";
  for (Element x = 0; x < L.size(); ++x) {
    out << "  " << node(x) << " [label=\"" << x << "\"";
    if (positioned) {
      const GridPoint p = tops[static_cast<std::size_t>(x)];
      out << ", pos=\"" << (p.j - p.i) << ',' << (p.i + p.j) << "!\"";
    }
    out << "];\n";
  }
  if (!positioned) rank_by_height(out, L);
  for (const auto& [a, b] : L.cover_pairs()) {
    const bool left = on_chain(D.left_chain(), a, b);
    const bool right = on_chain(D.right_chain(), a, b);
    out << "  " << node(a) << " -> " << node(b);
    if (left && right) {
      out << " [style=bold, color=purple]";
    } else if (left) {
      out << " [style=bold, color=blue]";
    } else if (right) {
      out << " [style=dashed, color=red]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string grid_dot(const GridCongruence& kappa, std::string_view name) {
  const Grid grid = kappa.grid();
  auto id = [](GridPoint p) { return "g" + std::to_string(p.i) + "_" + std::to_string(p.j); };
  std::ostringstream out;
  out << "digraph " << name << " {\n  node [shape=point];\n  edge [dir=none];\n";
  for (int x = 0; x < grid.size(); ++x) {
    const GridPoint p = grid.point(x);
    out << "  " << id(p) << " [xlabel=\"" << kappa.block_of(p) << "\", pos=\"" << (p.j - p.i)
        << ',' << (p.i + p.j) << "!\"];\n";
  }
  for (const PrimeEdge& e : grid.prime_edges()) {
    out << "  " << id(e.lower) << " -> " << id(e.upper);
    if (kappa.collapses(e)) out << " [style=bold, penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string grid_ascii(const Permutation& pi) {
  const int n = pi.size();
  const int width = static_cast<int>(std::to_string(std::max(n, 1)).size());
  auto pad = [&](const std::string& s) { return std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s; };
  std::ostringstream out;
  out << pad("") << ' ';
  for (int j = 1; j <= n; ++j) out << ' ' << pad(std::to_string(j));
  out << '\n';
  for (int i = 1; i <= n; ++i) {
    out << pad(std::to_string(i)) << ' ';
    for (int j = 1; j <= n; ++j) out << ' ' << pad(pi(i) == j ? "#" : ".");
    out << '\n';
  }
  return out.str();
}

}  // namespace sslat
