#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sslat/grid.hpp"
#include "sslat/lattice.hpp"
#include "sslat/perm.hpp"

namespace sslat {

using Json = nlohmann::json;

// JSON. Parsers throw ParseError for malformed documents and the usual
// validation errors for well-formed but invalid content.

/// [2, 3, 1]
Json to_json(const Permutation& pi);
Permutation permutation_from_json(const Json& j);

/// [[1, 1], [2, 7], [8, 9]]
Json to_json(const SegmentPartition& segments);

/// {"size": 4, "covers": [[0, 1], ...]}
Json to_json(const FiniteLattice& lattice);
FiniteLattice lattice_from_json(const Json& j);

/// The lattice object plus "left_chain" and "right_chain".
Json to_json(const BorderedDiagram& diagram);
/// Missing chains are filled in with boundary_chains().
BorderedDiagram diagram_from_json(const Json& j);
BorderedDiagram parse_diagram(std::string_view text);

/// {"n": 2, "blocks": [[0, 1, 2], ...]}: blocks[i][j] is the block of (i, j).
Json to_json(const GridCongruence& kappa);
GridCongruence congruence_from_json(const Json& j);

// Graphviz and plain text.

/// Hasse diagram, bottom at the bottom, one rank per height.
std::string to_dot(const FiniteLattice& lattice, std::string_view name = "L");

/// Boundary edges are drawn bold (left) and dashed (right). When `tops`
/// holds the grid point behind each element, nodes get fixed positions.
std::string to_dot(const BorderedDiagram& diagram, std::string_view name = "D",
                   const std::vector<GridPoint>& tops = {});

/// The grid with collapsed prime intervals drawn bold.
std::string grid_dot(const GridCongruence& kappa, std::string_view name = "G");

/// The n x n grid matrix: row i, column j, '#' on the cells (i, pi(i)).
std::string grid_ascii(const Permutation& pi);

}  // namespace sslat
