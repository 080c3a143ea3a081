#include <doctest.h>

#include <numeric>
#include <set>

#include "sslat/error.hpp"
#include "sslat/extract.hpp"
#include "sslat/grid.hpp"
#include "support.hpp"

using namespace sslat;
using testing::b2;
using testing::chain;
using testing::P;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

BorderedDiagram chain_diagram(int n) {
  std::vector<Element> c(static_cast<std::size_t>(n) + 1);
  std::iota(c.begin(), c.end(), 0);
  return BorderedDiagram(chain(n), c, c);
}

// B2 with the left chain through a = 1.
BorderedDiagram square() { return BorderedDiagram(b2(), {0, 1, 3}, {0, 2, 3}); }

}  // namespace

TEST_CASE("chains extract the identity") {
  const auto D = chain_diagram(3);
  const auto id = Permutation::identity(3);
  CHECK(pi1_trajectories(D) == id);
  CHECK(pi2_meet_irreducibles(D) == id);
  CHECK(pi3_source_cells(D) == id);
  CHECK(extract_permutation(D) == id);
  CHECK(extract_permutation(chain_diagram(0)) == Permutation::identity(0));
}

TEST_CASE("the square extracts a transposition") {
  const auto D = square();
  CHECK(pi1_trajectories(D) == P({2, 1}));
  CHECK(pi2_meet_irreducibles(D) == P({2, 1}));
  CHECK(pi3_source_cells(D) == P({2, 1}));
}

TEST_CASE("trajectories of the square") {
  const auto t = trajectories(square());
  REQUIRE(t.size() == 2);
  CHECK(t[0].edges == std::vector<CoverPair>{{0, 1}, {2, 3}});
  CHECK(t[1].edges == std::vector<CoverPair>{{1, 3}, {0, 2}});
}

TEST_CASE("trajectories are paths between the chains") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const auto D = phi0(pi);
      for (const auto& t : trajectories(D)) {
        const std::set<CoverPair> distinct(t.edges.begin(), t.edges.end());
        REQUIRE(distinct.size() == t.edges.size());
      }
    }
  }
}

TEST_CASE("a three-cycle") {
  const auto D = phi0(P({2, 3, 1}));
  CHECK(pi2_meet_irreducibles(D) == P({2, 3, 1}));
  CHECK(extract_permutation(D.reflected()) == P({3, 1, 2}));
}

TEST_CASE("round trip and extractor agreement") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const auto D = phi0(pi);
      REQUIRE(pi1_trajectories(D) == pi);
      REQUIRE(pi2_meet_irreducibles(D) == pi);
      REQUIRE(pi3_source_cells(D) == pi);
      REQUIRE(extract_permutation(D, ExtractMode::Fast) == pi);
    }
  }
}

TEST_CASE("reflection and the right-to-left extractor invert") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const auto D = phi0(pi);
      REQUIRE(extract_permutation(D.reflected()) == pi.inverse());
      REQUIRE(pi2_right_to_left(D) == pi.inverse());
    }
  }
}

TEST_CASE("invalid inputs") {
  CHECK(code_of([] { extract_permutation(BorderedDiagram(testing::m3(), {0, 1, 4}, {0, 3, 4})); }) ==
        ErrorCode::NotSlimSemimodular);
  CHECK(code_of([] { extract_permutation(BorderedDiagram(testing::n5(), {0, 1, 3, 4}, {0, 1, 3, 4})); }) ==
        ErrorCode::NotSlimSemimodular);
  CHECK(code_of([] { extract_permutation(BorderedDiagram(b2(), {0, 1, 3}, {0, 1, 3})); }) ==
        ErrorCode::InvalidDiagram);
  CHECK(code_of([] { diagrams_of(testing::m3()); }) == ErrorCode::NotSlimSemimodular);
}

TEST_CASE("diagrams of small lattices") {
  CHECK(diagram_count(chain(3)) == 1);
  CHECK(diagram_count(b2()) == 1);
  const auto diagrams = diagrams_of(phi0(P({2, 3, 1})).lattice());
  REQUIRE(diagrams.size() == 2);
  std::set<Permutation> extracted;
  for (const auto& d : diagrams) extracted.insert(extract_permutation(d));
  CHECK(extracted == std::set<Permutation>{P({2, 3, 1}), P({3, 1, 2})});
}

TEST_CASE("diagram counts of the worked examples") {
  CHECK(diagram_count(phi0(P({1, 7, 4, 5, 3, 6, 2, 9, 8})).lattice()) == 2);
  CHECK(diagram_count(phi0(parse_permutation("(1 2 3)(5 6 7)")).lattice()) == 4);
}

TEST_CASE("diagrams realize the whole class") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_reps(n)) {
      const auto diagrams = diagrams_of(phi0(pi).lattice());
      std::set<Permutation> extracted;
      for (const auto& d : diagrams) {
        REQUIRE(d.has_boundary_invariants());
        extracted.insert(extract_permutation(d));
      }
      const auto cls = rho_class(pi);
      REQUIRE(extracted == std::set<Permutation>(cls.begin(), cls.end()));
      REQUIRE(diagrams.size() == cls.size());
    }
  }
}

TEST_CASE("boundary chains satisfy the boundary invariants") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_reps(n)) {
      const auto L = phi0(pi).lattice();
      auto chains = boundary_chains(L);
      REQUIRE(BorderedDiagram(L, chains.left, chains.right).has_boundary_invariants());
    }
  }
}
