#include <doctest.h>

#include "oracles.hpp"
#include "sslat/error.hpp"
#include "sslat/extract.hpp"
#include "sslat/grid.hpp"
#include "sslat/groups.hpp"
#include "support.hpp"

using namespace sslat;
using testing::P;
using testing::raw;
using U = std::vector<std::uint64_t>;

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

}  // namespace

TEST_CASE("first primes") {
  CHECK(first_primes(5) == U{2, 3, 5, 7, 11});
  CHECK(first_primes(0).empty());
}

TEST_CASE("instances") {
  const auto one = csl_build({2}, P({1}));
  CHECK(one.elements == U{1, 2});
  CHECK(is_chain(csl_lattice(one)));

  const auto six = csl_build({2, 3}, P({2, 1}));
  CHECK(six.elements == U{1, 2, 3, 6});
  CHECK(six.k_orders == U{1, 3, 6});

  const auto thirty = csl_build({2, 3, 5}, P({2, 3, 1}));
  CHECK(thirty.h_orders == U{1, 2, 6, 30});
  CHECK(thirty.k_orders == U{1, 5, 10, 30});
  CHECK(thirty.elements == U{1, 2, 5, 6, 10, 30});
}

TEST_CASE("elements agree with the prime-set oracle") {
  for (int n = 1; n <= 5; ++n) {
    const auto primes = first_primes(n);
    for (const auto& pi : all_permutations(n)) {
      const auto inst = csl_build(primes, pi);
      const auto expected = oracle::csl_elements(primes, raw(pi));
      REQUIRE(inst.elements == U(expected.begin(), expected.end()));
    }
  }
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { csl_build({2, 2}, P({2, 1})); }) == ErrorCode::DuplicatePrime);
  CHECK(code_of([] { csl_build({2, 4}, P({2, 1})); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { csl_build({2}, P({2, 1})); }) == ErrorCode::LengthMismatch);
  const U big = {4294967291ULL, 4294967279ULL, 4294967231ULL};
  CHECK(code_of([&] { csl_build(big, P({1, 2, 3})); }) == ErrorCode::Overflow);
}

TEST_CASE("dual diagrams") {
  const auto six = csl_dual_diagram(csl_build({2, 3}, P({2, 1})));
  CHECK(is_isomorphic(six.lattice(), testing::b2()));
  CHECK(six.has_boundary_invariants());

  for (int n = 1; n <= 4; ++n) {
    CHECK(is_chain(csl_dual_diagram(csl_build(first_primes(n), Permutation::identity(n))).lattice()));
  }

  const auto thirty = csl_dual_diagram(csl_build({2, 3, 5}, P({2, 3, 1})));
  CHECK(thirty.length() == 3);
  CHECK(thirty.lattice().size() == 6);
}

TEST_CASE("the composition series lattice is dually slim and dually semimodular") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const auto M = dual(csl_lattice(csl_build(first_primes(n), pi)));
      REQUIRE(is_slim(M));
      REQUIRE(is_semimodular(M));
    }
  }
}

TEST_CASE("Jordan-Hoelder permutation") {
  CHECK(jordan_holder_permutation(csl_build({2, 3, 5}, Permutation::identity(3))) == Permutation::identity(3));
  CHECK(jordan_holder_permutation(csl_build({2, 3}, P({2, 1}))) == P({2, 1}));
  for (const auto& pi : all_permutations(4)) {
    REQUIRE(jordan_holder_permutation(csl_build({2, 3, 5, 7}, pi)) == pi);
  }
}

TEST_CASE("the dual diagram lists both series from the top down") {
  // c_k = H_{n-k}, so the extracted permutation is pi conjugated by i -> n+1-i.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const auto D = csl_dual_diagram(csl_build(first_primes(n), pi));
      REQUIRE(extract_permutation(D) == pi.flipped());
      REQUIRE(is_isomorphic(D.lattice(), phi0(pi.flipped()).lattice()));
    }
  }
  const auto D = csl_dual_diagram(csl_build({2, 3, 5}, P({2, 1, 3})));
  CHECK(extract_permutation(D) == P({1, 3, 2}));
  CHECK_FALSE(is_isomorphic(D.lattice(), phi0(P({2, 1, 3})).lattice()));
}

TEST_CASE("isomorphism type depends only on the class") {
  for (const auto& a : all_permutations(4)) {
    for (const auto& b : rho_class(a)) {
      REQUIRE(is_isomorphic(csl_lattice(csl_build(first_primes(4), a)),
                            csl_lattice(csl_build(first_primes(4), b))));
    }
  }
}

TEST_CASE("projectivity witnesses") {
  const auto six = csl_build({2, 3}, P({2, 1}));
  const auto w = projectivity_witness(six, 1, 2);
  CHECK(w.prime == 2);
  CHECK(w.x == 1);
  CHECK(w.y == 2);
  CHECK(code_of([&] { projectivity_witness(six, 1, 1); }) == ErrorCode::FactorMismatch);
  CHECK(code_of([&] { projectivity_witness(six, 0, 1); }) == ErrorCode::OutOfRange);

  const auto id = csl_build({2, 3, 5}, Permutation::identity(3));
  for (int i = 1; i <= 3; ++i) {
    const auto v = projectivity_witness(id, i, i);
    CHECK(v.x == id.h_orders[static_cast<std::size_t>(i - 1)]);
    CHECK(v.y == id.h_orders[static_cast<std::size_t>(i)]);
  }

  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const auto inst = csl_build(first_primes(n), pi);
      for (int i = 1; i <= n; ++i) {
        const auto v = projectivity_witness(inst, i, pi(i));
        REQUIRE(v.y == v.prime * v.x);
        REQUIRE(oracle::gcd(inst.h_orders[static_cast<std::size_t>(i - 1)], v.y) == v.x);
      }
    }
  }
}
