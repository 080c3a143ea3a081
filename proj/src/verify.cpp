#include "sslat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "sslat/error.hpp"
#include "sslat/extract.hpp"
#include "sslat/groups.hpp"

namespace sslat {

namespace {

constexpr int kQuadraticCap = 5;

enum Check : std::size_t {
  kRoundTrip,
  kExtractorsAgree,
  kReflectionInverts,
  kRightToLeft,
  kFormula,
  kSourceCells,
  kRegenerate,
  kStructure,
  kNarrowsSegments,
  kDiagramsOf,
  kRhoIsomorphism,
  kGroupRealization,
  kCheckCount,
};

constexpr const char* kCheckNames[kCheckCount] = {
    "round_trip",         "extractors_agree", "reflection_inverts", "right_to_left_inverse",
    "beta_closed_form",   "source_cells",     "regeneration",       "structure",
    "narrows_segments",   "diagram_count",    "rho_iff_isomorphic", "group_realization",
};

struct Tally {
  struct Entry {
    std::size_t runs = 0;
    std::size_t failures = 0;
    Permutation first;  // smallest failing permutation, for a deterministic report
    std::string detail;
  };
  std::vector<Entry> entries = std::vector<Entry>(kCheckCount);

  void record(Check c, const Permutation& pi, bool ok, const std::string& detail = {}) {
    Entry& e = entries[c];
    ++e.runs;
    if (ok) return;
    if (e.failures == 0 || std::pair(pi.size(), pi) < std::pair(e.first.size(), e.first)) {
      e.first = pi;
      e.detail = detail;
    }
    ++e.failures;
  }

  void merge(const Tally& other) {
    for (std::size_t c = 0; c < kCheckCount; ++c) {
      const Entry& o = other.entries[c];
      Entry& e = entries[c];
      e.runs += o.runs;
      if (o.failures == 0) continue;
      if (e.failures == 0 || std::pair(o.first.size(), o.first) < std::pair(e.first.size(), e.first)) {
        e.first = o.first;
        e.detail = o.detail;
      }
      e.failures += o.failures;
    }
  }
};

template <class F>
void guarded(Tally& tally, Check c, const Permutation& pi, F&& body) {
  try {
    std::string detail;
    const bool ok = body(detail);
    tally.record(c, pi, ok, detail);
  } catch (const std::exception& e) {
    tally.record(c, pi, false, e.what());
  }
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

// phi0 lattices for every permutation of small degree, shared read-only
// between workers by the pairwise check.
using LatticeTable = std::map<Permutation, FiniteLattice>;

void check_one(const Permutation& pi, const VerifyOptions& opt, const LatticeTable& table,
               Tally& tally) {
  const int n = pi.size();
  const CanonicalDiagram canon = canonical_diagram(pi);
  const BorderedDiagram& D = canon.diagram;
  const FiniteLattice& L = D.lattice();

  guarded(tally, kRoundTrip, pi, [&](std::string& detail) {
    const Permutation expected = opt.inject_fault ? Permutation() : pi;
    const Permutation got = extract_permutation(D, ExtractMode::Fast);
    detail = "extracted " + got.one_line();
    return got == expected;
  });
  guarded(tally, kExtractorsAgree, pi, [&](std::string&) {
    return extract_permutation(D, ExtractMode::Verify) == pi;
  });
  guarded(tally, kReflectionInverts, pi, [&](std::string&) {
    return extract_permutation(D.reflected()) == pi.inverse();
  });
  guarded(tally, kRightToLeft, pi, [&](std::string&) {
    return pi2_right_to_left(D) == pi2_meet_irreducibles(D).inverse();
  });
  guarded(tally, kFormula, pi, [&](std::string&) {
    return canon.beta == beta_from_formula(pi);
  });
  guarded(tally, kSourceCells, pi, [&](std::string&) {
    return source_cells(canon.beta) == permutation_cells(pi);
  });
  guarded(tally, kRegenerate, pi, [&](std::string&) { return regenerate(canon.beta) == canon.beta; });
  guarded(tally, kStructure, pi, [&](std::string& detail) {
    for (Element x = 0; x < L.size(); ++x) {
      if (L.upper_covers(x).size() > 2) {
        detail = "element with three upper covers";
        return false;
      }
    }
    detail = "slim/semimodular/length/Mi/boundary";
    return is_slim(L) && is_semimodular(L) && L.length() == n &&
           static_cast<int>(meet_irreducibles(L).size()) == n && D.has_boundary_invariants();
  });
  guarded(tally, kNarrowsSegments, pi, [&](std::string&) {
    std::vector<int> heights;
    for (Element x : narrows(L)) heights.push_back(L.height(x));
    return heights == segments(pi).cut_points();
  });

  if (n > kQuadraticCap) return;

  guarded(tally, kDiagramsOf, pi, [&](std::string& detail) {
    const auto diagrams = diagrams_of(L);
    std::vector<Permutation> extracted;
    for (const auto& d : diagrams) extracted.push_back(extract_permutation(d));
    detail = std::to_string(diagrams.size()) + " diagrams";
    return diagrams.size() == rho_class_size(pi) && as_set(extracted) == as_set(rho_class(pi));
  });
  guarded(tally, kRhoIsomorphism, pi, [&](std::string& detail) {
    for (const auto& [sigma, M] : table) {
      if (sigma.size() != n) continue;
      if (is_isomorphic(L, M) != rho_equivalent(pi, sigma)) {
        detail = "against " + sigma.one_line();
        return false;
      }
    }
    return true;
  });
  // The dual CSL diagram lists H and K from G downwards, so its permutation
  // is pi conjugated by the order-reversing map.
  guarded(tally, kGroupRealization, pi, [&](std::string& detail) {
    const auto inst = csl_build(first_primes(n), pi);
    const BorderedDiagram dual_diagram = csl_dual_diagram(inst);
    const FiniteLattice& M = dual_diagram.lattice();
    const Permutation got = extract_permutation(dual_diagram);
    detail = "extracted " + got.one_line();
    for (int i = 1; i <= n; ++i) projectivity_witness(inst, i, pi(i));
    return is_slim(M) && is_semimodular(M) && got == pi.flipped() &&
           jordan_holder_permutation(inst) == pi && is_isomorphic(M, phi0(pi.flipped()).lattice());
  });
}

std::vector<Permutation> random_samples(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(opt.sample_n));
  for (int s = 0; s < opt.samples; ++s) {
    std::iota(images.begin(), images.end(), 1);
    // Fisher-Yates with explicit draws, so samples agree across standard libraries.
    for (std::size_t k = images.size(); k > 1; --k) {
      std::swap(images[k - 1], images[static_cast<std::size_t>(rng() % k)]);
    }
    out.push_back(Permutation::from_images(images));
  }
  return out;
}

}  // namespace

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

Json RunReport::to_json(bool with_timing) const {
  Json list = Json::array();
  std::size_t passed_count = 0;
  for (const CheckResult& c : checks) {
    Json entry{{"name", c.name}, {"runs", c.runs}, {"failures", c.failures}, {"passed", c.passed()}};
    if (!c.passed()) entry["first_failure"] = c.first_failure;
    list.push_back(std::move(entry));
    passed_count += c.passed() ? 1 : 0;
  }
  Json out{{"command", command},
           {"inputs", inputs},
           {"outputs", outputs},
           {"verification",
            {{"checks_run", checks.size()}, {"checks_passed", passed_count}, {"checks", list}}},
           {"passed", passed()}};
  if (with_timing) out["wall_seconds"] = wall_seconds;
  return out;
}

RunReport run_verification(const VerifyOptions& opt) {
  if (opt.max_n < 0 || opt.jobs < 1 || opt.samples < 0 || opt.sample_n < 0) {
    throw Error(ErrorCode::OutOfRange, "negative size or no workers");
  }
  if (opt.max_n > kMaxVerifyDegree || opt.sample_n > 2 * kMaxVerifyDegree) {
    throw Error(ErrorCode::TooLarge, "verification is capped at degree " +
                                         std::to_string(kMaxVerifyDegree) + " (samples " +
                                         std::to_string(2 * kMaxVerifyDegree) + ")");
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<Permutation> work;
  for (int n = 1; n <= opt.max_n; ++n) {
    for (auto& pi : all_permutations(n)) work.push_back(std::move(pi));
  }
  for (auto& pi : random_samples(opt)) work.push_back(std::move(pi));

  LatticeTable table;
  for (int n = 1; n <= std::min(opt.max_n, kQuadraticCap); ++n) {
    for (const auto& pi : all_permutations(n)) table.emplace(pi, phi0(pi).lattice());
  }

  const auto workers = static_cast<std::size_t>(opt.jobs);
  std::vector<Tally> tallies(workers);
  auto run_slice = [&](std::size_t w) {
    for (std::size_t k = w; k < work.size(); k += workers) {
      check_one(work[k], opt, table, tallies[w]);
    }
  };
  if (workers == 1) {
    run_slice(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run_slice, w);
    for (auto& t : threads) t.join();
  }
  Tally total;
  for (const Tally& t : tallies) total.merge(t);

  RunReport report;
  report.command = "verify";
  report.inputs = Json{{"n", opt.max_n}, {"seed", opt.seed}, {"samples", opt.samples},
                       {"sample_n", opt.sample_n}};
  report.outputs = Json{{"permutations", work.size()}};
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    const auto& e = total.entries[c];
    std::string first;
    if (e.failures > 0) first = "[" + e.first.one_line() + "] " + e.detail;
    report.checks.push_back({kCheckNames[c], e.runs, e.failures, std::move(first)});
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sslat
