#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sslat/error.hpp"
#include "sslat/extract.hpp"
#include "sslat/groups.hpp"
#include "sslat/io.hpp"
#include "sslat/verify.hpp"

namespace sslat::cli {

namespace {

struct Options {
  std::string perm;
  std::string primes;
  std::string diagram;
  std::string format;
  std::string mode = "verify";
  int n = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  int samples = 0;
  bool inject_fault = false;
  bool timing = false;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

  const Options& opt() const { return opt_; }
  std::ostream& err() { return err_; }

  Permutation perm() const {
    if (opt_.perm.empty()) throw Error(ErrorCode::ParseError, "--perm is required");
    return parse_permutation(opt_.perm);
  }

  void format_allowed(std::initializer_list<std::string_view> formats) const {
    if (std::find(formats.begin(), formats.end(), opt_.format) == formats.end()) {
      throw Error(ErrorCode::ParseError, "format " + opt_.format + " is not available here");
    }
  }

  bool json() const { return opt_.format == "json"; }

  void check(RunReport& report, std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(name), 1, ok ? 0U : 1U, ok ? "" : std::move(detail)});
  }

  int emit(RunReport& report) {
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (json()) out_ << report.to_json(opt_.timing).dump(2) << '\n';
    for (const CheckResult& c : report.checks) {
      if (!c.passed()) err_ << "check failed: " << c.name << ": " << c.first_failure << '\n';
    }
    if (opt_.timing) err_ << "wall time " << report.wall_seconds << " s\n";
    return report.passed() ? kExitOk : kExitVerificationFailed;
  }

  void text(const std::string& s) { out_ << s; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Accepts a bare diagram object or a report whose outputs carry one.
BorderedDiagram load_diagram(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::ParseError, "--diagram is required");
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (j.is_object() && j.contains("outputs") && j["outputs"].is_object() &&
      j["outputs"].contains("diagram")) {
    return diagram_from_json(j["outputs"]["diagram"]);
  }
  return diagram_from_json(j);
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad prime \"" + token + "\"");
    }
    out.push_back(value);
  }
  return out;
}

Json perm_json(const Permutation& pi) {
  return Json{{"images", to_json(pi)}, {"one_line", pi.one_line()}, {"cycles", pi.cycles()}};
}

Json tops_json(const std::vector<GridPoint>& tops) {
  Json out = Json::array();
  for (const GridPoint& p : tops) out.push_back({p.i, p.j});
  return out;
}

Json cells_json(const std::vector<GridCell>& cells) {
  Json out = Json::array();
  for (const GridCell& c : cells) out.push_back({c.i, c.j});
  return out;
}

int cmd_build(Session& s) {
  s.format_allowed({"json", "dot", "ascii"});
  const Permutation pi = s.perm();
  const CanonicalDiagram canon = canonical_diagram(pi);
  const FiniteLattice& L = canon.diagram.lattice();
  s.err() << "phi0(" << pi.one_line() << "): " << L.size() << " elements, length " << L.length()
          << '\n';
  if (s.opt().format == "dot") {
    s.text(to_dot(canon.diagram, "phi0", canon.tops));
    return kExitOk;
  }
  if (s.opt().format == "ascii") {
    s.text(grid_ascii(pi));
    return kExitOk;
  }
  RunReport report;
  report.command = "build";
  report.inputs = Json{{"perm", to_json(pi)}};
  report.outputs = Json{{"diagram", to_json(canon.diagram)}, {"tops", tops_json(canon.tops)},
                        {"dot", to_dot(canon.diagram, "phi0", canon.tops)}};
  const Permutation back = extract_permutation(canon.diagram);
  s.check(report, "round_trip", back == pi, "extracted " + back.one_line());
  s.check(report, "slim_semimodular", is_slim(L) && is_semimodular(L));
  return s.emit(report);
}

int cmd_extract(Session& s) {
  s.format_allowed({"json"});
  const BorderedDiagram D = load_diagram(s.opt().diagram);
  if (s.opt().mode != "verify" && s.opt().mode != "fast") {
    throw Error(ErrorCode::ParseError, "mode must be verify or fast");
  }
  const bool verify = s.opt().mode == "verify";
  const Permutation pi = extract_permutation(D, verify ? ExtractMode::Verify : ExtractMode::Fast);
  const std::size_t class_size = rho_class_size(pi);
  s.err() << pi.one_line() << "  " << pi.cycles() << "  class size " << class_size << '\n';

  RunReport report;
  report.command = "extract";
  report.inputs = Json{{"diagram", to_json(D)}, {"mode", s.opt().mode}};
  report.outputs = Json{{"permutation", perm_json(pi)},
                        {"segments", to_json(segments(pi))},
                        {"class_size", class_size}};
  if (verify) s.check(report, "extractors_agree", true);
  return s.emit(report);
}

int cmd_classify(Session& s) {
  s.format_allowed({"json"});
  const Permutation pi = s.perm();
  const auto members = rho_class(pi);
  Json list = Json::array();
  for (const Permutation& m : members) list.push_back(to_json(m));
  s.err() << pi.one_line() << ": class of " << members.size() << ", representative "
          << canonical_rep(pi).one_line() << '\n';

  RunReport report;
  report.command = "classify";
  report.inputs = Json{{"perm", to_json(pi)}};
  report.outputs = Json{{"permutation", perm_json(pi)},
                        {"segments", to_json(segments(pi))},
                        {"canonical", to_json(canonical_rep(pi))},
                        {"class", std::move(list)},
                        {"class_size", members.size()}};
  s.check(report, "class_size_formula", members.size() == rho_class_size(pi));
  return s.emit(report);
}

int cmd_count(Session& s) {
  s.format_allowed({"json"});
  const int top = s.opt().n;
  if (top < 0) throw Error(ErrorCode::OutOfRange, "--n must be nonnegative");
  if (top > kDefaultEnumerationCap) {
    throw Error(ErrorCode::TooLarge, "counting is capped at n = " +
                                         std::to_string(kDefaultEnumerationCap));
  }
  std::vector<std::size_t> counts(static_cast<std::size_t>(top));
  const int jobs = std::max(1, s.opt().jobs);
  auto slice = [&](int w) {
    for (int n = top - w; n >= 1; n -= jobs) counts[static_cast<std::size_t>(n - 1)] = count_classes(n);
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w) threads.emplace_back(slice, w);
  for (auto& t : threads) t.join();

  RunReport report;
  report.command = "count";
  report.inputs = Json{{"n", top}};
  Json rows = Json::array();
  bool bounded = true;
  for (int n = 1; n <= top; ++n) {
    const std::size_t c = counts[static_cast<std::size_t>(n - 1)];
    rows.push_back({{"n", n}, {"classes", c}, {"factorial", factorial(n)}});
    bounded = bounded && c <= factorial(n);
    s.err() << "n=" << n << "  " << c << '\n';
  }
  report.outputs = Json{{"counts", std::move(rows)}};
  s.check(report, "bounded_by_factorial", bounded);
  return s.emit(report);
}

int cmd_verify(Session& s) {
  s.format_allowed({"json"});
  VerifyOptions v;
  v.max_n = s.opt().n;
  v.jobs = s.opt().jobs;
  v.seed = s.opt().seed;
  v.samples = s.opt().samples;
  v.inject_fault = s.opt().inject_fault;
  RunReport report = run_verification(v);
  for (const CheckResult& c : report.checks) {
    s.err() << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.runs << " runs)\n";
  }
  return s.emit(report);
}

int cmd_group_realize(Session& s) {
  s.format_allowed({"json", "dot"});
  const Permutation pi = s.perm();
  auto primes = s.opt().primes.empty() ? first_primes(pi.size()) : parse_primes(s.opt().primes);
  const CyclicCslInstance inst = csl_build(std::move(primes), pi);
  const FiniteLattice csl = csl_lattice(inst);
  const BorderedDiagram dual_diagram = csl_dual_diagram(inst);
  const std::string dots = to_dot(csl, "CSL") + to_dot(dual_diagram, "CSL_dual");
  if (s.opt().format == "dot") {
    s.text(dots);
    return kExitOk;
  }
  const Permutation extracted = extract_permutation(dual_diagram);
  const Permutation sigma = jordan_holder_permutation(inst);
  s.err() << "elements:";
  for (auto e : inst.elements) s.err() << ' ' << e;
  s.err() << "\nJordan-Hoelder permutation " << sigma.one_line() << ", dual diagram extracts "
          << extracted.one_line() << '\n';

  Json witnesses = Json::array();
  bool witnessed = true;
  for (int i = 1; i <= pi.size(); ++i) {
    try {
      const auto w = projectivity_witness(inst, i, sigma(i));
      witnesses.push_back({{"i", i}, {"j", sigma(i)}, {"x", w.x}, {"y", w.y}, {"prime", w.prime}});
    } catch (const std::exception&) {
      witnessed = false;
    }
  }

  RunReport report;
  report.command = "group-realize";
  report.inputs = Json{{"perm", to_json(pi)}, {"primes", inst.primes}};
  report.outputs = Json{{"h_orders", inst.h_orders},
                        {"k_orders", inst.k_orders},
                        {"elements", inst.elements},
                        {"jordan_holder", to_json(sigma)},
                        {"extracted", to_json(extracted)},
                        {"dual_diagram", to_json(dual_diagram)},
                        {"witnesses", std::move(witnesses)},
                        {"dot", dots}};
  const FiniteLattice& M = dual_diagram.lattice();
  s.check(report, "dual_slim_semimodular", is_slim(M) && is_semimodular(M));
  s.check(report, "jordan_holder_is_pi", sigma == pi, "got " + sigma.one_line());
  s.check(report, "projectivity_witnesses", witnessed);
  // H and K run from G downwards in the dual, which reverses both indexings.
  s.check(report, "extracted_is_reversed_pi", extracted == pi.flipped(),
          "got " + extracted.one_line());
  return s.emit(report);
}

int cmd_render_grid(Session& s) {
  s.format_allowed({"ascii", "json", "dot"});
  const Permutation pi = s.perm();
  if (s.opt().format == "ascii") {
    s.text(grid_ascii(pi));
    return kExitOk;
  }
  const GridCongruence beta = beta_from_perm(pi);
  if (s.opt().format == "dot") {
    s.text(grid_dot(beta, "grid"));
    return kExitOk;
  }
  const auto cells = source_cells(beta);
  RunReport report;
  report.command = "render-grid";
  report.inputs = Json{{"perm", to_json(pi)}};
  report.outputs = Json{{"beta", to_json(beta)},
                        {"source_cells", cells_json(cells)},
                        {"matrix", grid_ascii(pi)}};
  s.check(report, "source_cells_match", cells == permutation_cells(pi));
  return s.emit(report);
}

int cmd_export_dot(Session& s) {
  s.format_allowed({"dot"});
  if (!s.opt().perm.empty() && !s.opt().diagram.empty()) {
    throw Error(ErrorCode::ParseError, "give --perm or --diagram, not both");
  }
  if (!s.opt().perm.empty()) {
    const CanonicalDiagram canon = canonical_diagram(s.perm());
    s.text(to_dot(canon.diagram, "phi0", canon.tops));
  } else {
    s.text(to_dot(load_diagram(s.opt().diagram)));
  }
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slim semimodular lattices and their permutations", "sslat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  auto add_perm = [&](CLI::App* sub) {
    sub->add_option("--perm", opt.perm, "Permutation: 2,3,1 or (1 2 3)");
  };
  auto add_format = [&](CLI::App* sub, std::string fallback) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "ascii"}))
        ->default_str(fallback);
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<CLI::App*, std::string>> defaults;
  auto sub = [&](const char* name, const char* help, std::string fallback) {
    CLI::App* s = app.add_subcommand(name, help);
    add_format(s, fallback);
    defaults.emplace_back(s, std::move(fallback));
    return s;
  };

  CLI::App* build = sub("build", "Canonical diagram of a permutation", "json");
  add_perm(build);
  CLI::App* extract = sub("extract", "Permutation of a diagram", "json");
  extract->add_option("--diagram", opt.diagram, "Diagram JSON file, or - for stdin");
  extract->add_option("--mode", opt.mode, "verify (all extractors) or fast")
      ->check(CLI::IsMember({"verify", "fast"}));
  CLI::App* classify = sub("classify", "Segments and class of a permutation", "json");
  add_perm(classify);
  CLI::App* count = sub("count", "Number of classes for n = 1..N", "json");
  count->add_option("--n", opt.n, "Largest degree")->required();
  add_jobs(count);
  CLI::App* verify = sub("verify", "Run the invariant suite up to degree N", "json");
  verify->add_option("--n", opt.n, "Largest degree")->required();
  verify->add_option("--seed", opt.seed, "Seed for random samples");
  verify->add_option("--samples", opt.samples, "Random permutations of degree 7 to add");
  verify->add_flag("--inject-fault", opt.inject_fault)->group("");
  add_jobs(verify);
  CLI::App* group = sub("group-realize", "Realize a permutation by two composition series", "json");
  add_perm(group);
  group->add_option("--primes", opt.primes, "Distinct primes, default the first n");
  CLI::App* grid = sub("render-grid", "Grid matrix of a permutation", "ascii");
  add_perm(grid);
  CLI::App* dot = sub("export-dot", "Graphviz drawing of a diagram", "dot");
  add_perm(dot);
  dot->add_option("--diagram", opt.diagram, "Diagram JSON file, or - for stdin");
  app.add_flag("--timing", opt.timing, "Report wall time (breaks byte-identical output)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  for (const auto& [s, fallback] : defaults) {
    if (s->parsed() && opt.format.empty()) opt.format = fallback;
  }

  Session session(opt, out, err);
  try {
    if (build->parsed()) return cmd_build(session);
    if (extract->parsed()) return cmd_extract(session);
    if (classify->parsed()) return cmd_classify(session);
    if (count->parsed()) return cmd_count(session);
    if (verify->parsed()) return cmd_verify(session);
    if (group->parsed()) return cmd_group_realize(session);
    if (grid->parsed()) return cmd_render_grid(session);
    return cmd_export_dot(session);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace sslat::cli
