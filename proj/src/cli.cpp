#include "oraclegram/cli.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "oraclegram/errors.hpp"
#include "oraclegram/gram.hpp"
#include "oraclegram/multicall.hpp"
#include "oraclegram/operators.hpp"
#include "oraclegram/serialize.hpp"
#include "oraclegram/tif.hpp"

namespace oraclegram {

namespace {

struct CommonOptions {
  std::string format = "text";
  bool verbose = false;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultSubsetBudget;

  bool json() const { return format == "json"; }
};

FunctionSet load_set_arg(const std::string& path) {
  if (path == "-") return load_function_set(std::cin);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open " + path);
  return load_function_set(file);
}

std::string format_det(const mpz_class& det, bool verbose) {
  std::string s = det.get_str();
  if (verbose || s.size() <= 40) return s;
  return s.substr(0, 12) + "..." + s.substr(s.size() - 12) + " (" +
         std::to_string(s.size()) + " digits)";
}

void print_matrix(std::ostream& out, const MatrixXz& a) {
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      width = std::max(width, a(i, j).get_str().size());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    out << " ";
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out << " " << std::setw(static_cast<int>(width)) << a(i, j).get_str();
    out << "\n";
  }
}

std::string verdict_phrase(bool distinguishable) {
  return distinguishable ? "unambiguously distinguishable"
                         : "NOT unambiguously distinguishable";
}

std::string row_text(const FunctionTable& f) {
  std::string s = "[";
  for (int x = 0; x < f.domain_size(); ++x) {
    if (x) s += ",";
    s += std::to_string(f(x));
  }
  return s + "]";
}

// ---------------------------------------------------------------- analyze

struct BruteForceReport {
  bool standard = false;
  std::optional<bool> minimal;
  std::optional<bool> entanglement_assisted;
  bool minimal_dimension_bound = false;
  bool agrees = false;
};

BruteForceReport run_brute_force(const FunctionSet& s, bool expected) {
  BruteForceReport r;
  std::vector<MatrixXz> standard;
  standard.reserve(s.size());
  for (const FunctionTable& f : s) standard.push_back(standard_oracle_matrix(f));
  r.standard = brute_force_linear_independence(standard);

  bool perms = s.domain_size() == s.range_size();
  for (int j = 0; perms && j < s.size(); ++j) perms = is_permutation(s[j]);
  if (perms) {
    std::vector<MatrixXz> minimal, assisted;
    for (const FunctionTable& f : s) {
      minimal.push_back(minimal_oracle_matrix(f));
      assisted.push_back(entanglement_assisted_minimal(f));
    }
    const int m = s.domain_size();
    r.minimal_dimension_bound = s.size() > m * m;
    r.minimal = brute_force_linear_independence(minimal);
    r.entanglement_assisted = brute_force_linear_independence(assisted);
  }

  r.agrees = r.standard == expected &&
             (!r.minimal || *r.minimal == expected) &&
             (!r.entanglement_assisted || *r.entanglement_assisted == expected);
  return r;
}

int cmd_analyze(const std::string& file, bool brute, const CommonOptions& opt,
                std::ostream& out) {
  const FunctionSet s = load_set_arg(file);
  const AnalysisRecord rec = analyze(s);
  std::optional<BruteForceReport> bf;
  if (brute) bf = run_brute_force(s, rec.distinguishable);

  if (opt.json()) {
    json j = rec;
    if (bf) {
      json b{{"standard", bf->standard},
             {"minimal", bf->minimal ? json(*bf->minimal) : json(nullptr)},
             {"entanglement_assisted", bf->entanglement_assisted
                                           ? json(*bf->entanglement_assisted)
                                           : json(nullptr)},
             {"agrees", bf->agrees}};
      j["brute_force"] = std::move(b);
    }
    out << dump(j);
  } else {
    out << "k=" << rec.k << " m=" << rec.m << " n=" << rec.n << "\n";
    out << "gamma:\n";
    print_matrix(out, rec.gamma);
    out << "det(gamma) = " << format_det(rec.determinant, opt.verbose) << "\n";
    out << "verdict: " << verdict_phrase(rec.distinguishable) << "\n";
    if (rec.classical_witness)
      out << "classical witness: input " << *rec.classical_witness << "\n";
    else
      out << "classical witness: none\n";
    out << "totally indistinguishable: "
        << (rec.totally_indistinguishable ? "yes" : "no") << "\n";
    if (bf) {
      auto word = [](bool independent) {
        return independent ? "independent" : "dependent";
      };
      out << "brute force standard oracles: " << word(bf->standard) << "\n";
      if (bf->minimal) {
        out << "brute force minimal oracles: " << word(*bf->minimal);
        if (bf->minimal_dimension_bound) out << " (dimension bound)";
        out << "\n";
        out << "brute force entanglement-assisted oracles: "
            << word(*bf->entanglement_assisted) << "\n";
      } else {
        out << "brute force minimal oracles: n/a (not a permutation set)\n";
      }
      out << "brute force agrees with verdict: " << (bf->agrees ? "yes" : "no")
          << "\n";
    }
  }
  return bf && !bf->agrees ? 1 : 0;
}

// ----------------------------------------------------------- enumerate-tif

std::vector<mpz_class> batch_determinants(const std::vector<FunctionSet>& sets,
                                          int jobs) {
  std::vector<mpz_class> dets(sets.size());
  const auto compute = [&](std::size_t i) {
    dets[i] = exact_determinant(coincidence_matrix(sets[i]).entries);
  };
  jobs = std::clamp<int>(jobs, 1, sets.empty() ? 1 : static_cast<int>(sets.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < sets.size(); ++i) compute(i);
    return dets;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < sets.size();) compute(i);
    });
  for (std::thread& t : pool) t.join();
  return dets;
}

int cmd_enumerate_tif(int m, int n, int k, const CommonOptions& opt,
                      std::ostream& out) {
  const TifEnumeration e = enumerate_tif_sets(m, n, k, opt.budget);
  std::vector<mpz_class> dets;
  if (opt.verbose) dets = batch_determinants(e.sets, opt.jobs);

  if (opt.json()) {
    json j = e;
    j["m"] = m;
    j["n"] = n;
    j["k"] = k;
    if (opt.verbose) {
      json d = json::array();
      for (const mpz_class& det : dets) d.push_back(det.get_str());
      j["dets"] = std::move(d);
    }
    out << dump(j);
  } else {
    out << "m=" << m << " n=" << n << " k=" << k << ": "
        << e.sets.size() << " totally indistinguishable set(s), examined "
        << e.examined << " candidate(s), "
        << (e.complete ? "complete" : "INCOMPLETE (budget exhausted)") << "\n";
    for (std::size_t i = 0; i < e.sets.size(); ++i) {
      out << "set " << i << ":";
      for (const FunctionTable& f : e.sets[i]) out << " " << row_text(f);
      if (opt.verbose)
        out << " det=" << format_det(dets[i], true)
            << " verdict=" << (dets[i] > 0 ? "yes" : "no");
      out << "\n";
    }
  }
  return e.complete ? 0 : 3;
}

// ------------------------------------------------------------------ grover

int cmd_grover(int m, std::optional<double> theta, const CommonOptions& opt,
               std::ostream& out, std::ostream& err) {
  const SpectrumReport closed = grover_gamma_closed_form(m);
  const mpz_class direct =
      exact_determinant(coincidence_matrix(grover_set(m)).entries);
  const bool matches = direct == closed.determinant;

  if (opt.json()) {
    json j{{"m", m},
           {"spectrum", closed},
           {"exact_matches", matches}};
    if (theta)
      j["phase"] = json{{"theta", *theta},
                        {"det", grover_phase_gram_det(m, *theta)}};
    out << dump(j);
  } else {
    out << "m=" << m << "\n";
    for (const SpectrumReport::Line& line : closed.eigenvalues) {
      out << "eigenvalue ";
      if (const mpq_class* q = std::get_if<mpq_class>(&line.value))
        out << q->get_str();
      else
        out << std::get<double>(line.value);
      out << " multiplicity " << line.multiplicity << "\n";
    }
    out << "det(gamma) = " << format_det(closed.determinant, opt.verbose) << "\n";
    out << "exact determinant check: " << (matches ? "ok" : "MISMATCH") << "\n";
    if (theta)
      out << "phase gram det(theta=" << *theta
          << ") = " << grover_phase_gram_det(m, *theta) << "\n";
  }
  if (!matches) {
    err << "error: closed form disagrees with the exact determinant\n";
    return 1;
  }
  return 0;
}

// ------------------------------------------------------------------- graph

int cmd_graph(const std::string& file, const CommonOptions& opt,
              std::ostream& out) {
  const FunctionSet s = load_set_arg(file);
  const TifGraph g = build_graph(s);
  const bool tif = is_totally_indistinguishable(s);
  std::optional<M2TifVerdict> verdict;
  mpz_class det;
  bool distinguishable = false;
  if (tif) {
    verdict = m2_tif_verdict(s);
    det = verdict->full_det;
    distinguishable = verdict->distinguishable;
  } else {
    const DistinguishabilityVerdict v = is_unambiguously_distinguishable(s);
    det = v.determinant;
    distinguishable = v.distinguishable;
  }

  if (opt.json()) {
    json j{{"graph", g},
           {"totally_indistinguishable", tif},
           {"det", det.get_str()},
           {"distinguishable", distinguishable}};
    if (verdict) {
      j["cycle"] = verdict->witness;
      j["witness_det"] = verdict->witness_det.get_str();
    } else {
      j["cycle"] = nullptr;
      j["witness_det"] = nullptr;
    }
    out << dump(j);
  } else {
    out << "k=" << g.k << " m=2 n=" << s.range_size() << "\n";
    for (int v = 0; v < g.k; ++v)
      out << "vertex " << v << ": (" << g.coords[v].first << ", "
          << g.coords[v].second << ")\n";
    for (const TifEdge& e : g.edges)
      out << "edge " << e.j << "-" << e.jp << " " << axis_letter(e.axis) << "\n";
    out << "totally indistinguishable: " << (tif ? "yes" : "no") << "\n";
    if (verdict) {
      out << "cycle:";
      for (int v : verdict->witness.vertices) out << " " << v;
      out << "  axes:";
      for (Axis a : verdict->witness.axes) out << " " << axis_letter(a);
      out << "\n";
      out << "cycle det = " << verdict->witness_det.get_str() << "\n";
    }
    out << "det(gamma) = " << format_det(det, opt.verbose) << "\n";
    out << "verdict: " << verdict_phrase(distinguishable) << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- multicall

void print_multicall(const MultiCallReport& r, const CommonOptions& opt,
                     std::ostream& out) {
  out << "c=" << r.c << "\n";
  out << "det = " << format_det(r.determinant, opt.verbose) << "\n";
  out << "verdict: " << verdict_phrase(r.distinguishable) << "\n";
  out << "delta_min = " << r.delta_min << "\n";
  out << "sufficient bound = " << r.sufficient_bound << "\n";
  out << "strict dominance: " << (r.strictly_dominant ? "yes" : "no") << "\n";
}

int cmd_multicall(const std::string& file, std::optional<int> calls,
                  std::optional<int> max_calls, const CommonOptions& opt,
                  std::ostream& out) {
  const FunctionSet s = load_set_arg(file);
  if (max_calls) {
    const std::optional<int> found = minimal_calls_search(s, *max_calls);
    std::optional<MultiCallReport> report;
    if (found) report = distinguishable_with_calls(s, *found);
    if (opt.json()) {
      json j{{"c_max", *max_calls},
             {"minimal_calls", found ? json(*found) : json(nullptr)},
             {"report", report ? json(*report) : json(nullptr)}};
      out << dump(j);
    } else {
      if (found) {
        out << "minimal calls <= " << *max_calls << ": " << *found << "\n";
        print_multicall(*report, opt, out);
      } else {
        out << "minimal calls <= " << *max_calls << ": none found\n";
      }
    }
    return 0;
  }
  const MultiCallReport r = distinguishable_with_calls(s, calls.value_or(1));
  if (opt.json())
    out << dump(json(r));
  else
    print_multicall(r, opt, out);
  return 0;
}

// ------------------------------------------------------------------ verify

FunctionTable random_function(std::mt19937_64& rng, int m, int n) {
  std::uniform_int_distribution<int> dist(0, n - 1);
  std::vector<int> values(m);
  for (int& v : values) v = dist(rng);
  return make_function(m, n, values);
}

FunctionSet random_function_set(std::mt19937_64& rng, int m, int n, int k) {
  std::set<std::vector<int>> seen;
  std::vector<FunctionTable> members;
  while (static_cast<int>(members.size()) < k) {
    FunctionTable f = random_function(rng, m, n);
    if (seen.insert(f.values()).second) members.push_back(std::move(f));
  }
  return FunctionSet(std::move(members));
}

FunctionSet random_permutation_set(std::mt19937_64& rng, int m, int k) {
  std::set<std::vector<int>> seen;
  std::vector<FunctionTable> members;
  std::vector<int> base(m);
  for (int i = 0; i < m; ++i) base[i] = i;
  while (static_cast<int>(members.size()) < k) {
    std::shuffle(base.begin(), base.end(), rng);
    if (seen.insert(base).second)
      members.push_back(make_function(m, m, base));
  }
  return FunctionSet(std::move(members));
}

bool verify_group_laws() {
  for (const auto& [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const std::vector<FunctionTable> all = enumerate_all_functions(m, n);
    for (const FunctionTable& f : all) {
      const MatrixXz u = standard_oracle_matrix(f);
      if (MatrixXz(u.transpose() * u) !=
          MatrixXz(MatrixXz::Identity(m * n, m * n)))
        return false;
      for (const FunctionTable& g : all)
        if (!verify_group_law(f, g)) return false;
    }
  }
  return true;
}

bool verify_pegg_barnett() {
  for (int n = 2; n <= 8; ++n) {
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(n, n);
    for (int y = 0; y < n; ++y) expected((y + 1) % n, y) = 1.0;
    if (!approx_equal(number_shift_matrix(n), expected, kUnitaryTolerance))
      return false;

    const Eigen::MatrixXcd phi = phase_operator(n);
    if ((phi - phi.adjoint()).norm() > kUnitaryTolerance) return false;
    for (int idx = 0; idx < n; ++idx) {
      const Eigen::VectorXcd v = pegg_barnett_state(n, idx).amplitudes;
      if ((phi * v - (2.0 * std::numbers::pi * idx / n) * v).norm() >
          kUnitaryTolerance)
        return false;
    }

    for (int m = 2; m <= 3; ++m) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(n * 100 + m));
      for (int trial = 0; trial < 5; ++trial) {
        const FunctionTable f = random_function(rng, m, n);
        for (int x = 0; x < m; ++x)
          for (int idx = 0; idx < n; ++idx)
            if (!verify_eigenrelation(f, x, idx)) return false;
      }
    }
  }
  return true;
}

bool verify_traces(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size_dist(2, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = size_dist(rng);
    const int n = size_dist(rng);
    int total = 1;
    for (int i = 0; i < m; ++i) total *= n;
    const int k = std::uniform_int_distribution<int>(2, std::min(5, total))(rng);
    const FunctionSet s = random_function_set(rng, m, n, k);
    std::vector<MatrixXz> ops;
    for (const FunctionTable& f : s) ops.push_back(standard_oracle_matrix(f));
    const MatrixXz gamma = coincidence_matrix(s).entries;
    if (gram_trace(ops) != MatrixXz(n * gamma)) return false;
  }
  for (int trial = 0; trial < 15; ++trial) {
    const int m = size_dist(rng);
    int fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    const int k = std::uniform_int_distribution<int>(2, std::min(5, fact))(rng);
    const FunctionSet s = random_permutation_set(rng, m, k);
    std::vector<MatrixXz> minimal, assisted;
    for (const FunctionTable& f : s) {
      minimal.push_back(minimal_oracle_matrix(f));
      assisted.push_back(entanglement_assisted_minimal(f));
    }
    const MatrixXz gamma = coincidence_matrix(s).entries;
    if (gram_trace(minimal) != gamma) return false;
    if (gram_trace(assisted) != MatrixXz(m * gamma)) return false;
  }
  return true;
}

bool verify_product_probe(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 25; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 5)(rng);
    const int dq = std::uniform_int_distribution<int>(2, 4)(rng);
    const int da = std::uniform_int_distribution<int>(dq, 5)(rng);
    Eigen::MatrixXd phases(k, dq);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int j = 0; j < k; ++j)
      for (int q = 0; q < dq; ++q) phases(j, q) = angle(rng);
    Eigen::VectorXcd amp(dq * da);
    for (Eigen::Index i = 0; i < amp.size(); ++i)
      amp(i) = std::complex<double>(normal(rng), normal(rng));
    amp.normalize();
    const auto [entangled, product] =
        product_probe_reduction(phases, ProbeState({dq, da}, amp));
    if (!approx_equal(entangled, product, kUnitaryTolerance)) return false;
  }
  return true;
}

bool verify_bilateral() {
  const auto [s, t] = bilateral_transform_m2();
  if (!is_unitary(s, kUnitaryTolerance) || !is_unitary(t, kUnitaryTolerance))
    return false;
  for (const FunctionTable& f : enumerate_permutations(2)) {
    const Eigen::MatrixXcd sandwich =
        s * to_complex(entanglement_assisted_minimal(f)) * t;
    if (!approx_equal(sandwich, to_complex(standard_oracle_matrix(f)),
                      kUnitaryTolerance))
      return false;
  }
  return true;
}

bool verify_commutator() {
  if (commutator_obstruction(2)) return false;
  for (int m = 3; m <= 4; ++m)
    if (!commutator_obstruction(m)) return false;
  return true;
}

bool verify_choi() {
  for (int m = 2; m <= 3; ++m) {
    const std::vector<FunctionTable> perms = enumerate_permutations(m);
    const int total = static_cast<int>(perms.size());
    for (int mask = 0; mask < (1 << total); ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) < 2) continue;
      std::vector<FunctionTable> members;
      for (int j = 0; j < total; ++j)
        if (mask & (1 << j)) members.push_back(perms[j]);
      const FunctionSet s(members);
      const Eigen::MatrixXcd expected =
          to_complex(coincidence_matrix(s).entries) / static_cast<double>(m);
      const auto [standard, assisted] = choi_state_gram(s);
      if (!approx_equal(standard, expected, kUnitaryTolerance)) return false;
      if (!approx_equal(assisted, expected, kUnitaryTolerance)) return false;
    }
  }
  return true;
}

int cmd_verify(const std::string& scope, const CommonOptions& opt,
               std::ostream& out) {
  std::mt19937_64 rng(opt.seed);
  std::vector<std::pair<std::string, bool>> results;
  const auto want = [&scope](const char* name) {
    return scope == "all" || scope == name;
  };
  if (want("group-laws")) results.emplace_back("group-laws", verify_group_laws());
  if (want("pegg-barnett"))
    results.emplace_back("pegg-barnett", verify_pegg_barnett());
  if (want("traces")) results.emplace_back("traces", verify_traces(rng));
  if (want("product-probe"))
    results.emplace_back("product-probe", verify_product_probe(rng));
  if (want("bilateral")) results.emplace_back("bilateral", verify_bilateral());
  if (want("commutator")) results.emplace_back("commutator", verify_commutator());
  if (want("choi")) results.emplace_back("choi", verify_choi());

  bool ok = true;
  for (const auto& [name, passed] : results) ok = ok && passed;
  if (opt.json()) {
    json checks = json::object();
    for (const auto& [name, passed] : results) checks[name] = passed;
    out << dump(json{{"checks", std::move(checks)}, {"ok", ok}});
  } else {
    for (const auto& [name, passed] : results)
      out << (passed ? "PASS " : "FAIL ") << name << "\n";
    out << "verify: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

// ----------------------------------------------------------- characterize4

int cmd_characterize4(const std::string& file, const CommonOptions& opt,
                      std::ostream& out) {
  const FunctionSet s = load_set_arg(file);
  const Characterize4Record r = characterize4(s);
  if (opt.json()) {
    out << dump(json(r));
  } else {
    out << "profile: n1=" << r.profile.n1 << " n2=" << r.profile.n2
        << " n3=" << r.profile.n3 << " n4=" << r.profile.n4 << "\n";
    out << "formula det = " << format_det(r.formula_det, opt.verbose) << "\n";
    out << "direct det = " << format_det(r.direct_det, opt.verbose) << "\n";
    out << "verdict: " << verdict_phrase(r.distinguishable) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact distinguishability analysis of oracle operator sets"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--verbose", opt.verbose, "Print full-precision values");
  app.add_option("--jobs", opt.jobs, "Worker threads for batch work")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized checks")
      ->capture_default_str();
  app.add_option("--budget", opt.budget, "Cap on enumerated candidates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string analyze_file;
  bool brute = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Coincidence matrix and verdict for a set");
  analyze_cmd->add_option("file", analyze_file, "JSON function set ('-' = stdin)")
      ->required();
  analyze_cmd->add_flag("--brute-force", brute,
                        "Cross-check with explicit operator matrices");

  int tif_m = 0, tif_n = 0, tif_k = 0;
  CLI::App* tif_cmd = app.add_subcommand(
      "enumerate-tif", "List totally indistinguishable k-subsets of F_mn");
  tif_cmd->add_option("m", tif_m, "Domain size")->required()->check(CLI::PositiveNumber);
  tif_cmd->add_option("n", tif_n, "Range size")->required()->check(CLI::PositiveNumber);
  tif_cmd->add_option("k", tif_k, "Subset size")->required()->check(CLI::PositiveNumber);

  int grover_m = 0;
  std::optional<double> theta;
  CLI::App* grover_cmd =
      app.add_subcommand("grover", "Closed-form spectrum of the marking set");
  grover_cmd->add_option("m", grover_m, "Number of marking functions")
      ->required()
      ->check(CLI::Range(2, 1'000'000));
  grover_cmd->add_option("--theta", theta, "Also evaluate the phase-oracle det");

  std::string graph_file;
  CLI::App* graph_cmd = app.add_subcommand(
      "graph", "Grid graph and cycle witness for a two-point domain");
  graph_cmd->add_option("file", graph_file, "JSON function set ('-' = stdin)")
      ->required();

  std::string multicall_file;
  std::optional<int> calls, max_calls;
  CLI::App* multicall_cmd =
      app.add_subcommand("multicall", "Parallel-call distinguishability");
  multicall_cmd->add_option("file", multicall_file, "JSON function set ('-' = stdin)")
      ->required();
  CLI::Option* calls_opt = multicall_cmd->add_option("--calls", calls, "Fixed call count")
                               ->check(CLI::PositiveNumber);
  multicall_cmd->add_option("--max-calls", max_calls, "Search minimal call count")
      ->check(CLI::PositiveNumber)
      ->excludes(calls_opt);

  std::string scope = "all";
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Self-checks of the operator identities");
  verify_cmd->add_option("--scope", scope, "Which battery to run")
      ->check(CLI::IsMember({"group-laws", "pegg-barnett", "traces",
                             "product-probe", "bilateral", "commutator", "choi",
                             "all"}))
      ->capture_default_str();

  std::string char4_file;
  CLI::App* char4_cmd = app.add_subcommand(
      "characterize4", "Column profile of a four-member indistinguishable set");
  char4_cmd->add_option("file", char4_file, "JSON function set ('-' = stdin)")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("oraclegram");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_file, brute, opt, out);
    if (*tif_cmd) return cmd_enumerate_tif(tif_m, tif_n, tif_k, opt, out);
    if (*grover_cmd) return cmd_grover(grover_m, theta, opt, out, err);
    if (*graph_cmd) return cmd_graph(graph_file, opt, out);
    if (*multicall_cmd)
      return cmd_multicall(multicall_file, calls, max_calls, opt, out);
    if (*verify_cmd) return cmd_verify(scope, opt, out);
    if (*char4_cmd) return cmd_characterize4(char4_file, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace oraclegram
