#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "specfactor/digital.hpp"
#include "specfactor/errors.hpp"
#include "specfactor/measure.hpp"
#include "specfactor/numtheory.hpp"
#include "specfactor/serialize.hpp"
#include "specfactor/susy.hpp"

namespace specfactor::cli {
namespace {

using io::json;

// Verification failed without an exception: maps to exit code 3.
struct VerificationFailed : NumericalError {
  using NumericalError::NumericalError;
};

void write_json_file(const std::string& path, const json& j) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw PreconditionError("cannot open '" + path + "' for writing");
  os << j.dump(2) << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw PreconditionError("cannot open '" + path + "'");
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw PreconditionError("'" + path + "' is not valid JSON: " + e.what());
  }
}

unsigned smallest_qubits_for(Integer n) {
  unsigned d = 1;
  while (d < 63 && (Integer{1} << d) < n) ++d;
  return d;
}

void check_qubits(unsigned d) {
  const unsigned cap = max_qubits_from_env();
  if (d < 1 || d > cap) {
    throw ResourceLimitError("d = " + std::to_string(d) + " outside [1, " + std::to_string(cap) +
                             "] (SPECFACTOR_MAX_D)");
  }
}

// ---- factor ---------------------------------------------------------------

struct FactorOptions {
  Integer n = 0;
  std::string variant = "B";
  std::optional<unsigned> d;
  std::uint64_t seed = 1;
  std::size_t runs = 1;
  unsigned jobs = 1;
  std::string trace;
};

int cmd_factor(const FactorOptions& o, std::ostream& out) {
  const auto variant = measure::parse_variant(o.variant);
  if (!variant) throw PreconditionError("variant must be A or B");
  const unsigned d = o.d.value_or(smallest_qubits_for(o.n));
  check_qubits(d);
  if (o.n < 2 || o.n > (Integer{1} << d)) {
    throw PreconditionError("N must satisfy 2 <= N <= 2^d = " + std::to_string(Integer{1} << d));
  }
  if (o.runs < 1) throw PreconditionError("--runs must be >= 1");
  const auto table = PrimeTable::sieve(std::size_t{1} << d);

  std::vector<measure::FactorizationRun> runs(o.runs);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < runs.size(); i += stride) {
      const std::uint64_t seed = o.runs == 1 ? o.seed : derive_seed(o.seed, i);
      runs[i] = measure::factorize(o.n, *variant, table, seed);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(o.runs)));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }

  const auto oracle = factor_oracle(o.n);
  std::map<std::size_t, std::size_t> count_histogram;
  std::size_t wrong = 0;
  for (const auto& r : runs) {
    ++count_histogram[r.measurements];
    if (r.result != oracle) ++wrong;
  }

  const json config = {{"subcommand", "factor"},
                       {"n", o.n},
                       {"variant", measure::to_string(*variant)},
                       {"d", d},
                       {"seed", o.seed},
                       {"runs", o.runs}};
  if (!o.trace.empty()) {
    json doc;
    if (o.runs == 1) {
      doc = io::to_json(runs.front());
    } else {
      doc = {{"schema", io::kSchemaVersion}, {"runs", json::array()}};
      for (const auto& r : runs) doc["runs"].push_back(io::to_json(r));
    }
    doc["config"] = config;
    write_json_file(o.trace, doc);
  }

  const auto& first = runs.front();
  if (first.result.distinct_primes() == 1 && first.result.total_multiplicity() == 1) {
    out << o.n << " is prime\n";
  } else {
    out << o.n << " = " << first.result.to_string() << '\n';
  }
  out << "variant " << measure::to_string(*variant) << ", d = " << d;
  if (o.runs == 1) {
    out << ", seed " << first.seed << ": " << first.measurements << " measurements, "
        << first.divisions << " divisions\n";
    out << "outcomes:";
    for (const auto& rec : first.trace) out << ' ' << rec.prime;
    out << '\n';
  } else {
    out << ", " << o.runs << " runs from base seed " << o.seed << '\n';
    out << "measurement counts:";
    for (const auto& [c, times] : count_histogram) out << ' ' << c << "x" << times;
    out << "\nruns disagreeing with trial division: " << wrong << '\n';
  }
  if (wrong != 0) throw VerificationFailed("factorization disagrees with trial division");
  return kOk;
}

// ---- paths ----------------------------------------------------------------

int cmd_paths(Integer n, std::optional<unsigned> d_opt, const std::string& out_path,
              const std::string& edges_path, std::ostream& out) {
  const unsigned d = d_opt.value_or(smallest_qubits_for(n));
  check_qubits(d);
  if (n < 2 || n > (Integer{1} << d)) {
    throw PreconditionError("N must satisfy 2 <= N <= 2^d = " + std::to_string(Integer{1} << d));
  }
  const auto table = PrimeTable::sieve(std::size_t{1} << d);
  const auto tree = measure::enumerate_paths(n, table);
  if (!out_path.empty()) {
    auto doc = io::to_json(tree);
    doc["config"] = {{"subcommand", "paths"}, {"n", n}, {"d", d}};
    write_json_file(out_path, doc);
  }
  if (!edges_path.empty()) {
    std::ofstream os(edges_path, std::ios::binary);
    if (!os) throw PreconditionError("cannot open '" + edges_path + "' for writing");
    io::write_path_edges_csv(tree, os);
  }
  const auto leaves = tree.leaves();
  const auto oracle = factor_oracle(n);
  const bool universal = std::all_of(leaves.begin(), leaves.end(),
                                     [&](const Factorization& f) { return f == oracle; });
  out << "N = " << n << ": " << tree.leaf_count() << " paths\n";
  for (const auto& path : tree.paths()) {
    out << " ";
    for (std::size_t i = 0; i < path.size(); ++i) out << (i ? " -> " : " ") << path[i];
    out << '\n';
  }
  out << "every leaf = " << oracle.to_string() << ": " << (universal ? "yes" : "NO") << '\n';
  if (!universal) throw VerificationFailed("path leaves disagree");
  return kOk;
}

// ---- synth-digital --------------------------------------------------------

struct SynthOptions {
  unsigned d = 3;
  std::string target = "primes";
  std::string assignment = "canonical";
  std::string out;
  std::string golden;
  bool verify = false;
};

int cmd_synth_digital(const SynthOptions& o, std::ostream& out) {
  check_qubits(o.d);
  const auto kind = digital::parse_target_kind(o.target);
  if (!kind || *kind == digital::TargetKind::Custom) {
    throw PreconditionError("--target must be primes, logprimes, integers or logintegers");
  }
  digital::WithinGroupOrder order;
  if (o.assignment == "canonical") {
    order = digital::WithinGroupOrder::Lexicographic;
  } else if (o.assignment == "paper") {
    order = digital::WithinGroupOrder::Paper;
  } else {
    throw PreconditionError("--assignment must be canonical or paper");
  }
  const auto targets = digital::default_targets(o.d, *kind);
  const auto assignment = digital::Assignment::canonical(o.d, order);
  const auto cs = digital::solve_couplings(o.d, targets, assignment, *kind);

  if (!o.out.empty()) {
    auto doc = io::to_json(cs);
    doc["config"] = {{"subcommand", "synth-digital"},
                     {"d", o.d},
                     {"target", o.target},
                     {"assignment", o.assignment}};
    write_json_file(o.out, doc);
  }

  const std::size_t size = cs.j.size();
  if (o.d <= 6) {
    out << "couplings (d = " << o.d << ", " << o.target << ", " << o.assignment << "):\n";
    for (std::size_t s = 0; s < size; ++s) {
      const auto idx = digital::mask_indices(static_cast<digital::Mask>(s));
      std::ostringstream name;
      name << "j_";
      if (idx.empty()) name << "{}";
      for (unsigned i : idx) name << i;
      out << "  " << std::left << std::setw(10) << name.str() << io::format_double(cs.j[s])
          << '\n';
    }
  } else {
    out << "couplings: " << size << " entries (d = " << o.d << ")\n";
  }

  bool ok = true;
  if (o.verify) {
    const bool integral = *kind == digital::TargetKind::Primes ||
                          *kind == digital::TargetKind::Integers;
    const auto eig = digital::eigenvalues_from_couplings(cs);
    double worst = 0.0;
    for (std::size_t b = 0; b < size; ++b) {
      worst = std::max(worst, std::abs(eig[b] - targets[assignment.target_of(
                                                     static_cast<digital::Mask>(b))]));
    }
    const double tol = integral ? 0.0 : 1e-12;
    const bool roundtrip = worst <= tol;
    auto sorted = eig;
    std::sort(sorted.begin(), sorted.end());
    double multiset_gap = 0.0;
    for (std::size_t b = 0; b < size; ++b) {
      multiset_gap = std::max(multiset_gap, std::abs(sorted[b] - targets[b]));
    }
    const bool multiset = multiset_gap <= tol;
    out << "verify: zeta(j) reproduces the assigned targets: "
        << (roundtrip ? "yes" : "NO") << " (max gap " << worst << ")\n";
    out << "verify: eigenvalue multiset = first " << size << " " << o.target << ": "
        << (multiset ? "yes" : "NO") << '\n';
    if (o.d <= 4) out << "verify: dense LU cross-check: passed\n";
    ok = roundtrip && multiset;
    if (*kind == digital::TargetKind::Primes && o.assignment == "canonical") {
      bool regular = cs.j[0] == 2.0;
      for (unsigned i = 0; i < o.d; ++i) {
        const auto mask = digital::Mask{1} << i;
        regular &= cs.j[mask] == targets[assignment.target_of(mask)] - 2.0;
      }
      for (double v : cs.j) regular &= v == std::nearbyint(v);
      out << "verify: integer j, j_{} = 2, j_i = p_assigned - 2: " << (regular ? "yes" : "NO")
          << '\n';
      ok &= regular;
    }
  }
  if (!o.golden.empty()) {
    const auto golden = io::coupling_set_from_json(read_json_file(o.golden));
    if (golden.d != o.d) throw PreconditionError("golden file has a different d");
    std::size_t mismatches = 0;
    for (std::size_t s = 0; s < size; ++s) {
      if (std::abs(golden.j[s] - cs.j[s]) > 1e-12 * std::max(1.0, std::abs(golden.j[s]))) {
        ++mismatches;
      }
    }
    out << "golden " << o.golden << ": " << (mismatches == 0 ? "match" : "MISMATCH") << " ("
        << mismatches << " differing entries)\n";
    ok &= mismatches == 0;
  }
  if (!ok) throw VerificationFailed("synth-digital verification failed");
  return kOk;
}

// ---- potential / verify-spectrum -----------------------------------------

struct PotentialOptions {
  std::string spectrum = "logprimes";
  std::size_t levels = 8;
  std::vector<double> custom;
  bool include_unity = false;
  std::optional<double> half_width;
  double step = 12.0 / 512.0;
  std::string out;
  std::string meta;
  std::string lloyd;
  bool verify = false;
};

int cmd_potential(const PotentialOptions& o, std::ostream& out) {
  const auto kind = parse_spectrum_kind(o.spectrum);
  if (!kind) throw PreconditionError("unknown --spectrum '" + o.spectrum + "'");
  SpectrumSpec spec;
  spec.kind = *kind;
  spec.include_unity = o.include_unity;
  if (*kind == SpectrumKind::Custom) {
    spec.custom = o.custom;
    spec.levels = o.custom.size();
  } else {
    spec.levels = o.levels + 1;
  }
  const auto targets = spectrum_values(spec);

  susy::IntegratorOptions iopt;
  iopt.step = o.step;
  iopt.half_width = o.half_width;
  const auto sps = susy::build_superpotentials(targets, iopt);
  const auto pt = susy::assemble_potential(sps);

  io::ResidualStats stats;
  stats.riccati = susy::riccati_residuals(sps);
  const auto recurrence = susy::partner_potential(sps, sps.levels());
  for (std::size_t i = 0; i < recurrence.size(); ++i) {
    stats.recurrence_gap =
        std::max(stats.recurrence_gap, std::abs(recurrence[i] + pt.offset - pt.v[i]));
  }

  if (!o.out.empty()) {
    std::ofstream os(o.out, std::ios::binary);
    if (!os) throw PreconditionError("cannot open '" + o.out + "' for writing");
    io::write_potential_csv(pt, os);
  }
  auto meta = io::potential_metadata(pt, stats);
  meta["config"] = {{"subcommand", "potential"},
                    {"spectrum", o.spectrum},
                    {"levels", sps.levels()},
                    {"include_unity", o.include_unity},
                    {"step", o.step},
                    {"half_width", o.half_width ? json(*o.half_width) : json("auto")}};
  const auto shape = susy::describe_shape(pt);
  meta["shape"] = {{"depth", shape.depth},
                   {"argmin_x", shape.argmin_x},
                   {"support_half_width", shape.support_half_width},
                   {"strictly_monotone", shape.strictly_monotone},
                   {"ripple", shape.ripple},
                   {"single_well", shape.single_well}};
  if (!o.meta.empty()) write_json_file(o.meta, meta);
  if (!o.lloyd.empty() && sps.levels() > 0) {
    const std::size_t node = std::min(sps.grid.center() + sps.grid.half_nodes / 4,
                                      sps.grid.size() - 3);
    json doc = {{"schema", io::kSchemaVersion}};
    doc["published"] = io::to_json(susy::build_lloyd_system(sps, node));
    doc["experiment"] = io::to_json(susy::lloyd_equivalence_experiment(sps));
    write_json_file(o.lloyd, doc);
  }

  double worst = 0.0;
  for (double r : stats.riccati) worst = std::max(worst, r);
  out << "potential: " << o.spectrum << ", M = " << sps.levels() << " bound levels, "
      << pt.grid.size() << " nodes on [-" << pt.grid.half_width() << ", "
      << pt.grid.half_width() << "]" << (pt.clipped ? " (clipped)" : "") << '\n';
  out << "offset (continuum edge) = " << io::format_double(pt.offset) << ", depth "
      << shape.depth << '\n';
  out << "max Riccati residual = " << worst << ", recurrence gap = " << stats.recurrence_gap
      << '\n';
  out << "shape: " << (shape.single_well ? "single well" : "not a single well")
      << ", ripple " << shape.ripple << (shape.strictly_monotone ? ", strictly monotone" : "")
      << '\n';
  if (o.verify) {
    const auto check = susy::verify_spectrum(pt);
    out << "spectrum: max spacing error " << check.max_spacing_error << ", ground state error "
        << check.ground_state_error << '\n';
  }
  return kOk;
}

struct VerifyOptions {
  std::string csv;
  std::string meta;
  std::optional<std::size_t> levels;
  double tolerance = 1e-3;
  bool richardson = true;
  std::string out;
};

int cmd_verify_spectrum(const VerifyOptions& o, std::ostream& out) {
  std::ifstream is(o.csv, std::ios::binary);
  if (!is) throw PreconditionError("cannot open '" + o.csv + "'");
  auto pt = io::read_potential_csv(is);
  if (!o.meta.empty()) io::apply_potential_metadata(read_json_file(o.meta), pt);

  susy::EigenOptions eopt;
  eopt.richardson = o.richardson;
  json report = {{"schema", io::kSchemaVersion},
                 {"config", {{"subcommand", "verify-spectrum"},
                             {"csv", o.csv},
                             {"richardson", o.richardson},
                             {"tolerance", o.tolerance}}}};
  bool ok = true;
  if (!pt.targets.empty()) {
    const auto check = susy::verify_spectrum(pt, eopt);
    report["check"] = io::to_json(check);
    out << "bound levels (" << check.eigenvalues.size() << "):\n";
    for (std::size_t k = 0; k < check.eigenvalues.size(); ++k) {
      out << "  E_" << k << " = " << io::format_double(check.eigenvalues[k]) << "  target "
          << io::format_double(pt.targets[k]) << '\n';
    }
    out << "continuum edge = " << io::format_double(check.threshold) << '\n';
    out << "max spacing error = " << check.max_spacing_error << " (tolerance " << o.tolerance
        << ")\n";
    ok = check.max_spacing_error <= o.tolerance && check.bound_count_ok;
    if (!check.bound_count_ok) out << "extra bound state below the continuum edge\n";
  } else {
    const std::size_t n = o.levels.value_or(8);
    const auto result = susy::eigen_solve(pt, n, eopt);
    report["eigenvalues"] = result.values;
    out << "lowest " << n << " levels:\n";
    for (std::size_t k = 0; k < n; ++k) {
      out << "  E_" << k << " = " << io::format_double(result.values[k]) << '\n';
    }
  }
  report["pass"] = ok;
  if (!o.out.empty()) write_json_file(o.out, report);
  out << (ok ? "PASS" : "FAIL") << '\n';
  if (!ok) throw VerificationFailed("spectrum check failed");
  return kOk;
}

// ---- goldbach -------------------------------------------------------------

int cmd_goldbach(Integer max_even, unsigned d, const std::string& out_path, std::ostream& out) {
  check_qubits(d);
  const auto report = goldbach_check(max_even, d);
  if (!out_path.empty()) {
    auto doc = io::to_json(report);
    doc["config"] = {{"subcommand", "goldbach"}, {"max", max_even}, {"d", d}};
    write_json_file(out_path, doc);
  }
  const auto missing = report.uncovered();
  out << "even numbers 4.." << max_even << " as p + q with p, q among the first "
      << report.table_size << " primes: "
      << (missing.empty() ? "all covered" : std::to_string(missing.size()) + " uncovered")
      << '\n';
  for (Integer e : missing) out << "  uncovered: " << e << '\n';
  if (report.two_copy_checked) {
    out << "two-copy spectrum {ln p + ln q} = {ln(pq)}: " << (report.two_copy_match ? "yes" : "NO")
        << " (" << report.two_copy_levels << " levels, max relative deviation "
        << report.two_copy_max_deviation << ")\n";
  } else {
    out << "two-copy spectrum: skipped for d > 12\n";
  }
  if (!missing.empty() || (report.two_copy_checked && !report.two_copy_match)) {
    throw VerificationFailed("goldbach check failed");
  }
  return kOk;
}

}  // namespace

unsigned max_qubits_from_env() {
  const char* raw = std::getenv("SPECFACTOR_MAX_D");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxD;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > digital::kMaxQubits) return kDefaultMaxD;
  return static_cast<unsigned>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"specfactor: factorization by projective measurements, prime-spectrum "
               "operators and potentials"};
  app.name("specfactor");
  app.require_subcommand(1);

  FactorOptions fo;
  auto* factor = app.add_subcommand("factor", "Factor N by simulated H1 measurements");
  factor->add_option("N", fo.n, "Integer to factor, 2 <= N <= 2^d")->required();
  factor->add_option("--variant", fo.variant, "A (one measurement per prime with multiplicity) "
                                              "or B (one per distinct prime)")
      ->capture_default_str();
  factor->add_option("--d", fo.d, "Qubits per register; cutoff M = 2^d (default: smallest "
                                  "with 2^d >= N)");
  factor->add_option("--seed", fo.seed, "RNG seed")->capture_default_str();
  factor->add_option("--runs", fo.runs, "Number of seeded runs (seeds derived from --seed)")
      ->capture_default_str();
  factor->add_option("--jobs", fo.jobs, "Worker threads for --runs > 1")->capture_default_str();
  factor->add_option("--trace", fo.trace, "Write the JSON trace here");

  Integer paths_n = 0;
  std::optional<unsigned> paths_d;
  std::string paths_out, paths_edges;
  auto* paths = app.add_subcommand("paths", "Enumerate every measurement-outcome path");
  paths->add_option("N", paths_n, "Integer to factor")->required();
  paths->add_option("--d", paths_d, "Qubits per register");
  paths->add_option("--out", paths_out, "JSON tree output");
  paths->add_option("--edges", paths_edges, "Edge-list CSV output");

  SynthOptions so;
  auto* synth = app.add_subcommand("synth-digital",
                                   "Solve the multi-spin couplings of a diagonal operator");
  synth->add_option("--d", so.d, "Qubit count")->capture_default_str();
  synth->add_option("--target", so.target, "primes | logprimes | integers | logintegers")
      ->capture_default_str();
  synth->add_option("--assignment", so.assignment, "canonical | paper")->capture_default_str();
  synth->add_option("--out", so.out, "CouplingSet JSON output");
  synth->add_flag("--verify", so.verify, "Check round trip, multiset and regularities");
  synth->add_option("--golden", so.golden, "Compare against a CouplingSet JSON file");

  PotentialOptions po;
  auto* potential = app.add_subcommand("potential",
                                       "Build a potential with a prescribed spectrum");
  potential->add_option("--spectrum", po.spectrum,
                        "logprimes | logintegers | primes | integers | custom")
      ->capture_default_str();
  potential->add_option("--levels", po.levels, "Bound levels M (M + 1 target values)")
      ->capture_default_str();
  potential->add_option("--custom", po.custom, "Target values for --spectrum custom")
      ->delimiter(',');
  potential->add_flag("--include-unity", po.include_unity, "logintegers start at ln 1 = 0");
  potential->add_option("--L,--half-width", po.half_width, "Box half-width (default: automatic)");
  // "-h" stays free for the grid step; help is "--help" here.
  potential->set_help_flag("--help", "Print this help message and exit");
  potential->add_option("--h,--step", po.step, "Grid step")->capture_default_str();
  potential->add_option("--out", po.out, "CSV output (x,V)");
  potential->add_option("--meta", po.meta, "JSON metadata output");
  potential->add_option("--lloyd", po.lloyd, "Lloyd-form system JSON output");
  potential->add_flag("--verify", po.verify, "Run the eigensolver on the result");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify-spectrum",
                                    "Eigenvalues of a tabulated potential");
  verify->add_option("csv", vo.csv, "Potential CSV (x,V)")->required();
  verify->add_option("--meta", vo.meta, "Metadata JSON with the targets");
  verify->add_option("--levels", vo.levels, "Levels to report when no metadata is given");
  verify->add_option("--tol", vo.tolerance, "Spacing tolerance")->capture_default_str();
  verify->add_flag("!--no-richardson", vo.richardson, "Skip the h/2h extrapolation");
  verify->add_option("--out", vo.out, "JSON report output");

  Integer gb_max = 100;
  unsigned gb_d = 5;
  std::string gb_out;
  auto* goldbach = app.add_subcommand("goldbach", "Even numbers as sums of two table primes");
  goldbach->add_option("--max", gb_max, "Largest even number")->capture_default_str();
  goldbach->add_option("--d", gb_d, "Table of the first 2^d primes")->capture_default_str();
  goldbach->add_option("--out", gb_out, "JSON report output");

  std::vector<const char*> argv{"specfactor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kPrecondition;
  }

  try {
    if (*factor) return cmd_factor(fo, out);
    if (*paths) return cmd_paths(paths_n, paths_d, paths_out, paths_edges, out);
    if (*synth) return cmd_synth_digital(so, out);
    if (*potential) return cmd_potential(po, out);
    if (*verify) return cmd_verify_spectrum(vo, out);
    if (*goldbach) return cmd_goldbach(gb_max, gb_d, gb_out, out);
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kPrecondition;
}

}  // namespace specfactor::cli
