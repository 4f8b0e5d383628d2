#include "specfactor/measure.hpp"

#include <cmath>
#include <functional>

#include "specfactor/errors.hpp"

namespace specfactor::measure {
namespace {

constexpr double kNormTolerance = 1e-12;

void check_in_device(Integer n, const PrimeTable& table, const char* who) {
  if (n < 2) throw PreconditionError(std::string(who) + ": N must be >= 2");
  if (n > table.size()) {
    throw PreconditionError(std::string(who) + ": N = " + std::to_string(n) +
                            " exceeds the cutoff M = " + std::to_string(table.size()));
  }
}

std::vector<Branch> branches_of(Integer n, const PrimeTable& table) {
  const auto f = factor_oracle(n);
  std::vector<Branch> out;
  out.reserve(f.factors.size());
  for (const auto& [p, alpha] : f.factors) {
    if (!table.contains(p)) {
      throw PreconditionError("build_manifold: prime factor " + std::to_string(p) +
                              " is outside the prime table");
    }
    out.push_back({p, n / p});
  }
  return out;
}

std::size_t sample_index(std::span<const double> probabilities, double u) {
  double cumulative = 0.0;
  std::size_t last_reachable = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    last_reachable = i;
    cumulative += probabilities[i];
    if (u < cumulative) return i;
  }
  // u landed in the rounding gap above the final cumulative sum.
  return last_reachable;
}

}  // namespace

double Branch::log_prime() const { return std::log(static_cast<double>(prime)); }
double Branch::log_cofactor() const { return std::log(static_cast<double>(cofactor)); }

double BranchState::norm_squared() const {
  double s = 0.0;
  for (const auto& c : amplitudes) s += std::norm(c);
  return s;
}

BranchState build_manifold(Integer n, const PrimeTable& table, Rng& rng) {
  check_in_device(n, table, "build_manifold");
  BranchState state{n, branches_of(n, table), {}};
  double norm2 = 0.0;
  do {
    state.amplitudes.clear();
    norm2 = 0.0;
    for (std::size_t a = 0; a < state.k(); ++a) {
      state.amplitudes.push_back(rng.complex_normal());
      norm2 += std::norm(state.amplitudes.back());
    }
  } while (norm2 == 0.0);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : state.amplitudes) c *= scale;
  return state;
}

BranchState build_manifold(Integer n, const PrimeTable& table,
                           std::span<const Amplitude> amplitudes) {
  check_in_device(n, table, "build_manifold");
  BranchState state{n, branches_of(n, table), {amplitudes.begin(), amplitudes.end()}};
  if (state.amplitudes.size() != state.k()) {
    throw PreconditionError("build_manifold: expected " + std::to_string(state.k()) +
                            " amplitudes for N = " + std::to_string(n));
  }
  if (std::abs(state.norm_squared() - 1.0) > kNormTolerance) {
    throw PreconditionError("build_manifold: amplitudes are not normalized");
  }
  return state;
}

Outcome measure_h1(const BranchState& state, Rng& rng) {
  if (state.k() == 0) throw PreconditionError("measure_h1: empty manifold");
  if (std::abs(state.norm_squared() - 1.0) > 1e-10) {
    throw PreconditionError("measure_h1: state is not normalized");
  }
  std::vector<double> probs(state.k());
  for (std::size_t a = 0; a < state.k(); ++a) probs[a] = state.probability(a);

  Outcome out;
  out.draw = rng.uniform();
  out.branch = sample_index(probs, out.draw);
  out.prime = state.branches[out.branch].prime;
  out.probability = probs[out.branch];
  out.collapsed = state;
  for (auto& c : out.collapsed.amplitudes) c = 0.0;
  out.collapsed.amplitudes[out.branch] = 1.0;
  return out;
}

std::string to_string(Variant v) { return v == Variant::A ? "A" : "B"; }

std::optional<Variant> parse_variant(const std::string& s) {
  if (s == "A" || s == "a") return Variant::A;
  if (s == "B" || s == "b") return Variant::B;
  return std::nullopt;
}

FactorizationRun factorize(Integer n, Variant variant, const PrimeTable& table,
                           std::uint64_t seed) {
  check_in_device(n, table, "factorize");
  FactorizationRun run;
  run.n = n;
  run.variant = variant;
  run.seed = seed;
  run.result.n = n;

  Rng rng(seed);
  Integer current = n;
  while (current > 1) {
    // Fresh preparation of |ln current> for every measurement.
    const auto state = build_manifold(current, table, rng);
    const auto outcome = measure_h1(state, rng);

    MeasurementRecord rec;
    rec.step = run.trace.size() + 1;
    rec.prime = outcome.prime;
    rec.probability = outcome.probability;
    rec.before = current;
    rec.draw = outcome.draw;
    current /= outcome.prime;
    rec.divisions = 1;
    if (variant == Variant::B) {
      while (current % outcome.prime == 0) {
        current /= outcome.prime;
        ++rec.divisions;
      }
    }
    rec.after = current;
    run.result.factors[outcome.prime] += rec.divisions;
    run.divisions += rec.divisions;
    run.trace.push_back(rec);
  }
  run.measurements = run.trace.size();
  return run;
}

bool primality_test(Integer n, const PrimeTable& table, Rng& rng) {
  const auto state = build_manifold(n, table, rng);
  return measure_h1(state, rng).prime == n;
}

std::size_t PathTree::leaf_count() const {
  std::function<std::size_t(const PathNode&)> count = [&](const PathNode& node) {
    if (node.children.empty()) return std::size_t{1};
    std::size_t total = 0;
    for (const auto& c : node.children) total += count(c);
    return total;
  };
  return count(root);
}

std::vector<std::vector<Integer>> PathTree::paths() const {
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> prefix;
  std::function<void(const PathNode&)> walk = [&](const PathNode& node) {
    if (node.edge_prime != 0) prefix.push_back(node.edge_prime);
    if (node.children.empty()) out.push_back(prefix);
    for (const auto& c : node.children) walk(c);
    if (node.edge_prime != 0) prefix.pop_back();
  };
  walk(root);
  return out;
}

std::vector<Factorization> PathTree::leaves() const {
  std::vector<Factorization> out;
  std::function<void(const PathNode&)> walk = [&](const PathNode& node) {
    if (node.leaf) out.push_back(*node.leaf);
    for (const auto& c : node.children) walk(c);
  };
  walk(root);
  return out;
}

PathTree enumerate_paths(Integer n, const PrimeTable& table) {
  check_in_device(n, table, "enumerate_paths");
  std::function<void(PathNode&, Factorization&)> expand = [&](PathNode& node,
                                                             Factorization& acc) {
    if (node.n == 1) {
      node.leaf = acc;
      return;
    }
    for (const auto& branch : branches_of(node.n, table)) {
      const Integer p = branch.prime;
      PathNode child;
      child.edge_prime = p;
      child.stage = node.stage + 1;
      child.n = node.n;
      unsigned alpha = 0;
      while (child.n % p == 0) {
        child.n /= p;
        ++alpha;
      }
      acc.factors[p] = alpha;
      expand(child, acc);
      acc.factors.erase(p);
      node.children.push_back(std::move(child));
    }
  };
  PathTree tree;
  tree.n = n;
  tree.root.n = n;
  Factorization acc{n, {}};
  expand(tree.root, acc);
  return tree;
}

WindowPreparation prepare_from_window(Integer n, Integer delta,
                                      std::span<const Amplitude> gamma,
                                      const PrimeTable& table, Rng& rng) {
  check_in_device(n, table, "prepare_from_window");
  if (delta >= n - 1 || n + delta > table.size()) {
    throw PreconditionError("prepare_from_window: window [N-delta, N+delta] must lie in [2, M]");
  }
  if (gamma.size() != 2 * delta + 1) {
    throw PreconditionError("prepare_from_window: gamma must have 2*delta+1 entries");
  }
  std::vector<double> probs(gamma.size());
  double total = 0.0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    probs[i] = std::norm(gamma[i]);
    total += probs[i];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw PreconditionError("prepare_from_window: gamma is not normalized");
  }
  if (probs[delta] <= 0.0) {
    throw PreconditionError("prepare_from_window: gamma_N = 0, preparation would never halt");
  }
  WindowPreparation out;
  std::size_t hit;
  do {
    ++out.iterations;
    hit = sample_index(probs, rng.uniform());
  } while (hit != delta);
  out.prepared = build_manifold(n, table, rng);
  return out;
}

}  // namespace specfactor::measure
