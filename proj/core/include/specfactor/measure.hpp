#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specfactor/numtheory.hpp"
#include "specfactor/rng.hpp"

// Projective-measurement factorization on H = H1 + H2, where H1 has the
// spectrum {ln p_n} and H2 the spectrum {ln m}, both cut off at M = 2^d.
//
// The simulator asks factor_oracle which eigenstates span the degenerate
// level ln N; that stands in for nature, which "knows" the degeneracy. The
// protocol's own bookkeeping (which prime was seen, how many measurements
// and divisions were spent) only ever uses measurement outcomes.
namespace specfactor::measure {

using Amplitude = std::complex<double>;

// One eigenstate |ln p_a>|ln N_a> of the degenerate manifold, N = p_a * N_a.
struct Branch {
  Integer prime = 0;
  Integer cofactor = 0;

  double log_prime() const;
  double log_cofactor() const;
};

struct BranchState {
  Integer n = 0;
  std::vector<Branch> branches;  // increasing prime
  std::vector<Amplitude> amplitudes;

  std::size_t k() const { return branches.size(); }
  double probability(std::size_t a) const { return std::norm(amplitudes[a]); }
  double norm_squared() const;
};

// Haar-random amplitudes on the k-dimensional complex unit sphere.
BranchState build_manifold(Integer n, const PrimeTable& table, Rng& rng);
// Caller-supplied amplitudes, one per distinct prime factor, normalized to 1e-12.
// Zero amplitudes are allowed; those branches are simply unreachable.
BranchState build_manifold(Integer n, const PrimeTable& table,
                           std::span<const Amplitude> amplitudes);

struct Outcome {
  std::size_t branch = 0;
  Integer prime = 0;
  double probability = 0.0;  // |c_b|^2 before collapse
  double draw = 0.0;         // the uniform variate consumed
  BranchState collapsed;     // amplitude 1 on `branch`
};

// Born-rule measurement of H1.
Outcome measure_h1(const BranchState& state, Rng& rng);

// A: step 5, one measurement per prime factor counted with multiplicity.
// B: step 5', one measurement per distinct prime, classical division for the rest.
enum class Variant { A, B };

std::string to_string(Variant v);
std::optional<Variant> parse_variant(const std::string& s);

struct MeasurementRecord {
  std::size_t step = 0;
  Integer prime = 0;
  double probability = 0.0;
  Integer before = 0;
  Integer after = 0;
  unsigned divisions = 0;
  double draw = 0.0;
};

struct FactorizationRun {
  Integer n = 0;
  Variant variant = Variant::B;
  std::uint64_t seed = 0;
  std::vector<MeasurementRecord> trace;
  Factorization result;
  std::size_t measurements = 0;
  std::size_t divisions = 0;
};

FactorizationRun factorize(Integer n, Variant variant, const PrimeTable& table,
                           std::uint64_t seed);

// One measurement of H1 on the manifold of N: prime iff the outcome is N itself.
bool primality_test(Integer n, const PrimeTable& table, Rng& rng);

// Outcome tree of variant-B runs. The root holds N; each edge is one H1
// outcome and leads to N / p^alpha. Leaves (n == 1) carry the factorization.
struct PathNode {
  Integer n = 0;
  Integer edge_prime = 0;  // 0 at the root
  std::size_t stage = 0;   // depth; stage 1 is the first measurement
  std::vector<PathNode> children;
  std::optional<Factorization> leaf;
};

struct PathTree {
  Integer n = 0;
  PathNode root;

  std::size_t leaf_count() const;
  // Outcome sequences, one per root-to-leaf path, in tree order.
  std::vector<std::vector<Integer>> paths() const;
  std::vector<Factorization> leaves() const;
};

PathTree enumerate_paths(Integer n, const PrimeTable& table);

struct WindowPreparation {
  std::size_t iterations = 0;
  BranchState prepared;
};

// Repeated H measurements on sum_{m in [N-delta, N+delta]} gamma_m |ln m>
// until the outcome is ln N. `gamma` has 2*delta + 1 entries, normalized.
WindowPreparation prepare_from_window(Integer n, Integer delta,
                                      std::span<const Amplitude> gamma,
                                      const PrimeTable& table, Rng& rng);

}  // namespace specfactor::measure
