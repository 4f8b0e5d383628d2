#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Diagonal d-qubit operators written as sums of products of occupation
// operators N_i (eigenvalue n_i in {0, 1}). Basis state b has n_i equal to
// bit i-1 of b, so qubit 1 is the least significant bit. Couplings are
// indexed the same way: j[S] multiplies prod_{i in S} N_i.
//
// Eigenvalue at b is the subset sum e(b) = sum_{S subset of b} j[S] (zeta
// transform); the couplings for a prescribed e are its Moebius transform.
namespace specfactor::digital {

using Mask = std::uint32_t;

inline constexpr unsigned kMaxQubits = 24;

template <typename T>
void zeta_transform(std::span<T> values) {
  const std::size_t size = values.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) values[s] += values[s ^ bit];
    }
  }
}

template <typename T>
void moebius_transform(std::span<T> values) {
  const std::size_t size = values.size();
  for (std::size_t bit = 1; bit < size; bit <<= 1) {
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) values[s] -= values[s ^ bit];
    }
  }
}

// Eigenvalues of 2 + sum_j 2^(j-1) N_j: entry b is b + 2.
std::vector<double> build_o2_diagonal(unsigned d);

enum class TargetKind { Primes, LogPrimes, Integers, LogIntegers, Custom };
std::string to_string(TargetKind kind);
std::optional<TargetKind> parse_target_kind(const std::string& s);

// How basis states with equal popcount are ordered before targets are
// handed out in increasing order.
//   Lexicographic: subsets compared as increasing index tuples.
//   Paper: the order that reproduces the published d = 2..5 coupling tables;
//          lexicographic except at d = 3, where the pairs run {1,2},{2,3},{1,3}.
enum class WithinGroupOrder { Lexicographic, Paper };

// Bijection basis state -> target index.
class Assignment {
 public:
  explicit Assignment(std::vector<std::size_t> target_of_state);

  static Assignment identity(unsigned d);
  static Assignment canonical(unsigned d, WithinGroupOrder order);

  unsigned qubits() const { return qubits_; }
  std::size_t size() const { return target_of_state_.size(); }
  std::size_t target_of(Mask state) const { return target_of_state_[state]; }
  std::span<const std::size_t> table() const { return target_of_state_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  unsigned qubits_ = 0;
  std::vector<std::size_t> target_of_state_;
};

struct CouplingSet {
  unsigned d = 0;
  std::vector<double> j;  // indexed by mask, size 2^d
  TargetKind target = TargetKind::Custom;
  Assignment assignment = Assignment::identity(0);

  double coupling(std::span<const unsigned> one_based_indices) const;
};

// Index tuple (1-based, increasing) for a mask, and back.
std::vector<unsigned> mask_indices(Mask mask);
Mask mask_from_indices(std::span<const unsigned> one_based_indices);
// Qubit 1 rightmost, width d: mask {1,2} at d = 3 prints "011".
std::string mask_bits(Mask mask, unsigned d);

struct SolveOptions {
  // Cross-check against a dense LU solve when d is at most this.
  unsigned dense_check_max_d = 4;
  double dense_check_tolerance = 1e-9;
};

// e(b) = targets[assignment(b)] and j = Moebius(e). Integer-valued targets
// are transformed in 64-bit integer arithmetic and are exact.
CouplingSet solve_couplings(unsigned d, std::span<const double> targets,
                            const Assignment& assignment, TargetKind kind,
                            const SolveOptions& options = {});

// Independent route: assemble the 2^d x 2^d subset-inclusion matrix and solve
// it with partial-pivot LU. d <= 10.
std::vector<double> solve_couplings_dense(unsigned d, std::span<const double> targets,
                                          const Assignment& assignment);

// e = zeta(j), one entry per basis state.
std::vector<double> eigenvalues_from_couplings(const CouplingSet& cs);

// Targets for a d-qubit operator of the given kind (first 2^d values).
std::vector<double> default_targets(unsigned d, TargetKind kind);

}  // namespace specfactor::digital
