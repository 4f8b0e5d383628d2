#include "specfactor/digital.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specfactor/errors.hpp"
#include "specfactor/numtheory.hpp"

namespace specfactor::digital {
namespace {

void check_qubits(unsigned d, const char* who) {
  if (d < 1 || d > kMaxQubits) {
    throw PreconditionError(std::string(who) + ": d must be in [1, " +
                            std::to_string(kMaxQubits) + "]");
  }
}

bool is_integral(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(), [](double v) {
    return std::isfinite(v) && v == std::nearbyint(v) && std::abs(v) < 0x1.0p52;
  });
}

// The published d = 3 operator lists its pair terms as N1N2, N2N3, N1N3, and
// those pairs evaluate to 11, 13, 17 in that order.
constexpr Mask kPaperPairsD3[] = {0b011, 0b110, 0b101};

}  // namespace

std::vector<double> build_o2_diagonal(unsigned d) {
  check_qubits(d, "build_o2_diagonal");
  std::vector<double> out(std::size_t{1} << d);
  std::iota(out.begin(), out.end(), 2.0);
  return out;
}

std::string to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::Primes: return "primes";
    case TargetKind::LogPrimes: return "logprimes";
    case TargetKind::Integers: return "integers";
    case TargetKind::LogIntegers: return "logintegers";
    case TargetKind::Custom: return "custom";
  }
  return "custom";
}

std::optional<TargetKind> parse_target_kind(const std::string& s) {
  if (s == "primes") return TargetKind::Primes;
  if (s == "logprimes") return TargetKind::LogPrimes;
  if (s == "integers") return TargetKind::Integers;
  if (s == "logintegers") return TargetKind::LogIntegers;
  if (s == "custom") return TargetKind::Custom;
  return std::nullopt;
}

Assignment::Assignment(std::vector<std::size_t> target_of_state)
    : target_of_state_(std::move(target_of_state)) {
  const std::size_t size = target_of_state_.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw PreconditionError("Assignment: size must be a power of two");
  }
  qubits_ = static_cast<unsigned>(std::countr_zero(size));
  std::vector<bool> seen(size, false);
  for (std::size_t t : target_of_state_) {
    if (t >= size || seen[t]) throw PreconditionError("Assignment: not a bijection");
    seen[t] = true;
  }
}

Assignment Assignment::identity(unsigned d) {
  std::vector<std::size_t> t(std::size_t{1} << d);
  std::iota(t.begin(), t.end(), std::size_t{0});
  return Assignment(std::move(t));
}

Assignment Assignment::canonical(unsigned d, WithinGroupOrder order) {
  check_qubits(d, "canonical_assignment");
  const std::size_t size = std::size_t{1} << d;
  std::vector<Mask> states(size);
  std::iota(states.begin(), states.end(), Mask{0});
  std::stable_sort(states.begin(), states.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    const auto ia = mask_indices(a), ib = mask_indices(b);
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
  });
  if (order == WithinGroupOrder::Paper && d == 3) {
    // states[0] = {}, states[1..3] = singles, states[4..6] = pairs.
    std::copy(std::begin(kPaperPairsD3), std::end(kPaperPairsD3), states.begin() + 4);
  }
  std::vector<std::size_t> target_of_state(size);
  for (std::size_t rank = 0; rank < size; ++rank) target_of_state[states[rank]] = rank;
  return Assignment(std::move(target_of_state));
}

double CouplingSet::coupling(std::span<const unsigned> one_based_indices) const {
  return j.at(mask_from_indices(one_based_indices));
}

std::vector<unsigned> mask_indices(Mask mask) {
  std::vector<unsigned> out;
  for (unsigned i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i + 1);
  }
  return out;
}

Mask mask_from_indices(std::span<const unsigned> one_based_indices) {
  Mask m = 0;
  for (unsigned i : one_based_indices) {
    if (i < 1 || i > kMaxQubits) throw PreconditionError("mask index out of range");
    m |= Mask{1} << (i - 1);
  }
  return m;
}

std::string mask_bits(Mask mask, unsigned d) {
  std::string out(d, '0');
  for (unsigned i = 0; i < d; ++i) {
    if (mask & (Mask{1} << i)) out[d - 1 - i] = '1';
  }
  return out;
}

CouplingSet solve_couplings(unsigned d, std::span<const double> targets,
                            const Assignment& assignment, TargetKind kind,
                            const SolveOptions& options) {
  check_qubits(d, "solve_couplings");
  const std::size_t size = std::size_t{1} << d;
  if (targets.size() != size) {
    throw PreconditionError("solve_couplings: need exactly 2^d targets");
  }
  if (assignment.qubits() != d) {
    throw PreconditionError("solve_couplings: assignment has the wrong qubit count");
  }

  CouplingSet cs{d, std::vector<double>(size), kind, assignment};
  if (is_integral(targets)) {
    std::vector<std::int64_t> e(size);
    for (std::size_t b = 0; b < size; ++b) {
      e[b] = static_cast<std::int64_t>(targets[assignment.target_of(static_cast<Mask>(b))]);
    }
    moebius_transform(std::span<std::int64_t>(e));
    for (std::size_t s = 0; s < size; ++s) cs.j[s] = static_cast<double>(e[s]);
  } else {
    for (std::size_t b = 0; b < size; ++b) {
      cs.j[b] = targets[assignment.target_of(static_cast<Mask>(b))];
    }
    moebius_transform(std::span<double>(cs.j));
  }

  if (d <= options.dense_check_max_d) {
    const auto dense = solve_couplings_dense(d, targets, assignment);
    for (std::size_t s = 0; s < size; ++s) {
      const double scale = std::max(1.0, std::abs(dense[s]));
      if (std::abs(dense[s] - cs.j[s]) > options.dense_check_tolerance * scale) {
        throw NumericalError("solve_couplings: dense cross-check failed at mask " +
                             std::to_string(s));
      }
    }
  }
  return cs;
}

std::vector<double> eigenvalues_from_couplings(const CouplingSet& cs) {
  const std::size_t size = std::size_t{1} << cs.d;
  if (cs.j.size() != size) throw PreconditionError("CouplingSet: need 2^d couplings");
  std::vector<double> e = cs.j;
  if (is_integral(e)) {
    std::vector<std::int64_t> ei(e.begin(), e.end());
    zeta_transform(std::span<std::int64_t>(ei));
    for (std::size_t b = 0; b < size; ++b) e[b] = static_cast<double>(ei[b]);
  } else {
    zeta_transform(std::span<double>(e));
  }
  return e;
}

std::vector<double> default_targets(unsigned d, TargetKind kind) {
  check_qubits(d, "default_targets");
  const std::size_t size = std::size_t{1} << d;
  SpectrumSpec spec;
  spec.levels = size;
  switch (kind) {
    case TargetKind::Primes: spec.kind = SpectrumKind::Primes; break;
    case TargetKind::LogPrimes: spec.kind = SpectrumKind::LogPrimes; break;
    case TargetKind::Integers: spec.kind = SpectrumKind::Integers; break;
    case TargetKind::LogIntegers: spec.kind = SpectrumKind::LogIntegers; break;
    case TargetKind::Custom:
      throw PreconditionError("default_targets: custom targets must be supplied");
  }
  return spectrum_values(spec);
}

}  // namespace specfactor::digital
