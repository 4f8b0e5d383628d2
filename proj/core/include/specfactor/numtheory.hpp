#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace specfactor {

using Integer = std::uint64_t;

// Largest prime count sieve() accepts unless the caller raises it.
inline constexpr std::size_t kDefaultSieveCap = std::size_t{1} << 24;

// The first M primes in increasing order, with index lookup.
class PrimeTable {
 public:
  static PrimeTable sieve(std::size_t count, std::size_t cap = kDefaultSieveCap);

  std::span<const Integer> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  Integer operator[](std::size_t i) const { return primes_[i]; }
  Integer largest() const { return primes_.back(); }

  // Zero-based position of p, or nullopt when p is not in the table.
  std::optional<std::size_t> index_of(Integer p) const;
  bool contains(Integer p) const { return index_of(p).has_value(); }

 private:
  explicit PrimeTable(std::vector<Integer> primes) : primes_(std::move(primes)) {}
  std::vector<Integer> primes_;
};

bool is_prime_trial_division(Integer n);

// N = prod p^alpha over the keys of `factors`.
struct Factorization {
  Integer n = 0;
  std::map<Integer, unsigned> factors;

  std::size_t distinct_primes() const { return factors.size(); }
  unsigned total_multiplicity() const;
  Integer product() const;
  // "2^3 * 3^2 * 5"
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Ground-truth trial-division factorization. Throws PreconditionError for n < 2.
Factorization factor_oracle(Integer n);

enum class SpectrumKind { LogPrimes, LogIntegers, Primes, Integers, Custom };

struct SpectrumSpec {
  SpectrumKind kind = SpectrumKind::LogPrimes;
  std::size_t levels = 1;
  // Only for LogIntegers: prepend log 1 = 0 so the integers start at m = 1.
  bool include_unity = false;
  std::vector<double> custom;
};

// Strictly increasing energies; natural logarithms for the log kinds.
// Integers start at 2 (or 1 with include_unity for LogIntegers).
std::vector<double> spectrum_values(const SpectrumSpec& spec);

std::optional<SpectrumKind> parse_spectrum_kind(const std::string& name);
std::string to_string(SpectrumKind kind);

struct GoldbachReport {
  Integer max_even = 0;
  unsigned d = 0;
  std::size_t table_size = 0;
  // One entry per even number 4..max_even; the pair found (p <= q), if any.
  std::vector<std::pair<Integer, std::optional<std::pair<Integer, Integer>>>> evens;
  // Two-copy spectrum {ln p + ln q : p <= q in table} vs {ln(p*q)}.
  // Only enumerated for tables of at most 4096 primes (d <= 12).
  bool two_copy_checked = false;
  std::size_t two_copy_levels = 0;
  bool two_copy_products_distinct = false;
  double two_copy_max_deviation = 0.0;
  bool two_copy_match = false;

  std::vector<Integer> uncovered() const;
  bool all_covered() const { return uncovered().empty(); }
};

GoldbachReport goldbach_check(Integer max_even, unsigned d);

}  // namespace specfactor
