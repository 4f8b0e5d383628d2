#include "specfactor/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "specfactor/errors.hpp"

namespace specfactor {
namespace {

constexpr std::size_t kGoldbachTwoCopyMaxTable = 4096;

// Rosser's bound p_n < n (ln n + ln ln n) holds for n >= 6.
Integer nth_prime_upper_bound(std::size_t n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  return static_cast<Integer>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

}  // namespace

PrimeTable PrimeTable::sieve(std::size_t count, std::size_t cap) {
  if (count < 1) throw PreconditionError("sieve: prime count must be >= 1");
  if (count > cap) {
    throw ResourceLimitError("sieve: requested " + std::to_string(count) +
                             " primes exceeds cap " + std::to_string(cap));
  }
  const Integer limit = nth_prime_upper_bound(count);
  // Odd-only sieve: index i stands for 2i + 1.
  std::vector<bool> composite(limit / 2 + 1, false);
  std::vector<Integer> primes;
  primes.reserve(count);
  primes.push_back(2);
  for (Integer i = 1; primes.size() < count; ++i) {
    if (composite[i]) continue;
    const Integer p = 2 * i + 1;
    primes.push_back(p);
    for (Integer m = p * p; m <= limit; m += 2 * p) composite[m / 2] = true;
  }
  return PrimeTable(std::move(primes));
}

std::optional<std::size_t> PrimeTable::index_of(Integer p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - primes_.begin());
}

bool is_prime_trial_division(Integer n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Integer f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

unsigned Factorization::total_multiplicity() const {
  unsigned total = 0;
  for (const auto& [p, alpha] : factors) total += alpha;
  return total;
}

Integer Factorization::product() const {
  Integer out = 1;
  for (const auto& [p, alpha] : factors) {
    for (unsigned i = 0; i < alpha; ++i) out *= p;
  }
  return out;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, alpha] : factors) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (alpha > 1) os << '^' << alpha;
  }
  return os.str();
}

Factorization factor_oracle(Integer n) {
  if (n < 2) throw PreconditionError("factor_oracle: N must be >= 2");
  Factorization out{n, {}};
  Integer rest = n;
  for (Integer f = 2; f <= rest / f; f += (f == 2 ? 1 : 2)) {
    while (rest % f == 0) {
      ++out.factors[f];
      rest /= f;
    }
  }
  if (rest > 1) ++out.factors[rest];
  return out;
}

std::vector<double> spectrum_values(const SpectrumSpec& spec) {
  if (spec.levels < 1) throw PreconditionError("spectrum: levels must be >= 1");
  std::vector<double> out;
  out.reserve(spec.levels);
  switch (spec.kind) {
    case SpectrumKind::LogPrimes:
    case SpectrumKind::Primes: {
      const auto table = PrimeTable::sieve(spec.levels);
      for (Integer p : table.primes()) {
        const double v = static_cast<double>(p);
        out.push_back(spec.kind == SpectrumKind::LogPrimes ? std::log(v) : v);
      }
      break;
    }
    case SpectrumKind::LogIntegers: {
      const Integer first = spec.include_unity ? 1 : 2;
      for (std::size_t i = 0; i < spec.levels; ++i) {
        out.push_back(std::log(static_cast<double>(first + i)));
      }
      break;
    }
    case SpectrumKind::Integers:
      for (std::size_t i = 0; i < spec.levels; ++i) out.push_back(static_cast<double>(2 + i));
      break;
    case SpectrumKind::Custom:
      if (spec.custom.size() != spec.levels) {
        throw PreconditionError("spectrum: custom list length must equal levels");
      }
      for (std::size_t i = 1; i < spec.custom.size(); ++i) {
        if (!(spec.custom[i] > spec.custom[i - 1])) {
          throw PreconditionError("spectrum: custom list must be strictly increasing");
        }
      }
      out = spec.custom;
      break;
  }
  return out;
}

std::optional<SpectrumKind> parse_spectrum_kind(const std::string& name) {
  if (name == "logprimes") return SpectrumKind::LogPrimes;
  if (name == "logintegers") return SpectrumKind::LogIntegers;
  if (name == "primes") return SpectrumKind::Primes;
  if (name == "integers") return SpectrumKind::Integers;
  if (name == "custom") return SpectrumKind::Custom;
  return std::nullopt;
}

std::string to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::LogPrimes: return "logprimes";
    case SpectrumKind::LogIntegers: return "logintegers";
    case SpectrumKind::Primes: return "primes";
    case SpectrumKind::Integers: return "integers";
    case SpectrumKind::Custom: return "custom";
  }
  return "unknown";
}

std::vector<Integer> GoldbachReport::uncovered() const {
  std::vector<Integer> out;
  for (const auto& [e, pair] : evens) {
    if (!pair) out.push_back(e);
  }
  return out;
}

GoldbachReport goldbach_check(Integer max_even, unsigned d) {
  if (max_even < 4 || max_even % 2 != 0) {
    throw PreconditionError("goldbach: max_even must be even and >= 4");
  }
  if (d > 24) throw ResourceLimitError("goldbach: d must be <= 24");
  const auto table = PrimeTable::sieve(std::size_t{1} << d);
  const auto primes = table.primes();

  GoldbachReport report;
  report.max_even = max_even;
  report.d = d;
  report.table_size = table.size();
  for (Integer e = 4; e <= max_even; e += 2) {
    std::optional<std::pair<Integer, Integer>> found;
    for (Integer p : primes) {
      if (2 * p > e) break;
      if (table.contains(e - p)) {
        found = std::make_pair(p, e - p);
        break;
      }
    }
    report.evens.emplace_back(e, found);
  }

  // Sum of two copies of the log-prime spectrum against log of the product.
  if (primes.size() > kGoldbachTwoCopyMaxTable) return report;
  report.two_copy_checked = true;
  std::vector<Integer> products;
  double max_dev = 0.0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i; j < primes.size(); ++j) {
      const double sum = std::log(static_cast<double>(primes[i])) +
                         std::log(static_cast<double>(primes[j]));
      const Integer prod = primes[i] * primes[j];
      const double direct = std::log(static_cast<double>(prod));
      max_dev = std::max(max_dev, std::abs(sum - direct) / std::max(1.0, direct));
      products.push_back(prod);
    }
  }
  std::sort(products.begin(), products.end());
  report.two_copy_levels = products.size();
  report.two_copy_products_distinct =
      std::adjacent_find(products.begin(), products.end()) == products.end();
  report.two_copy_max_deviation = max_dev;
  report.two_copy_match = report.two_copy_products_distinct && max_dev <= 8.0 * 2.220446049250313e-16;
  return report;
}

}  // namespace specfactor
