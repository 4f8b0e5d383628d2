#include <algorithm>
#include <cmath>
#include <limits>

#include "specfactor/errors.hpp"
#include "specfactor/susy.hpp"

namespace specfactor::susy {
namespace {

// Number of eigenvalues strictly below lambda (Sturm sequence via LDL^T pivots).
std::size_t sturm_count(std::span<const double> d, std::span<const double> e2, double lambda,
                        double pivot_floor) {
  std::size_t count = 0;
  double q = d[0] - lambda;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (q == 0.0) q = -pivot_floor;
    q = d[i] - lambda - e2[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> dirichlet_levels(const Grid& grid, std::span<const double> v,
                                     std::size_t stride, std::size_t count) {
  const double h = grid.step * static_cast<double>(stride);
  const std::size_t nodes = (v.size() - 1) / stride + 1;
  if (nodes < 3 || count > nodes - 2) {
    throw PreconditionError("eigen_solve: more levels requested than interior nodes");
  }
  std::vector<double> diag(nodes - 2);
  for (std::size_t i = 1; i + 1 < nodes; ++i) diag[i - 1] = 2.0 / (h * h) + v[i * stride];
  std::vector<double> off(diag.size() - 1, -1.0 / (h * h));
  return tridiagonal_lowest_eigenvalues(diag, off, count);
}

}  // namespace

std::vector<double> tridiagonal_lowest_eigenvalues(std::span<const double> diagonal,
                                                   std::span<const double> off_diagonal,
                                                   std::size_t count) {
  const std::size_t n = diagonal.size();
  if (n == 0 || off_diagonal.size() + 1 != n) {
    throw PreconditionError("tridiagonal: off-diagonal must have n - 1 entries");
  }
  if (count > n) throw PreconditionError("tridiagonal: count exceeds matrix size");

  std::vector<double> e2(off_diagonal.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? std::abs(off_diagonal[i - 1]) : 0.0;
    const double right = i + 1 < n ? std::abs(off_diagonal[i]) : 0.0;
    lo = std::min(lo, diagonal[i] - left - right);
    hi = std::max(hi, diagonal[i] + left + right);
    norm = std::max(norm, std::abs(diagonal[i]) + left + right);
    if (i + 1 < n) e2[i] = off_diagonal[i] * off_diagonal[i];
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double pivot_floor = eps * std::max(norm, std::numeric_limits<double>::min());

  std::vector<double> out;
  out.reserve(count);
  double floor = lo;
  for (std::size_t j = 0; j < count; ++j) {
    double a = floor, b = hi;
    for (int it = 0; it < 200 && b - a > 2.0 * eps * (std::abs(a) + std::abs(b)) + pivot_floor;
         ++it) {
      const double mid = 0.5 * (a + b);
      if (sturm_count(diagonal, e2, mid, pivot_floor) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out.push_back(0.5 * (a + b));
    floor = a;
  }
  return out;
}

EigenResult eigen_solve(const PotentialTable& pt, std::size_t n_levels,
                        const EigenOptions& options) {
  if (pt.v.size() != pt.grid.size()) throw PreconditionError("eigen_solve: table/grid mismatch");
  if (!pt.targets.empty() && n_levels > pt.targets.size()) {
    throw PreconditionError("eigen_solve: at most M + 1 levels for M + 1 targets");
  }
  for (double v : pt.v) {
    if (!std::isfinite(v)) throw PreconditionError("eigen_solve: non-finite potential");
  }
  EigenResult out;
  if (n_levels == 0) return out;
  out.fine = dirichlet_levels(pt.grid, pt.v, 1, n_levels);
  if (!options.richardson) {
    out.values = out.fine;
  }
  if (pt.grid.half_nodes % 2 == 0 && pt.grid.half_nodes >= 4) {
    out.coarse = dirichlet_levels(pt.grid, pt.v, 2, n_levels);
    for (std::size_t i = 0; i < n_levels; ++i) {
      out.max_refinement_change =
          std::max(out.max_refinement_change, std::abs(out.fine[i] - out.coarse[i]));
    }
    if (out.max_refinement_change > options.convergence_tolerance) {
      throw NumericalError("eigen_solve: grid too coarse, levels move by " +
                           std::to_string(out.max_refinement_change) +
                           " between h and 2h");
    }
    if (options.richardson) {
      out.values.resize(n_levels);
      for (std::size_t i = 0; i < n_levels; ++i) {
        out.values[i] = (4.0 * out.fine[i] - out.coarse[i]) / 3.0;
      }
    }
  } else if (options.richardson) {
    throw PreconditionError("eigen_solve: Richardson step needs an even number of half-nodes");
  }
  return out;
}

SpectrumCheck verify_spectrum(const PotentialTable& pt, const EigenOptions& options) {
  if (pt.targets.empty()) throw PreconditionError("verify_spectrum: table has no targets");
  const std::size_t m = pt.targets.size() - 1;
  SpectrumCheck check;
  check.threshold = pt.threshold();
  const auto solved = eigen_solve(pt, m + 1, options);
  check.max_refinement_change = solved.max_refinement_change;
  check.eigenvalues.assign(solved.values.begin(), solved.values.begin() + static_cast<long>(m));
  check.bound_count_ok = solved.values[m] > check.threshold - 1e-9;
  if (m == 0) return check;
  check.ground_state_error = check.eigenvalues[0] - pt.targets[0];
  for (std::size_t k = 0; k < m; ++k) {
    const double upper = k + 1 < m ? check.eigenvalues[k + 1] : check.threshold;
    check.target_spacings.push_back(pt.targets[k + 1] - pt.targets[k]);
    check.measured_spacings.push_back(upper - check.eigenvalues[k]);
    check.max_spacing_error = std::max(
        check.max_spacing_error, std::abs(check.measured_spacings[k] - check.target_spacings[k]));
  }
  return check;
}

}  // namespace specfactor::susy
