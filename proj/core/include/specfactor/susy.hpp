#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Potentials with a prescribed finite spectrum from the supersymmetric
// Riccati ladder, in units hbar = 1, 2m = 1 (H = -d^2/dx^2 + V).
//
// For targets e_0 < ... < e_M the spacings are Et_k = e_{M-k} - e_M < 0 and
//   W_k' = Et_k + W_k^2 - V_{k-1},   V_k = 2 Et_k + 2 W_k^2 - V_{k-1},
// with W_k(0) = 0 and V_0 = 0. V_M binds M states at Et_M < ... < Et_1 and its
// continuum starts at 0, so shifting by e_M puts the bound states at
// e_0 .. e_{M-1} and the continuum edge at e_M.
namespace specfactor::susy {

// Symmetric uniform grid; node i sits at x = (i - half_nodes) * step.
struct Grid {
  double step = 0.0;
  std::size_t half_nodes = 0;

  // half_width / step must be an integer (to 1e-9).
  static Grid make(double half_width, double step);

  double half_width() const { return step * static_cast<double>(half_nodes); }
  std::size_t size() const { return 2 * half_nodes + 1; }
  std::size_t center() const { return half_nodes; }
  double x(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(half_nodes)) * step;
  }
};

struct IntegratorOptions {
  double step = 12.0 / 512.0;
  // Fixed half-width; when empty it is chosen from the tail of V (see below).
  std::optional<double> half_width;
  // Automatic half-width: integrate until |V_M| < tail_tolerance, then go on
  // for tail_margin decay lengths 1/kappa_min of the shallowest bound state,
  // clamped to [min_half_width, max_half_width].
  double min_half_width = 12.0;
  double max_half_width = 400.0;
  double tail_tolerance = 1e-10;
  double tail_margin = 8.0;
  // Valid sub-grid: largest symmetric interval with every |W_k| below this.
  double blowup_threshold = 1e6;
  // A valid sub-grid narrower than this is a NumericalError.
  double min_valid_half_width = 1.0;
};

struct SuperpotentialSet {
  std::vector<double> targets;   // as supplied, e_0 .. e_M
  std::vector<double> spacings;  // Et_1 .. Et_M at index k - 1
  Grid grid;                     // already clipped to the valid sub-grid
  std::vector<std::vector<double>> w;  // w[k - 1][node]
  bool clipped = false;
  std::size_t clip_level = 0;    // first k that crossed the blow-up threshold
  double requested_half_width = 0.0;

  std::size_t levels() const { return spacings.size(); }
};

SuperpotentialSet build_superpotentials(std::span<const double> targets,
                                        const IntegratorOptions& options = {});

// V_k on the grid by the step recurrence (V_0 = 0), k in [0, M].
std::vector<double> partner_potential(const SuperpotentialSet& sps, std::size_t k);

// max |W_k' - (Et_k + W_k^2 - V_{k-1})| over interior nodes, with W_k' from
// the five-point centered difference. One entry per k.
std::vector<double> riccati_residuals(const SuperpotentialSet& sps);

struct PotentialTable {
  Grid grid;
  std::vector<double> v;
  std::vector<double> targets;  // empty for tables read back without metadata
  double offset = 0.0;          // constant added to the ladder's V_M
  bool clipped = false;

  // Asymptotic value of V: the continuum edge, equal to e_M when built here.
  double threshold() const { return offset; }
};

// V = 2 sum_k (-1)^(M-k) (Et_k + W_k^2) + e_M.
PotentialTable assemble_potential(const SuperpotentialSet& sps);

PotentialTable build_potential(std::span<const double> targets,
                               const IntegratorOptions& options = {});

// V sampled from a function, for reference potentials.
template <typename F>
PotentialTable tabulate_potential(const Grid& grid, F&& f) {
  PotentialTable pt;
  pt.grid = grid;
  pt.v.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) pt.v[i] = f(grid.x(i));
  return pt;
}

// Coarse shape of a table. The ladder's potentials are wells whose flanks
// carry small ripples, so monotonicity is measured against the closest
// monotone profile (isotonic regression) rather than demanded node by node.
struct ShapeReport {
  double depth = 0.0;          // threshold - min V
  double argmin_x = 0.0;
  double support_half_width = 0.0;  // outermost |x| with |V - threshold| > 1e-3 depth
  bool strictly_monotone = false;   // non-increasing to the minimum, then non-decreasing
  double ripple = 0.0;         // max |V - isotonic fit| over both flanks, relative to depth
  // Minimum within the inner half of the support and ripple below max_ripple.
  bool single_well = false;
};

ShapeReport describe_shape(const PotentialTable& pt, double max_ripple = 0.1);

// Lowest `count` eigenvalues of the symmetric tridiagonal matrix with the
// given diagonal and off-diagonal, by Sturm-sequence bisection.
std::vector<double> tridiagonal_lowest_eigenvalues(std::span<const double> diagonal,
                                                   std::span<const double> off_diagonal,
                                                   std::size_t count);

struct EigenOptions {
  // Combine the grid with its every-other-node coarsening: (4 E_h - E_2h) / 3.
  bool richardson = true;
  // NumericalError when |E_h - E_2h| exceeds this for any requested level.
  double convergence_tolerance = 5e-2;
};

struct EigenResult {
  std::vector<double> values;  // extrapolated when richardson is on
  std::vector<double> fine;
  std::vector<double> coarse;
  double max_refinement_change = 0.0;
};

// Lowest eigenvalues of -d^2/dx^2 + V with Dirichlet walls at the table
// edges, three-point finite differences.
EigenResult eigen_solve(const PotentialTable& pt, std::size_t n_levels,
                        const EigenOptions& options = {});

struct SpectrumCheck {
  std::vector<double> eigenvalues;     // the M bound levels
  double threshold = 0.0;
  std::vector<double> target_spacings;    // e_{k+1} - e_k, k = 0..M-1
  std::vector<double> measured_spacings;  // last one measured against the threshold
  double max_spacing_error = 0.0;
  double ground_state_error = 0.0;     // E_0 - e_0
  bool bound_count_ok = false;         // level M lies at or above the threshold
  double max_refinement_change = 0.0;
};

// Compares the bound spectrum of a table built from targets e_0..e_M with
// those targets.
SpectrumCheck verify_spectrum(const PotentialTable& pt, const EigenOptions& options = {});

// ---- Lloyd form dW/dx + f(W) W = b ----------------------------------------

enum class LloydVariant {
  // f_ab = 0 (a > b), -W_a (a = b), (-1)^a 2 W_b (a < b).
  Published,
  // Published formulas with every index relabelled a -> M + 1 - a.
  ReversedIndex,
  // f_ab = 0 (a < b), -W_a (a = b), (-1)^(a-b-1) 2 W_b (a > b), which is the
  // ladder above with V_{k-1} written out in W_1 .. W_{k-1}.
  LowerTriangular,
};

std::string to_string(LloydVariant v);

// b_k = Et_k + sum_{i=1}^{k-1} (-1)^i 2 Et_{k-i}; shared by every variant.
std::vector<double> lloyd_constant(std::span<const double> spacings);

// Row-major M x M matrix f(W) for the given variant.
std::vector<double> lloyd_matrix(std::span<const double> w, LloydVariant variant);

struct LloydSystem {
  std::size_t m = 0;
  LloydVariant variant = LloydVariant::Published;
  std::size_t node = 0;
  double x = 0.0;
  std::vector<double> w;
  std::vector<double> dw;        // five-point centered difference
  std::vector<double> f;         // row-major
  std::vector<double> b;
  std::vector<double> residual;  // dw + f w - b

  double f_at(std::size_t row, std::size_t col) const { return f[row * m + col]; }
};

// `node` must leave two neighbours on each side.
LloydSystem build_lloyd_system(const SuperpotentialSet& sps, std::size_t node,
                               LloydVariant variant = LloydVariant::Published);

struct LloydVariantResult {
  LloydVariant variant;
  double max_residual = 0.0;
  std::size_t worst_row = 0;
  double worst_x = 0.0;
  bool satisfied = false;
};

struct LloydExperiment {
  std::size_t m = 0;
  double tolerance = 0.0;
  std::vector<LloydVariantResult> variants;
  bool published_satisfied = false;
  std::optional<LloydVariant> satisfying_variant;
  std::string report;
};

// Evaluates every variant's residual along the integrated trajectory.
LloydExperiment lloyd_equivalence_experiment(const SuperpotentialSet& sps,
                                             double tolerance = 1e-4);

}  // namespace specfactor::susy
