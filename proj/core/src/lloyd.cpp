#include <cmath>
#include <sstream>

#include "specfactor/errors.hpp"
#include "specfactor/susy.hpp"

namespace specfactor::susy {
namespace {

double sign_pow(std::size_t e) { return e % 2 == 0 ? 1.0 : -1.0; }

std::vector<double> reversed(std::span<const double> v) { return {v.rbegin(), v.rend()}; }

}  // namespace

std::string to_string(LloydVariant v) {
  switch (v) {
    case LloydVariant::Published: return "published";
    case LloydVariant::ReversedIndex: return "reversed-index";
    case LloydVariant::LowerTriangular: return "lower-triangular";
  }
  return "unknown";
}

std::vector<double> lloyd_constant(std::span<const double> spacings) {
  std::vector<double> b(spacings.size());
  for (std::size_t k = 1; k <= spacings.size(); ++k) {
    double bk = spacings[k - 1];
    for (std::size_t i = 1; i < k; ++i) bk += sign_pow(i) * 2.0 * spacings[k - i - 1];
    b[k - 1] = bk;
  }
  return b;
}

std::vector<double> lloyd_matrix(std::span<const double> w, LloydVariant variant) {
  const std::size_t m = w.size();
  std::vector<double> f(m * m, 0.0);
  // Rows and columns below are 1-based (a, b).
  auto published = [&](std::span<const double> ww, std::vector<double>& out) {
    for (std::size_t a = 1; a <= m; ++a) {
      for (std::size_t b = 1; b <= m; ++b) {
        double value = 0.0;
        if (a == b) value = -ww[a - 1];
        else if (a < b) value = sign_pow(a) * 2.0 * ww[b - 1];
        out[(a - 1) * m + (b - 1)] = value;
      }
    }
  };
  switch (variant) {
    case LloydVariant::Published:
      published(w, f);
      break;
    case LloydVariant::ReversedIndex: {
      // f acts on the reversed vector; map back to the original ordering.
      const auto wr = reversed(w);
      std::vector<double> fr(m * m);
      published(wr, fr);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) f[(m - 1 - a) * m + (m - 1 - b)] = fr[a * m + b];
      }
      break;
    }
    case LloydVariant::LowerTriangular:
      for (std::size_t a = 1; a <= m; ++a) {
        for (std::size_t b = 1; b <= a; ++b) {
          f[(a - 1) * m + (b - 1)] = a == b ? -w[a - 1] : sign_pow(a - b - 1) * 2.0 * w[b - 1];
        }
      }
      break;
  }
  return f;
}

LloydSystem build_lloyd_system(const SuperpotentialSet& sps, std::size_t node,
                               LloydVariant variant) {
  const std::size_t n = sps.grid.size();
  if (node < 2 || node + 2 >= n) {
    throw PreconditionError("build_lloyd_system: node needs two neighbours on each side");
  }
  LloydSystem sys;
  sys.m = sps.levels();
  sys.variant = variant;
  sys.node = node;
  sys.x = sps.grid.x(node);
  const double h = sps.grid.step;
  for (std::size_t k = 0; k < sys.m; ++k) {
    const auto& w = sps.w[k];
    sys.w.push_back(w[node]);
    sys.dw.push_back((-w[node + 2] + 8.0 * w[node + 1] - 8.0 * w[node - 1] + w[node - 2]) /
                     (12.0 * h));
  }
  sys.f = lloyd_matrix(sys.w, variant);
  if (variant == LloydVariant::ReversedIndex) {
    const auto br = lloyd_constant(reversed(sps.spacings));
    sys.b = reversed(br);
  } else {
    sys.b = lloyd_constant(sps.spacings);
  }
  sys.residual.resize(sys.m);
  for (std::size_t a = 0; a < sys.m; ++a) {
    double r = sys.dw[a] - sys.b[a];
    for (std::size_t b = 0; b < sys.m; ++b) r += sys.f[a * sys.m + b] * sys.w[b];
    sys.residual[a] = r;
  }
  return sys;
}

LloydExperiment lloyd_equivalence_experiment(const SuperpotentialSet& sps, double tolerance) {
  LloydExperiment exp;
  exp.m = sps.levels();
  exp.tolerance = tolerance;
  const std::size_t n = sps.grid.size();
  if (n < 5) throw PreconditionError("lloyd_equivalence_experiment: grid too small");

  for (auto variant : {LloydVariant::Published, LloydVariant::ReversedIndex,
                       LloydVariant::LowerTriangular}) {
    LloydVariantResult res{variant};
    for (std::size_t node = 2; node + 2 < n; ++node) {
      const auto sys = build_lloyd_system(sps, node, variant);
      for (std::size_t a = 0; a < sys.m; ++a) {
        if (std::abs(sys.residual[a]) > res.max_residual) {
          res.max_residual = std::abs(sys.residual[a]);
          res.worst_row = a + 1;
          res.worst_x = sys.x;
        }
      }
    }
    res.satisfied = res.max_residual < tolerance;
    exp.variants.push_back(res);
  }
  exp.published_satisfied = exp.variants.front().satisfied;
  for (const auto& r : exp.variants) {
    if (r.satisfied) {
      exp.satisfying_variant = r.variant;
      break;
    }
  }

  std::ostringstream os;
  os << "Lloyd-form residual along the integrated ladder, M = " << exp.m
     << ", tolerance " << tolerance << "\n";
  for (const auto& r : exp.variants) {
    os << "  " << to_string(r.variant) << ": max |r| = " << r.max_residual;
    if (r.max_residual > 0.0) os << " (row " << r.worst_row << ", x = " << r.worst_x << ")";
    os << (r.satisfied ? "  ok" : "  FAILS") << "\n";
  }
  if (exp.published_satisfied) {
    os << "The published f_ab and b_k reproduce the Riccati ladder.\n";
  } else {
    os << "The published f_ab couples W_a to W_b for b > a, but equation k of the ladder "
          "contains V_{k-1}, which depends on W_1..W_{k-1} only. ";
    if (exp.satisfying_variant) {
      os << "The " << to_string(*exp.satisfying_variant)
         << " variant satisfies the ladder: f_ab = 0 for a < b, f_aa = -W_a, "
            "f_ab = 2 (-1)^(a-b-1) W_b for a > b, with the published b_k unchanged.\n";
    } else {
      os << "No tested variant satisfies the ladder.\n";
    }
  }
  exp.report = os.str();
  return exp;
}

}  // namespace specfactor::susy
