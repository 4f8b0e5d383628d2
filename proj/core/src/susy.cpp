#include "specfactor/susy.hpp"

#include <algorithm>
#include <cmath>

#include "specfactor/errors.hpp"

namespace specfactor::susy {
namespace {

constexpr std::size_t kMaxHalfNodes = std::size_t{1} << 21;

// dW_k/dx for the whole ladder at one point; V_{k-1} is rebuilt from W_1..W_{k-1}.
void ladder_rhs(std::span<const double> spacings, std::span<const double> w,
                std::span<double> out) {
  double v = 0.0;
  for (std::size_t k = 0; k < spacings.size(); ++k) {
    const double w2 = w[k] * w[k];
    out[k] = spacings[k] + w2 - v;
    v = 2.0 * spacings[k] + 2.0 * w2 - v;
  }
}

double ladder_top_potential(std::span<const double> spacings, std::span<const double> w) {
  double v = 0.0;
  for (std::size_t k = 0; k < spacings.size(); ++k) {
    v = 2.0 * spacings[k] + 2.0 * w[k] * w[k] - v;
  }
  return v;
}

class Rk4 {
 public:
  explicit Rk4(std::span<const double> spacings)
      : spacings_(spacings), k1_(spacings.size()), k2_(spacings.size()),
        k3_(spacings.size()), k4_(spacings.size()), tmp_(spacings.size()) {}

  void step(std::vector<double>& w, double h) {
    const std::size_t m = w.size();
    ladder_rhs(spacings_, w, k1_);
    for (std::size_t i = 0; i < m; ++i) tmp_[i] = w[i] + 0.5 * h * k1_[i];
    ladder_rhs(spacings_, tmp_, k2_);
    for (std::size_t i = 0; i < m; ++i) tmp_[i] = w[i] + 0.5 * h * k2_[i];
    ladder_rhs(spacings_, tmp_, k3_);
    for (std::size_t i = 0; i < m; ++i) tmp_[i] = w[i] + h * k3_[i];
    ladder_rhs(spacings_, tmp_, k4_);
    for (std::size_t i = 0; i < m; ++i) {
      w[i] += h / 6.0 * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }
  }

 private:
  std::span<const double> spacings_;
  std::vector<double> k1_, k2_, k3_, k4_, tmp_;
};

// First k (1-based) whose |W_k| is not below the threshold, or 0.
std::size_t blown_level(std::span<const double> w, double threshold) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!(std::abs(w[k]) < threshold)) return k + 1;
  }
  return 0;
}

struct HalfLine {
  std::vector<std::vector<double>> nodes;  // nodes[i] = W at |x| = i h
  std::size_t blown_at = 0;                // first bad node index, 0 if none
  std::size_t blown_level = 0;
};

HalfLine integrate_half_line(std::span<const double> spacings, double h,
                             std::size_t node_count, double threshold) {
  HalfLine out;
  std::vector<double> w(spacings.size(), 0.0);
  out.nodes.reserve(node_count + 1);
  out.nodes.push_back(w);
  Rk4 rk(spacings);
  for (std::size_t i = 1; i <= node_count; ++i) {
    rk.step(w, h);
    if (const auto k = blown_level(w, threshold); k != 0) {
      out.blown_at = i;
      out.blown_level = k;
      break;
    }
    out.nodes.push_back(w);
  }
  return out;
}

// Number of nodes per side for the automatic half-width.
std::size_t automatic_half_nodes(std::span<const double> spacings,
                                 const IntegratorOptions& opt) {
  const double h = opt.step;
  const auto to_nodes = [h](double length) {
    return static_cast<std::size_t>(std::ceil(length / h - 1e-9));
  };
  const std::size_t min_nodes = to_nodes(opt.min_half_width);
  const std::size_t max_nodes = std::min(to_nodes(opt.max_half_width), kMaxHalfNodes);
  if (spacings.empty()) return min_nodes;

  const double kappa_min = std::sqrt(-spacings.front());
  const std::size_t margin_nodes =
      kappa_min > 0.0 ? to_nodes(std::min(opt.tail_margin / kappa_min, opt.max_half_width))
                      : max_nodes;

  std::vector<double> w(spacings.size(), 0.0);
  Rk4 rk(spacings);
  std::size_t last_unsettled = 0;
  for (std::size_t i = 1; i <= max_nodes; ++i) {
    rk.step(w, opt.step);
    if (blown_level(w, opt.blowup_threshold) != 0) return i;
    if (std::abs(ladder_top_potential(spacings, w)) >= opt.tail_tolerance) last_unsettled = i;
    if (i >= std::max(min_nodes, last_unsettled + margin_nodes)) return i;
  }
  return max_nodes;
}

}  // namespace

Grid Grid::make(double half_width, double step) {
  if (!(step > 0.0) || !(half_width > 0.0)) {
    throw PreconditionError("Grid: half-width and step must be positive");
  }
  const double ratio = half_width / step;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
    throw PreconditionError("Grid: half-width must be an integer multiple of the step");
  }
  if (rounded > static_cast<double>(kMaxHalfNodes)) {
    throw ResourceLimitError("Grid: too many nodes");
  }
  return Grid{step, static_cast<std::size_t>(rounded)};
}

SuperpotentialSet build_superpotentials(std::span<const double> targets,
                                        const IntegratorOptions& options) {
  if (targets.empty()) throw PreconditionError("build_superpotentials: no targets");
  for (std::size_t i = 1; i < targets.size(); ++i) {
    if (!(targets[i] > targets[i - 1])) {
      throw PreconditionError("build_superpotentials: targets must be strictly increasing");
    }
  }
  if (!(options.step > 0.0)) throw PreconditionError("build_superpotentials: step must be > 0");

  SuperpotentialSet sps;
  sps.targets.assign(targets.begin(), targets.end());
  const std::size_t m = targets.size() - 1;
  for (std::size_t k = 1; k <= m; ++k) sps.spacings.push_back(targets[m - k] - targets[m]);

  std::size_t half_nodes;
  if (options.half_width) {
    half_nodes = Grid::make(*options.half_width, options.step).half_nodes;
  } else {
    half_nodes = automatic_half_nodes(sps.spacings, options);
  }
  half_nodes += half_nodes % 2;  // even, so the grid has an every-other-node coarsening
  sps.requested_half_width = static_cast<double>(half_nodes) * options.step;

  const auto right = integrate_half_line(sps.spacings, options.step, half_nodes,
                                         options.blowup_threshold);
  const auto left = integrate_half_line(sps.spacings, -options.step, half_nodes,
                                        options.blowup_threshold);
  std::size_t valid = std::min(right.nodes.size(), left.nodes.size()) - 1;
  if (valid < half_nodes) {
    sps.clipped = true;
    const bool right_first = right.blown_at != 0 && (left.blown_at == 0 || right.blown_at <= left.blown_at);
    sps.clip_level = right_first ? right.blown_level : left.blown_level;
    valid -= valid % 2;
    if (static_cast<double>(valid) * options.step < options.min_valid_half_width) {
      throw NumericalError("build_superpotentials: W_" + std::to_string(sps.clip_level) +
                           " blows up at |x| = " +
                           std::to_string(static_cast<double>(valid + 1) * options.step));
    }
  }

  sps.grid = Grid{options.step, valid};
  sps.w.assign(m, std::vector<double>(sps.grid.size()));
  for (std::size_t i = 0; i <= valid; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      sps.w[k][valid + i] = right.nodes[i][k];
      sps.w[k][valid - i] = left.nodes[i][k];
    }
  }
  return sps;
}

std::vector<double> partner_potential(const SuperpotentialSet& sps, std::size_t k) {
  if (k > sps.levels()) throw PreconditionError("partner_potential: k out of range");
  std::vector<double> v(sps.grid.size(), 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = 2.0 * sps.spacings[j] + 2.0 * sps.w[j][i] * sps.w[j][i] - v[i];
    }
  }
  return v;
}

std::vector<double> riccati_residuals(const SuperpotentialSet& sps) {
  const std::size_t n = sps.grid.size();
  const double h = sps.grid.step;
  std::vector<double> out(sps.levels(), 0.0);
  if (n < 5) return out;
  std::vector<double> v_prev(n, 0.0);
  for (std::size_t k = 0; k < sps.levels(); ++k) {
    const auto& w = sps.w[k];
    for (std::size_t i = 2; i + 2 < n; ++i) {
      const double dw = (-w[i + 2] + 8.0 * w[i + 1] - 8.0 * w[i - 1] + w[i - 2]) / (12.0 * h);
      const double rhs = sps.spacings[k] + w[i] * w[i] - v_prev[i];
      out[k] = std::max(out[k], std::abs(dw - rhs));
    }
    for (std::size_t i = 0; i < n; ++i) {
      v_prev[i] = 2.0 * sps.spacings[k] + 2.0 * w[i] * w[i] - v_prev[i];
    }
  }
  return out;
}

PotentialTable assemble_potential(const SuperpotentialSet& sps) {
  PotentialTable pt;
  pt.grid = sps.grid;
  pt.targets = sps.targets;
  pt.offset = sps.targets.back();
  pt.clipped = sps.clipped;
  const std::size_t m = sps.levels();
  pt.v.assign(sps.grid.size(), 0.0);
  for (std::size_t i = 0; i < pt.v.size(); ++i) {
    double sum = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
      const double term = sps.spacings[k - 1] + sps.w[k - 1][i] * sps.w[k - 1][i];
      sum += ((m - k) % 2 == 0) ? term : -term;
    }
    pt.v[i] = 2.0 * sum + pt.offset;
    if (!std::isfinite(pt.v[i])) {
      throw NumericalError("assemble_potential: non-finite V on the valid sub-grid");
    }
  }
  return pt;
}

PotentialTable build_potential(std::span<const double> targets,
                               const IntegratorOptions& options) {
  return assemble_potential(build_superpotentials(targets, options));
}

namespace {

// Pool-adjacent-violators fit of a non-decreasing sequence; returns max |y - fit|.
double isotonic_deviation(std::span<const double> y) {
  struct Block {
    double sum;
    std::size_t count;
    double mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Block> blocks;
  for (double v : y) {
    blocks.push_back({v, 1});
    while (blocks.size() > 1 && blocks[blocks.size() - 2].mean() > blocks.back().mean()) {
      blocks[blocks.size() - 2].sum += blocks.back().sum;
      blocks[blocks.size() - 2].count += blocks.back().count;
      blocks.pop_back();
    }
  }
  double worst = 0.0;
  std::size_t i = 0;
  for (const auto& b : blocks) {
    for (std::size_t c = 0; c < b.count; ++c, ++i) worst = std::max(worst, std::abs(y[i] - b.mean()));
  }
  return worst;
}

}  // namespace

ShapeReport describe_shape(const PotentialTable& pt, double max_ripple) {
  ShapeReport r;
  if (pt.v.empty()) return r;
  const auto min_it = std::min_element(pt.v.begin(), pt.v.end());
  const auto argmin = static_cast<std::size_t>(min_it - pt.v.begin());
  const double threshold = pt.targets.empty() ? std::max(pt.v.front(), pt.v.back()) : pt.threshold();
  r.depth = threshold - *min_it;
  r.argmin_x = pt.grid.x(argmin);
  if (!(r.depth > 0.0)) return r;
  for (std::size_t i = 0; i < pt.v.size(); ++i) {
    if (std::abs(pt.v[i] - threshold) > 1e-3 * r.depth) {
      r.support_half_width = std::max(r.support_half_width, std::abs(pt.grid.x(i)));
    }
  }

  r.strictly_monotone = true;
  for (std::size_t i = 1; i <= argmin; ++i) r.strictly_monotone &= pt.v[i] <= pt.v[i - 1];
  for (std::size_t i = argmin + 1; i < pt.v.size(); ++i) r.strictly_monotone &= pt.v[i] >= pt.v[i - 1];

  // Right flank must rise; the left flank, read from the wall inwards, must fall,
  // i.e. rise when read outwards from the minimum.
  std::vector<double> right(pt.v.begin() + static_cast<long>(argmin), pt.v.end());
  std::vector<double> left(pt.v.begin(), pt.v.begin() + static_cast<long>(argmin) + 1);
  std::reverse(left.begin(), left.end());
  r.ripple = std::max(isotonic_deviation(left), isotonic_deviation(right)) / r.depth;
  r.single_well = std::abs(r.argmin_x) <= 0.5 * r.support_half_width && r.ripple <= max_ripple;
  return r;
}

}  // namespace specfactor::susy
