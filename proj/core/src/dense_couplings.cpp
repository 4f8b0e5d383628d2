#include <Eigen/Dense>

#include "specfactor/digital.hpp"
#include "specfactor/errors.hpp"

namespace specfactor::digital {

std::vector<double> solve_couplings_dense(unsigned d, std::span<const double> targets,
                                          const Assignment& assignment) {
  if (d < 1 || d > 10) throw PreconditionError("solve_couplings_dense: d must be in [1, 10]");
  const Eigen::Index size = Eigen::Index{1} << d;
  if (static_cast<Eigen::Index>(targets.size()) != size || assignment.qubits() != d) {
    throw PreconditionError("solve_couplings_dense: size mismatch");
  }
  // Row b: sum over S of [S subset of b] * j_S = e(b).
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
  Eigen::VectorXd rhs(size);
  for (Eigen::Index b = 0; b < size; ++b) {
    rhs(b) = targets[assignment.target_of(static_cast<Mask>(b))];
    for (Eigen::Index s = 0; s < size; ++s) {
      if ((s & b) == s) a(b, s) = 1.0;
    }
  }
  const Eigen::VectorXd j = a.partialPivLu().solve(rhs);
  return {j.data(), j.data() + size};
}

}  // namespace specfactor::digital
