#include "aen/entanglement.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "aen/rates.hpp"

namespace aen {

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double shannon_entropy(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p < -kEigenClip) throw NumericalError("negative probability in entropy");
    h -= plogp(std::max(p, 0.0));
  }
  return std::max(h, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector ev = rho.eigenvalues();
  return shannon_entropy(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("binary_entropy: argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -plogp(x) - plogp(1.0 - x);
}

double entanglement_entropy(const PureState& psi, const Bipartition& cut) {
  return von_neumann_entropy(partial_trace(psi, cut));
}

EntropyProfile entropy_profile(const PureState& psi) {
  if (psi.party_count() < 2) throw InvalidArgument("entropy_profile needs at least 2 parties");
  EntropyProfile profile;
  for (const auto& cut : enumerate_bipartitions(psi.party_count())) {
    profile.emplace(cut, entanglement_entropy(psi, cut));
  }
  return profile;
}

double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (!rho.layout().same_dims(sigma.layout())) {
    throw ShapeMismatch("quantum_relative_entropy: layouts differ");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sigma.matrix());
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const RealVector& lambda = solver.eigenvalues();
  const Matrix& v = solver.eigenvectors();

  double cross = 0.0;  // Tr rho log2 sigma
  for (Eigen::Index j = 0; j < lambda.size(); ++j) {
    if (lambda(j) < -kEigenClip) throw NumericalError("negative eigenvalue in sigma");
    const double weight = (v.col(j).adjoint() * rho.matrix() * v.col(j))(0, 0).real();
    if (lambda(j) <= kSupportThreshold) {
      if (weight > kSupportThreshold) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log2(lambda(j));
  }
  const double value = -von_neumann_entropy(rho) - cross;
  return std::max(value, 0.0);
}

double ree_pure(const PureState& psi, const Bipartition& cut) {
  return entanglement_entropy(psi, cut);
}

double generalized_robustness_pure(const PureState& psi, const Bipartition& cut) {
  const auto spectrum = schmidt_coefficients(psi, cut);
  const double sum = std::accumulate(spectrum.values.begin(), spectrum.values.end(), 0.0);
  return std::max(sum * sum - 1.0, 0.0);
}

}  // namespace aen
