#pragma once

// Separable states with explicit certificates, and a numerical lower bound on
// max <a,b| O |a,b> over product vectors across a bipartition.

#include <cstdint>
#include <utility>
#include <vector>

#include "aen/statespace.hpp"

namespace aen {

/// One term w |x1><x1| ⊗ |x2><x2| ⊗ ... of a separable decomposition; factor
/// j lives on block j of the owning SeparableState.
struct ProductTerm {
  double weight = 0.0;
  std::vector<Vector> factors;
};

/// A separable density matrix stored as its certificate: a convex mixture of
/// pure product states over a partition of the parties into blocks. The
/// dense matrix is only materialized on request.
class SeparableState {
 public:
  SeparableState(PartyLayout layout, std::vector<std::vector<std::size_t>> blocks,
                 std::vector<ProductTerm> terms);

  /// Single-term certificate of a fully product state |0...0>.
  static SeparableState all_zeros(const PartyLayout& layout);

  const PartyLayout& layout() const { return layout_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<ProductTerm>& terms() const { return terms_; }

  /// Term i as a vector in the layout's own party order.
  Vector term_vector(std::size_t i) const;

  /// <chi| rho |chi> computed from the certificate.
  double expectation(const Vector& chi) const;

  DensityMatrix density_matrix() const;

 private:
  PartyLayout layout_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<ProductTerm> terms_;
};

/// Mixture of `num_terms` random product pure states across cut T|T̄ with
/// flat-simplex weights and Haar-random factors.
SeparableState sample_separable(const PartyLayout& layout, const Bipartition& cut,
                                std::size_t num_terms, std::uint64_t seed);

struct OverlapOptions {
  std::size_t restarts = 32;
  std::size_t max_iters = 500;
  double tol = 1e-11;
  std::uint64_t seed = 0;
};

struct OverlapResult {
  double value = 0.0;
  std::pair<Vector, Vector> argmax;  // (side T, side T̄)
  std::size_t restarts_used = 0;
  std::vector<std::size_t> iterations_per_restart;
  /// Objective after each half-step of the best restart.
  std::vector<double> best_trace;
  bool converged = false;
};

/// Alternating eigenvector ascent with random restarts. The value is attained
/// by the returned product vectors, so it is a certified lower bound on the
/// true maximum, not a proof of optimality.
OverlapResult max_product_overlap(const PartyLayout& layout, const Matrix& op,
                                  const Bipartition& cut, const OverlapOptions& options = {});

}  // namespace aen
