#pragma once

// Entropic functionals. All logarithms are base 2, so every value is in bits.

#include <map>

#include "aen/statespace.hpp"

namespace aen {

/// Entanglement entropy per canonical cut of a pure state.
using EntropyProfile = std::map<Bipartition, double>;

/// -sum lambda log2 lambda over the clipped spectrum, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy of a probability vector (entries below zero are rejected).
double shannon_entropy(std::span<const double> probabilities);

/// h(x) = -x log2 x - (1-x) log2(1-x); throws InvalidArgument outside [0,1].
double binary_entropy(double x);

/// S(psi^T) for the reduced state on the cut side T.
double entanglement_entropy(const PureState& psi, const Bipartition& cut);

/// One entry per canonical cut; needs at least two parties.
EntropyProfile entropy_profile(const PureState& psi);

/// S(rho||sigma) = Tr rho log2 rho - Tr rho log2 sigma. Returns +infinity
/// when the support of rho is not contained in that of sigma.
double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Relative entropy of entanglement of a pure state across a cut. For pure
/// states this equals the entanglement entropy, so no optimization is run.
double ree_pure(const PureState& psi, const Bipartition& cut);

/// Generalized robustness of a pure state, (sum_i c_i)^2 - 1 in terms of its
/// Schmidt coefficients across the cut.
double generalized_robustness_pure(const PureState& psi, const Bipartition& cut);

}  // namespace aen
