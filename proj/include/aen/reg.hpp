#pragma once

// Tripartite pure states are reversibly interconvertible with a product of
// three bipartite pure states
//
//   |phi> = |phi1>^{A1 B2} ⊗ |phi2>^{B1 C2} ⊗ |phi3>^{C1 A2}
//
// whose entanglement entropies s1, s2, s3 solve
//   S_A = s1 + s3,  S_B = s1 + s2,  S_C = s2 + s3.

#include <array>

#include "aen/rates.hpp"

namespace aen {

struct RegEntropies {
  double s1 = 0.0;  // pair A1 B2
  double s2 = 0.0;  // pair B1 C2
  double s3 = 0.0;  // pair C1 A2
};

struct RegDecomposition {
  RegEntropies entropies;
  std::array<SchmidtSpectrum, 3> spectra;
  PureState synthesized;  // grouped as A=(A1,A2), B=(B1,B2), C=(C1,C2)
};

/// Pairwise budgets from the single-party entropies. Values in [-1e-10, 0)
/// are clipped to zero; anything more negative is a NumericalError.
RegEntropies reg_entropies(const PureState& psi);

/// Schmidt coefficients of a bipartite state with entanglement entropy `s`.
/// The squared spectrum is (p, q, ..., q) with q = (1-p)/(m-1) on
/// m = max(2, ceil(2^s)) levels; p is found by bisection. s = 0 gives (1).
SchmidtSpectrum spectrum_with_entropy(double s, double tol = 1e-12);

RegDecomposition reg_synthesize(const PureState& psi);

/// Checks unit-rate reversible interconversion between psi and the
/// synthesized state.
ReversibilityReport verify_reg(const PureState& psi, const RegDecomposition& decomposition,
                               double tolerance = 1e-8);

}  // namespace aen
