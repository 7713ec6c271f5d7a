#pragma once

// Measure-and-prepare conversion channel
//
//   L[rho] = Tr[P rho] |phi><phi|^{⊗m} ⊗ |0><0|_K + Tr[(1 - P) rho] mu_s ⊗ |1><1|_K
//
// with P = |psi><psi|^{⊗n}, m = floor(r n) and a separable fallback mu_s,
// plus finite-n auditors for the robustness and fidelity bounds that make the
// sequence asymptotically entanglement-nonincreasing.

#include <cstdint>
#include <optional>
#include <vector>

#include "aen/entanglement.hpp"
#include "aen/sepopt.hpp"

namespace aen {

/// floor(r n), robust against r n landing a rounding error below an integer.
std::size_t output_copies(std::size_t n, double r);

class ProtocolChannel {
 public:
  const PureState& psi() const { return psi_; }
  const PureState& phi() const { return phi_; }
  std::size_t n() const { return n_; }
  double r() const { return r_; }
  std::size_t output_copies() const { return m_; }
  const SeparableState& mu_s() const { return mu_s_; }

  /// psi^{⊗n} with each party's copies fused.
  const PureState& input_state() const { return input_; }
  /// phi^{⊗m} with each party's copies fused.
  const PureState& target_state() const { return target_; }
  const PartyLayout& input_layout() const { return input_.layout(); }
  /// Target layout followed by the flag qubit K.
  const PartyLayout& output_layout() const { return output_layout_; }
  /// Index of the party that holds K when parties are grouped (party 0).
  std::size_t flag_owner() const { return 0; }

 private:
  friend ProtocolChannel build_protocol(const PureState&, const PureState&, std::size_t, double,
                                        std::optional<SeparableState>);
  ProtocolChannel(PureState psi, PureState phi, std::size_t n, double r, std::size_t m,
                  PureState input, PureState target, SeparableState mu_s, PartyLayout output);

  PureState psi_;
  PureState phi_;
  std::size_t n_;
  double r_;
  std::size_t m_;
  PureState input_;
  PureState target_;
  SeparableState mu_s_;
  PartyLayout output_layout_;
};

/// mu_s defaults to |0...0><0...0| on the target layout.
ProtocolChannel build_protocol(const PureState& psi, const PureState& phi, std::size_t n, double r,
                               std::optional<SeparableState> mu_s = std::nullopt);

/// Tr[P rho] for P = |psi><psi|^{⊗n}.
double success_probability(const ProtocolChannel& ch, const DensityMatrix& rho);
double success_probability(const ProtocolChannel& ch, const SeparableState& rho);

DensityMatrix apply_channel(const ProtocolChannel& ch, const DensityMatrix& rho);

/// Removes the flag qubit from a channel output.
DensityMatrix trace_out_flag(const ProtocolChannel& ch, const DensityMatrix& output);

/// Convexity bound p (2^m - 1) on the generalized robustness of the output
/// for a certified separable input. Only defined for singlet-to-singlet
/// channels.
double output_robustness_bound(const ProtocolChannel& ch, const SeparableState& rho_s);

struct BoundSample {
  double lhs = 0.0;
  double rhs = 0.0;
};

struct BoundCheckReport {
  std::size_t samples = 0;
  std::vector<BoundSample> per_sample;
  double max_excess = 0.0;  // max(lhs - rhs)
  bool passed = false;      // max_excess <= 1e-9
  std::uint64_t seed = 0;
};

/// Samples certified separable inputs to the singlet channel on n copies and
/// checks output_robustness_bound <= 2^{-n(1-r)}. Requires 1 <= n <= 6 and
/// 0 < r < 1.
BoundCheckReport audit_prop1(std::size_t n, double r, std::size_t num_samples, std::uint64_t seed);

/// log2(1 + epsilon).
double prop2_bound(double epsilon);

struct FidelityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = false;
};

/// F(psi-^{⊗n}, rho) against (E_r(rho) + log2(1 + 2^{-n(1-r)})) / floor(r n)
/// for a pure rho on the two-party n-singlet layout [2^n, 2^n].
FidelityCheck prop3_fidelity_check(const PureState& rho, std::size_t n, double r);

/// Sample 0 is psi-^{⊗n} itself; the rest are Haar-random pure states on the
/// n-singlet layout. Requires 1 <= n <= 6 and floor(r n) >= 1.
BoundCheckReport audit_prop3(std::size_t n, double r, std::size_t num_samples, std::uint64_t seed);

}  // namespace aen
