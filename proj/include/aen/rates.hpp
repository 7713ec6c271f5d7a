#pragma once

// Asymptotic conversion rates between multipartite pure states under
// asymptotically entanglement-nonincreasing operations:
//
//   R(psi -> phi) = min_T S(psi^T) / S(phi^T)
//
// taken over all canonical bipartitions T|T̄.

#include <optional>
#include <string>
#include <vector>

#include "aen/entanglement.hpp"

namespace aen {

/// Entropies below this count as zero when forming ratios.
inline constexpr double kZeroEntropy = 1e-9;

/// All 2^(k-1) - 1 canonical cuts of a k-party system (each contains party
/// 0), ordered by subset size and then lexicographically.
std::vector<Bipartition> enumerate_bipartitions(std::size_t party_count);

enum class CutStatus {
  ratio,          // both sides entangled: ratio = S_source / S_target
  zero_source,    // only the source is unentangled: ratio = 0
  degenerate,     // only the target is unentangled: no constraint, flagged
  unconstrained,  // neither side is entangled: no constraint
};

std::string_view to_string(CutStatus status);

struct CutEntry {
  Bipartition cut;
  double s_source = 0.0;
  double s_target = 0.0;
  CutStatus status = CutStatus::ratio;
  std::optional<double> ratio;  // empty for degenerate / unconstrained cuts
};

struct RateReport {
  std::vector<CutEntry> cuts;
  double rate = 0.0;                  // +infinity when no cut constrains it
  std::optional<Bipartition> min_cut;
  std::vector<Bipartition> degenerate_cuts;
  bool unconstrained = false;
  std::string source_label;
  std::string target_label;
};

struct ReversibilityReport {
  bool reversible = false;
  double max_ratio_spread = 0.0;  // max relative spread of ratios over positive cuts
  bool zero_cuts_match = true;
  double tolerance = 0.0;
  double forward_rate = 0.0;
  double backward_rate = 0.0;
};

/// Cuts are paired by party index; local dimensions may differ but the party
/// counts must agree (ShapeMismatch otherwise).
RateReport aen_rate(const PureState& source, const PureState& target,
                    std::string source_label = "source", std::string target_label = "target");

/// For pure states the LOCC upper bound coincides with the AEN rate formula.
double locc_upper_bound(const PureState& source, const PureState& target);

/// Reversible iff all defined ratios agree within `tolerance` in relative
/// terms, |r1 - r2| / max(r1, r2), and both states vanish on the same cuts.
ReversibilityReport is_reversible(const PureState& a, const PureState& b, double tolerance = 1e-9);

}  // namespace aen
