#include "aen/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aen {

std::vector<Bipartition> enumerate_bipartitions(std::size_t party_count) {
  if (party_count < 2) throw InvalidArgument("need at least 2 parties to form a cut");
  if (party_count > 20) throw DimensionLimit("too many parties to enumerate cuts");

  // Subsets of {1..k-1} joined with party 0, excluding the full set.
  std::vector<std::vector<std::size_t>> sets;
  const std::size_t rest = party_count - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest); ++mask) {
    std::vector<std::size_t> t{0};
    for (std::size_t b = 0; b < rest; ++b) {
      if (mask >> b & 1U) t.push_back(b + 1);
    }
    if (t.size() < party_count) sets.push_back(std::move(t));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<Bipartition> cuts;
  cuts.reserve(sets.size());
  for (auto& s : sets) cuts.emplace_back(std::move(s));
  return cuts;
}

std::string_view to_string(CutStatus status) {
  switch (status) {
    case CutStatus::ratio: return "ratio";
    case CutStatus::zero_source: return "zero_source";
    case CutStatus::degenerate: return "degenerate";
    case CutStatus::unconstrained: return "unconstrained";
  }
  return "?";
}

RateReport aen_rate(const PureState& source, const PureState& target, std::string source_label,
                    std::string target_label) {
  if (source.party_count() != target.party_count()) {
    throw ShapeMismatch("source has " + std::to_string(source.party_count()) +
                        " parties, target has " + std::to_string(target.party_count()));
  }
  RateReport report;
  report.source_label = std::move(source_label);
  report.target_label = std::move(target_label);

  for (const auto& cut : enumerate_bipartitions(source.party_count())) {
    CutEntry e{cut, entanglement_entropy(source, cut), entanglement_entropy(target, cut),
               CutStatus::ratio, std::nullopt};
    const bool source_zero = e.s_source < kZeroEntropy;
    const bool target_zero = e.s_target < kZeroEntropy;
    if (source_zero && target_zero) {
      e.status = CutStatus::unconstrained;
    } else if (target_zero) {
      e.status = CutStatus::degenerate;
      report.degenerate_cuts.push_back(cut);
    } else if (source_zero) {
      e.status = CutStatus::zero_source;
      e.ratio = 0.0;
    } else {
      e.ratio = e.s_source / e.s_target;
    }
    report.cuts.push_back(std::move(e));
  }

  report.rate = std::numeric_limits<double>::infinity();
  for (const auto& e : report.cuts) {
    if (e.ratio && *e.ratio < report.rate) {
      report.rate = *e.ratio;
      report.min_cut = e.cut;
    }
  }
  report.unconstrained = !report.min_cut.has_value();
  return report;
}

double locc_upper_bound(const PureState& source, const PureState& target) {
  return aen_rate(source, target).rate;
}

ReversibilityReport is_reversible(const PureState& a, const PureState& b, double tolerance) {
  const RateReport forward = aen_rate(a, b);
  const RateReport backward = aen_rate(b, a);

  ReversibilityReport out;
  out.tolerance = tolerance;
  out.forward_rate = forward.rate;
  out.backward_rate = backward.rate;

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& e : forward.cuts) {
    const bool a_zero = e.s_source < kZeroEntropy;
    const bool b_zero = e.s_target < kZeroEntropy;
    if (a_zero != b_zero) out.zero_cuts_match = false;
    if (e.status == CutStatus::ratio) {
      lo = std::min(lo, *e.ratio);
      hi = std::max(hi, *e.ratio);
    }
  }
  out.max_ratio_spread = hi > 0.0 ? (hi - lo) / hi : 0.0;
  out.reversible = out.zero_cuts_match && out.max_ratio_spread <= tolerance;
  return out;
}

}  // namespace aen
