#include "aen/reg.hpp"

#include <cmath>
#include <sstream>

namespace aen {

namespace {

void require_three_parties(const PureState& psi) {
  if (psi.party_count() != 3) {
    throw ShapeMismatch("REG decomposition needs exactly 3 parties, got " +
                        std::to_string(psi.party_count()));
  }
}

double clip_budget(double s) {
  if (s < -kEigenClip) {
    std::ostringstream msg;
    msg << "pair entropy " << s << " is negative beyond tolerance";
    throw NumericalError(msg.str());
  }
  return std::max(s, 0.0);
}

// Entropy of the squared spectrum (p, q, ..., q) on m levels.
double tail_entropy(double p, std::size_t m) {
  return binary_entropy(p) + (1.0 - p) * std::log2(static_cast<double>(m - 1));
}

PureState pair_state(const SchmidtSpectrum& spectrum, std::string a, std::string b) {
  const std::size_t d = spectrum.values.size();
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d * d));
  for (std::size_t j = 0; j < d; ++j) v(static_cast<Eigen::Index>(j * d + j)) = spectrum.values[j];
  return PureState(PartyLayout({{std::move(a), d}, {std::move(b), d}}), std::move(v));
}

std::array<double, 3> single_party_entropies(const PureState& psi) {
  return {entanglement_entropy(psi, Bipartition{0}), entanglement_entropy(psi, Bipartition{1}),
          entanglement_entropy(psi, Bipartition{2})};
}

}  // namespace

RegEntropies reg_entropies(const PureState& psi) {
  require_three_parties(psi);
  const auto [sa, sb, sc] = single_party_entropies(psi);
  return {clip_budget(0.5 * (sa + sb - sc)), clip_budget(0.5 * (sb + sc - sa)),
          clip_budget(0.5 * (sa + sc - sb))};
}

SchmidtSpectrum spectrum_with_entropy(double s, double tol) {
  if (!(s >= 0.0)) throw InvalidArgument("spectrum_with_entropy: entropy must be >= 0");
  if (!(tol > 0.0)) throw InvalidArgument("spectrum_with_entropy: tolerance must be > 0");
  if (s == 0.0) return {{1.0}};
  if (s > 40.0) throw DimensionLimit("spectrum_with_entropy: entropy too large");

  // Smallest m with log2(m) >= s, guarding against exp2 rounding.
  auto m = static_cast<std::size_t>(std::ceil(std::exp2(s)));
  while (m > 2 && std::log2(static_cast<double>(m - 1)) >= s) --m;
  while (std::log2(static_cast<double>(m)) < s - tol) ++m;
  m = std::max<std::size_t>(m, 2);

  double lo = 1.0 / static_cast<double>(m);  // maximal entropy log2(m)
  double hi = 1.0;                            // zero entropy
  double p = lo;
  bool converged = std::abs(tail_entropy(lo, m) - s) <= tol;
  for (int it = 0; it < 200 && !converged; ++it) {
    p = 0.5 * (lo + hi);
    const double h = tail_entropy(p, m);
    if (std::abs(h - s) <= tol) {
      converged = true;
    } else if (h > s) {
      lo = p;
    } else {
      hi = p;
    }
  }
  if (!converged) {
    throw NumericalError("spectrum_with_entropy: bisection did not reach the tolerance");
  }

  SchmidtSpectrum out;
  out.values.assign(m, std::sqrt((1.0 - p) / static_cast<double>(m - 1)));
  out.values.front() = std::sqrt(p);
  return out;
}

RegDecomposition reg_synthesize(const PureState& psi) {
  const RegEntropies e = reg_entropies(psi);
  std::array<SchmidtSpectrum, 3> spectra{spectrum_with_entropy(e.s1), spectrum_with_entropy(e.s2),
                                         spectrum_with_entropy(e.s3)};

  // [A1, B2, B1, C2, C1, A2] grouped into A=(A1,A2), B=(B1,B2), C=(C1,C2).
  const PureState pairs = tensor(tensor(pair_state(spectra[0], "A1", "B2"),
                                        pair_state(spectra[1], "B1", "C2")),
                                 pair_state(spectra[2], "C1", "A2"));
  const std::vector<PartyGroup> groups{{psi.layout().party(0).label, {0, 5}},
                                       {psi.layout().party(1).label, {2, 1}},
                                       {psi.layout().party(2).label, {4, 3}}};
  PureState synthesized = merge_parties(pairs, groups);

  const auto want = single_party_entropies(psi);
  const auto got = single_party_entropies(synthesized);
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(want[i] - got[i]) > 1e-8) {
      throw NumericalError("synthesized state does not reproduce the entropy profile");
    }
  }
  return {e, std::move(spectra), std::move(synthesized)};
}

ReversibilityReport verify_reg(const PureState& psi, const RegDecomposition& decomposition,
                               double tolerance) {
  return is_reversible(psi, decomposition.synthesized, tolerance);
}

}  // namespace aen
