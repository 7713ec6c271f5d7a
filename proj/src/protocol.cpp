#include "aen/protocol.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace aen {

namespace {

constexpr double kBoundSlack = 1e-9;

const PureState& singlet() {
  static const PureState s = catalog_state(CatalogName::singlet);
  return s;
}

bool is_singlet(const PureState& psi) {
  if (psi.layout().dims() != std::vector<std::size_t>{2, 2}) return false;
  return std::norm(singlet().amplitudes().dot(psi.amplitudes())) >= 1.0 - 1e-12;
}

PartyLayout with_flag(const PartyLayout& layout) {
  std::vector<Party> parties = layout.parties();
  std::string label = "K";
  while (layout.index_of(label)) label += '\'';
  parties.push_back({std::move(label), 2});
  return PartyLayout(std::move(parties));
}

void require_singlet_layout(std::size_t n) {
  if (n < 1 || n > 6) throw DimensionLimit("singlet audits support 1 <= n <= 6");
}

BoundCheckReport finish(BoundCheckReport report) {
  report.samples = report.per_sample.size();
  report.max_excess = -std::numeric_limits<double>::infinity();
  for (const auto& s : report.per_sample) report.max_excess = std::max(report.max_excess, s.lhs - s.rhs);
  if (report.per_sample.empty()) report.max_excess = 0.0;
  report.passed = report.max_excess <= kBoundSlack;
  return report;
}

}  // namespace

std::size_t output_copies(std::size_t n, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("rate r must be positive and finite");
  return static_cast<std::size_t>(std::floor(r * static_cast<double>(n) + 1e-9));
}

ProtocolChannel::ProtocolChannel(PureState psi, PureState phi, std::size_t n, double r,
                                 std::size_t m, PureState input, PureState target,
                                 SeparableState mu_s, PartyLayout output)
    : psi_(std::move(psi)),
      phi_(std::move(phi)),
      n_(n),
      r_(r),
      m_(m),
      input_(std::move(input)),
      target_(std::move(target)),
      mu_s_(std::move(mu_s)),
      output_layout_(std::move(output)) {}

ProtocolChannel build_protocol(const PureState& psi, const PureState& phi, std::size_t n, double r,
                               std::optional<SeparableState> mu_s) {
  if (n < 1) throw InvalidArgument("build_protocol: n must be at least 1");
  const std::size_t m = output_copies(n, r);
  PureState input = copies(psi, n);
  PureState target = copies(phi, m);
  check_dimension_limit(2 * target.dim());
  PartyLayout output = with_flag(target.layout());
  if (!mu_s) {
    mu_s = SeparableState::all_zeros(target.layout());
  } else if (!mu_s->layout().same_dims(target.layout())) {
    throw ShapeMismatch("mu_s does not live on the output copy layout");
  }
  return ProtocolChannel(psi, phi, n, r, m, std::move(input), std::move(target), std::move(*mu_s),
                         std::move(output));
}

double success_probability(const ProtocolChannel& ch, const DensityMatrix& rho) {
  if (!rho.layout().same_dims(ch.input_layout())) {
    throw ShapeMismatch("channel input has the wrong layout");
  }
  const Vector& x = ch.input_state().amplitudes();
  return std::clamp(x.dot(rho.matrix() * x).real(), 0.0, 1.0);
}

double success_probability(const ProtocolChannel& ch, const SeparableState& rho) {
  if (!rho.layout().same_dims(ch.input_layout())) {
    throw ShapeMismatch("channel input has the wrong layout");
  }
  return std::clamp(rho.expectation(ch.input_state().amplitudes()), 0.0, 1.0);
}

DensityMatrix apply_channel(const ProtocolChannel& ch, const DensityMatrix& rho) {
  const double p = success_probability(ch, rho);
  const Vector& phi = ch.target_state().amplitudes();
  const Matrix mu = ch.mu_s().density_matrix().matrix();
  const Eigen::Index d = phi.size();

  // K is the last (least significant) party: index = 2 x + k.
  Matrix out = Matrix::Zero(2 * d, 2 * d);
  for (Eigen::Index y = 0; y < d; ++y) {
    for (Eigen::Index x = 0; x < d; ++x) {
      out(2 * x, 2 * y) = p * phi(x) * std::conj(phi(y));
      out(2 * x + 1, 2 * y + 1) = (1.0 - p) * mu(x, y);
    }
  }
  return DensityMatrix::assume_valid(ch.output_layout(), std::move(out));
}

DensityMatrix trace_out_flag(const ProtocolChannel& ch, const DensityMatrix& output) {
  if (!output.layout().same_dims(ch.output_layout())) {
    throw ShapeMismatch("not a channel output");
  }
  std::vector<std::size_t> keep(ch.output_layout().size() - 1);
  std::iota(keep.begin(), keep.end(), 0);
  return partial_trace(output, Bipartition(std::move(keep)));
}

double output_robustness_bound(const ProtocolChannel& ch, const SeparableState& rho_s) {
  if (!is_singlet(ch.psi()) || !is_singlet(ch.phi())) {
    throw InvalidArgument("output_robustness_bound is defined for singlet-to-singlet channels");
  }
  const double p = success_probability(ch, rho_s);
  return p * (std::exp2(static_cast<double>(ch.output_copies())) - 1.0);
}

BoundCheckReport audit_prop1(std::size_t n, double r, std::size_t num_samples, std::uint64_t seed) {
  require_singlet_layout(n);
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("audit_prop1 needs 0 < r < 1");
  const ProtocolChannel ch = build_protocol(singlet(), singlet(), n, r);
  const double rhs = std::exp2(-static_cast<double>(n) * (1.0 - r));

  BoundCheckReport report;
  report.seed = seed;
  for (std::size_t i = 0; i < num_samples; ++i) {
    const std::uint64_t sub = derive_seed(seed, i);
    std::mt19937_64 rng(sub);
    const auto terms = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const SeparableState rho_s =
        sample_separable(ch.input_layout(), Bipartition{0}, terms, derive_seed(sub, 1));
    report.per_sample.push_back({output_robustness_bound(ch, rho_s), rhs});
  }
  return finish(std::move(report));
}

double prop2_bound(double epsilon) {
  if (!(epsilon >= 0.0)) throw InvalidArgument("prop2_bound: epsilon must be >= 0");
  return std::log2(1.0 + epsilon);
}

FidelityCheck prop3_fidelity_check(const PureState& rho, std::size_t n, double r) {
  if (n < 1 || n > 8) throw DimensionLimit("prop3_fidelity_check supports 1 <= n <= 8");
  const std::size_t m = output_copies(n, r);
  if (m == 0) throw InvalidArgument("prop3 bound undefined for floor(r n) = 0");
  const std::size_t side = std::size_t{1} << n;
  if (rho.layout().dims() != std::vector<std::size_t>{side, side}) {
    throw ShapeMismatch("state must live on the two-party n-singlet layout");
  }
  const PureState target = copies(singlet(), n);
  FidelityCheck out;
  out.lhs = std::norm(target.amplitudes().dot(rho.amplitudes()));
  const double epsilon = std::exp2(-static_cast<double>(n) * (1.0 - r));
  out.rhs = (ree_pure(rho, Bipartition{0}) + prop2_bound(epsilon)) / static_cast<double>(m);
  out.passed = out.lhs <= out.rhs + kBoundSlack;
  return out;
}

BoundCheckReport audit_prop3(std::size_t n, double r, std::size_t num_samples, std::uint64_t seed) {
  require_singlet_layout(n);
  const PureState target = copies(singlet(), n);
  BoundCheckReport report;
  report.seed = seed;
  for (std::size_t i = 0; i < num_samples; ++i) {
    const PureState rho = i == 0 ? target : haar_random_pure(target.layout(), derive_seed(seed, i));
    const auto check = prop3_fidelity_check(rho, n, r);
    report.per_sample.push_back({check.lhs, check.rhs});
  }
  return finish(std::move(report));
}

}  // namespace aen
