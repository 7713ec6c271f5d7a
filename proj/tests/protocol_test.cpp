#include "aen/protocol.hpp"

#include <cmath>

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "test_util.hpp"

namespace aen {
namespace {

PureState singlet() { return catalog_state(CatalogName::singlet); }

Matrix flag_projector(int k) {
  Matrix f = Matrix::Zero(2, 2);
  f(k, k) = 1.0;
  return f;
}

// Certificate for a computational basis product on the fused [d, d] layout.
SeparableState basis_product(std::size_t d, std::size_t a, std::size_t b) {
  Vector ea = Vector::Zero(static_cast<Eigen::Index>(d));
  Vector eb = Vector::Zero(static_cast<Eigen::Index>(d));
  ea(static_cast<Eigen::Index>(a)) = 1.0;
  eb(static_cast<Eigen::Index>(b)) = 1.0;
  return SeparableState(PartyLayout::from_dims(std::vector<std::size_t>{d, d}), {{0}, {1}},
                        {{1.0, {ea, eb}}});
}

SeparableState maximally_mixed(std::size_t d) {
  std::vector<ProductTerm> terms;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Vector ea = Vector::Zero(static_cast<Eigen::Index>(d));
      Vector eb = Vector::Zero(static_cast<Eigen::Index>(d));
      ea(static_cast<Eigen::Index>(a)) = 1.0;
      eb(static_cast<Eigen::Index>(b)) = 1.0;
      terms.push_back({1.0 / static_cast<double>(d * d), {ea, eb}});
    }
  }
  return SeparableState(PartyLayout::from_dims(std::vector<std::size_t>{d, d}), {{0}, {1}},
                        std::move(terms));
}

TEST(OutputCopies, FloorWithDecimalRates) {
  EXPECT_EQ(output_copies(100, 0.29), 29u);
  EXPECT_EQ(output_copies(3, 1.0 / 3.0), 1u);
  EXPECT_EQ(output_copies(2, 0.9), 1u);
  EXPECT_EQ(output_copies(10, 0.05), 0u);
  EXPECT_THROW(output_copies(1, 0.0), InvalidArgument);
  EXPECT_THROW(output_copies(1, std::nan("")), InvalidArgument);
}

TEST(BuildProtocol, Layouts) {
  const auto ch = build_protocol(catalog_state(CatalogName::w), catalog_state(CatalogName::ghz), 2, 0.9);
  EXPECT_EQ(ch.output_copies(), 1u);
  EXPECT_EQ(ch.input_layout().dims(), (std::vector<std::size_t>{4, 4, 4}));
  EXPECT_EQ(ch.output_layout().dims(), (std::vector<std::size_t>{2, 2, 2, 2}));
  EXPECT_EQ(ch.flag_owner(), 0u);
  EXPECT_THROW(build_protocol(singlet(), singlet(), 0, 0.5), InvalidArgument);
  EXPECT_THROW(build_protocol(singlet(), singlet(), 2, 1.0, basis_product(2, 0, 0)), ShapeMismatch);
}

TEST(ApplyChannel, MaximallyMixedInput) {
  const auto ch = build_protocol(singlet(), singlet(), 1, 1.0);
  const DensityMatrix rho(singlet().layout(), Matrix::Identity(4, 4) / 4.0);
  EXPECT_NEAR(success_probability(ch, rho), 0.25, 1e-15);
  const auto out = apply_channel(ch, rho);
  // Oracle: p |phi><phi| ⊗ |0><0| + (1 - p) |00><00| ⊗ |1><1| built with Kronecker products.
  const Vector phi = singlet().amplitudes();
  Matrix mu = Matrix::Zero(4, 4);
  mu(0, 0) = 1.0;
  const Matrix expected = 0.25 * Eigen::kroneckerProduct(Matrix(phi * phi.adjoint()), flag_projector(0)) +
                          0.75 * Eigen::kroneckerProduct(mu, flag_projector(1));
  EXPECT_LT(testing::max_abs_diff(out.matrix(), expected), 1e-15);
}

TEST(ApplyChannel, PerfectConversion) {
  const auto ch = build_protocol(catalog_state(CatalogName::w), catalog_state(CatalogName::ghz), 2, 0.9);
  const auto out = apply_channel(ch, DensityMatrix(ch.input_state()));
  const auto reduced = trace_out_flag(ch, out);
  EXPECT_NEAR(fidelity(reduced, DensityMatrix(ch.target_state())), 1.0, 1e-12);
  EXPECT_THROW(trace_out_flag(ch, reduced), ShapeMismatch);
}

TEST(OutputRobustnessBound, Examples) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto ch = build_protocol(singlet(), singlet(), n, 0.5);
    EXPECT_EQ(output_robustness_bound(ch, basis_product(std::size_t{1} << n, 0, 0)), 0.0);
  }
  // |01> on both copies: A digits (0,0) -> 0, B digits (1,1) -> 3.
  const auto ch2 = build_protocol(singlet(), singlet(), 2, 0.5);
  EXPECT_NEAR(output_robustness_bound(ch2, basis_product(4, 0, 3)), 0.25, 1e-15);

  const auto ch3 = build_protocol(singlet(), singlet(), 3, 1.0 / 3.0);
  EXPECT_EQ(ch3.output_copies(), 1u);
  EXPECT_NEAR(output_robustness_bound(ch3, maximally_mixed(8)), 1.0 / 64.0, 1e-15);
}

TEST(OutputRobustnessBound, RequiresSingletChannel) {
  const auto ghz = catalog_state(CatalogName::ghz);
  const auto ch = build_protocol(ghz, ghz, 1, 0.5);
  EXPECT_THROW(output_robustness_bound(ch, SeparableState::all_zeros(ghz.layout())), InvalidArgument);
}

TEST(SeparableInputAudit, Examples) {
  const auto report = audit_prop1(3, 0.5, 100, 1);
  EXPECT_EQ(report.samples, 100u);
  EXPECT_EQ(report.per_sample.size(), 100u);
  EXPECT_TRUE(report.passed);
  EXPECT_LE(report.max_excess, 0.0);
  for (const auto& s : report.per_sample) EXPECT_NEAR(s.rhs, std::exp2(-1.5), 1e-15);
  EXPECT_THROW(audit_prop1(0, 0.5, 1, 1), DimensionLimit);
  EXPECT_THROW(audit_prop1(7, 0.5, 1, 1), DimensionLimit);
  EXPECT_THROW(audit_prop1(2, 1.0, 1, 1), InvalidArgument);
  EXPECT_EQ(audit_prop1(2, 0.5, 0, 1).max_excess, 0.0);
}

TEST(SeparableInputAudit, SameSeedSameReport) {
  const auto a = audit_prop1(2, 0.5, 20, 9);
  const auto b = audit_prop1(2, 0.5, 20, 9);
  ASSERT_EQ(a.per_sample.size(), b.per_sample.size());
  for (std::size_t i = 0; i < a.per_sample.size(); ++i) EXPECT_EQ(a.per_sample[i].lhs, b.per_sample[i].lhs);
}

TEST(RelativeEntropyFromRobustness, Examples) {
  EXPECT_EQ(prop2_bound(0.0), 0.0);
  EXPECT_NEAR(prop2_bound(0.25), 0.3219280948873623, 1e-15);
  EXPECT_NEAR(prop2_bound(1.0), 1.0, 1e-15);
  EXPECT_THROW(prop2_bound(-1e-3), InvalidArgument);
}

TEST(FidelityBound, Examples) {
  const auto target2 = copies(singlet(), 2);
  const auto tight = prop3_fidelity_check(target2, 2, 0.5);
  EXPECT_NEAR(tight.lhs, 1.0, 1e-14);
  EXPECT_NEAR(tight.rhs, 2.0 + std::log2(1.5), 1e-14);
  EXPECT_TRUE(tight.passed);

  // Per copy |01> has overlap 1/2 with the singlet.
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t d = std::size_t{1} << n;
    const auto layout = PartyLayout::from_dims(std::vector<std::size_t>{d, d});
    const auto check = prop3_fidelity_check(testing::basis_state(layout, d - 1), n, 1.0);
    EXPECT_NEAR(check.lhs, std::exp2(-static_cast<double>(n)), 1e-14);
    EXPECT_NEAR(check.rhs, 1.0 / static_cast<double>(n), 1e-14);  // E_r = 0, log2(1 + 1) = 1
    EXPECT_TRUE(check.passed);
    const auto orth = prop3_fidelity_check(testing::basis_state(layout, 0), n, 1.0);
    EXPECT_EQ(orth.lhs, 0.0);
  }
}

TEST(FidelityBound, Errors) {
  EXPECT_THROW(prop3_fidelity_check(copies(singlet(), 2), 2, 0.25), InvalidArgument);
  EXPECT_THROW(prop3_fidelity_check(copies(singlet(), 2), 3, 0.5), ShapeMismatch);
  EXPECT_THROW(prop3_fidelity_check(copies(singlet(), 2), 9, 0.5), DimensionLimit);
}

TEST(FidelityAudit, SampleZeroIsTight) {
  const auto report = audit_prop3(3, 2.0 / 3.0, 50, 5);
  EXPECT_TRUE(report.passed);
  EXPECT_NEAR(report.per_sample[0].lhs, 1.0, 1e-14);
  EXPECT_THROW(audit_prop3(2, 0.25, 2, 1), InvalidArgument);
}

// ---------------------------------------------------------------------------
// Properties

TEST(ProtocolProperties, TracePreservingAndLinear) {
  const auto ch = build_protocol(catalog_state(CatalogName::w), catalog_state(CatalogName::ghz), 2, 0.9);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rho = testing::random_mixed(ch.input_layout(), 3, seed);
    const auto sigma = testing::random_mixed(ch.input_layout(), 5, seed + 400);
    const auto out_rho = apply_channel(ch, rho);
    EXPECT_NEAR(out_rho.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GE(clipped_eigenvalues(out_rho.matrix())(0), 0.0);

    const double a = 0.3;
    const DensityMatrix mix(ch.input_layout(), a * rho.matrix() + (1 - a) * sigma.matrix());
    const Matrix lhs = apply_channel(ch, mix).matrix();
    const Matrix rhs = a * out_rho.matrix() + (1 - a) * apply_channel(ch, sigma).matrix();
    EXPECT_LT(testing::max_abs_diff(lhs, rhs), 1e-12);
  }
}

TEST(ProtocolProperties, SeparableSuccessProbabilityBoundedByProductOverlap) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto ch = build_protocol(singlet(), singlet(), n, 0.5);
    const Vector x = ch.input_state().amplitudes();
    const auto best = max_product_overlap(ch.input_layout(), x * x.adjoint(), Bipartition{0});
    const double cap = std::exp2(-static_cast<double>(n));
    EXPECT_NEAR(best.value, cap, 1e-9);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto rho_s = sample_separable(ch.input_layout(), Bipartition{0}, 1 + seed % 8, seed);
      const double p = success_probability(ch, rho_s);
      EXPECT_LE(p, cap + 1e-12);
      EXPECT_NEAR(p, success_probability(ch, rho_s.density_matrix()), 1e-12);
    }
  }
}

TEST(ProtocolProperties, OutputRobustnessWithinBound) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (double r : {0.2, 0.5, 0.8}) {
      EXPECT_TRUE(audit_prop1(n, r, 50, n * 10).passed) << n << " " << r;
    }
  }
}

}  // namespace
}  // namespace aen
