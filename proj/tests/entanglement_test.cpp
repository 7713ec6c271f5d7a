#include "aen/entanglement.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "aen/sepopt.hpp"
#include "test_util.hpp"

namespace aen {
namespace {

// h(1/3) evaluated directly: log2(3) - 2/3.
const double kH13 = std::log2(3.0) - 2.0 / 3.0;

DensityMatrix diag_state(std::initializer_list<double> probs) {
  const auto n = static_cast<Eigen::Index>(probs.size());
  Matrix m = Matrix::Zero(n, n);
  Eigen::Index i = 0;
  for (double p : probs) m(i, i) = p, ++i;
  return DensityMatrix(PartyLayout::from_dims(std::vector<std::size_t>{probs.size()}), m);
}

PureState merged_singlets(std::size_t m) { return copies(catalog_state(CatalogName::singlet), m); }

TEST(VonNeumann, Examples) {
  EXPECT_NEAR(von_neumann_entropy(diag_state({0.5, 0.5})), 1.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix(catalog_state(CatalogName::ghz))), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(diag_state({2.0 / 3.0, 1.0 / 3.0})), kH13, 1e-14);
  EXPECT_NEAR(von_neumann_entropy(diag_state({2.0 / 3.0, 1.0 / 3.0})), 0.9182958, 1e-7);
}

TEST(VonNeumann, RejectsNegativeSpectrum) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0 + 1e-8;
  m(1, 1) = -1e-8;
  EXPECT_THROW(clipped_eigenvalues(m), NumericalError);
  m(0, 0) = 1.0 + 1e-11;
  m(1, 1) = -1e-11;
  EXPECT_EQ(clipped_eigenvalues(m)(0), 0.0);
}

TEST(BinaryEntropy, Examples) {
  EXPECT_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(1.0 / 3.0), 0.9182958340544896, 1e-15);
  EXPECT_NEAR(binary_entropy(1.0 / 3.0), kH13, 1e-15);
  EXPECT_THROW(binary_entropy(-0.1), InvalidArgument);
  EXPECT_THROW(binary_entropy(1.1), InvalidArgument);
  EXPECT_THROW(binary_entropy(std::nan("")), InvalidArgument);
}

TEST(BinaryEntropy, Symmetric) {
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    EXPECT_NEAR(binary_entropy(x), binary_entropy(1.0 - x), 1e-12);
  }
}

TEST(EntanglementEntropy, Examples) {
  EXPECT_NEAR(entanglement_entropy(catalog_state(CatalogName::singlet), Bipartition{0}), 1.0, 1e-14);
  EXPECT_NEAR(entanglement_entropy(catalog_state(CatalogName::w), Bipartition{0}), kH13, 1e-14);
  const auto product = tensor(haar_random_pure(PartyLayout::qubits(1), 1),
                              haar_random_pure(PartyLayout::from_dims(std::vector<std::size_t>{3}), 2));
  EXPECT_NEAR(entanglement_entropy(product, Bipartition{0}), 0.0, 1e-12);
}

TEST(EntanglementEntropy, MatchesSchmidtSpectrum) {
  const auto layout = PartyLayout::from_dims(std::vector<std::size_t>{3, 2, 2});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto psi = haar_random_pure(layout, seed);
    for (const auto& cut : {Bipartition{0}, Bipartition{0, 1}, Bipartition{0, 2}}) {
      std::vector<double> probs;
      for (double c : schmidt_coefficients(psi, cut).values) probs.push_back(c * c);
      EXPECT_NEAR(entanglement_entropy(psi, cut), testing::entropy_bits(probs), 1e-9);
    }
  }
}

TEST(EntropyProfile, Examples) {
  const auto ghz = entropy_profile(catalog_state(CatalogName::ghz));
  ASSERT_EQ(ghz.size(), 3u);
  for (const auto& [cut, s] : ghz) EXPECT_NEAR(s, 1.0, 1e-14);

  for (const auto& [cut, s] : entropy_profile(catalog_state(CatalogName::w))) {
    EXPECT_NEAR(s, kH13, 1e-14);
  }
  for (const auto& [cut, s] : entropy_profile(catalog_state(CatalogName::three_singlets))) {
    EXPECT_NEAR(s, 2.0, 1e-13);
  }
  EXPECT_THROW(entropy_profile(catalog_state(CatalogName::zero, {1})), InvalidArgument);
  EXPECT_EQ(entropy_profile(catalog_state(CatalogName::ghz, {4})).size(), 7u);
}

TEST(RelativeEntropy, Examples) {
  const auto rho = testing::random_mixed(PartyLayout::qubits(2), 3, 1);
  EXPECT_NEAR(quantum_relative_entropy(rho, rho), 0.0, 1e-10);

  const DensityMatrix ket0(catalog_state(CatalogName::zero, {1}));
  const DensityMatrix half(PartyLayout::qubits(1), Matrix::Identity(2, 2) * 0.5);
  EXPECT_NEAR(quantum_relative_entropy(ket0, half), 1.0, 1e-14);

  Vector one(2);
  one << 0.0, 1.0;
  const DensityMatrix ket1(PureState(PartyLayout::qubits(1), one));
  EXPECT_EQ(quantum_relative_entropy(ket0, ket1), std::numeric_limits<double>::infinity());
  EXPECT_THROW(quantum_relative_entropy(ket0, rho), ShapeMismatch);
}

TEST(RelativeEntropy, NonnegativeOnRandomPairs) {
  const auto layout = PartyLayout::qubits(2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto rho = testing::random_mixed(layout, 2, seed);
    const auto sigma = testing::random_mixed(layout, 4, seed + 10000);
    EXPECT_GE(quantum_relative_entropy(rho, sigma), -1e-10);
  }
}

TEST(ReePure, Examples) {
  EXPECT_NEAR(ree_pure(merged_singlets(3), Bipartition{0}), 3.0, 1e-12);
  EXPECT_NEAR(ree_pure(catalog_state(CatalogName::zero, {2}), Bipartition{0}), 0.0, 1e-15);
  const auto w = catalog_state(CatalogName::w);
  EXPECT_NEAR(ree_pure(w, Bipartition{0}), entanglement_entropy(w, Bipartition{0}), 1e-15);
}

TEST(Robustness, Examples) {
  EXPECT_NEAR(generalized_robustness_pure(catalog_state(CatalogName::singlet), Bipartition{0}), 1.0,
              1e-14);
  EXPECT_NEAR(generalized_robustness_pure(merged_singlets(4), Bipartition{0}), 15.0, 1e-12);
  EXPECT_EQ(generalized_robustness_pure(catalog_state(CatalogName::zero, {2}), Bipartition{0}), 0.0);
}

TEST(Robustness, SingletCopiesGivePowersOfTwo) {
  for (std::size_t m = 1; m <= 8; ++m) {
    const double value = generalized_robustness_pure(merged_singlets(m), Bipartition{0});
    const long long want = (1LL << m) - 1;
    EXPECT_EQ(std::llround(value), want) << m;
    EXPECT_NEAR(value, static_cast<double>(want), 1e-9) << m;
  }
}

// ---------------------------------------------------------------------------
// Properties

TEST(EntanglementProperties, Subadditivity) {
  for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, std::vector<std::size_t>{2, 3, 4}}) {
    const auto layout = PartyLayout::from_dims(dims);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto psi = haar_random_pure(layout, seed);
      const double sa = entanglement_entropy(psi, Bipartition{0});
      const double sb = entanglement_entropy(psi, Bipartition{1});
      const double sab = entanglement_entropy(psi, Bipartition{0, 1});
      EXPECT_LE(sab, sa + sb + 1e-9);
    }
  }
}

TEST(EntanglementProperties, AdditiveUnderTensoring) {
  const auto layout = PartyLayout::from_dims(std::vector<std::size_t>{2, 3});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = haar_random_pure(layout, seed);
    const auto b = haar_random_pure(PartyLayout::qubits(2), seed + 500);
    const std::vector<PartyGroup> groups{{"A", {0, 2}}, {"B", {1, 3}}};
    const auto joint = merge_parties(tensor(a, b), groups);
    EXPECT_NEAR(entanglement_entropy(joint, Bipartition{0}),
                entanglement_entropy(a, Bipartition{0}) + entanglement_entropy(b, Bipartition{0}),
                1e-9);
  }
}

TEST(EntanglementProperties, ReeBelowRelativeEntropyToSeparableStates) {
  const auto layout = PartyLayout::qubits(2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto psi = haar_random_pure(layout, seed);
    const DensityMatrix rho(psi);
    const double ree = ree_pure(psi, Bipartition{0});
    const auto sigma = sample_separable(layout, Bipartition{0}, 4 + seed % 5, seed + 77);
    EXPECT_GE(quantum_relative_entropy(rho, sigma.density_matrix()), ree - 1e-10);
  }
}

TEST(EntanglementProperties, ProfileInvariantUnderLocalUnitaries) {
  const auto layout = PartyLayout::from_dims(std::vector<std::size_t>{2, 3, 2});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto psi = haar_random_pure(layout, seed);
    const auto rotated = testing::apply_local_unitaries(psi, seed + 31337);
    const auto p1 = entropy_profile(psi);
    const auto p2 = entropy_profile(rotated);
    for (const auto& [cut, s] : p1) EXPECT_NEAR(s, p2.at(cut), 1e-9);
  }
}

TEST(EntanglementProperties, PuritySymmetry) {
  const auto layout = PartyLayout::from_dims(std::vector<std::size_t>{2, 2, 3});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto psi = haar_random_pure(layout, seed);
    for (const auto& cut : {Bipartition{0}, Bipartition{0, 1}, Bipartition{0, 2}}) {
      EXPECT_NEAR(von_neumann_entropy(partial_trace(psi, cut)),
                  von_neumann_entropy(partial_trace(psi, cut.complement_cut(3))), 1e-9);
    }
  }
}

}  // namespace
}  // namespace aen
