#pragma once

// Dense multipartite state representation.
//
// Index convention: amplitudes are stored row-major with party 0 owning the
// most significant digit. For two qubits A, B the basis order is
//   index 0 = |00>, 1 = |01>, 2 = |10>, 3 = |11>   (|a b>, index = 2a + b)
// so the singlet (|01> - |10>)/sqrt(2) has amplitudes (0, 1, -1, 0)/sqrt(2).
// Every reshape, permutation and the JSON state file format use this order.

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "aen/error.hpp"

namespace aen {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Largest total dimension accepted for dense density matrices.
inline constexpr std::size_t kMaxTotalDim = std::size_t{1} << 14;
/// Largest total dimension accepted for amplitude vectors (2 * 8 qubit pairs).
inline constexpr std::size_t kMaxPureDim = std::size_t{1} << 16;
/// Input norms further than this from one are rejected rather than fixed up.
inline constexpr double kNormTolerance = 1e-6;
/// Eigenvalues in [-kEigenClip, 0) are clipped to zero; below that is an error.
inline constexpr double kEigenClip = 1e-10;
/// Eigenvalues above this count towards the support of an operator.
inline constexpr double kSupportThreshold = 1e-10;

struct Party {
  std::string label;
  std::size_t dim = 1;

  friend bool operator==(const Party&, const Party&) = default;
};

/// Default party names: A, B, ..., Z, then P26, P27, ...
std::string default_label(std::size_t index);

class PartyLayout {
 public:
  explicit PartyLayout(std::vector<Party> parties);

  static PartyLayout from_dims(std::span<const std::size_t> dims);
  static PartyLayout qubits(std::size_t count);

  std::size_t size() const { return parties_.size(); }
  const Party& party(std::size_t i) const { return parties_.at(i); }
  const std::vector<Party>& parties() const { return parties_; }
  std::vector<std::size_t> dims() const;
  std::size_t total_dim() const { return total_dim_; }
  /// Product of the local dimensions of the listed parties.
  std::size_t dim_of(std::span<const std::size_t> indices) const;
  std::optional<std::size_t> index_of(std::string_view label) const;
  bool same_dims(const PartyLayout& other) const;

  friend bool operator==(const PartyLayout&, const PartyLayout&) = default;

 private:
  std::vector<Party> parties_;
  std::size_t total_dim_ = 1;
};

/// A set T of party indices defining the cut T|T̄. The canonical
/// representative of a cut is the side that contains party 0.
class Bipartition {
 public:
  explicit Bipartition(std::vector<std::size_t> parties);
  Bipartition(std::initializer_list<std::size_t> parties)
      : Bipartition(std::vector<std::size_t>(parties)) {}

  const std::vector<std::size_t>& parties() const { return parties_; }
  bool contains(std::size_t party) const;
  std::vector<std::size_t> complement(std::size_t party_count) const;
  Bipartition complement_cut(std::size_t party_count) const;
  Bipartition canonical(std::size_t party_count) const;
  bool is_canonical() const { return !parties_.empty() && parties_.front() == 0; }

  /// Throws InvalidArgument unless T is a nonempty proper subset of the
  /// parties of a `party_count`-party layout.
  void validate(std::size_t party_count) const;

  /// "A|BC" style rendering using the layout's labels.
  std::string describe(const PartyLayout& layout) const;

  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<std::size_t> parties_;
};

class PureState {
 public:
  /// Validates the length and renormalizes; throws ShapeMismatch on a length
  /// mismatch and NormError for a zero vector or a norm off by more than
  /// kNormTolerance.
  PureState(PartyLayout layout, Vector amplitudes);

  const PartyLayout& layout() const { return layout_; }
  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return layout_.total_dim(); }
  std::size_t party_count() const { return layout_.size(); }

 private:
  PartyLayout layout_;
  Vector amplitudes_;
};

class DensityMatrix {
 public:
  /// Full validation: Hermitian within kEigenClip, unit trace within 1e-12,
  /// eigenvalues >= -kEigenClip. Stores the Hermitian part.
  DensityMatrix(PartyLayout layout, Matrix matrix);
  explicit DensityMatrix(const PureState& psi);

  /// For matrices that are valid by construction (partial traces, channel
  /// outputs, convex mixtures). Checks shape and trace only.
  static DensityMatrix assume_valid(PartyLayout layout, Matrix matrix);

  const PartyLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t dim() const { return layout_.total_dim(); }

  /// Eigenvalues in ascending order, clipped at zero.
  RealVector eigenvalues() const;

 private:
  struct Unchecked {};
  DensityMatrix(PartyLayout layout, Matrix matrix, Unchecked);

  PartyLayout layout_;
  Matrix matrix_;
};

/// Schmidt coefficients c_i (not their squares), nonincreasing.
struct SchmidtSpectrum {
  std::vector<double> values;
};

PureState make_pure_state(PartyLayout layout, Vector amplitudes);

enum class CatalogName { ghz, w, singlet, two_ghz, three_singlets, zero };

std::optional<CatalogName> parse_catalog_name(std::string_view name);
std::string_view to_string(CatalogName name);

/// `parties` applies to ghz (>= 2), w (>= 2) and zero (>= 1); the other
/// entries have fixed shapes and ignore it.
struct CatalogParams {
  std::size_t parties = 3;
};

/// Named states. two_ghz and three_singlets are returned on the grouped
/// three-party layout A=(A1,A2), B=(B1,B2), C=(C1,C2) of local dimension 4,
/// with the first constituent of each group as the more significant digit.
PureState catalog_state(CatalogName name, const CatalogParams& params = {});

/// Kronecker product; the layout is the concatenation. Right-hand labels that
/// collide with existing ones get primes appended.
PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

struct PartyGroup {
  std::string label;
  std::vector<std::size_t> members;
};

/// Permutes the parties so each group is contiguous (groups in the given
/// order, members in listed order) and fuses each group into one party.
PureState merge_parties(const PureState& psi, std::span<const PartyGroup> groups);
DensityMatrix merge_parties(const DensityMatrix& rho, std::span<const PartyGroup> groups);

/// psi^{⊗n} with the copies of each party fused into a single party carrying
/// the original label. n = 0 yields the unit state on dimension-1 parties.
PureState copies(const PureState& psi, std::size_t n);

/// Reduced state on `keep` (kept parties in their original order).
DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& keep);
DensityMatrix partial_trace(const PureState& psi, const Bipartition& keep);

/// Singular values of the amplitude matrix reshaped to dim(T) x dim(T̄),
/// padded with zeros to min(dim T, dim T̄).
SchmidtSpectrum schmidt_coefficients(const PureState& psi, const Bipartition& cut);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
/// sqrt(2 - 2 sqrt(F)).
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
/// (1/2) ||rho - sigma||_1.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Normalized complex Gaussian vector; deterministic in `seed`.
PureState haar_random_pure(const PartyLayout& layout, std::uint64_t seed);

// Lower-level helpers shared by the other modules.

/// Reorders tensor factors: party j of the result is party order[j] of the
/// input (dims are the input's local dimensions).
Vector permute_parties(const Vector& v, std::span<const std::size_t> dims,
                       std::span<const std::size_t> order);
Matrix permute_parties(const Matrix& m, std::span<const std::size_t> dims,
                       std::span<const std::size_t> order);

/// For each index of the permuted space, the index it came from.
std::vector<std::size_t> permutation_index_map(std::span<const std::size_t> dims,
                                               std::span<const std::size_t> order);

/// Ascending eigenvalues of a Hermitian matrix with the clipping rule applied.
RealVector clipped_eigenvalues(const Matrix& hermitian);

/// Largest |M_ij - conj(M_ji)|.
double hermiticity_error(const Matrix& m);

/// Counter-based seed derivation (splitmix64) so sample i of a seeded run
/// does not depend on how many draws earlier samples made.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter);

/// Normalized complex Gaussian vector of the given length.
Vector random_unit_vector(std::size_t dim, std::uint64_t seed);

void check_dimension_limit(std::size_t total_dim, std::size_t limit = kMaxTotalDim);

}  // namespace aen
