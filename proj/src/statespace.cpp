#include "aen/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace aen {

namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

PartyLayout concat_layouts(const PartyLayout& a, const PartyLayout& b) {
  std::vector<Party> parties = a.parties();
  std::set<std::string> used;
  for (const auto& p : parties) used.insert(p.label);
  for (Party p : b.parties()) {
    while (used.contains(p.label)) p.label += '\'';
    used.insert(p.label);
    parties.push_back(std::move(p));
  }
  return PartyLayout(std::move(parties));
}

std::vector<std::size_t> group_order(std::span<const PartyGroup> groups, std::size_t party_count) {
  std::vector<std::size_t> order;
  std::vector<bool> seen(party_count, false);
  for (const auto& g : groups) {
    if (g.members.empty()) throw InvalidArgument("merge_parties: empty group '" + g.label + "'");
    for (auto m : g.members) {
      if (m >= party_count) throw InvalidArgument("merge_parties: party index out of range");
      if (seen[m]) throw InvalidArgument("merge_parties: party listed twice");
      seen[m] = true;
      order.push_back(m);
    }
  }
  if (order.size() != party_count) {
    throw InvalidArgument("merge_parties: grouping does not cover every party");
  }
  return order;
}

PartyLayout merged_layout(const PartyLayout& layout, std::span<const PartyGroup> groups) {
  std::vector<Party> parties;
  for (const auto& g : groups) {
    parties.push_back({g.label, layout.dim_of(g.members)});
  }
  return PartyLayout(std::move(parties));
}

}  // namespace

std::string default_label(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "P" + std::to_string(index);
}

void check_dimension_limit(std::size_t total_dim, std::size_t limit) {
  if (total_dim > limit) {
    throw DimensionLimit("total dimension " + std::to_string(total_dim) +
                         " exceeds the dense limit of " + std::to_string(limit));
  }
}

// ---------------------------------------------------------------------------
// PartyLayout

PartyLayout::PartyLayout(std::vector<Party> parties) : parties_(std::move(parties)) {
  if (parties_.empty()) throw InvalidArgument("layout needs at least one party");
  std::set<std::string> labels;
  for (const auto& p : parties_) {
    if (p.dim < 1) throw InvalidArgument("party '" + p.label + "' has dimension 0");
    if (!labels.insert(p.label).second) {
      throw InvalidArgument("duplicate party label '" + p.label + "'");
    }
    if (total_dim_ > std::numeric_limits<std::size_t>::max() / p.dim) {
      throw DimensionLimit("layout dimension overflows");
    }
    total_dim_ *= p.dim;
  }
}

PartyLayout PartyLayout::from_dims(std::span<const std::size_t> dims) {
  std::vector<Party> parties;
  for (std::size_t i = 0; i < dims.size(); ++i) parties.push_back({default_label(i), dims[i]});
  return PartyLayout(std::move(parties));
}

PartyLayout PartyLayout::qubits(std::size_t count) {
  std::vector<std::size_t> dims(count, 2);
  return from_dims(dims);
}

std::vector<std::size_t> PartyLayout::dims() const {
  std::vector<std::size_t> d;
  d.reserve(parties_.size());
  for (const auto& p : parties_) d.push_back(p.dim);
  return d;
}

std::size_t PartyLayout::dim_of(std::span<const std::size_t> indices) const {
  std::size_t d = 1;
  for (auto i : indices) d *= parties_.at(i).dim;
  return d;
}

std::optional<std::size_t> PartyLayout::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < parties_.size(); ++i) {
    if (parties_[i].label == label) return i;
  }
  return std::nullopt;
}

bool PartyLayout::same_dims(const PartyLayout& other) const { return dims() == other.dims(); }

// ---------------------------------------------------------------------------
// Bipartition

Bipartition::Bipartition(std::vector<std::size_t> parties) : parties_(std::move(parties)) {
  std::sort(parties_.begin(), parties_.end());
  if (std::adjacent_find(parties_.begin(), parties_.end()) != parties_.end()) {
    throw InvalidArgument("bipartition lists a party twice");
  }
}

bool Bipartition::contains(std::size_t party) const {
  return std::binary_search(parties_.begin(), parties_.end(), party);
}

std::vector<std::size_t> Bipartition::complement(std::size_t party_count) const {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < party_count; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return rest;
}

Bipartition Bipartition::complement_cut(std::size_t party_count) const {
  return Bipartition(complement(party_count));
}

Bipartition Bipartition::canonical(std::size_t party_count) const {
  validate(party_count);
  return is_canonical() ? *this : complement_cut(party_count);
}

void Bipartition::validate(std::size_t party_count) const {
  if (parties_.empty()) throw InvalidArgument("bipartition side is empty");
  if (parties_.back() >= party_count) throw InvalidArgument("bipartition party index out of range");
  if (parties_.size() >= party_count) throw InvalidArgument("bipartition side contains every party");
}

std::string Bipartition::describe(const PartyLayout& layout) const {
  std::string out;
  for (auto i : parties_) out += layout.party(i).label;
  out += '|';
  for (auto i : complement(layout.size())) out += layout.party(i).label;
  return out;
}

// ---------------------------------------------------------------------------
// PureState / DensityMatrix

PureState::PureState(PartyLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  check_dimension_limit(layout_.total_dim(), kMaxPureDim);
  if (static_cast<std::size_t>(amplitudes_.size()) != layout_.total_dim()) {
    throw ShapeMismatch("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                        ", layout needs " + std::to_string(layout_.total_dim()));
  }
  const double norm = amplitudes_.norm();
  if (norm == 0.0) throw NormError("zero amplitude vector");
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "amplitude norm " << norm << " deviates from 1 by more than " << kNormTolerance;
    throw NormError(msg.str());
  }
  // Already-normalized input is kept bit-for-bit so file round trips are exact.
  if (std::abs(norm - 1.0) > 1e-15) amplitudes_ /= norm;
}

PureState make_pure_state(PartyLayout layout, Vector amplitudes) {
  return PureState(std::move(layout), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(PartyLayout layout, Matrix matrix, Unchecked)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  check_dimension_limit(layout_.total_dim());
  const auto n = static_cast<Eigen::Index>(layout_.total_dim());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw ShapeMismatch("density matrix shape does not match layout dimension " +
                        std::to_string(n));
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr.real() - 1.0) > 1e-12 || std::abs(tr.imag()) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace " << tr.real() << " is not 1";
    throw NormError(msg.str());
  }
}

DensityMatrix::DensityMatrix(PartyLayout layout, Matrix matrix)
    : DensityMatrix(std::move(layout), std::move(matrix), Unchecked{}) {
  if (hermiticity_error(matrix_) > kEigenClip) {
    throw NumericalError("density matrix is not Hermitian");
  }
  matrix_ = (0.5 * (matrix_ + matrix_.adjoint())).eval();
  clipped_eigenvalues(matrix_);
}

DensityMatrix::DensityMatrix(const PureState& psi)
    : DensityMatrix(psi.layout(), psi.amplitudes() * psi.amplitudes().adjoint(), Unchecked{}) {}

DensityMatrix DensityMatrix::assume_valid(PartyLayout layout, Matrix matrix) {
  matrix = (0.5 * (matrix + matrix.adjoint())).eval();
  return DensityMatrix(std::move(layout), std::move(matrix), Unchecked{});
}

RealVector DensityMatrix::eigenvalues() const { return clipped_eigenvalues(matrix_); }

// ---------------------------------------------------------------------------
// Catalog

std::optional<CatalogName> parse_catalog_name(std::string_view name) {
  for (auto c : {CatalogName::ghz, CatalogName::w, CatalogName::singlet, CatalogName::two_ghz,
                 CatalogName::three_singlets, CatalogName::zero}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(CatalogName name) {
  switch (name) {
    case CatalogName::ghz: return "ghz";
    case CatalogName::w: return "w";
    case CatalogName::singlet: return "singlet";
    case CatalogName::two_ghz: return "two_ghz";
    case CatalogName::three_singlets: return "three_singlets";
    case CatalogName::zero: return "zero";
  }
  return "?";
}

namespace {

PureState ghz_state(std::size_t k) {
  if (k < 2) throw InvalidArgument("ghz needs at least 2 parties");
  auto layout = PartyLayout::qubits(k);
  check_dimension_limit(layout.total_dim(), kMaxPureDim);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  v(0) = v(v.size() - 1) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(layout), std::move(v));
}

PureState w_state(std::size_t k) {
  if (k < 2) throw InvalidArgument("w needs at least 2 parties");
  auto layout = PartyLayout::qubits(k);
  check_dimension_limit(layout.total_dim(), kMaxPureDim);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
  const double a = 1.0 / std::sqrt(static_cast<double>(k));
  for (std::size_t j = 0; j < k; ++j) v(Eigen::Index{1} << j) = a;
  return PureState(std::move(layout), std::move(v));
}

PureState singlet_on(std::string a, std::string b) {
  Vector v(4);
  const double s = 1.0 / std::sqrt(2.0);
  v << 0.0, s, -s, 0.0;
  return PureState(PartyLayout({{std::move(a), 2}, {std::move(b), 2}}), std::move(v));
}

PureState relabel(const PureState& psi, const std::vector<std::string>& labels) {
  std::vector<Party> parties = psi.layout().parties();
  for (std::size_t i = 0; i < parties.size(); ++i) parties[i].label = labels.at(i);
  return PureState(PartyLayout(std::move(parties)), psi.amplitudes());
}

}  // namespace

PureState catalog_state(CatalogName name, const CatalogParams& params) {
  switch (name) {
    case CatalogName::ghz: return ghz_state(params.parties);
    case CatalogName::w: return w_state(params.parties);
    case CatalogName::singlet: return singlet_on("A", "B");
    case CatalogName::zero: {
      if (params.parties < 1) throw InvalidArgument("zero needs at least 1 party");
      auto layout = PartyLayout::qubits(params.parties);
      check_dimension_limit(layout.total_dim(), kMaxPureDim);
      Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.total_dim()));
      v(0) = 1.0;
      return PureState(std::move(layout), std::move(v));
    }
    case CatalogName::two_ghz: {
      // GHZ^{A1 B1 C1} ⊗ GHZ^{A2 B2 C2}
      auto g1 = relabel(ghz_state(3), {"A1", "B1", "C1"});
      auto g2 = relabel(ghz_state(3), {"A2", "B2", "C2"});
      const std::vector<PartyGroup> groups{{"A", {0, 3}}, {"B", {1, 4}}, {"C", {2, 5}}};
      return merge_parties(tensor(g1, g2), groups);
    }
    case CatalogName::three_singlets: {
      // psi-^{A1 B2} ⊗ psi-^{B1 C2} ⊗ psi-^{C1 A2} on [A1, B2, B1, C2, C1, A2]
      auto s = tensor(tensor(singlet_on("A1", "B2"), singlet_on("B1", "C2")),
                      singlet_on("C1", "A2"));
      const std::vector<PartyGroup> groups{{"A", {0, 5}}, {"B", {2, 1}}, {"C", {4, 3}}};
      return merge_parties(s, groups);
    }
  }
  throw InvalidArgument("unknown catalog state");
}

// ---------------------------------------------------------------------------
// Tensor products and party permutations

PureState tensor(const PureState& a, const PureState& b) {
  check_dimension_limit(a.dim() * b.dim(), kMaxPureDim);
  Vector v = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes()).eval();
  return PureState(concat_layouts(a.layout(), b.layout()), std::move(v));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  check_dimension_limit(a.dim() * b.dim());
  Matrix m = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
  return DensityMatrix::assume_valid(concat_layouts(a.layout(), b.layout()), std::move(m));
}

std::vector<std::size_t> permutation_index_map(std::span<const std::size_t> dims,
                                               std::span<const std::size_t> order) {
  const std::size_t k = dims.size();
  if (order.size() != k) throw InvalidArgument("permutation has the wrong length");
  std::vector<std::size_t> old_strides(k, 1);
  for (std::size_t i = k; i-- > 1;) old_strides[i - 1] = old_strides[i] * dims[i];

  std::size_t total = 1;
  std::vector<std::size_t> new_dims(k), new_strides(k);
  for (std::size_t j = 0; j < k; ++j) {
    new_dims[j] = dims[order[j]];
    new_strides[j] = old_strides[order[j]];
    total *= new_dims[j];
  }

  // Odometer over the permuted multi-index, last digit fastest.
  std::vector<std::size_t> map(total);
  std::vector<std::size_t> digit(k, 0);
  std::size_t old_index = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    map[idx] = old_index;
    for (std::size_t j = k; j-- > 0;) {
      if (++digit[j] < new_dims[j]) {
        old_index += new_strides[j];
        break;
      }
      old_index -= (new_dims[j] - 1) * new_strides[j];
      digit[j] = 0;
    }
  }
  return map;
}

Vector permute_parties(const Vector& v, std::span<const std::size_t> dims,
                       std::span<const std::size_t> order) {
  const auto map = permutation_index_map(dims, order);
  Vector out(v.size());
  for (std::size_t i = 0; i < map.size(); ++i) out(static_cast<Eigen::Index>(i)) = v(map[i]);
  return out;
}

Matrix permute_parties(const Matrix& m, std::span<const std::size_t> dims,
                       std::span<const std::size_t> order) {
  const auto map = permutation_index_map(dims, order);
  const auto n = static_cast<Eigen::Index>(map.size());
  Matrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) out(r, c) = m(map[r], map[c]);
  }
  return out;
}

PureState merge_parties(const PureState& psi, std::span<const PartyGroup> groups) {
  const auto order = group_order(groups, psi.party_count());
  auto layout = merged_layout(psi.layout(), groups);
  return PureState(std::move(layout), permute_parties(psi.amplitudes(), psi.layout().dims(), order));
}

DensityMatrix merge_parties(const DensityMatrix& rho, std::span<const PartyGroup> groups) {
  const auto order = group_order(groups, rho.layout().size());
  auto layout = merged_layout(rho.layout(), groups);
  return DensityMatrix::assume_valid(std::move(layout),
                                     permute_parties(rho.matrix(), rho.layout().dims(), order));
}

PureState copies(const PureState& psi, std::size_t n) {
  const std::size_t k = psi.party_count();
  if (n == 0) {
    std::vector<Party> parties;
    for (const auto& p : psi.layout().parties()) parties.push_back({p.label, 1});
    return PureState(PartyLayout(std::move(parties)), Vector::Ones(1));
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kMaxPureDim / psi.dim()) {
      throw DimensionLimit(std::to_string(n) + " copies exceed the dense limit of " +
                           std::to_string(kMaxPureDim));
    }
    total *= psi.dim();
  }

  Vector v = psi.amplitudes();
  for (std::size_t i = 1; i < n; ++i) v = Eigen::kroneckerProduct(v, psi.amplitudes()).eval();

  // Copy c of party p sits at position c*k + p; gather each party's copies.
  std::vector<std::size_t> dims;
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& p : psi.layout().parties()) dims.push_back(p.dim);
  }
  std::vector<std::size_t> order;
  std::vector<Party> parties;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t d = 1;
    for (std::size_t c = 0; c < n; ++c) {
      order.push_back(c * k + p);
      d *= psi.layout().party(p).dim;
    }
    parties.push_back({psi.layout().party(p).label, d});
  }
  return PureState(PartyLayout(std::move(parties)), permute_parties(v, dims, order));
}

// ---------------------------------------------------------------------------
// Reduced states and spectra

namespace {

struct SplitOrder {
  std::vector<std::size_t> order;
  std::size_t keep_dim;
  std::size_t rest_dim;
  PartyLayout kept_layout;
};

SplitOrder split_order(const PartyLayout& layout, const Bipartition& keep) {
  keep.validate(layout.size());
  std::vector<std::size_t> order = keep.parties();
  const auto rest = keep.complement(layout.size());
  order.insert(order.end(), rest.begin(), rest.end());
  std::vector<Party> kept;
  for (auto i : keep.parties()) kept.push_back(layout.party(i));
  return {std::move(order), layout.dim_of(keep.parties()), layout.dim_of(rest),
          PartyLayout(std::move(kept))};
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& keep) {
  auto split = split_order(rho.layout(), keep);
  const auto map = permutation_index_map(rho.layout().dims(), split.order);
  const auto dk = static_cast<Eigen::Index>(split.keep_dim);
  const auto dr = static_cast<Eigen::Index>(split.rest_dim);
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a) {
    for (Eigen::Index b = 0; b < dk; ++b) {
      Complex sum = 0.0;
      for (Eigen::Index j = 0; j < dr; ++j) sum += m(map[a * dr + j], map[b * dr + j]);
      out(a, b) = sum;
    }
  }
  return DensityMatrix::assume_valid(std::move(split.kept_layout), std::move(out));
}

DensityMatrix partial_trace(const PureState& psi, const Bipartition& keep) {
  auto split = split_order(psi.layout(), keep);
  const Vector w = permute_parties(psi.amplitudes(), psi.layout().dims(), split.order);
  Eigen::Map<const RowMajorMatrix> amp(w.data(), static_cast<Eigen::Index>(split.keep_dim),
                                       static_cast<Eigen::Index>(split.rest_dim));
  Matrix reduced = amp * amp.adjoint();
  return DensityMatrix::assume_valid(std::move(split.kept_layout), std::move(reduced));
}

SchmidtSpectrum schmidt_coefficients(const PureState& psi, const Bipartition& cut) {
  auto split = split_order(psi.layout(), cut);
  const Vector w = permute_parties(psi.amplitudes(), psi.layout().dims(), split.order);
  Eigen::Map<const RowMajorMatrix> amp(w.data(), static_cast<Eigen::Index>(split.keep_dim),
                                       static_cast<Eigen::Index>(split.rest_dim));
  Eigen::BDCSVD<Matrix> svd(amp);
  const RealVector& s = svd.singularValues();
  SchmidtSpectrum out;
  out.values.assign(s.data(), s.data() + s.size());
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  out.values.resize(std::min(split.keep_dim, split.rest_dim), 0.0);
  return out;
}

double hermiticity_error(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

RealVector clipped_eigenvalues(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  RealVector ev = solver.eigenvalues();
  for (auto& x : ev) {
    if (x < -kEigenClip) {
      std::ostringstream msg;
      msg << "eigenvalue " << x << " below -" << kEigenClip;
      throw NumericalError(msg.str());
    }
    if (x < 0.0) x = 0.0;
  }
  return ev;
}

// ---------------------------------------------------------------------------
// Distances

namespace {

void require_same_layout(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (!a.layout().same_dims(b.layout())) {
    throw ShapeMismatch(std::string(what) + ": layouts differ");
  }
}

struct Support {
  Matrix vectors;     // columns span the support
  RealVector values;  // matching eigenvalues > kSupportThreshold
};

Support support_of(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const RealVector& ev = solver.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kEigenClip) throw NumericalError("negative eigenvalue in fidelity input");
    if (ev(i) > kSupportThreshold) keep.push_back(i);
  }
  Support s{Matrix(m.rows(), static_cast<Eigen::Index>(keep.size())),
            RealVector(static_cast<Eigen::Index>(keep.size()))};
  for (std::size_t j = 0; j < keep.size(); ++j) {
    s.vectors.col(static_cast<Eigen::Index>(j)) = solver.eigenvectors().col(keep[j]);
    s.values(static_cast<Eigen::Index>(j)) = ev(keep[j]);
  }
  return s;
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_layout(rho, sigma, "fidelity");
  // Work on the support of the lower-rank argument, so a pure argument
  // reduces exactly to <x|other|x>.
  Support a = support_of(rho.matrix());
  Support b = support_of(sigma.matrix());
  const Matrix* other = &sigma.matrix();
  if (b.values.size() < a.values.size()) {
    std::swap(a, b);
    other = &rho.matrix();
  }
  if (a.values.size() == 0) return 0.0;
  const RealVector sqrt_vals = a.values.cwiseSqrt();
  Matrix inner = a.vectors.adjoint() * (*other) * a.vectors;
  inner = sqrt_vals.asDiagonal() * inner * sqrt_vals.asDiagonal();
  double root_sum;
  if (inner.rows() == 1) {
    root_sum = std::sqrt(std::max(0.0, inner(0, 0).real()));
  } else {
    inner = (0.5 * (inner + inner.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(inner, Eigen::EigenvaluesOnly);
    root_sum = 0.0;
    for (auto x : solver.eigenvalues()) root_sum += std::sqrt(std::max(0.0, x));
  }
  return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double f = fidelity(rho, sigma);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(f)));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_layout(rho, sigma, "trace_distance");
  const Matrix diff = rho.matrix() - sigma.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  return std::clamp(0.5 * solver.eigenvalues().cwiseAbs().sum(), 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Randomness

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Vector random_unit_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(dim));
  for (auto& a : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    a = Complex(re, im);
  }
  return v / v.norm();
}

PureState haar_random_pure(const PartyLayout& layout, std::uint64_t seed) {
  check_dimension_limit(layout.total_dim(), kMaxPureDim);
  return PureState(layout, random_unit_vector(layout.total_dim(), seed));
}

}  // namespace aen
