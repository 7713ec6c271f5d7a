#include "aen/sepopt.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

namespace aen {

// ---------------------------------------------------------------------------
// SeparableState

SeparableState::SeparableState(PartyLayout layout, std::vector<std::vector<std::size_t>> blocks,
                               std::vector<ProductTerm> terms)
    : layout_(std::move(layout)), blocks_(std::move(blocks)), terms_(std::move(terms)) {
  std::vector<bool> seen(layout_.size(), false);
  std::size_t covered = 0;
  for (const auto& block : blocks_) {
    if (block.empty()) throw InvalidArgument("separable certificate has an empty block");
    for (auto p : block) {
      if (p >= layout_.size() || seen[p]) {
        throw InvalidArgument("separable certificate blocks must partition the parties");
      }
      seen[p] = true;
      ++covered;
    }
  }
  if (covered != layout_.size()) {
    throw InvalidArgument("separable certificate blocks must partition the parties");
  }
  if (terms_.empty()) throw InvalidArgument("separable certificate needs at least one term");

  double total = 0.0;
  for (auto& term : terms_) {
    if (term.weight < 0.0) throw InvalidArgument("negative weight in separable certificate");
    if (term.factors.size() != blocks_.size()) {
      throw ShapeMismatch("product term has the wrong number of factors");
    }
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      auto& f = term.factors[j];
      if (static_cast<std::size_t>(f.size()) != layout_.dim_of(blocks_[j])) {
        throw ShapeMismatch("product factor dimension does not match its block");
      }
      const double norm = f.norm();
      if (std::abs(norm - 1.0) > kNormTolerance) throw NormError("product factor not normalized");
      f /= norm;
    }
    total += term.weight;
  }
  if (std::abs(total - 1.0) > kNormTolerance) throw NormError("certificate weights do not sum to 1");
  for (auto& term : terms_) term.weight /= total;
}

SeparableState SeparableState::all_zeros(const PartyLayout& layout) {
  std::vector<std::vector<std::size_t>> blocks;
  ProductTerm term{1.0, {}};
  for (std::size_t p = 0; p < layout.size(); ++p) {
    blocks.push_back({p});
    Vector e = Vector::Zero(static_cast<Eigen::Index>(layout.party(p).dim));
    e(0) = 1.0;
    term.factors.push_back(std::move(e));
  }
  return SeparableState(layout, std::move(blocks), {std::move(term)});
}

Vector SeparableState::term_vector(std::size_t i) const {
  const auto& term = terms_.at(i);
  Vector v = term.factors.front();
  for (std::size_t j = 1; j < term.factors.size(); ++j) {
    v = Eigen::kroneckerProduct(v, term.factors[j]).eval();
  }
  // v is ordered by concatenated blocks; move each party back to its slot.
  std::vector<std::size_t> block_order;
  for (const auto& block : blocks_) block_order.insert(block_order.end(), block.begin(), block.end());
  std::vector<std::size_t> dims, inverse(block_order.size());
  for (std::size_t pos = 0; pos < block_order.size(); ++pos) {
    dims.push_back(layout_.party(block_order[pos]).dim);
    inverse[block_order[pos]] = pos;
  }
  return permute_parties(v, dims, inverse);
}

double SeparableState::expectation(const Vector& chi) const {
  if (static_cast<std::size_t>(chi.size()) != layout_.total_dim()) {
    throw ShapeMismatch("expectation vector has the wrong dimension");
  }
  double value = 0.0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    value += terms_[i].weight * std::norm(chi.dot(term_vector(i)));
  }
  return value;
}

DensityMatrix SeparableState::density_matrix() const {
  check_dimension_limit(layout_.total_dim());
  const auto n = static_cast<Eigen::Index>(layout_.total_dim());
  Matrix rho = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Vector v = term_vector(i);
    rho.noalias() += terms_[i].weight * (v * v.adjoint());
  }
  return DensityMatrix::assume_valid(layout_, std::move(rho));
}

SeparableState sample_separable(const PartyLayout& layout, const Bipartition& cut,
                                std::size_t num_terms, std::uint64_t seed) {
  cut.validate(layout.size());
  if (num_terms < 1) throw InvalidArgument("sample_separable: need at least one term");
  const auto rest = cut.complement(layout.size());
  const std::size_t dim_t = layout.dim_of(cut.parties());
  const std::size_t dim_rest = layout.dim_of(rest);

  std::mt19937_64 rng(derive_seed(seed, 0));
  std::exponential_distribution<double> exponential(1.0);
  std::vector<ProductTerm> terms;
  double total = 0.0;
  for (std::size_t i = 0; i < num_terms; ++i) {
    ProductTerm term;
    term.weight = exponential(rng);
    total += term.weight;
    term.factors.push_back(random_unit_vector(dim_t, derive_seed(seed, 2 * i + 1)));
    term.factors.push_back(random_unit_vector(dim_rest, derive_seed(seed, 2 * i + 2)));
    terms.push_back(std::move(term));
  }
  for (auto& t : terms) t.weight /= total;
  return SeparableState(layout, {cut.parties(), rest}, std::move(terms));
}

// ---------------------------------------------------------------------------
// Alternating ascent

namespace {

struct TopEigen {
  double value;
  Vector vector;
};

TopEigen top_eigen(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h + h.adjoint()));
  if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
  const auto last = solver.eigenvalues().size() - 1;
  return {solver.eigenvalues()(last), solver.eigenvectors().col(last)};
}

// Operator reordered to (T, T̄) with row index a * dim_b + b.
class BlockOperator {
 public:
  BlockOperator(Matrix op, Eigen::Index dim_a, Eigen::Index dim_b)
      : op_(std::move(op)), dim_a_(dim_a), dim_b_(dim_b) {}

  // <., b| O |., b>
  Matrix contract_b(const Vector& b) const {
    Matrix out(dim_a_, dim_a_);
    for (Eigen::Index a = 0; a < dim_a_; ++a) {
      for (Eigen::Index a2 = 0; a2 < dim_a_; ++a2) {
        out(a, a2) = b.dot(op_.block(a * dim_b_, a2 * dim_b_, dim_b_, dim_b_) * b);
      }
    }
    return out;
  }

  // <a, .| O |a, .>
  Matrix contract_a(const Vector& a) const {
    Matrix out = Matrix::Zero(dim_b_, dim_b_);
    for (Eigen::Index i = 0; i < dim_a_; ++i) {
      for (Eigen::Index j = 0; j < dim_a_; ++j) {
        const Complex w = std::conj(a(i)) * a(j);
        if (w != Complex(0.0)) out += w * op_.block(i * dim_b_, j * dim_b_, dim_b_, dim_b_);
      }
    }
    return out;
  }

 private:
  Matrix op_;
  Eigen::Index dim_a_;
  Eigen::Index dim_b_;
};

}  // namespace

OverlapResult max_product_overlap(const PartyLayout& layout, const Matrix& op,
                                  const Bipartition& cut, const OverlapOptions& options) {
  cut.validate(layout.size());
  const auto n = static_cast<Eigen::Index>(layout.total_dim());
  if (op.rows() != n || op.cols() != n) throw ShapeMismatch("operator does not match the layout");
  if (hermiticity_error(op) > kEigenClip) throw InvalidArgument("operator is not Hermitian");
  if (options.restarts < 1) throw InvalidArgument("need at least one restart");

  std::vector<std::size_t> order = cut.parties();
  const auto rest = cut.complement(layout.size());
  order.insert(order.end(), rest.begin(), rest.end());
  const auto dim_a = static_cast<Eigen::Index>(layout.dim_of(cut.parties()));
  const auto dim_b = static_cast<Eigen::Index>(layout.dim_of(rest));
  const BlockOperator block(permute_parties(op, layout.dims(), order), dim_a, dim_b);

  OverlapResult result;
  result.value = -std::numeric_limits<double>::infinity();
  result.converged = false;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    Vector b = random_unit_vector(static_cast<std::size_t>(dim_b), derive_seed(options.seed, r));
    Vector a;
    std::vector<double> trace;
    double value = -std::numeric_limits<double>::infinity();
    bool converged = false;
    std::size_t iters = 0;
    while (iters < options.max_iters) {
      ++iters;
      const double before = value;
      auto top_a = top_eigen(block.contract_b(b));
      a = std::move(top_a.vector);
      trace.push_back(top_a.value);
      auto top_b = top_eigen(block.contract_a(a));
      b = std::move(top_b.vector);
      trace.push_back(top_b.value);
      value = top_b.value;
      if (std::abs(value - before) < options.tol) {
        converged = true;
        break;
      }
    }
    result.iterations_per_restart.push_back(iters);
    if (value > result.value) {
      result.value = value;
      result.argmax = {a, b};
      result.best_trace = std::move(trace);
      result.converged = converged;
    }
  }
  result.restarts_used = options.restarts;
  return result;
}

}  // namespace aen
