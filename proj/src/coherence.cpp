#include "qcohere/coherence.hpp"

#include <cmath>

namespace qcohere {

Complex CoherenceProfile::term(std::size_t j, std::size_t k) const {
  if (j >= dim || k >= dim) fail(ErrorCode::IndexOutOfRange, "coherence term index");
  if (j == k) fail(ErrorCode::EqualIndices, "coherence terms are off-diagonal");
  // Row-major over j != k: row j holds dim - 1 entries.
  const std::size_t offset = j * (dim - 1) + (k < j ? k : k - 1);
  return pairs[offset].value;
}

double CoherenceProfile::max_modulus() const noexcept {
  double best = 0.0;
  for (const auto& p : pairs) best = std::max(best, std::abs(p.value));
  return best;
}

CoherenceProfile coherence_profile(const DensityMatrix& rho, const BasisObservable& basis) {
  require_same_dim(rho.dim(), basis.dim(), "state vs basis");
  const CMatrix m = basis.to_basis(rho.matrix());
  CoherenceProfile profile;
  profile.dim = rho.dim();
  profile.diagonal.resize(profile.dim);
  profile.pairs.reserve(profile.dim * (profile.dim - 1));
  for (std::size_t j = 0; j < profile.dim; ++j) {
    const auto row = static_cast<Eigen::Index>(j);
    profile.diagonal[j] = m(row, row).real();
    for (std::size_t k = 0; k < profile.dim; ++k) {
      if (k == j) continue;
      profile.pairs.push_back({j, k, m(row, static_cast<Eigen::Index>(k))});
    }
  }
  return profile;
}

double hilbert_schmidt_coherence(const CoherenceProfile& profile) {
  double sum = 0.0;
  for (const auto& p : profile.pairs) sum += std::norm(p.value);
  return sum;
}

std::optional<CoherentBasis> find_coherent_basis(const DensityMatrix& rho, double eps) {
  if (!(eps > 0.0)) fail(ErrorCode::InvalidArgument, "eps must be positive");
  const std::size_t n = rho.dim();
  const CMatrix& m = rho.matrix();
  const auto dim = static_cast<Eigen::Index>(n);

  const CMatrix mixed = CMatrix::Identity(dim, dim) / static_cast<double>(n);
  if ((m - mixed).cwiseAbs().maxCoeff() <= eps) return std::nullopt;

  const BasisObservable computational = BasisObservable::computational(n);
  const CoherenceProfile profile = coherence_profile(rho, computational);
  if (profile.max_modulus() > eps) {
    return CoherentBasis{computational, profile.max_modulus(), 0, 0, false};
  }

  // Near-diagonal and not I/N, so some population gap exceeds eps.
  std::size_t best_j = 0, best_k = 1;
  double best_gap = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double gap = std::abs(profile.diagonal[j] - profile.diagonal[k]);
      if (gap > best_gap) {
        best_gap = gap;
        best_j = j;
        best_k = k;
      }
    }
  }

  CMatrix rotation = CMatrix::Identity(dim, dim);
  const double h = 1.0 / std::sqrt(2.0);
  const auto a = static_cast<Eigen::Index>(best_j);
  const auto b = static_cast<Eigen::Index>(best_k);
  rotation(a, a) = h;
  rotation(b, a) = h;
  rotation(a, b) = h;
  rotation(b, b) = -h;

  BasisObservable rotated = BasisObservable::make(rotation, computational.eigenvalues());
  const double eps_out = coherence_profile(rho, rotated).max_modulus();
  return CoherentBasis{std::move(rotated), eps_out, best_j, best_k, true};
}

double commutator_norm(const DensityMatrix& rho, const BasisObservable& observable) {
  require_same_dim(rho.dim(), observable.dim(), "state vs observable");
  const CMatrix g = observable.generator_matrix();
  return (g * rho.matrix() - rho.matrix() * g).norm();
}

}  // namespace qcohere
