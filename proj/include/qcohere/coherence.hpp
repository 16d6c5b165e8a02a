#pragma once

#include <optional>
#include <vector>

#include "qcohere/qcore.hpp"

namespace qcohere {

struct CoherenceTerm {
  std::size_t j = 0;
  std::size_t k = 0;
  Complex value;
};

/// Off-diagonal elements <j|rho|k> (j != k, row-major order) and the
/// diagonal statistics p_j of rho relative to a basis.
struct CoherenceProfile {
  std::size_t dim = 0;
  std::vector<CoherenceTerm> pairs;
  std::vector<double> diagonal;

  Complex term(std::size_t j, std::size_t k) const;
  double max_modulus() const noexcept;
};

CoherenceProfile coherence_profile(const DensityMatrix& rho, const BasisObservable& basis);

/// C_HS = sum_{j != k} |<j|rho|k>|^2.
double hilbert_schmidt_coherence(const CoherenceProfile& profile);

struct CoherentBasis {
  BasisObservable basis;
  /// Largest coherence modulus of rho in `basis`.
  double eps_out = 0.0;
  /// Levels that were mixed by the two-level rotation; equal when the
  /// computational basis already exhibits coherence.
  std::size_t j = 0;
  std::size_t k = 0;
  bool rotated = false;
};

/// Basis in which rho has a coherence term of modulus eps_out > 0, or
/// nullopt when rho equals I/N entrywise within eps.
///
/// The computational basis is returned whenever it already carries an
/// off-diagonal element above eps. Otherwise rho is diagonal up to eps and
/// the two levels with the largest population gap (lowest pair on ties) are
/// mixed by a Hadamard rotation, producing the coherence (p_j - p_k)/2.
std::optional<CoherentBasis> find_coherent_basis(const DensityMatrix& rho, double eps = 1e-10);

/// Frobenius norm of [G, rho]. Coherences inside a degenerate eigenspace of G
/// do not contribute.
double commutator_norm(const DensityMatrix& rho, const BasisObservable& observable);

}  // namespace qcohere
