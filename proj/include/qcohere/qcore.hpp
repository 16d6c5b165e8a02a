#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcohere/error.hpp"

namespace qcohere {

struct Tolerances {
  double hermitian = 1e-9;
  double trace = 1e-9;
  double unitary = 1e-9;
  double psd = 1e-8;
};

// Worst-case violation of each density-matrix invariant. Magnitudes are only
// meaningful when `square` holds.
struct ValidationReport {
  bool square = false;
  double hermiticity_violation = 0.0;
  double trace_violation = 0.0;
  double min_eigenvalue = 0.0;

  bool hermitian = false;
  bool unit_trace = false;
  bool positive = false;

  bool ok() const noexcept { return square && hermitian && unit_trace && positive; }

  // First failed invariant in check order (square, hermitian, trace, psd).
  std::optional<ErrorCode> failure() const noexcept;
};

ValidationReport validate_state(const CMatrix& entries, const Tolerances& tol = {});

/// A validated N x N density matrix. Construction goes through from_matrix,
/// which rejects anything failing validate_state. Eigenvalues below zero but
/// within tol.psd are clamped and the result renormalized.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const CMatrix& entries, const Tolerances& tol = {});

  /// I/N.
  static DensityMatrix maximally_mixed(std::size_t dim);

  /// Pure state with every entry equal to 1/N (|+><+| for N = 2).
  static DensityMatrix uniform_superposition(std::size_t dim);

  static DensityMatrix pure(const CVector& ket);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
  const CMatrix& matrix() const noexcept { return rho_; }
  Complex operator()(std::size_t j, std::size_t k) const {
    return rho_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
  }

  double purity() const;

 private:
  explicit DensityMatrix(CMatrix rho) : rho_(std::move(rho)) {}
  CMatrix rho_;
};

/// Orthonormal basis {|j>} (columns of `basis`) with a real eigenvalue per
/// basis vector, i.e. the observable G = sum_j g_j |j><j|.
class BasisObservable {
 public:
  static BasisObservable make(const CMatrix& basis, std::vector<double> eigenvalues,
                              const Tolerances& tol = {});

  /// Computational basis with eigenvalues 0, 1, ..., N-1.
  static BasisObservable computational(std::size_t dim);

  /// Computational basis with arbitrary eigenvalues.
  static BasisObservable diagonal(std::vector<double> eigenvalues);

  /// Computational basis with g_j = j for j = 1, ..., N.
  static BasisObservable linear(std::size_t dim);

  /// Normalized discrete Fourier basis; the Hadamard basis for N = 2.
  /// Eigenvalues 0, 1, ..., N-1.
  static BasisObservable hadamard(std::size_t dim);

  std::size_t dim() const noexcept { return eigenvalues_.size(); }
  const CMatrix& basis() const noexcept { return basis_; }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

  /// G = basis * diag(g) * basis^dagger.
  CMatrix generator_matrix() const;

  /// Matrix of `op` in this basis: basis^dagger * op * basis.
  CMatrix to_basis(const CMatrix& op) const;

  /// Same basis, different eigenvalues.
  BasisObservable with_eigenvalues(std::vector<double> eigenvalues) const;

 private:
  BasisObservable(CMatrix basis, std::vector<double> eigenvalues)
      : basis_(std::move(basis)), eigenvalues_(std::move(eigenvalues)) {}
  CMatrix basis_;
  std::vector<double> eigenvalues_;
};

/// U(lambda) = exp(-i lambda g) for the generator g of a BasisObservable.
struct UnitarySignal {
  BasisObservable generator;
  double lambda = 0.0;

  /// Built in the generator eigenbasis: basis * diag(e^{-i lambda g_j}) * basis^dagger.
  CMatrix unitary() const;
};

DensityMatrix evolve(const DensityMatrix& rho, const UnitarySignal& signal);

/// rho = A A^dagger / tr(A A^dagger) for a seeded complex Gaussian dim x rank A.
DensityMatrix random_state(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Haar-distributed unitary from the QR decomposition of a seeded Ginibre
/// matrix; eigenvalues 0, 1, ..., N-1.
BasisObservable random_basis(std::size_t dim, std::uint64_t seed);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace qcohere
