#include "qcohere/qcore.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace qcohere {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::InvalidBasis: return "InvalidBasis";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::InvalidGamma: return "InvalidGamma";
    case ErrorCode::ZeroGammaDenominator: return "ZeroGammaDenominator";
    case ErrorCode::TauOutOfRange: return "TauOutOfRange";
    case ErrorCode::InvalidPovm: return "InvalidPovm";
    case ErrorCode::EtaMissing: return "EtaMissing";
    case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << " (" << a << " vs " << b << ")";
    fail(ErrorCode::DimensionMismatch, os.str());
  }
}

std::optional<ErrorCode> ValidationReport::failure() const noexcept {
  if (!square) return ErrorCode::NonSquare;
  if (!hermitian) return ErrorCode::NonHermitian;
  if (!unit_trace) return ErrorCode::TraceNotOne;
  if (!positive) return ErrorCode::NotPositiveSemidefinite;
  return std::nullopt;
}

ValidationReport validate_state(const CMatrix& entries, const Tolerances& tol) {
  ValidationReport report;
  report.square = entries.rows() == entries.cols() && entries.rows() > 0;
  if (!report.square) return report;

  const CMatrix adjoint = entries.adjoint();
  report.hermiticity_violation = (entries - adjoint).cwiseAbs().maxCoeff();
  report.trace_violation = std::abs(entries.trace() - Complex(1.0, 0.0));

  const CMatrix hermitian_part = 0.5 * (entries + adjoint);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();

  report.hermitian = report.hermiticity_violation <= tol.hermitian;
  report.unit_trace = report.trace_violation <= tol.trace;
  report.positive = report.min_eigenvalue >= -tol.psd;
  return report;
}

DensityMatrix DensityMatrix::from_matrix(const CMatrix& entries, const Tolerances& tol) {
  const ValidationReport report = validate_state(entries, tol);
  if (auto code = report.failure()) {
    std::ostringstream os;
    switch (*code) {
      case ErrorCode::NonSquare:
        os << "density matrix must be a non-empty square matrix, got " << entries.rows() << "x"
           << entries.cols();
        break;
      case ErrorCode::NonHermitian:
        os << "max |rho_jk - conj(rho_kj)| = " << report.hermiticity_violation << " exceeds "
           << tol.hermitian;
        break;
      case ErrorCode::TraceNotOne:
        os << "|tr(rho) - 1| = " << report.trace_violation << " exceeds " << tol.trace;
        break;
      default:
        os << "min eigenvalue " << report.min_eigenvalue << " below -" << tol.psd;
        break;
    }
    fail(*code, os.str());
  }

  CMatrix rho = 0.5 * (entries + entries.adjoint());
  if (report.min_eigenvalue < 0.0) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho);
    const Eigen::VectorXd clamped = solver.eigenvalues().cwiseMax(0.0);
    rho = solver.eigenvectors() * clamped.cast<Complex>().asDiagonal() *
          solver.eigenvectors().adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
  }
  return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(CMatrix::Identity(n, n) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::uniform_superposition(std::size_t dim) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(CMatrix::Constant(n, n, Complex(1.0 / static_cast<double>(dim), 0.0)));
}

DensityMatrix DensityMatrix::pure(const CVector& ket) {
  const double norm = ket.norm();
  if (ket.size() == 0 || norm == 0.0) fail(ErrorCode::InvalidState, "pure state needs a nonzero ket");
  const CVector unit = ket / norm;
  return DensityMatrix(unit * unit.adjoint());
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

BasisObservable BasisObservable::make(const CMatrix& basis, std::vector<double> eigenvalues,
                                      const Tolerances& tol) {
  if (basis.rows() != basis.cols() || basis.rows() == 0) {
    fail(ErrorCode::NonSquare, "basis must be a non-empty square matrix");
  }
  require_same_dim(static_cast<std::size_t>(basis.rows()), eigenvalues.size(),
                   "basis size vs eigenvalue count");
  const auto n = basis.rows();
  const double err = (basis.adjoint() * basis - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (err > tol.unitary) {
    std::ostringstream os;
    os << "basis columns not orthonormal, max |B^dagger B - I| = " << err;
    fail(ErrorCode::InvalidBasis, os.str());
  }
  for (double g : eigenvalues) {
    if (!std::isfinite(g)) fail(ErrorCode::InvalidArgument, "eigenvalues must be finite");
  }
  return BasisObservable(basis, std::move(eigenvalues));
}

static std::vector<double> index_values(std::size_t dim, double offset) {
  std::vector<double> g(dim);
  for (std::size_t j = 0; j < dim; ++j) g[j] = static_cast<double>(j) + offset;
  return g;
}

BasisObservable BasisObservable::computational(std::size_t dim) {
  return diagonal(index_values(dim, 0.0));
}

BasisObservable BasisObservable::diagonal(std::vector<double> eigenvalues) {
  const auto n = static_cast<Eigen::Index>(eigenvalues.size());
  if (n == 0) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  return make(CMatrix::Identity(n, n), std::move(eigenvalues));
}

BasisObservable BasisObservable::linear(std::size_t dim) {
  return diagonal(index_values(dim, 1.0));
}

BasisObservable BasisObservable::hadamard(std::size_t dim) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  CMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto m = static_cast<double>((j * k) % n);
      f(j, k) = std::polar(scale, 2.0 * std::numbers::pi * m / static_cast<double>(dim));
    }
  }
  if (dim == 2) f(1, 1) = Complex(-scale, 0.0);  // exact -1, not polar(1, pi)
  return make(f, index_values(dim, 0.0));
}

CMatrix BasisObservable::generator_matrix() const {
  Eigen::VectorXd g = Eigen::Map<const Eigen::VectorXd>(eigenvalues_.data(),
                                                        static_cast<Eigen::Index>(dim()));
  return basis_ * g.cast<Complex>().asDiagonal() * basis_.adjoint();
}

CMatrix BasisObservable::to_basis(const CMatrix& op) const {
  return basis_.adjoint() * op * basis_;
}

BasisObservable BasisObservable::with_eigenvalues(std::vector<double> eigenvalues) const {
  require_same_dim(dim(), eigenvalues.size(), "basis size vs eigenvalue count");
  return BasisObservable(basis_, std::move(eigenvalues));
}

CMatrix UnitarySignal::unitary() const {
  const auto n = static_cast<Eigen::Index>(generator.dim());
  CVector phases(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    phases(j) = std::polar(1.0, -lambda * generator.eigenvalues()[static_cast<std::size_t>(j)]);
  }
  return generator.basis() * phases.asDiagonal() * generator.basis().adjoint();
}

DensityMatrix evolve(const DensityMatrix& rho, const UnitarySignal& signal) {
  require_same_dim(rho.dim(), signal.generator.dim(), "state vs generator");
  const CMatrix u = signal.unitary();
  return DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
}

static CMatrix ginibre(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      const double re = normal(engine);
      const double im = normal(engine);
      a(r, c) = Complex(re, im);
    }
  }
  return a;
}

DensityMatrix random_state(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  if (rank < 1 || rank > dim) {
    std::ostringstream os;
    os << "rank " << rank << " outside [1, " << dim << "]";
    fail(ErrorCode::InvalidRank, os.str());
  }
  const CMatrix a = ginibre(dim, rank, seed);
  CMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(rho);
}

BasisObservable random_basis(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  const CMatrix a = ginibre(dim, dim, seed);
  Eigen::HouseholderQR<CMatrix> qr(a);
  const auto n = static_cast<Eigen::Index>(dim);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return BasisObservable::make(q, index_values(dim, 0.0));
}

}  // namespace qcohere
