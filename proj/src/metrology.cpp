#include "qcohere/metrology.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace qcohere {

namespace {

constexpr double kCompleteness = 1e-9;
constexpr double kIdempotency = 1e-9;
constexpr double kDenominatorFloor = 1e-12;

CMatrix rotate(const CMatrix& rho, const UnitarySignal& signal) {
  const CMatrix u = signal.unitary();
  return u * rho * u.adjoint();
}

std::vector<double> outcome_probabilities(const CMatrix& rho, const std::vector<CMatrix>& outcomes) {
  std::vector<double> p;
  p.reserve(outcomes.size());
  for (const CMatrix& d : outcomes) p.push_back((d * rho).trace().real());
  return p;
}

}  // namespace

Povm Povm::make(std::vector<CMatrix> outcomes, const Tolerances& tol) {
  if (outcomes.empty()) fail(ErrorCode::InvalidPovm, "POVM needs at least one outcome");
  const auto n = outcomes.front().rows();
  if (n == 0) fail(ErrorCode::InvalidPovm, "POVM elements must be non-empty");

  CMatrix total = CMatrix::Zero(n, n);
  for (std::size_t mu = 0; mu < outcomes.size(); ++mu) {
    const CMatrix& d = outcomes[mu];
    if (d.rows() != n || d.cols() != n) {
      fail(ErrorCode::DimensionMismatch, "POVM elements must share one square dimension");
    }
    const double herm = (d - d.adjoint()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
    if (herm > tol.hermitian || solver.eigenvalues().minCoeff() < -tol.psd) {
      std::ostringstream os;
      os << "element " << mu << " is not positive semidefinite (min eigenvalue "
         << solver.eigenvalues().minCoeff() << ", hermiticity error " << herm << ")";
      fail(ErrorCode::InvalidPovm, os.str());
    }
    total += d;
  }
  const double completeness = (total - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (completeness > kCompleteness) {
    std::ostringstream os;
    os << "elements sum to identity only within " << completeness;
    fail(ErrorCode::InvalidPovm, os.str());
  }

  std::optional<double> eta;
  bool consistent = true;
  for (const CMatrix& d : outcomes) {
    const double weight = d.trace().real();
    if (d.norm() <= kIdempotency) continue;
    const CMatrix square = d * d;
    const double candidate = square.trace().real() / weight;
    if ((square - candidate * d).norm() > kIdempotency) {
      consistent = false;
      break;
    }
    if (!eta) {
      eta = candidate;
    } else if (std::abs(*eta - candidate) > kIdempotency) {
      consistent = false;
      break;
    }
  }
  if (!consistent) eta.reset();
  return Povm(static_cast<std::size_t>(n), std::move(outcomes), eta);
}

Povm Povm::projective(const BasisObservable& basis) {
  std::vector<CMatrix> outcomes;
  outcomes.reserve(basis.dim());
  for (Eigen::Index m = 0; m < basis.basis().cols(); ++m) {
    const CVector v = basis.basis().col(m);
    outcomes.push_back(v * v.adjoint());
  }
  return Povm(basis.dim(), std::move(outcomes), 1.0);
}

Povm Povm::phase(std::size_t dim) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  CMatrix kets(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    const double theta = static_cast<double>(2 * m + 1) * std::numbers::pi / static_cast<double>(dim);
    for (Eigen::Index j = 0; j < n; ++j) {
      kets(j, m) = std::polar(scale, static_cast<double>(j) * theta);
    }
  }
  std::vector<double> labels(dim);
  for (std::size_t m = 0; m < dim; ++m) labels[m] = static_cast<double>(m);
  return projective(BasisObservable::make(kets, std::move(labels)));
}

std::vector<double> Povm::probabilities(const DensityMatrix& rho) const {
  require_same_dim(rho.dim(), dim_, "state vs POVM");
  return outcome_probabilities(rho.matrix(), outcomes_);
}

ResolutionReport wiener_kintchine_resolution(const SinglePhaseDistribution& dist) {
  ResolutionReport report;
  report.integral_p2 = dist.integral_p2();
  if (!(report.integral_p2 > 0.0)) {
    fail(ErrorCode::DegenerateDistribution, "integral of P^2 vanishes");
  }
  double area = 0.0;
  bool flat = true;
  for (long tau = -dist.max_tau(); tau <= dist.max_tau(); ++tau) {
    const double weight = std::norm(dist.gamma(tau));
    area += weight;
    if (tau != 0 && std::sqrt(weight) > 1e-12) flat = false;
  }
  report.coherence_time = 2.0 * std::numbers::pi * area;
  report.flat = flat;
  report.delta2_lambda = 1.0 / (2.0 * std::sqrt(std::numbers::pi) * report.integral_p2);
  return report;
}

double statistical_distance(const DensityMatrix& rho, const UnitarySignal& signal,
                            const Povm& povm) {
  require_same_dim(rho.dim(), signal.generator.dim(), "state vs generator");
  require_same_dim(rho.dim(), povm.dim(), "state vs POVM");
  const std::vector<double> before = outcome_probabilities(rho.matrix(), povm.outcomes());
  const std::vector<double> after = outcome_probabilities(rotate(rho.matrix(), signal), povm.outcomes());
  double d2 = 0.0;
  for (std::size_t mu = 0; mu < before.size(); ++mu) {
    const double diff = after[mu] - before[mu];
    d2 += diff * diff;
  }
  return d2;
}

std::vector<double> statistics_derivative(const DensityMatrix& rho,
                                          const BasisObservable& generator, const Povm& povm) {
  require_same_dim(rho.dim(), generator.dim(), "state vs generator");
  require_same_dim(rho.dim(), povm.dim(), "state vs POVM");
  const CMatrix m = generator.to_basis(rho.matrix());
  const auto& g = generator.eigenvalues();
  const auto n = m.rows();
  const Complex i(0.0, 1.0);

  std::vector<double> derivative;
  derivative.reserve(povm.size());
  for (const CMatrix& element : povm.outcomes()) {
    const CMatrix d = generator.to_basis(element);
    Complex sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        if (j == k) continue;
        const double dg = g[static_cast<std::size_t>(k)] - g[static_cast<std::size_t>(j)];
        sum += dg * m(j, k) * d(k, j);
      }
    }
    derivative.push_back((i * sum).real());
  }
  return derivative;
}

double small_signal_quadratic(const DensityMatrix& rho, const BasisObservable& generator,
                              const Povm& povm) {
  double sum = 0.0;
  for (double d : statistics_derivative(rho, generator, povm)) sum += d * d;
  return sum;
}

BoundReport uncertainty_bound_check(const DensityMatrix& rho, const BasisObservable& generator,
                                    const Povm& povm) {
  if (!povm.eta()) {
    fail(ErrorCode::EtaMissing, "POVM elements do not satisfy Delta^2 = eta Delta");
  }
  const CMatrix g = generator.generator_matrix();
  require_same_dim(rho.dim(), generator.dim(), "state vs generator");
  const double mean = (rho.matrix() * g).trace().real();
  const double second = (rho.matrix() * g * g).trace().real();

  BoundReport report;
  report.lhs = 4.0 * (second - mean * mean);

  double purity = 0.0;
  for (double p : povm.probabilities(rho)) purity += p * p;
  const double denominator = *povm.eta() - purity;
  if (denominator < kDenominatorFloor) {
    report.rhs = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  report.rhs = small_signal_quadratic(rho, generator, povm) / denominator;
  report.applicable = true;
  report.satisfied = report.lhs >= report.rhs - 1e-10;
  return report;
}

DensityDistance density_matrix_distance(const DensityMatrix& rho, const UnitarySignal& signal) {
  require_same_dim(rho.dim(), signal.generator.dim(), "state vs generator");
  DensityDistance out;
  const CMatrix diff = rotate(rho.matrix(), signal) - rho.matrix();
  out.exact = (diff * diff).trace().real();

  const CMatrix m = signal.generator.to_basis(rho.matrix());
  const auto& g = signal.generator.eigenvalues();
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (j == k) continue;
      const double dg = g[static_cast<std::size_t>(k)] - g[static_cast<std::size_t>(j)];
      out.quadratic_coefficient += dg * dg * std::norm(m(j, k));
    }
  }

  const CMatrix gen = signal.generator.generator_matrix();
  const CMatrix commutator = rho.matrix() * gen - gen * rho.matrix();
  out.commutator_route = -(commutator * commutator).trace().real();
  return out;
}

}  // namespace qcohere
