#include "qcohere/phase.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

namespace qcohere {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_level(std::size_t dim, std::size_t j) {
  if (j >= dim) {
    std::ostringstream os;
    os << "level " << j << " outside dimension " << dim;
    fail(ErrorCode::IndexOutOfRange, os.str());
  }
}

}  // namespace

CVector phase_state(std::span<const double> phases) {
  CVector ket(static_cast<Eigen::Index>(phases.size()));
  for (std::size_t j = 0; j < phases.size(); ++j) {
    ket(static_cast<Eigen::Index>(j)) = std::polar(1.0, phases[j]);
  }
  return ket;
}

MultiPhaseDistribution::MultiPhaseDistribution(CMatrix coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.rows() != coeffs_.cols() || coeffs_.rows() == 0) {
    fail(ErrorCode::NonSquare, "phase distribution coefficients must be square");
  }
  coeffs_.diagonal().setZero();
}

Complex MultiPhaseDistribution::coefficient(std::size_t j, std::size_t k) const {
  check_level(dim(), j);
  check_level(dim(), k);
  return coeffs_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
}

double MultiPhaseDistribution::operator()(std::span<const double> phases) const {
  require_same_dim(dim(), phases.size(), "phase vector length vs dimension");
  // Pair (j, k) with (k, j): each contributes 2 Re[e^{i(phi_k - phi_j)} c_jk].
  double value = 1.0;
  const auto n = coeffs_.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const Complex w = std::polar(1.0, phases[static_cast<std::size_t>(k)] -
                                            phases[static_cast<std::size_t>(j)]);
      value += 2.0 * (w * coeffs_(j, k)).real();
    }
  }
  return value;
}

MultiPhaseDistribution multi_phase_distribution(const DensityMatrix& rho,
                                                const BasisObservable& basis) {
  require_same_dim(rho.dim(), basis.dim(), "state vs basis");
  return MultiPhaseDistribution(basis.to_basis(rho.matrix()));
}

Complex moment(const MultiPhaseDistribution& dist, std::size_t j, std::size_t k) {
  check_level(dist.dim(), j);
  check_level(dist.dim(), k);
  if (j == k) fail(ErrorCode::EqualIndices, "moment needs distinct levels");
  // Only the e^{i(phi_k - phi_j)} term of P survives against e^{i(phi_j - phi_k)}.
  return dist.coefficient(j, k);
}

double renyi_integral(const MultiPhaseDistribution& dist) {
  // Pattern k = j, m = l contributes (sum_j p_j)^2 = 1; pattern k = l, m = j
  // with j != k contributes c_jk c_kj = |c_jk|^2.
  const CMatrix& c = dist.coefficients();
  double cross = 0.0;
  for (Eigen::Index j = 0; j < c.rows(); ++j) {
    for (Eigen::Index k = 0; k < c.cols(); ++k) {
      if (j != k) cross += (c(j, k) * c(k, j)).real();
    }
  }
  return 1.0 + cross;
}

double sampled_renyi_integral(const DensityMatrix& rho, const BasisObservable& basis,
                              std::size_t samples, std::uint64_t seed, std::size_t workers) {
  require_same_dim(rho.dim(), basis.dim(), "state vs basis");
  if (samples == 0) fail(ErrorCode::InvalidArgument, "sample count must be positive");
  if (workers == 0) workers = 1;
  workers = std::min(workers, samples);

  const CMatrix m = basis.to_basis(rho.matrix());
  const std::size_t n = rho.dim();
  std::vector<double> partial(workers, 0.0);

  auto run = [&](std::size_t w) {
    const std::size_t begin = samples * w / workers;
    const std::size_t end = samples * (w + 1) / workers;
    std::mt19937_64 engine(seed + w);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<double> phases(n);
    double acc = 0.0;
    for (std::size_t s = begin; s < end; ++s) {
      for (auto& p : phases) p = angle(engine);
      const CVector ket = phase_state(phases);
      const double p = ket.dot(m * ket).real();  // <phi|rho|phi>
      acc += p * p;
    }
    partial[w] = acc;
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  double total = 0.0;
  for (double p : partial) total += p;
  return total / static_cast<double>(samples);
}

CovariancePair covariance_check(const DensityMatrix& rho, const BasisObservable& basis,
                                std::size_t j, double lambda, std::span<const double> phases) {
  require_same_dim(rho.dim(), basis.dim(), "state vs basis");
  check_level(rho.dim(), j);
  require_same_dim(rho.dim(), phases.size(), "phase vector length vs dimension");

  std::vector<double> indicator(rho.dim(), 0.0);
  indicator[j] = 1.0;
  const UnitarySignal shift{basis.with_eigenvalues(indicator), lambda};
  const DensityMatrix shifted = evolve(rho, shift);

  std::vector<double> moved(phases.begin(), phases.end());
  moved[j] += lambda;

  return {multi_phase_distribution(shifted, basis)(phases),
          multi_phase_distribution(rho, basis)(moved)};
}

SinglePhaseDistribution::SinglePhaseDistribution(std::vector<Complex> gammas)
    : gammas_(std::move(gammas)) {
  if (gammas_.size() % 2 == 0) {
    fail(ErrorCode::InvalidArgument, "coherence function needs 2N - 1 entries");
  }
}

Complex SinglePhaseDistribution::gamma(long tau) const {
  if (tau < -max_tau() || tau > max_tau()) {
    std::ostringstream os;
    os << "tau " << tau << " outside [-" << max_tau() << ", " << max_tau() << "]";
    fail(ErrorCode::TauOutOfRange, os.str());
  }
  return gammas_[static_cast<std::size_t>(tau + max_tau())];
}

double SinglePhaseDistribution::operator()(double phi) const {
  Complex value = 0.0;
  for (long tau = -max_tau(); tau <= max_tau(); ++tau) {
    value += gamma(tau) * std::polar(1.0, -static_cast<double>(tau) * phi);
  }
  return value.real();
}

double SinglePhaseDistribution::integral_p2() const {
  double sum = 0.0;
  for (const Complex& g : gammas_) sum += std::norm(g);
  return kTwoPi * sum;
}

SinglePhaseDistribution single_phase_distribution(const DensityMatrix& rho,
                                                  const BasisObservable& basis) {
  require_same_dim(rho.dim(), basis.dim(), "state vs basis");
  const CMatrix m = basis.to_basis(rho.matrix());
  const auto n = static_cast<long>(rho.dim());
  std::vector<Complex> gammas(static_cast<std::size_t>(2 * n - 1));
  for (long tau = -(n - 1); tau <= n - 1; ++tau) {
    Complex sum = 0.0;
    for (long j = 0; j < n; ++j) {
      const long row = j + tau;
      if (row < 0 || row >= n) continue;
      sum += m(row, j);
    }
    gammas[static_cast<std::size_t>(tau + n - 1)] = sum / kTwoPi;
  }
  return SinglePhaseDistribution(std::move(gammas));
}

CMatrix susskind_glogower(std::size_t dim) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  const auto n = static_cast<Eigen::Index>(dim);
  CMatrix e = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j + 1 < n; ++j) e(j, j + 1) = 1.0;
  return e;
}

Complex susskind_glogower_moment(const DensityMatrix& rho, const BasisObservable& basis,
                                 long tau) {
  require_same_dim(rho.dim(), basis.dim(), "state vs basis");
  const auto n = static_cast<long>(rho.dim());
  if (tau <= -n || tau >= n) {
    std::ostringstream os;
    os << "tau " << tau << " outside [-" << n - 1 << ", " << n - 1 << "]";
    fail(ErrorCode::TauOutOfRange, os.str());
  }
  const CMatrix e = susskind_glogower(rho.dim());
  const CMatrix step = tau >= 0 ? e : CMatrix(e.adjoint());
  CMatrix power = CMatrix::Identity(n, n);
  for (long s = 0; s < std::abs(tau); ++s) power = power * step;
  return (basis.to_basis(rho.matrix()) * power).trace() / kTwoPi;
}

}  // namespace qcohere
