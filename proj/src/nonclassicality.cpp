#include "qcohere/nonclassicality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qcohere {

namespace {

void check_pair(std::size_t dim, std::size_t j, std::size_t k) {
  if (j >= dim || k >= dim) {
    std::ostringstream os;
    os << "levels (" << j << ", " << k << ") outside dimension " << dim;
    fail(ErrorCode::IndexOutOfRange, os.str());
  }
  if (j == k) fail(ErrorCode::EqualIndices, "two-level subspace needs distinct levels");
}

double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  if (phi >= two_pi) phi = 0.0;
  return phi;
}

struct Outcome {
  int y = 0;
  int z = 0;
  double value = 0.0;
};

// Lexicographically first among equally negative outcomes.
Outcome most_negative(const JointDistribution& dist) {
  Outcome best{kOutcomes[0][0], kOutcomes[0][1], dist.values[0]};
  for (std::size_t i = 1; i < kOutcomes.size(); ++i) {
    if (dist.values[i] < best.value) best = {kOutcomes[i][0], kOutcomes[i][1], dist.values[i]};
  }
  return best;
}

GammaTriple schedule(double t) { return {t, t, std::sqrt(std::max(0.0, 1.0 - 2.0 * t * t))}; }

}  // namespace

PauliOperators pauli_operators(std::size_t dim, std::size_t j, std::size_t k, double phi) {
  check_pair(dim, j, k);
  const auto n = static_cast<Eigen::Index>(dim);
  const auto a = static_cast<Eigen::Index>(j);
  const auto b = static_cast<Eigen::Index>(k);
  const Complex e = std::polar(1.0, phi);
  const Complex i(0.0, 1.0);

  PauliOperators ops{CMatrix::Zero(n, n), CMatrix::Zero(n, n), CMatrix::Zero(n, n)};
  ops.z(a, a) = 1.0;
  ops.z(b, b) = -1.0;
  ops.phi(a, b) = e;
  ops.phi(b, a) = std::conj(e);
  ops.perp(a, b) = i * e;
  ops.perp(b, a) = -i * std::conj(e);
  return ops;
}

PauliSubspace pauli_subspace(const DensityMatrix& rho, const BasisObservable& basis,
                             std::size_t j, std::size_t k) {
  require_same_dim(rho.dim(), basis.dim(), "state vs basis");
  check_pair(rho.dim(), j, k);
  const CMatrix m = basis.to_basis(rho.matrix());

  // <sigma_phi> = 2|rho_jk| cos(phi - arg rho_jk), so phi = arg rho_jk.
  const double phi = wrap_phase(std::arg(m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k))));
  const PauliOperators ops = pauli_operators(rho.dim(), j, k, phi);

  PauliSubspace s;
  s.j = j;
  s.k = k;
  s.phi = phi;
  s.exp_z = (m * ops.z).trace().real();
  s.exp_phi = (m * ops.phi).trace().real();
  s.exp_perp = (m * ops.perp).trace().real();
  return s;
}

void validate_gamma(const GammaTriple& gamma) {
  if (!std::isfinite(gamma.y) || !std::isfinite(gamma.z) || !std::isfinite(gamma.yz)) {
    fail(ErrorCode::InvalidGamma, "gamma components must be finite");
  }
  if (gamma.y == 0.0 || gamma.z == 0.0) {
    fail(ErrorCode::ZeroGammaDenominator, "gamma_y and gamma_z must be nonzero");
  }
  const double norm2 = gamma.y * gamma.y + gamma.z * gamma.z + gamma.yz * gamma.yz;
  if (norm2 > 1.0 + 1e-12) {
    std::ostringstream os;
    os << "gamma_y^2 + gamma_z^2 + gamma_yz^2 = " << norm2 << " exceeds 1";
    fail(ErrorCode::InvalidGamma, os.str());
  }
}

double JointDistribution::at(int y, int z) const {
  if ((y != 1 && y != -1) || (z != 1 && z != -1)) {
    fail(ErrorCode::InvalidArgument, "y and z must be +1 or -1");
  }
  return values[static_cast<std::size_t>((y + 1) + (z + 1) / 2)];
}

double JointDistribution::sum() const noexcept {
  return values[0] + values[1] + values[2] + values[3];
}

JointDistribution joint_distribution(const PauliSubspace& subspace, const GammaTriple& gamma) {
  validate_gamma(gamma);
  const double ratio = gamma.yz / (gamma.y * gamma.z);
  JointDistribution dist;
  dist.gamma = gamma;
  dist.subspace = subspace;
  for (std::size_t i = 0; i < kOutcomes.size(); ++i) {
    const double y = kOutcomes[i][0];
    const double z = kOutcomes[i][1];
    dist.values[i] = 0.25 * (1.0 + z * subspace.exp_z + y * subspace.exp_perp +
                             y * z * ratio * subspace.exp_phi);
  }
  return dist;
}

WitnessCertificate witness_search(const DensityMatrix& rho, const BasisObservable& basis,
                                  const WitnessOptions& options) {
  require_same_dim(rho.dim(), basis.dim(), "state vs basis");
  if (!(options.tol_witness > 0.0)) fail(ErrorCode::InvalidArgument, "tol_witness must be positive");
  if (!(options.gamma_floor > 0.0) || options.gamma_floor >= 0.5) {
    fail(ErrorCode::InvalidArgument, "gamma_floor must lie in (0, 0.5)");
  }
  const std::size_t n = rho.dim();
  if (n < 2) return ClassicalVerdict{0.0};

  const CMatrix m = basis.to_basis(rho.matrix());
  std::size_t best_j = 0, best_k = 1;
  double best = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double modulus = std::abs(m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)));
      if (modulus > best) {
        best = modulus;
        best_j = j;
        best_k = k;
      }
    }
  }

  if (best > options.tol_witness) {
    const PauliSubspace sub = pauli_subspace(rho, basis, best_j, best_k);
    double t = std::max(options.gamma_floor, std::min(0.5, sub.exp_phi / 4.0));

    if (options.refine) {
      auto objective = [&](double x) { return most_negative(joint_distribution(sub, schedule(x))).value; };
      const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
      double lo = options.gamma_floor, hi = t;
      double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
      double f1 = objective(x1), f2 = objective(x2);
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        if (f1 <= f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - inv_phi * (hi - lo);
          f1 = objective(x1);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + inv_phi * (hi - lo);
          f2 = objective(x2);
        }
      }
      // Keep whichever of the bracket ends and the schedule value is lowest.
      for (double candidate : {lo, hi, t}) {
        if (objective(candidate) < objective(t)) t = candidate;
      }
    }

    const GammaTriple gamma = schedule(t);
    const Outcome o = most_negative(joint_distribution(sub, gamma));
    if (o.value < 0.0) return NegativityCertificate{sub, gamma, o.y, o.z, o.value};
  }

  double min_p = 0.25;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const double exp_z = m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)).real() -
                           m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
      min_p = std::min(min_p, 0.25 * (1.0 - std::abs(exp_z)));
    }
  }
  return ClassicalVerdict{min_p};
}

}  // namespace qcohere
