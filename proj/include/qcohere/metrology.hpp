#pragma once

#include <optional>
#include <vector>

#include "qcohere/phase.hpp"
#include "qcohere/qcore.hpp"

namespace qcohere {

/// Finite POVM {Delta(mu)}. When every nonzero element satisfies
/// Delta^2 = eta Delta for one common eta, that eta is recorded.
class Povm {
 public:
  static Povm make(std::vector<CMatrix> outcomes, const Tolerances& tol = {});

  /// Rank-1 projectors onto the columns of `basis`; eta = 1.
  static Povm projective(const BasisObservable& basis);

  /// Projectors onto N^{-1/2} sum_j e^{i j theta_m}|j> with
  /// theta_m = (2m + 1) pi / N; the sigma_y eigenbasis (+i first) for N = 2.
  static Povm phase(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return outcomes_.size(); }
  const std::vector<CMatrix>& outcomes() const noexcept { return outcomes_; }
  const std::optional<double>& eta() const noexcept { return eta_; }

  std::vector<double> probabilities(const DensityMatrix& rho) const;

 private:
  Povm(std::size_t dim, std::vector<CMatrix> outcomes, std::optional<double> eta)
      : dim_(dim), outcomes_(std::move(outcomes)), eta_(eta) {}
  std::size_t dim_ = 0;
  std::vector<CMatrix> outcomes_;
  std::optional<double> eta_;
};

struct ResolutionReport {
  double delta2_lambda = 0.0;
  double integral_p2 = 0.0;
  /// Area 2 pi sum_tau |Gamma(tau)|^2 under the coherence function.
  double coherence_time = 0.0;
  /// No coherence along any diagonal: P(phi) = 1/(2 pi) and the state
  /// carries no signal, although delta2_lambda is still finite.
  bool flat = false;
};

/// Delta^2 lambda = 1 / (2 sqrt(pi) int dphi P^2(phi)).
ResolutionReport wiener_kintchine_resolution(const SinglePhaseDistribution& dist);

/// sum_mu [p_mu(lambda) - p_mu(0)]^2, exact at finite lambda.
double statistical_distance(const DensityMatrix& rho, const UnitarySignal& signal,
                            const Povm& povm);

/// p'_mu = i sum_{j != k} (g_k - g_j) <j|rho|k> <k|Delta(mu)|j> in the
/// generator eigenbasis.
std::vector<double> statistics_derivative(const DensityMatrix& rho,
                                          const BasisObservable& generator, const Povm& povm);

/// sum_mu p'_mu^2, the lambda^2 coefficient of the statistical distance.
double small_signal_quadratic(const DensityMatrix& rho, const BasisObservable& generator,
                              const Povm& povm);

struct BoundReport {
  double lhs = 0.0;  // 4 Var(g)
  double rhs = 0.0;  // sum p'^2 / (eta - sum p^2)
  bool applicable = false;
  bool satisfied = false;
};

/// 4 Var_rho(g) >= sum_mu p'_mu^2 / (eta - sum_mu p_mu^2). Throws EtaMissing
/// when the POVM has no idempotency factor; reports applicable = false when
/// the denominator is below 1e-12.
BoundReport uncertainty_bound_check(const DensityMatrix& rho, const BasisObservable& generator,
                                    const Povm& povm);

struct DensityDistance {
  double exact = 0.0;                  // tr[(rho(lambda) - rho)^2]
  double quadratic_coefficient = 0.0;  // sum_{j != k} (g_k - g_j)^2 |rho_jk|^2
  double commutator_route = 0.0;       // -tr([rho, g]^2)
};

DensityDistance density_matrix_distance(const DensityMatrix& rho, const UnitarySignal& signal);

}  // namespace qcohere
