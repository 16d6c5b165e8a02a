#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qcohere/qcore.hpp"

namespace qcohere {

/// Unnormalized phase state |phi> = sum_j e^{i phi_j}|j> in basis coordinates.
CVector phase_state(std::span<const double> phases);

/// P(phi) = 1 + sum_{j != k} e^{i(phi_k - phi_j)} <j|rho|k>, kept as its exact
/// trigonometric-polynomial coefficients. Integrals use the normalized
/// measure prod_j dphi_j / (2 pi)^N, under which P integrates to one.
class MultiPhaseDistribution {
 public:
  explicit MultiPhaseDistribution(CMatrix coefficients);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(coeffs_.rows()); }

  /// Coherence coefficient <j|rho|k>; zero on the diagonal.
  Complex coefficient(std::size_t j, std::size_t k) const;
  const CMatrix& coefficients() const noexcept { return coeffs_; }

  double operator()(std::span<const double> phases) const;

 private:
  CMatrix coeffs_;
};

MultiPhaseDistribution multi_phase_distribution(const DensityMatrix& rho,
                                                const BasisObservable& basis);

/// Fourier coefficient int dphi e^{i(phi_j - phi_k)} P(phi) = <j|rho|k>.
Complex moment(const MultiPhaseDistribution& dist, std::size_t j, std::size_t k);

/// int dphi P^2(phi) = 1 + C_HS, summed over the two surviving index patterns
/// of the fourfold product.
double renyi_integral(const MultiPhaseDistribution& dist);

/// Seeded Monte-Carlo estimate of int dphi P^2 over the N-torus, evaluating
/// P = <phi|rho|phi> directly. Each worker draws from its own substream
/// (seed + worker index); partial sums are combined in worker order.
double sampled_renyi_integral(const DensityMatrix& rho, const BasisObservable& basis,
                              std::size_t samples, std::uint64_t seed,
                              std::size_t workers = 1);

struct CovariancePair {
  double shifted_state = 0.0;
  double shifted_argument = 0.0;
};

/// P(phases; U rho U^dagger) with U = e^{-i lambda |j><j|}, alongside
/// P(phases + lambda e_j; rho).
CovariancePair covariance_check(const DensityMatrix& rho, const BasisObservable& basis,
                                std::size_t j, double lambda, std::span<const double> phases);

/// P(phi) = sum_tau Gamma(tau) e^{-i tau phi}, tau = -(N-1), ..., N-1, with
/// the 1/(2 pi) carried inside Gamma; it integrates to one under plain dphi
/// over [0, 2 pi). Gamma(+-N) vanishes identically and is not stored.
class SinglePhaseDistribution {
 public:
  explicit SinglePhaseDistribution(std::vector<Complex> gammas);

  std::size_t dim() const noexcept { return (gammas_.size() + 1) / 2; }
  long max_tau() const noexcept { return static_cast<long>(dim()) - 1; }

  Complex gamma(long tau) const;
  const std::vector<Complex>& gammas() const noexcept { return gammas_; }

  double operator()(double phi) const;

  /// int_0^{2 pi} P^2 dphi = 2 pi sum_tau |Gamma(tau)|^2.
  double integral_p2() const;

 private:
  std::vector<Complex> gammas_;
};

/// Gamma(tau) = (1/2 pi) sum_j <j+tau|rho|j>, out-of-range kets vanishing.
SinglePhaseDistribution single_phase_distribution(const DensityMatrix& rho,
                                                  const BasisObservable& basis);

/// E = sum_j |j><j+1| on N levels.
CMatrix susskind_glogower(std::size_t dim);

/// tr(rho E^tau) / (2 pi) with E^tau = (E^dagger)^{|tau|} for tau < 0.
Complex susskind_glogower_moment(const DensityMatrix& rho, const BasisObservable& basis,
                                 long tau);

}  // namespace qcohere
