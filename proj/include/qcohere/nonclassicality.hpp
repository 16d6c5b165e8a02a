#pragma once

#include <array>
#include <variant>

#include "qcohere/qcore.hpp"

namespace qcohere {

/// Two-level restriction onto levels (j, k) of a basis with
///   sigma_z      = |j><j| - |k><k|
///   sigma_phi    = e^{i phi}|j><k| + e^{-i phi}|k><j|
///   sigma_perp   = i (e^{i phi}|j><k| - e^{-i phi}|k><j|)
/// and phi chosen so that <sigma_phi> = 2|<j|rho|k>| and <sigma_perp> = 0.
struct PauliSubspace {
  std::size_t j = 0;
  std::size_t k = 0;
  double phi = 0.0;  // in [0, 2 pi)
  double exp_z = 0.0;
  double exp_phi = 0.0;
  double exp_perp = 0.0;
};

PauliSubspace pauli_subspace(const DensityMatrix& rho, const BasisObservable& basis,
                             std::size_t j, std::size_t k);

/// The three operators of a PauliSubspace as N x N matrices in the
/// basis' own coordinates.
struct PauliOperators {
  CMatrix z;
  CMatrix phi;
  CMatrix perp;
};
PauliOperators pauli_operators(std::size_t dim, std::size_t j, std::size_t k, double phi);

/// Measurement-noise parameters; admissible when y^2 + z^2 + yz^2 <= 1 and
/// y, z are nonzero.
struct GammaTriple {
  double y = 0.0;
  double z = 0.0;
  double yz = 0.0;
};

void validate_gamma(const GammaTriple& gamma);

/// p(y, z) for y, z in {-1, +1}, normalized so the four values sum to one.
struct JointDistribution {
  std::array<double, 4> values{};  // (-1,-1), (-1,+1), (+1,-1), (+1,+1)
  GammaTriple gamma;
  PauliSubspace subspace;

  double at(int y, int z) const;
  double sum() const noexcept;
};

inline constexpr std::array<std::array<int, 2>, 4> kOutcomes{{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};

JointDistribution joint_distribution(const PauliSubspace& subspace, const GammaTriple& gamma);

struct NegativityCertificate {
  PauliSubspace subspace;
  GammaTriple gamma;
  int y = 0;
  int z = 0;
  double value = 0.0;
};

struct ClassicalVerdict {
  /// Infimum of min_{y,z} p(y,z) over admissible gammas, minimized over
  /// all level pairs: (1 - |<sigma_z>|)/4.
  double min_p = 0.0;
};

using WitnessCertificate = std::variant<NegativityCertificate, ClassicalVerdict>;

struct WitnessOptions {
  double tol_witness = 1e-9;
  /// Golden-section search on t in [gamma_floor, t_schedule] for the most
  /// negative outcome instead of reporting the closed-form schedule.
  bool refine = false;
  double gamma_floor = 1e-6;
};

/// Picks the pair with the largest coherence modulus (lowest pair on ties).
/// If it exceeds tol_witness, gamma = (t, t, sqrt(1 - 2t^2)) with
/// t = min(0.5, <sigma_phi>/4) yields a negative p(y, z).
WitnessCertificate witness_search(const DensityMatrix& rho, const BasisObservable& basis,
                                  const WitnessOptions& options = {});

inline bool is_nonclassical(const WitnessCertificate& cert) {
  return std::holds_alternative<NegativityCertificate>(cert);
}

}  // namespace qcohere
