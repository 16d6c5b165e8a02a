#pragma once
// Independent reference computations for the test suites. Nothing here calls
// into the library's formula paths: states and bases are consumed only as
// plain matrices.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// exp(-i lambda G) through Eigen's Pade scaling-and-squaring.
inline CMatrix expm_unitary(const CMatrix& generator, double lambda) {
  const CMatrix a = Complex(0.0, -lambda) * generator;
  return a.exp();
}

/// Eigenvalues of a real symmetric 2x2 [[a, b], [b, d]] in closed form.
inline std::pair<double, double> eig2(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double r = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
  return {mean - r, mean + r};
}

/// <phi|m|phi> with |phi> = sum_j e^{i phi_j}|j>, m already in basis coordinates.
inline double phase_expectation(const CMatrix& m, const std::vector<double>& phases) {
  Complex sum = 0.0;
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      sum += std::polar(1.0, phases[static_cast<std::size_t>(k)] - phases[static_cast<std::size_t>(j)]) * m(j, k);
    }
  }
  return sum.real();
}

/// Monte-Carlo mean of f over the uniform N-torus (the normalized measure).
/// Workers draw from substreams seed + w; partials are summed in worker order.
template <class F>
Complex torus_mean(std::size_t dim, F f, std::size_t samples, std::uint64_t seed,
                   std::size_t workers = 4) {
  std::vector<Complex> partial(workers, 0.0);
  auto run = [&](std::size_t w) {
    std::mt19937_64 engine(seed * 7919 + w);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<double> phases(dim);
    Complex acc = 0.0;
    for (std::size_t s = samples * w / workers; s < samples * (w + 1) / workers; ++s) {
      for (auto& p : phases) p = angle(engine);
      acc += f(phases);
    }
    partial[w] = acc;
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  Complex total = 0.0;
  for (const auto& p : partial) total += p;
  return total / static_cast<double>(samples);
}

/// P(phi) = <phi|m|phi>/(2 pi) with |phi> = sum_j e^{i (j+1) phi}|j> (levels
/// labelled 1..N); the label offset is a global phase and cancels.
inline double single_phase_value(const CMatrix& m, double phi) {
  std::vector<double> phases(static_cast<std::size_t>(m.rows()));
  for (std::size_t j = 0; j < phases.size(); ++j) phases[j] = static_cast<double>(j + 1) * phi;
  return phase_expectation(m, phases) / kTwoPi;
}

/// Uniform-grid quadrature of P^2 over [0, 2 pi); exact for trigonometric
/// polynomials of degree below points/2.
inline double single_phase_p2_quadrature(const CMatrix& m, std::size_t points = 4096) {
  double sum = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double p = single_phase_value(m, kTwoPi * static_cast<double>(i) / static_cast<double>(points));
    sum += p * p;
  }
  return sum * kTwoPi / static_cast<double>(points);
}

/// Central difference of tr(Delta exp(-i l G) rho exp(i l G)) at l = 0.
inline double probability_derivative(const CMatrix& rho, const CMatrix& generator,
                                     const CMatrix& element, double h = 1e-5) {
  auto prob = [&](double l) {
    const CMatrix u = expm_unitary(generator, l);
    return (element * u * rho * u.adjoint()).trace().real();
  };
  return (prob(h) - prob(-h)) / (2.0 * h);
}

/// Sum over j != k of |m_jk|^2 by direct enumeration.
inline double off_diagonal_weight(const CMatrix& m) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      if (j != k) s += std::norm(m(j, k));
  return s;
}

}  // namespace oracle
