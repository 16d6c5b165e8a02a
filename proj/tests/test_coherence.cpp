#include <doctest.h>

#include "oracles.hpp"
#include "qcohere/coherence.hpp"

using namespace qcohere;

TEST_CASE("coherence_profile read-offs") {
  const auto mixed = coherence_profile(DensityMatrix::maximally_mixed(2), BasisObservable::computational(2));
  CHECK(mixed.pairs.size() == 2);
  CHECK(mixed.max_modulus() == 0.0);
  CHECK(mixed.diagonal == std::vector<double>{0.5, 0.5});

  const auto plus = DensityMatrix::uniform_superposition(2);
  const auto comp = coherence_profile(plus, BasisObservable::computational(2));
  CHECK(std::abs(comp.term(0, 1) - Complex(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(comp.term(1, 0) - Complex(0.5, 0.0)) < 1e-15);

  const auto had = coherence_profile(plus, BasisObservable::hadamard(2));
  CHECK(had.max_modulus() < 1e-15);
  CHECK(had.diagonal[0] == doctest::Approx(1.0));
  CHECK(std::abs(had.diagonal[1]) < 1e-15);
}

TEST_CASE("coherence_profile pairs are conjugate-symmetric and the diagonal is normalized") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const auto p = coherence_profile(random_state(n, n, seed), random_basis(n, seed + 50));
    double total = 0.0;
    for (double d : p.diagonal) {
      CHECK(d >= -1e-10);
      CHECK(d <= 1.0 + 1e-10);
      total += d;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    for (const auto& t : p.pairs) CHECK(std::abs(p.term(t.k, t.j) - std::conj(t.value)) < 1e-14);
  }
}

TEST_CASE("hilbert_schmidt_coherence values") {
  CHECK(hilbert_schmidt_coherence(coherence_profile(DensityMatrix::maximally_mixed(5),
                                                    BasisObservable::computational(5))) == 0.0);
  CHECK(hilbert_schmidt_coherence(coherence_profile(DensityMatrix::uniform_superposition(2),
                                                    BasisObservable::computational(2))) ==
        doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("purity splits into diagonal weight plus C_HS") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto rho = random_state(n, 1 + seed % n, seed);
    const auto basis = random_basis(n, 7000 + seed);
    const auto profile = coherence_profile(rho, basis);
    double diag2 = 0.0;
    for (double p : profile.diagonal) diag2 += p * p;
    const double purity = (rho.matrix() * rho.matrix()).trace().real();
    const double chs = hilbert_schmidt_coherence(profile);
    CHECK(std::abs(purity - diag2 - chs) < 1e-10);
    CHECK(chs >= 0.0);
    CHECK(chs <= (static_cast<double>(n) - 1.0) / static_cast<double>(n) + 1e-12);
    const CMatrix m = basis.basis().adjoint() * rho.matrix() * basis.basis();
    CHECK(std::abs(chs - oracle::off_diagonal_weight(m)) < 1e-12);
  }
}

TEST_CASE("find_coherent_basis follows the corollary construction") {
  CHECK_FALSE(find_coherent_basis(DensityMatrix::maximally_mixed(3)).has_value());

  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 0.7;
  d(1, 1) = 0.3;
  const auto diag = DensityMatrix::from_matrix(d);
  const auto found = find_coherent_basis(diag);
  REQUIRE(found.has_value());
  CHECK(found->rotated);
  CHECK(found->eps_out == doctest::Approx(0.2).epsilon(1e-12));
  const auto profile = coherence_profile(diag, found->basis);
  CHECK(std::abs(profile.term(0, 1) - Complex(0.2, 0.0)) < 1e-12);

  const auto plus = find_coherent_basis(DensityMatrix::uniform_superposition(2));
  REQUIRE(plus.has_value());
  CHECK_FALSE(plus->rotated);
  CHECK(plus->basis.basis() == CMatrix::Identity(2, 2));
  CHECK(plus->eps_out == doctest::Approx(0.5));
}

TEST_CASE("find_coherent_basis picks the largest population gap, lowest pair on ties") {
  CMatrix d = CMatrix::Zero(4, 4);
  d(0, 0) = 0.1;
  d(1, 1) = 0.4;
  d(2, 2) = 0.1;
  d(3, 3) = 0.4;
  const auto found = find_coherent_basis(DensityMatrix::from_matrix(d));
  REQUIRE(found.has_value());
  CHECK(found->j == 0);
  CHECK(found->k == 1);
  CHECK(found->eps_out == doctest::Approx(0.15).epsilon(1e-12));
}

TEST_CASE("find_coherent_basis never misses states away from I/N") {
  const double eps = 1e-10;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 6;
    // Mostly-mixed states with a small diagonal or off-diagonal perturbation.
    CMatrix m = CMatrix::Identity(n, n) / static_cast<double>(n);
    const double delta = 1e-6 * static_cast<double>(1 + seed % 3);
    if (seed % 2 == 0) {
      m(0, 0) += delta;
      m(1, 1) -= delta;
    } else {
      m(0, 1) = delta;
      m(1, 0) = delta;
    }
    const auto rho = DensityMatrix::from_matrix(m);
    REQUIRE((rho.matrix() - CMatrix::Identity(n, n) / static_cast<double>(n)).norm() > 2 * eps * n);
    const auto found = find_coherent_basis(rho, eps);
    REQUIRE(found.has_value());
    CHECK(found->eps_out > eps);
    CHECK(coherence_profile(rho, found->basis).max_modulus() == doctest::Approx(found->eps_out));
  }
}

TEST_CASE("commutator_norm") {
  CHECK(commutator_norm(DensityMatrix::maximally_mixed(3), random_basis(3, 2)) < 1e-15);
  CHECK(commutator_norm(DensityMatrix::uniform_superposition(2), BasisObservable::diagonal({1.0, 2.0})) ==
        doctest::Approx(std::sqrt(2.0) * 0.5).epsilon(1e-14));
  CMatrix d = CMatrix::Zero(3, 3);
  d(0, 0) = 0.2;
  d(1, 1) = 0.3;
  d(2, 2) = 0.5;
  CHECK(commutator_norm(DensityMatrix::from_matrix(d), BasisObservable::diagonal({4.0, -1.0, 0.5})) == 0.0);
}

TEST_CASE("commutator_norm ignores coherence inside a degenerate eigenspace") {
  const auto plus = DensityMatrix::uniform_superposition(3);
  const auto degenerate = BasisObservable::diagonal({1.0, 1.0, 1.0});
  CHECK(commutator_norm(plus, degenerate) < 1e-15);
  CHECK(coherence_profile(plus, degenerate).max_modulus() > 0.3);

  const auto partial = BasisObservable::diagonal({1.0, 1.0, 2.0});
  // Only the (0,2) and (1,2) coherences of 1/3 contribute: 4 entries of 1/3.
  CHECK(commutator_norm(plus, partial) == doctest::Approx(std::sqrt(4.0 / 9.0)).epsilon(1e-14));
}

TEST_CASE("vanishing commutator implies vanishing coherence for distinct eigenvalues") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const auto basis = random_basis(n, seed);
    CMatrix d = CMatrix::Zero(n, n);
    for (std::size_t j = 0; j < n; ++j) d(j, j) = 1.0 + static_cast<double>(j * seed % 3);
    d /= d.trace().real();
    const auto rho = DensityMatrix::from_matrix(basis.basis() * d * basis.basis().adjoint());
    CHECK(commutator_norm(rho, basis) < 1e-12);
    CHECK(coherence_profile(rho, basis).max_modulus() <= 1e-10);
  }
}
