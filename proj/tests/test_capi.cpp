// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <numbers>
#include <vector>

#include "qcohere/qcohere.h"

namespace {

struct StateDel {
  void operator()(qc_state* s) const { qc_state_destroy(s); }
};
struct ObsDel {
  void operator()(qc_observable* o) const { qc_observable_destroy(o); }
};
struct PovmDel {
  void operator()(qc_povm* p) const { qc_povm_destroy(p); }
};
using State = std::unique_ptr<qc_state, StateDel>;
using Obs = std::unique_ptr<qc_observable, ObsDel>;
using PovmPtr = std::unique_ptr<qc_povm, PovmDel>;

State plus2() {
  qc_state* s = nullptr;
  REQUIRE(qc_state_plus(2, &s) == QC_OK);
  return State(s);
}

Obs computational(size_t n) {
  qc_observable* o = nullptr;
  REQUIRE(qc_observable_computational(n, &o) == QC_OK);
  return Obs(o);
}

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::strcmp(qc_status_name(QC_OK), "Ok") == 0);
  CHECK(std::strlen(qc_status_name(QC_ERR_NOT_PSD)) > 0);
  CHECK(std::strlen(qc_status_name(static_cast<qc_status>(55))) > 0);

  qc_state* s = nullptr;
  const double re[4] = {0.5, 0.6, 0.6, 0.5};
  const double im[4] = {0, 0, 0, 0};
  CHECK(qc_state_create(2, re, im, &s) == QC_ERR_NOT_PSD);
  CHECK(s == nullptr);
  CHECK(std::strlen(qc_last_error()) > 0);

  CHECK(qc_state_mixed(2, &s) == QC_OK);
  qc_state_destroy(s);
  CHECK(std::strcmp(qc_last_error(), "") == 0);
}

TEST_CASE("validation report") {
  const double re[4] = {0.5, 0.6, 0.6, 0.5};
  const double im[4] = {0, 0, 0, 0};
  qc_validation v{};
  CHECK(qc_validate_state(2, 2, re, im, &v) == QC_OK);
  CHECK(v.square == 1);
  CHECK(v.hermitian == 1);
  CHECK(v.unit_trace == 1);
  CHECK(v.positive == 0);
  CHECK(v.min_eigenvalue == doctest::Approx(-0.1));
  CHECK(v.failure == QC_ERR_NOT_PSD);

  const double rect[6] = {1, 0, 0, 0, 0, 0};
  CHECK(qc_validate_state(2, 3, rect, rect, &v) == QC_OK);
  CHECK(v.failure == QC_ERR_NON_SQUARE);

  const double nh_re[4] = {0.5, 0.1, 0.2, 0.5};
  CHECK(qc_state_create(2, nh_re, im, nullptr) == QC_ERR_NULL_POINTER);
  qc_state* s = nullptr;
  CHECK(qc_state_create(2, nh_re, im, &s) == QC_ERR_NON_HERMITIAN);
  const double tr_re[4] = {0.5, 0, 0, 0.6};
  CHECK(qc_state_create(2, tr_re, im, &s) == QC_ERR_TRACE_NOT_ONE);
}

TEST_CASE("null pointers are reported, not dereferenced") {
  double x = 0;
  CHECK(qc_hilbert_schmidt_coherence(nullptr, nullptr, &x) == QC_ERR_NULL_POINTER);
  CHECK(qc_validate_state(2, 2, nullptr, nullptr, nullptr) == QC_ERR_NULL_POINTER);
  CHECK(qc_state_dim(nullptr) == 0);
  qc_state_destroy(nullptr);
  qc_observable_destroy(nullptr);
  qc_povm_destroy(nullptr);
  auto s = plus2();
  auto b = computational(2);
  CHECK(qc_hilbert_schmidt_coherence(s.get(), b.get(), nullptr) == QC_ERR_NULL_POINTER);
}

TEST_CASE("state round trip and coherence") {
  const double re[4] = {0.5, 0.0, 0.0, 0.5};
  const double im[4] = {0.0, 0.3, -0.3, 0.0};
  qc_state* raw = nullptr;
  REQUIRE(qc_state_create(2, re, im, &raw) == QC_OK);
  State s(raw);
  CHECK(qc_state_dim(s.get()) == 2);
  double out_re[4], out_im[4];
  REQUIRE(qc_state_entries(s.get(), out_re, out_im) == QC_OK);
  for (int i = 0; i < 4; ++i) {
    CHECK(out_re[i] == doctest::Approx(re[i]));
    CHECK(out_im[i] == doctest::Approx(im[i]));
  }
  auto b = computational(2);
  double chs = 0;
  REQUIRE(qc_hilbert_schmidt_coherence(s.get(), b.get(), &chs) == QC_OK);
  CHECK(chs == doctest::Approx(0.18));

  qc_pauli_subspace sub{};
  REQUIRE(qc_pauli_subspace_compute(s.get(), b.get(), 0, 1, &sub) == QC_OK);
  CHECK(sub.phi == doctest::Approx(std::numbers::pi / 2));
  CHECK(sub.exp_phi == doctest::Approx(0.6));
  CHECK(qc_pauli_subspace_compute(s.get(), b.get(), 1, 1, &sub) == QC_ERR_EQUAL_INDICES);
  CHECK(qc_pauli_subspace_compute(s.get(), b.get(), 0, 2, &sub) == QC_ERR_INDEX_OUT_OF_RANGE);

  auto three = computational(3);
  CHECK(qc_hilbert_schmidt_coherence(s.get(), three.get(), &chs) == QC_ERR_DIMENSION_MISMATCH);
}

TEST_CASE("observables") {
  qc_observable* o = nullptr;
  const double eig[2] = {1.0, 2.0};
  const double bad_re[4] = {1, 1, 0, 1};
  const double zero[4] = {0, 0, 0, 0};
  CHECK(qc_observable_create(2, eig, bad_re, zero, &o) == QC_ERR_INVALID_BASIS);
  REQUIRE(qc_observable_create(2, eig, nullptr, nullptr, &o) == QC_OK);
  Obs g(o);
  double got[2];
  REQUIRE(qc_observable_eigenvalues(g.get(), got) == QC_OK);
  CHECK(got[1] == 2.0);

  REQUIRE(qc_observable_linear(3, &o) == QC_OK);
  Obs lin(o);
  double l3[3];
  REQUIRE(qc_observable_eigenvalues(lin.get(), l3) == QC_OK);
  CHECK(l3[0] == 1.0);
  CHECK(l3[2] == 3.0);

  qc_state* s = nullptr;
  CHECK(qc_state_random(3, 4, 1, &s) == QC_ERR_INVALID_RANK);
  REQUIRE(qc_state_random(3, 2, 1, &s) == QC_OK);
  State rnd(s);
  double norm = -1;
  REQUIRE(qc_commutator_norm(rnd.get(), lin.get(), &norm) == QC_OK);
  CHECK(norm > 0);
}

TEST_CASE("witness through the C API") {
  auto s = plus2();
  auto b = computational(2);
  qc_witness w{};
  REQUIRE(qc_witness_search(s.get(), b.get(), 1e-9, 0, &w) == QC_OK);
  CHECK(w.nonclassical == 1);
  CHECK(w.p < 0);
  CHECK(w.y == -1);
  CHECK(w.z == 1);
  double p[4];
  REQUIRE(qc_joint_distribution(&w.subspace, &w.gamma, p) == QC_OK);
  CHECK(p[1] == doctest::Approx(w.p));

  const qc_gamma bad{0.0, 0.5, 0.5};
  CHECK(qc_joint_distribution(&w.subspace, &bad, p) == QC_ERR_ZERO_GAMMA_DENOMINATOR);
  const qc_gamma big{0.9, 0.9, 0.1};
  CHECK(qc_joint_distribution(&w.subspace, &big, p) == QC_ERR_INVALID_GAMMA);

  qc_state* m = nullptr;
  REQUIRE(qc_state_mixed(3, &m) == QC_OK);
  State mixed(m);
  auto b3 = computational(3);
  REQUIRE(qc_witness_search(mixed.get(), b3.get(), 1e-9, 0, &w) == QC_OK);
  CHECK(w.nonclassical == 0);
  CHECK(w.min_p == doctest::Approx(0.25));

  int found = 1;
  qc_observable* cb = reinterpret_cast<qc_observable*>(1);
  double eps_out = -1;
  REQUIRE(qc_find_coherent_basis(mixed.get(), 1e-10, &found, &cb, &eps_out) == QC_OK);
  CHECK(found == 0);
  CHECK(cb == nullptr);
}

TEST_CASE("phase functions through the C API") {
  auto s = plus2();
  auto b = computational(2);
  const double phases[2] = {0.0, 0.0};
  double v = 0;
  REQUIRE(qc_multi_phase_evaluate(s.get(), b.get(), phases, &v) == QC_OK);
  CHECK(v == doctest::Approx(2.0));
  double re = 0, im = 0;
  REQUIRE(qc_phase_moment(s.get(), b.get(), 0, 1, &re, &im) == QC_OK);
  CHECK(re == doctest::Approx(0.5));
  REQUIRE(qc_renyi_integral(s.get(), b.get(), &v) == QC_OK);
  CHECK(v == doctest::Approx(1.5));
  double a = 0, c = 0;
  REQUIRE(qc_renyi_integral_sampled(s.get(), b.get(), 10000, 5, 2, &a) == QC_OK);
  REQUIRE(qc_renyi_integral_sampled(s.get(), b.get(), 10000, 5, 2, &c) == QC_OK);
  CHECK(a == c);
  double pair[2];
  REQUIRE(qc_covariance_check(s.get(), b.get(), 0, std::numbers::pi / 3, phases, pair) == QC_OK);
  CHECK(pair[0] == doctest::Approx(1.5));
  CHECK(pair[1] == doctest::Approx(1.5));
  double gre[3], gim[3];
  REQUIRE(qc_mutual_coherence(s.get(), b.get(), gre, gim) == QC_OK);
  CHECK(gre[1] == doctest::Approx(1 / (2 * std::numbers::pi)));
  CHECK(gre[2] == doctest::Approx(1 / (4 * std::numbers::pi)));
  REQUIRE(qc_susskind_glogower_moment(s.get(), b.get(), -1, &re, &im) == QC_OK);
  CHECK(re == doctest::Approx(gre[0]));
  CHECK(qc_susskind_glogower_moment(s.get(), b.get(), 2, &re, &im) == QC_ERR_TAU_OUT_OF_RANGE);
  REQUIRE(qc_single_phase_evaluate(s.get(), b.get(), 0.0, &v) == QC_OK);
  CHECK(v == doctest::Approx(1 / std::numbers::pi));
}

TEST_CASE("metrology through the C API") {
  auto s = plus2();
  qc_observable* o = nullptr;
  const double eig[2] = {1.0, 2.0};
  REQUIRE(qc_observable_create(2, eig, nullptr, nullptr, &o) == QC_OK);
  Obs g(o);
  qc_povm* p = nullptr;
  REQUIRE(qc_povm_phase(2, &p) == QC_OK);
  PovmPtr povm(p);
  CHECK(qc_povm_size(povm.get()) == 2);
  int has = 0;
  double eta = 0;
  REQUIRE(qc_povm_eta(povm.get(), &has, &eta) == QC_OK);
  CHECK(has == 1);
  CHECK(eta == 1.0);

  double dp[2];
  REQUIRE(qc_statistics_derivative(s.get(), g.get(), povm.get(), dp) == QC_OK);
  CHECK(dp[0] == doctest::Approx(-0.5));
  CHECK(dp[1] == doctest::Approx(0.5));
  double q = 0;
  REQUIRE(qc_small_signal_quadratic(s.get(), g.get(), povm.get(), &q) == QC_OK);
  CHECK(q == doctest::Approx(0.5));
  double d2 = 0;
  REQUIRE(qc_statistical_distance(s.get(), g.get(), 0.2, povm.get(), &d2) == QC_OK);
  CHECK(d2 == doctest::Approx(2 * std::pow(std::sin(0.2) / 2, 2)));
  qc_bound bound{};
  REQUIRE(qc_uncertainty_bound(s.get(), g.get(), povm.get(), &bound) == QC_OK);
  CHECK(bound.applicable == 1);
  CHECK(bound.satisfied == 1);
  CHECK(bound.rhs == doctest::Approx(1.0));
  qc_density_distance dd{};
  REQUIRE(qc_density_matrix_distance(s.get(), g.get(), 0.3, &dd) == QC_OK);
  CHECK(dd.exact == doctest::Approx(1 - std::cos(0.3)));
  CHECK(dd.quadratic_coefficient == doctest::Approx(0.5));
  qc_resolution r{};
  REQUIRE(qc_wiener_kintchine(s.get(), g.get(), &r) == QC_OK);
  CHECK(r.delta2_lambda == doctest::Approx(2.0 / 3.0 * std::sqrt(std::numbers::pi)));
  CHECK(r.flat == 0);

  // {|0><0|, |1><1|/2, |1><1|/2}: valid POVM without a common eta.
  const double re[12] = {1, 0, 0, 0, 0, 0, 0, 0.5, 0, 0, 0, 0.5};
  const double im[12] = {};
  REQUIRE(qc_povm_create(2, 3, re, im, &p) == QC_OK);
  PovmPtr uneven(p);
  REQUIRE(qc_povm_eta(uneven.get(), &has, &eta) == QC_OK);
  CHECK(has == 0);
  CHECK(qc_uncertainty_bound(s.get(), g.get(), uneven.get(), &bound) == QC_ERR_ETA_MISSING);
  const double half_re[8] = {1, 0, 0, 0, 0, 0, 0, 0.5};
  CHECK(qc_povm_create(2, 2, half_re, im, &p) == QC_ERR_INVALID_POVM);
}
