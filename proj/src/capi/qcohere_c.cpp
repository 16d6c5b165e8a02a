#include "qcohere/qcohere.h"

#include <exception>
#include <new>
#include <string>

#include "qcohere/coherence.hpp"
#include "qcohere/metrology.hpp"
#include "qcohere/nonclassicality.hpp"
#include "qcohere/phase.hpp"
#include "qcohere/qcore.hpp"

struct qc_state {
  qcohere::DensityMatrix value;
};

struct qc_observable {
  qcohere::BasisObservable value;
};

struct qc_povm {
  qcohere::Povm value;
};

namespace {

using qcohere::CMatrix;
using qcohere::Complex;
using qcohere::ErrorCode;

static_assert(static_cast<int>(ErrorCode::NonSquare) == QC_ERR_NON_SQUARE);
static_assert(static_cast<int>(ErrorCode::NotPositiveSemidefinite) == QC_ERR_NOT_PSD);
static_assert(static_cast<int>(ErrorCode::InvalidBasis) == QC_ERR_INVALID_BASIS);
static_assert(static_cast<int>(ErrorCode::TauOutOfRange) == QC_ERR_TAU_OUT_OF_RANGE);
static_assert(static_cast<int>(ErrorCode::InvalidArgument) == QC_ERR_INVALID_ARGUMENT);

thread_local std::string last_error;

qc_status to_status(ErrorCode code) { return static_cast<qc_status>(static_cast<int>(code)); }

struct NullPointer {};

template <class... P>
void require(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullPointer{};
}

// Runs `body`, translating exceptions into status codes.
template <class F>
qc_status guarded(F&& body) noexcept {
  try {
    body();
    last_error.clear();
    return QC_OK;
  } catch (const qcohere::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const NullPointer&) {
    last_error = "NullPointer: required argument is NULL";
    return QC_ERR_NULL_POINTER;
  } catch (const std::bad_alloc&) {
    last_error = "Internal: out of memory";
    return QC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return QC_ERR_INTERNAL;
  } catch (...) {
    last_error = "Internal: unknown exception";
    return QC_ERR_INTERNAL;
  }
}

CMatrix read_matrix(std::size_t rows, std::size_t cols, const double* re, const double* im) {
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t i = r * cols + c;
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(re[i], im ? im[i] : 0.0);
    }
  }
  return m;
}

void write_matrix(const CMatrix& m, double* re, double* im) {
  const auto cols = static_cast<std::size_t>(m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * cols + static_cast<std::size_t>(c);
      re[i] = m(r, c).real();
      im[i] = m(r, c).imag();
    }
  }
}

void emit(qcohere::DensityMatrix rho, qc_state** out) { *out = new qc_state{std::move(rho)}; }
void emit(qcohere::BasisObservable obs, qc_observable** out) { *out = new qc_observable{std::move(obs)}; }
void emit(qcohere::Povm povm, qc_povm** out) { *out = new qc_povm{std::move(povm)}; }

qc_pauli_subspace to_c(const qcohere::PauliSubspace& s) {
  return {s.j, s.k, s.phi, s.exp_z, s.exp_phi, s.exp_perp};
}

qcohere::PauliSubspace from_c(const qc_pauli_subspace& s) {
  return {s.j, s.k, s.phi, s.exp_z, s.exp_phi, s.exp_perp};
}

}  // namespace

extern "C" {

const char* qc_status_name(qc_status status) {
  switch (status) {
    case QC_OK: return "Ok";
    case QC_ERR_NULL_POINTER: return "NullPointer";
    case QC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= QC_ERR_NON_SQUARE && status <= QC_ERR_INVALID_ARGUMENT) {
    return qcohere::to_string(static_cast<ErrorCode>(status)).data();
  }
  return "Unknown";
}

const char* qc_last_error(void) { return last_error.c_str(); }

qc_status qc_validate_state(size_t rows, size_t cols, const double* re, const double* im,
                            qc_validation* out) {
  return guarded([&] {
    require(out);
    if (rows * cols > 0) require(re, im);
    const auto r = qcohere::validate_state(read_matrix(rows, cols, re, im));
    out->square = r.square;
    out->hermitian = r.hermitian;
    out->unit_trace = r.unit_trace;
    out->positive = r.positive;
    out->hermiticity_violation = r.hermiticity_violation;
    out->trace_violation = r.trace_violation;
    out->min_eigenvalue = r.min_eigenvalue;
    out->failure = r.failure() ? to_status(*r.failure()) : QC_OK;
  });
}

qc_status qc_state_create(size_t dim, const double* re, const double* im, qc_state** out) {
  return guarded([&] {
    require(re, im, out);
    emit(qcohere::DensityMatrix::from_matrix(read_matrix(dim, dim, re, im)), out);
  });
}

qc_status qc_state_mixed(size_t dim, qc_state** out) {
  return guarded([&] {
    require(out);
    emit(qcohere::DensityMatrix::maximally_mixed(dim), out);
  });
}

qc_status qc_state_plus(size_t dim, qc_state** out) {
  return guarded([&] {
    require(out);
    emit(qcohere::DensityMatrix::uniform_superposition(dim), out);
  });
}

qc_status qc_state_random(size_t dim, size_t rank, uint64_t seed, qc_state** out) {
  return guarded([&] {
    require(out);
    emit(qcohere::random_state(dim, rank, seed), out);
  });
}

void qc_state_destroy(qc_state* state) { delete state; }

size_t qc_state_dim(const qc_state* state) { return state ? state->value.dim() : 0; }

qc_status qc_state_entries(const qc_state* state, double* re, double* im) {
  return guarded([&] {
    require(state, re, im);
    write_matrix(state->value.matrix(), re, im);
  });
}

qc_status qc_observable_create(size_t dim, const double* eigenvalues, const double* basis_re,
                               const double* basis_im, qc_observable** out) {
  return guarded([&] {
    require(eigenvalues, out);
    std::vector<double> g(eigenvalues, eigenvalues + dim);
    if (basis_re == nullptr && basis_im == nullptr) {
      emit(qcohere::BasisObservable::diagonal(std::move(g)), out);
    } else {
      require(basis_re);
      emit(qcohere::BasisObservable::make(read_matrix(dim, dim, basis_re, basis_im), std::move(g)), out);
    }
  });
}

qc_status qc_observable_computational(size_t dim, qc_observable** out) {
  return guarded([&] {
    require(out);
    emit(qcohere::BasisObservable::computational(dim), out);
  });
}

qc_status qc_observable_linear(size_t dim, qc_observable** out) {
  return guarded([&] {
    require(out);
    emit(qcohere::BasisObservable::linear(dim), out);
  });
}

qc_status qc_observable_hadamard(size_t dim, qc_observable** out) {
  return guarded([&] {
    require(out);
    emit(qcohere::BasisObservable::hadamard(dim), out);
  });
}

qc_status qc_observable_random(size_t dim, uint64_t seed, qc_observable** out) {
  return guarded([&] {
    require(out);
    emit(qcohere::random_basis(dim, seed), out);
  });
}

void qc_observable_destroy(qc_observable* observable) { delete observable; }

size_t qc_observable_dim(const qc_observable* observable) {
  return observable ? observable->value.dim() : 0;
}

qc_status qc_observable_eigenvalues(const qc_observable* observable, double* out) {
  return guarded([&] {
    require(observable, out);
    const auto& g = observable->value.eigenvalues();
    std::copy(g.begin(), g.end(), out);
  });
}

qc_status qc_observable_basis(const qc_observable* observable, double* re, double* im) {
  return guarded([&] {
    require(observable, re, im);
    write_matrix(observable->value.basis(), re, im);
  });
}

qc_status qc_evolve(const qc_state* state, const qc_observable* generator, double lambda,
                    qc_state** out) {
  return guarded([&] {
    require(state, generator, out);
    emit(qcohere::evolve(state->value, {generator->value, lambda}), out);
  });
}

qc_status qc_coherence_matrix(const qc_state* state, const qc_observable* basis, double* re,
                              double* im) {
  return guarded([&] {
    require(state, basis, re, im);
    qcohere::require_same_dim(state->value.dim(), basis->value.dim(), "state vs basis");
    write_matrix(basis->value.to_basis(state->value.matrix()), re, im);
  });
}

qc_status qc_hilbert_schmidt_coherence(const qc_state* state, const qc_observable* basis,
                                       double* out) {
  return guarded([&] {
    require(state, basis, out);
    *out = qcohere::hilbert_schmidt_coherence(qcohere::coherence_profile(state->value, basis->value));
  });
}

qc_status qc_commutator_norm(const qc_state* state, const qc_observable* observable, double* out) {
  return guarded([&] {
    require(state, observable, out);
    *out = qcohere::commutator_norm(state->value, observable->value);
  });
}

qc_status qc_find_coherent_basis(const qc_state* state, double eps, int* found,
                                 qc_observable** out, double* eps_out) {
  return guarded([&] {
    require(state, found, out, eps_out);
    *found = 0;
    *out = nullptr;
    *eps_out = 0.0;
    if (auto result = qcohere::find_coherent_basis(state->value, eps)) {
      *eps_out = result->eps_out;
      emit(std::move(result->basis), out);
      *found = 1;
    }
  });
}

qc_status qc_pauli_subspace_compute(const qc_state* state, const qc_observable* basis, size_t j,
                                    size_t k, qc_pauli_subspace* out) {
  return guarded([&] {
    require(state, basis, out);
    *out = to_c(qcohere::pauli_subspace(state->value, basis->value, j, k));
  });
}

qc_status qc_joint_distribution(const qc_pauli_subspace* subspace, const qc_gamma* gamma,
                                double* out) {
  return guarded([&] {
    require(subspace, gamma, out);
    const auto dist = qcohere::joint_distribution(from_c(*subspace), {gamma->y, gamma->z, gamma->yz});
    std::copy(dist.values.begin(), dist.values.end(), out);
  });
}

qc_status qc_witness_search(const qc_state* state, const qc_observable* basis, double tol_witness,
                            int refine, qc_witness* out) {
  return guarded([&] {
    require(state, basis, out);
    qcohere::WitnessOptions options;
    options.tol_witness = tol_witness;
    options.refine = refine != 0;
    const auto cert = qcohere::witness_search(state->value, basis->value, options);
    *out = qc_witness{};
    if (const auto* neg = std::get_if<qcohere::NegativityCertificate>(&cert)) {
      out->nonclassical = 1;
      out->subspace = to_c(neg->subspace);
      out->gamma = {neg->gamma.y, neg->gamma.z, neg->gamma.yz};
      out->y = neg->y;
      out->z = neg->z;
      out->p = neg->value;
      out->min_p = neg->value;
    } else {
      out->min_p = std::get<qcohere::ClassicalVerdict>(cert).min_p;
      out->p = out->min_p;
    }
  });
}

qc_status qc_multi_phase_evaluate(const qc_state* state, const qc_observable* basis,
                                  const double* phases, double* out) {
  return guarded([&] {
    require(state, basis, phases, out);
    const auto dist = qcohere::multi_phase_distribution(state->value, basis->value);
    *out = dist(std::span<const double>(phases, dist.dim()));
  });
}

qc_status qc_phase_moment(const qc_state* state, const qc_observable* basis, size_t j, size_t k,
                          double* re, double* im) {
  return guarded([&] {
    require(state, basis, re, im);
    const Complex m = qcohere::moment(qcohere::multi_phase_distribution(state->value, basis->value), j, k);
    *re = m.real();
    *im = m.imag();
  });
}

qc_status qc_renyi_integral(const qc_state* state, const qc_observable* basis, double* out) {
  return guarded([&] {
    require(state, basis, out);
    *out = qcohere::renyi_integral(qcohere::multi_phase_distribution(state->value, basis->value));
  });
}

qc_status qc_renyi_integral_sampled(const qc_state* state, const qc_observable* basis,
                                    size_t samples, uint64_t seed, size_t workers, double* out) {
  return guarded([&] {
    require(state, basis, out);
    *out = qcohere::sampled_renyi_integral(state->value, basis->value, samples, seed, workers);
  });
}

qc_status qc_covariance_check(const qc_state* state, const qc_observable* basis, size_t j,
                              double lambda, const double* phases, double* out) {
  return guarded([&] {
    require(state, basis, phases, out);
    const auto pair = qcohere::covariance_check(state->value, basis->value, j, lambda,
                                                std::span<const double>(phases, state->value.dim()));
    out[0] = pair.shifted_state;
    out[1] = pair.shifted_argument;
  });
}

qc_status qc_mutual_coherence(const qc_state* state, const qc_observable* basis, double* re,
                              double* im) {
  return guarded([&] {
    require(state, basis, re, im);
    const auto dist = qcohere::single_phase_distribution(state->value, basis->value);
    for (std::size_t i = 0; i < dist.gammas().size(); ++i) {
      re[i] = dist.gammas()[i].real();
      im[i] = dist.gammas()[i].imag();
    }
  });
}

qc_status qc_single_phase_evaluate(const qc_state* state, const qc_observable* basis, double phi,
                                   double* out) {
  return guarded([&] {
    require(state, basis, out);
    *out = qcohere::single_phase_distribution(state->value, basis->value)(phi);
  });
}

qc_status qc_susskind_glogower_moment(const qc_state* state, const qc_observable* basis, long tau,
                                      double* re, double* im) {
  return guarded([&] {
    require(state, basis, re, im);
    const Complex m = qcohere::susskind_glogower_moment(state->value, basis->value, tau);
    *re = m.real();
    *im = m.imag();
  });
}

qc_status qc_povm_create(size_t dim, size_t count, const double* re, const double* im,
                         qc_povm** out) {
  return guarded([&] {
    require(re, im, out);
    std::vector<CMatrix> outcomes;
    outcomes.reserve(count);
    for (std::size_t mu = 0; mu < count; ++mu) {
      outcomes.push_back(read_matrix(dim, dim, re + mu * dim * dim, im + mu * dim * dim));
    }
    emit(qcohere::Povm::make(std::move(outcomes)), out);
  });
}

qc_status qc_povm_projective(const qc_observable* basis, qc_povm** out) {
  return guarded([&] {
    require(basis, out);
    emit(qcohere::Povm::projective(basis->value), out);
  });
}

qc_status qc_povm_phase(size_t dim, qc_povm** out) {
  return guarded([&] {
    require(out);
    emit(qcohere::Povm::phase(dim), out);
  });
}

void qc_povm_destroy(qc_povm* povm) { delete povm; }

size_t qc_povm_size(const qc_povm* povm) { return povm ? povm->value.size() : 0; }

size_t qc_povm_dim(const qc_povm* povm) { return povm ? povm->value.dim() : 0; }

qc_status qc_povm_eta(const qc_povm* povm, int* has_eta, double* eta) {
  return guarded([&] {
    require(povm, has_eta, eta);
    *has_eta = povm->value.eta().has_value();
    *eta = povm->value.eta().value_or(0.0);
  });
}

qc_status qc_wiener_kintchine(const qc_state* state, const qc_observable* basis, qc_resolution* out) {
  return guarded([&] {
    require(state, basis, out);
    const auto r = qcohere::wiener_kintchine_resolution(
        qcohere::single_phase_distribution(state->value, basis->value));
    *out = {r.delta2_lambda, r.integral_p2, r.coherence_time, r.flat};
  });
}

qc_status qc_statistical_distance(const qc_state* state, const qc_observable* generator,
                                  double lambda, const qc_povm* povm, double* out) {
  return guarded([&] {
    require(state, generator, povm, out);
    *out = qcohere::statistical_distance(state->value, {generator->value, lambda}, povm->value);
  });
}

qc_status qc_statistics_derivative(const qc_state* state, const qc_observable* generator,
                                   const qc_povm* povm, double* out) {
  return guarded([&] {
    require(state, generator, povm, out);
    const auto d = qcohere::statistics_derivative(state->value, generator->value, povm->value);
    std::copy(d.begin(), d.end(), out);
  });
}

qc_status qc_small_signal_quadratic(const qc_state* state, const qc_observable* generator,
                                    const qc_povm* povm, double* out) {
  return guarded([&] {
    require(state, generator, povm, out);
    *out = qcohere::small_signal_quadratic(state->value, generator->value, povm->value);
  });
}

qc_status qc_uncertainty_bound(const qc_state* state, const qc_observable* generator,
                               const qc_povm* povm, qc_bound* out) {
  return guarded([&] {
    require(state, generator, povm, out);
    const auto b = qcohere::uncertainty_bound_check(state->value, generator->value, povm->value);
    *out = {b.lhs, b.rhs, b.applicable, b.satisfied};
  });
}

qc_status qc_density_matrix_distance(const qc_state* state, const qc_observable* generator,
                                     double lambda, qc_density_distance* out) {
  return guarded([&] {
    require(state, generator, out);
    const auto d = qcohere::density_matrix_distance(state->value, {generator->value, lambda});
    *out = {d.exact, d.quadratic_coefficient, d.commutator_route};
  });
}

}  // extern "C"
