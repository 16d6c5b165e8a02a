/*
 * qcohere C API.
 *
 * Opaque handles own C++ values; every handle returned through an out
 * parameter must be released with the matching *_destroy function. Matrices
 * cross the boundary as separate real and imaginary arrays in row-major
 * order. Every fallible call returns a qc_status; on failure the message of
 * the most recent error on the calling thread is available from
 * qc_last_error().
 */
#ifndef QCOHERE_H
#define QCOHERE_H

#include <stddef.h>
#include <stdint.h>

#if defined(QCOHERE_BUILDING_LIBRARY)
#define QC_API __attribute__((visibility("default")))
#else
#define QC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qc_status {
  QC_OK = 0,
  QC_ERR_NON_SQUARE = 1,
  QC_ERR_NON_HERMITIAN = 2,
  QC_ERR_TRACE_NOT_ONE = 3,
  QC_ERR_NOT_PSD = 4,
  QC_ERR_DIMENSION_MISMATCH = 5,
  QC_ERR_INVALID_RANK = 6,
  QC_ERR_INVALID_STATE = 7,
  QC_ERR_INVALID_BASIS = 8,
  QC_ERR_INDEX_OUT_OF_RANGE = 9,
  QC_ERR_EQUAL_INDICES = 10,
  QC_ERR_INVALID_GAMMA = 11,
  QC_ERR_ZERO_GAMMA_DENOMINATOR = 12,
  QC_ERR_TAU_OUT_OF_RANGE = 13,
  QC_ERR_INVALID_POVM = 14,
  QC_ERR_ETA_MISSING = 15,
  QC_ERR_DEGENERATE_DISTRIBUTION = 16,
  QC_ERR_INVALID_ARGUMENT = 17,
  QC_ERR_NULL_POINTER = 100,
  QC_ERR_INTERNAL = 101
} qc_status;

typedef struct qc_state qc_state;
typedef struct qc_observable qc_observable;
typedef struct qc_povm qc_povm;

QC_API const char* qc_status_name(qc_status status);
QC_API const char* qc_last_error(void);

/* ---- states and observables ------------------------------------------ */

typedef struct qc_validation {
  int square;
  int hermitian;
  int unit_trace;
  int positive;
  double hermiticity_violation;
  double trace_violation;
  double min_eigenvalue;
  qc_status failure; /* QC_OK when every invariant holds */
} qc_validation;

/* Tolerances are the library defaults (1e-9, psd 1e-8). `rows` x `cols`. */
QC_API qc_status qc_validate_state(size_t rows, size_t cols, const double* re, const double* im,
                                   qc_validation* out);

QC_API qc_status qc_state_create(size_t dim, const double* re, const double* im, qc_state** out);
QC_API qc_status qc_state_mixed(size_t dim, qc_state** out);
QC_API qc_status qc_state_plus(size_t dim, qc_state** out);
QC_API qc_status qc_state_random(size_t dim, size_t rank, uint64_t seed, qc_state** out);
QC_API void qc_state_destroy(qc_state* state);
QC_API size_t qc_state_dim(const qc_state* state);
/* Writes dim*dim entries to each of re and im. */
QC_API qc_status qc_state_entries(const qc_state* state, double* re, double* im);

/* basis_re/basis_im may both be NULL for the computational basis. */
QC_API qc_status qc_observable_create(size_t dim, const double* eigenvalues, const double* basis_re,
                                      const double* basis_im, qc_observable** out);
QC_API qc_status qc_observable_computational(size_t dim, qc_observable** out);
QC_API qc_status qc_observable_linear(size_t dim, qc_observable** out);
QC_API qc_status qc_observable_hadamard(size_t dim, qc_observable** out);
QC_API qc_status qc_observable_random(size_t dim, uint64_t seed, qc_observable** out);
QC_API void qc_observable_destroy(qc_observable* observable);
QC_API size_t qc_observable_dim(const qc_observable* observable);
QC_API qc_status qc_observable_eigenvalues(const qc_observable* observable, double* out);
QC_API qc_status qc_observable_basis(const qc_observable* observable, double* re, double* im);

QC_API qc_status qc_evolve(const qc_state* state, const qc_observable* generator, double lambda,
                           qc_state** out);

/* ---- coherence -------------------------------------------------------- */

/* Matrix of the state in the observable's basis (dim*dim entries). */
QC_API qc_status qc_coherence_matrix(const qc_state* state, const qc_observable* basis, double* re,
                                     double* im);
QC_API qc_status qc_hilbert_schmidt_coherence(const qc_state* state, const qc_observable* basis,
                                              double* out);
QC_API qc_status qc_commutator_norm(const qc_state* state, const qc_observable* observable,
                                    double* out);
/* *found = 0 and *out = NULL when the state is I/N within eps. */
QC_API qc_status qc_find_coherent_basis(const qc_state* state, double eps, int* found,
                                        qc_observable** out, double* eps_out);

/* ---- nonclassicality -------------------------------------------------- */

typedef struct qc_pauli_subspace {
  size_t j;
  size_t k;
  double phi;
  double exp_z;
  double exp_phi;
  double exp_perp;
} qc_pauli_subspace;

typedef struct qc_gamma {
  double y;
  double z;
  double yz;
} qc_gamma;

typedef struct qc_witness {
  int nonclassical;
  qc_pauli_subspace subspace; /* valid when nonclassical */
  qc_gamma gamma;             /* valid when nonclassical */
  int y;
  int z;
  double p;     /* negative p(y,z) when nonclassical */
  double min_p; /* classical infimum otherwise */
} qc_witness;

QC_API qc_status qc_pauli_subspace_compute(const qc_state* state, const qc_observable* basis,
                                           size_t j, size_t k, qc_pauli_subspace* out);
/* out[4] ordered (-1,-1), (-1,+1), (+1,-1), (+1,+1). */
QC_API qc_status qc_joint_distribution(const qc_pauli_subspace* subspace, const qc_gamma* gamma,
                                       double* out);
QC_API qc_status qc_witness_search(const qc_state* state, const qc_observable* basis,
                                   double tol_witness, int refine, qc_witness* out);

/* ---- phase distributions ---------------------------------------------- */

QC_API qc_status qc_multi_phase_evaluate(const qc_state* state, const qc_observable* basis,
                                         const double* phases, double* out);
QC_API qc_status qc_phase_moment(const qc_state* state, const qc_observable* basis, size_t j,
                                 size_t k, double* re, double* im);
QC_API qc_status qc_renyi_integral(const qc_state* state, const qc_observable* basis, double* out);
QC_API qc_status qc_renyi_integral_sampled(const qc_state* state, const qc_observable* basis,
                                           size_t samples, uint64_t seed, size_t workers,
                                           double* out);
/* out[0]: shifted state, out[1]: shifted argument. */
QC_API qc_status qc_covariance_check(const qc_state* state, const qc_observable* basis, size_t j,
                                     double lambda, const double* phases, double* out);
/* 2*dim-1 entries, tau = -(dim-1) .. dim-1. */
QC_API qc_status qc_mutual_coherence(const qc_state* state, const qc_observable* basis, double* re,
                                     double* im);
QC_API qc_status qc_single_phase_evaluate(const qc_state* state, const qc_observable* basis,
                                          double phi, double* out);
QC_API qc_status qc_susskind_glogower_moment(const qc_state* state, const qc_observable* basis,
                                             long tau, double* re, double* im);

/* ---- metrology -------------------------------------------------------- */

/* `count` elements, each dim*dim, concatenated. */
QC_API qc_status qc_povm_create(size_t dim, size_t count, const double* re, const double* im,
                                qc_povm** out);
QC_API qc_status qc_povm_projective(const qc_observable* basis, qc_povm** out);
QC_API qc_status qc_povm_phase(size_t dim, qc_povm** out);
QC_API void qc_povm_destroy(qc_povm* povm);
QC_API size_t qc_povm_size(const qc_povm* povm);
QC_API size_t qc_povm_dim(const qc_povm* povm);
QC_API qc_status qc_povm_eta(const qc_povm* povm, int* has_eta, double* eta);

typedef struct qc_resolution {
  double delta2_lambda;
  double integral_p2;
  double coherence_time;
  int flat;
} qc_resolution;

typedef struct qc_bound {
  double lhs;
  double rhs;
  int applicable;
  int satisfied;
} qc_bound;

typedef struct qc_density_distance {
  double exact;
  double quadratic_coefficient;
  double commutator_route;
} qc_density_distance;

/* Uses the single-phase distribution of the state relative to `basis`. */
QC_API qc_status qc_wiener_kintchine(const qc_state* state, const qc_observable* basis,
                                     qc_resolution* out);
QC_API qc_status qc_statistical_distance(const qc_state* state, const qc_observable* generator,
                                         double lambda, const qc_povm* povm, double* out);
/* qc_povm_size(povm) entries. */
QC_API qc_status qc_statistics_derivative(const qc_state* state, const qc_observable* generator,
                                          const qc_povm* povm, double* out);
QC_API qc_status qc_small_signal_quadratic(const qc_state* state, const qc_observable* generator,
                                           const qc_povm* povm, double* out);
QC_API qc_status qc_uncertainty_bound(const qc_state* state, const qc_observable* generator,
                                      const qc_povm* povm, qc_bound* out);
QC_API qc_status qc_density_matrix_distance(const qc_state* state, const qc_observable* generator,
                                            double lambda, qc_density_distance* out);

#ifdef __cplusplus
}
#endif

#endif /* QCOHERE_H */
