#pragma once

namespace qcorr {

/// Every numerical tolerance used by the library, in one record.
struct Tolerances {
  double hermiticity = 1e-12;          // max |H - H^dag| entry
  double trace = 1e-12;                // declared-trace deviation for states
  double state_min_eigenvalue = -1e-10;
  double unit_norm = 1e-12;            // pure-state normalization
  double channel_trace_preserving = 1e-10;
  double trace_match = 1e-10;          // equal-trace precondition of the distance
  double spectrum_trace = 1e-9;        // sum(eigenvalues) vs trace
  double spectrum_residual = 1e-9;     // || H - V diag(l) V^dag ||_max
  double cumulant_trace = 1e-10;
  double marginal_annihilation = 1e-9; // single-party partial traces of a cumulant
  double reconstruction = 1e-9;        // cumulant-sum identity
  double measure_invariance = 1e-9;    // unitary/augmentation invariance, monotonicity slack
  double product_state_zero = 1e-10;   // cumulant entries of a product state
};

/// Size guards. Exceeding one raises ResourceError.
struct Limits {
  int max_partition_elements = 14;     // Bell-number growth guard
  int max_dense_dim = 4096;
  int max_ursell_parties = 6;
  int max_beta_qubits = 12;            // partition sum per group element
  int max_spectrum_qubits = 24;        // sign-assignment sweep
  int max_dense_stabilizer_qubits = 10;
  int max_ghz_table_n = 64;
};

inline const Tolerances& tol() {
  static const Tolerances t;
  return t;
}

inline const Limits& limits() {
  static const Limits l;
  return l;
}

}  // namespace qcorr
