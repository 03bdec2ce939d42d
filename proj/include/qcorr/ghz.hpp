#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qcorr/dense.hpp"

namespace qcorr {

/// Exact arbitrary-precision fraction; always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Coefficient of the maximally classically correlated N-qubit state's
/// cumulant, from the explicit double sum
/// sum_{M=1..N} sum_{i=0..M-1} (-1)^(M+i-1) (M-i)^N (M-1)! / (2^M i! (M-i)!).
Rational c_coefficient_sum(int n);

/// The same coefficient from the series route: minus the (N-1)-th derivative
/// of 1/(1+e^l) at 0, realized as an exact power-series reciprocal.
Rational c_coefficient_derivative(int n);

/// M_C of the classically correlated N-qubit state: 2^(N-1) |c_N| for even
/// N, zero for odd N.
Rational classical_measure(int n);

/// M_C of the N-qubit GHZ state: the classical value plus the corner-term
/// correction (|c_N + 1/2| + |c_N - 1/2| - 2 |c_N|) / 2; exactly 1/2 for odd
/// N. Coincides with the classical value whenever |c_N| >= 1/2.
Rational ghz_measure(int n);

/// Dense cross-checks (n <= 6): maximum entry deviation between the dense
/// cumulant and the closed form.
double classical_cumulant_dense_check(int n);
double ghz_offdiagonal_check(int n);

struct GhzRow {
  int n;
  Rational c_n;
  Rational measure_ghz;
  Rational measure_classical;
};

std::vector<GhzRow> fig1_table(int max_n);

/// CSV with exact fraction columns followed by float renderings.
std::string fig1_csv(const std::vector<GhzRow>& rows);

/// Dense helpers for the GHZ family.
DenseOperator ghz_state(int n);
DenseOperator classical_correlated_state(int n);

}  // namespace qcorr
