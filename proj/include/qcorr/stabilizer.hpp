#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcorr/dense.hpp"
#include "qcorr/partitions.hpp"

namespace qcorr {

/// N-qubit Pauli operator i^phase_exp * s_1 x ... x s_N with s_q in
/// {I, X, Y, Z} encoded by the bit pair (x, z); (1,1) is Y. Qubit q occupies
/// bit q-1 of the bit vectors, matching SubsetMask. Hermitian iff the phase
/// exponent is even.
struct PauliOperator {
  int n = 0;
  std::uint64_t x_bits = 0;
  std::uint64_t z_bits = 0;
  int phase_exp = 0;  // phase = i^phase_exp, 0..3

  static PauliOperator identity(int n) { return PauliOperator{n, 0, 0, 0}; }

  bool is_hermitian() const { return phase_exp % 2 == 0; }
  SubsetMask support() const { return SubsetMask(static_cast<std::uint32_t>(x_bits | z_bits)); }
  bool is_identity_pattern() const { return (x_bits | z_bits) == 0; }

  bool operator==(const PauliOperator&) const = default;
};

/// Exact group product with the symplectic phase rule.
PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q);

bool pauli_commutes(const PauliOperator& p, const PauliOperator& q);

/// Text form: optional sign prefix (+, -, +i, -i) then one of I,X,Y,Z per
/// qubit, e.g. "-ZZ". parse(format(p)) == p.
PauliOperator parse_pauli(std::string_view text);
std::string format_pauli(const PauliOperator& p);

/// Dense 2^n x 2^n matrix of the operator; qubit 1 is the leftmost factor.
Matrix dense_pauli(const PauliOperator& p);

/// Independent commuting Hermitian generators; the represented group has
/// 2^k elements and never contains -I.
struct StabilizerGroup {
  int n = 0;
  std::vector<PauliOperator> generators;

  int k() const { return static_cast<int>(generators.size()); }
};

/// Checks hermiticity (real phase), pairwise commutation and GF(2)
/// independence; each violation raises a distinct DomainError naming the
/// offending generator(s).
StabilizerGroup validate_stabilizer(std::vector<PauliOperator> generators);

/// All 2^k group elements, Gray-code ordered so consecutive elements differ
/// by one generator factor. Pairs are (exponent vector, element).
std::vector<std::pair<std::uint32_t, PauliOperator>> enumerate_elements(const StabilizerGroup& g);

/// (1/2^N) sum of all elements; requires k = n. The result is verified to be
/// a pure-state projector.
DenseOperator dense_from_stabilizer(const StabilizerGroup& g);

/// Elements supported inside s (still on the full qubit set).
std::vector<PauliOperator> reduced_stabilizer(const StabilizerGroup& g, SubsetMask s);

/// Cumulant of a stabilizer state expressed in the group algebra:
/// C = (1/2^N) sum_M beta_M M with exact integer beta, beta_identity = 0.
struct CumulantExpansion {
  StabilizerGroup group;
  std::vector<PauliOperator> elements;  // indexed by exponent vector
  std::vector<std::int64_t> beta;       // indexed by exponent vector
};

/// beta_M = 1 - sum over proper partitions compatible with M of
/// (-1)^B (B-1)!, where a partition is compatible iff M's bit restriction to
/// every block is the pattern of a group element. Matching on bit patterns is
/// enough: if each block restriction N_i is in the group, prod N_i has M's
/// bit pattern, and a group free of -I holds at most one element per
/// pattern, so prod N_i = M with the phases forced.
CumulantExpansion cumulant_coefficients(const StabilizerGroup& g);

/// Eigenvalues of the cumulant: one per sign assignment to the generators,
/// computed as a Walsh-Hadamard transform of beta. Descending order.
std::vector<double> stabilizer_spectrum(const CumulantExpansion& ce);

/// M_C of the stabilizer state, entirely in the group representation.
double stabilizer_measure(const StabilizerGroup& g);

struct ReducedMeasureResult {
  double value = 0.0;
  /// Set when s is a single party, where the measure is 0 by convention.
  bool single_party = false;
};

/// M_C of the reduced state on s, computed combinatorially; eigenvalues of
/// the support-restricted subgroup carry multiplicity 2^(|s| - k_s).
ReducedMeasureResult reduced_measure(const StabilizerGroup& g, SubsetMask s);

/// Random valid stabilizer group (k = n) from a random Clifford circuit
/// applied to the all-Z group, with random generator signs.
StabilizerGroup random_stabilizer_group(int n, std::uint64_t seed);

}  // namespace qcorr
