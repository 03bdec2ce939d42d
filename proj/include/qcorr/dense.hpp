#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "qcorr/partitions.hpp"

namespace qcorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Ordered per-party local dimensions. Party 1 is the leftmost (most
/// significant) tensor factor of basis indices.
struct SystemShape {
  std::vector<int> dims;

  int parties() const { return static_cast<int>(dims.size()); }
  int total_dim() const;
  bool operator==(const SystemShape&) const = default;
};

/// Role marker: proper density matrices get the full state validation,
/// cumulants and pseudo-states are merely Hermitian.
enum class OperatorRole { State, Hermitian };

/// Dense Hermitian operator on a multi-party space.
struct DenseOperator {
  SystemShape shape;
  Matrix mat;
  OperatorRole role = OperatorRole::Hermitian;
};

struct PureState {
  SystemShape shape;
  Vector amps;
};

/// Per-party Kraus operators; the channel acts as the product of the
/// single-party maps.
struct LocalChannel {
  std::vector<std::vector<Matrix>> kraus;  // kraus[party][k], square matrices

  int parties() const { return static_cast<int>(kraus.size()); }
};

/// Validating constructors.
DenseOperator make_state(SystemShape shape, Matrix mat);
DenseOperator make_hermitian(SystemShape shape, Matrix mat);
PureState make_pure_state(SystemShape shape, Vector amps);
LocalChannel make_local_channel(const SystemShape& shape, std::vector<std::vector<Matrix>> kraus);

DenseOperator to_density(const PureState& psi);

DenseOperator tensor_product(const DenseOperator& a, const DenseOperator& b);

/// Reduce to the parties in `keep` (kept in their original relative order).
DenseOperator partial_trace(const DenseOperator& op, SubsetMask keep);

/// Reorder parties. source_slot[k] is the 0-based current position of the
/// party that ends up at position k.
DenseOperator permute_parties(const DenseOperator& op, const std::vector<int>& source_slot);

/// Reinterpret consecutive runs of parties as single parties (no data
/// movement); group_sizes must sum to the party count.
DenseOperator fuse_adjacent(const DenseOperator& op, const std::vector<int>& group_sizes);

/// Real eigenvalues in descending order. Checks hermiticity, the
/// trace/eigenvalue-sum consistency, and (for moderate dimensions) the
/// reconstruction residual.
std::vector<double> hermitian_spectrum(const DenseOperator& op);

/// Sum of |eigenvalue|.
double trace_norm(const DenseOperator& op);

/// Half the trace norm of a - b; requires equal shapes and equal traces.
double trace_distance(const DenseOperator& a, const DenseOperator& b);

/// Base-2 von Neumann entropy of a state.
double von_neumann_entropy(const DenseOperator& rho);

DenseOperator apply_local_channel(const DenseOperator& rho, const LocalChannel& ch);
DenseOperator apply_local_unitary(const DenseOperator& rho, const std::vector<Matrix>& us);

/// Deterministic seeded generators used by the property harnesses.
PureState random_pure_state(const SystemShape& shape, std::uint64_t seed);
DenseOperator random_mixed_state(const SystemShape& shape, int rank, std::uint64_t seed);
std::vector<Matrix> random_local_unitary(const SystemShape& shape, std::uint64_t seed);
LocalChannel random_local_channel(const SystemShape& shape, int kraus_count, std::uint64_t seed);

/// Single Haar-random unitary of dimension d.
Matrix random_unitary(int d, std::uint64_t seed);

}  // namespace qcorr
