#include "qcorr/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

namespace {

void check_shape(const SystemShape& shape) {
  if (shape.dims.empty()) throw DomainError("shape needs at least one party");
  if (shape.parties() > 32) throw DomainError("at most 32 parties supported");
  long total = 1;
  for (int d : shape.dims) {
    if (d < 2) throw DomainError("local dimensions must be >= 2");
    total *= d;
    if (total > limits().max_dense_dim) {
      throw ResourceError("total dimension exceeds the dense guard of " +
                          std::to_string(limits().max_dense_dim));
    }
  }
}

double max_abs(const Matrix& m) {
  return m.cwiseAbs().maxCoeff();
}

void check_hermitian(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("operator matrix must be square");
  if (max_abs(m - m.adjoint()) > tol().hermiticity) {
    throw DomainError("operator is not Hermitian within tolerance");
  }
}

/// Strides of each party in the flattened basis index (party 1 is the most
/// significant digit).
std::vector<long> party_strides(const SystemShape& shape) {
  const int n = shape.parties();
  std::vector<long> s(n, 1);
  for (int p = n - 2; p >= 0; --p) s[p] = s[p + 1] * shape.dims[p + 1];
  return s;
}

}  // namespace

int SystemShape::total_dim() const {
  long total = 1;
  for (int d : dims) total *= d;
  return static_cast<int>(total);
}

DenseOperator make_state(SystemShape shape, Matrix mat) {
  check_shape(shape);
  if (mat.rows() != shape.total_dim()) {
    throw DomainError("matrix dimension does not match the shape");
  }
  check_hermitian(mat);
  if (std::abs(mat.trace().real() - 1.0) > tol().trace || std::abs(mat.trace().imag()) > tol().trace) {
    throw DomainError("state trace must equal 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < tol().state_min_eigenvalue) {
    throw DomainError("state has a negative eigenvalue beyond tolerance");
  }
  return DenseOperator{std::move(shape), std::move(mat), OperatorRole::State};
}

DenseOperator make_hermitian(SystemShape shape, Matrix mat) {
  check_shape(shape);
  if (mat.rows() != shape.total_dim()) {
    throw DomainError("matrix dimension does not match the shape");
  }
  check_hermitian(mat);
  return DenseOperator{std::move(shape), std::move(mat), OperatorRole::Hermitian};
}

PureState make_pure_state(SystemShape shape, Vector amps) {
  check_shape(shape);
  if (amps.size() != shape.total_dim()) {
    throw DomainError("amplitude count does not match the shape");
  }
  if (std::abs(amps.norm() - 1.0) > tol().unit_norm) {
    throw DomainError("pure state must have unit norm");
  }
  return PureState{std::move(shape), std::move(amps)};
}

LocalChannel make_local_channel(const SystemShape& shape, std::vector<std::vector<Matrix>> kraus) {
  if (static_cast<int>(kraus.size()) != shape.parties()) {
    throw DomainError("channel party count does not match the shape");
  }
  for (int p = 0; p < shape.parties(); ++p) {
    const int d = shape.dims[p];
    if (kraus[p].empty()) throw DomainError("each party needs at least one Kraus operator");
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& k : kraus[p]) {
      if (k.rows() != d || k.cols() != d) {
        throw DomainError("Kraus operator dimension mismatch on party " + std::to_string(p + 1));
      }
      sum += k.adjoint() * k;
    }
    if (max_abs(sum - Matrix::Identity(d, d)) > tol().channel_trace_preserving) {
      throw DomainError("channel is not trace preserving on party " + std::to_string(p + 1));
    }
  }
  return LocalChannel{std::move(kraus)};
}

DenseOperator to_density(const PureState& psi) {
  Matrix rho = psi.amps * psi.amps.adjoint();
  return DenseOperator{psi.shape, std::move(rho), OperatorRole::State};
}

DenseOperator tensor_product(const DenseOperator& a, const DenseOperator& b) {
  SystemShape shape;
  shape.dims = a.shape.dims;
  shape.dims.insert(shape.dims.end(), b.shape.dims.begin(), b.shape.dims.end());
  check_shape(shape);
  const long da = a.mat.rows(), db = b.mat.rows();
  Matrix out(da * db, da * db);
  for (long i = 0; i < da; ++i) {
    for (long j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.mat(i, j) * b.mat;
    }
  }
  OperatorRole role = (a.role == OperatorRole::State && b.role == OperatorRole::State)
                          ? OperatorRole::State
                          : OperatorRole::Hermitian;
  return DenseOperator{std::move(shape), std::move(out), role};
}

DenseOperator partial_trace(const DenseOperator& op, SubsetMask keep) {
  const int n = op.shape.parties();
  if (keep.empty()) throw DomainError("partial trace needs a nonempty keep set; use trace()");
  if (!keep.subset_of(SubsetMask::full(n))) {
    throw DomainError("keep set references parties outside the shape");
  }

  const std::vector<long> strides = party_strides(op.shape);
  std::vector<int> kept, traced;
  for (int p = 1; p <= n; ++p) (keep.contains(p) ? kept : traced).push_back(p);

  // Offsets contributed by kept and traced digits are independent, so every
  // input index splits as K[a] + T[t].
  auto offsets = [&](const std::vector<int>& parties) {
    std::vector<long> off{0};
    for (int p : parties) {
      const int d = op.shape.dims[p - 1];
      std::vector<long> next;
      next.reserve(off.size() * d);
      for (long base : off) {
        for (int v = 0; v < d; ++v) next.push_back(base + v * strides[p - 1]);
      }
      off = std::move(next);
    }
    return off;
  };
  const std::vector<long> kept_off = offsets(kept);
  const std::vector<long> traced_off = offsets(traced);

  SystemShape out_shape;
  for (int p : kept) out_shape.dims.push_back(op.shape.dims[p - 1]);
  const long dk = static_cast<long>(kept_off.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (long a = 0; a < dk; ++a) {
    for (long b = 0; b < dk; ++b) {
      Complex acc = 0.0;
      for (long t : traced_off) acc += op.mat(kept_off[a] + t, kept_off[b] + t);
      out(a, b) = acc;
    }
  }
  return DenseOperator{std::move(out_shape), std::move(out), op.role};
}

DenseOperator permute_parties(const DenseOperator& op, const std::vector<int>& source_slot) {
  const int n = op.shape.parties();
  if (static_cast<int>(source_slot.size()) != n) {
    throw DomainError("permutation size does not match the party count");
  }
  std::vector<bool> seen(n, false);
  for (int s : source_slot) {
    if (s < 0 || s >= n || seen[s]) throw DomainError("invalid party permutation");
    seen[s] = true;
  }

  SystemShape out_shape;
  out_shape.dims.reserve(n);
  for (int k = 0; k < n; ++k) out_shape.dims.push_back(op.shape.dims[source_slot[k]]);

  const std::vector<long> in_strides = party_strides(op.shape);
  const long dim = op.mat.rows();
  std::vector<long> index_map(dim);
  // Decompose the new index into digits and place each digit at its source
  // slot's stride in the old index.
  for (long i = 0; i < dim; ++i) {
    long rem = i, old = 0;
    for (int k = n - 1; k >= 0; --k) {
      const int d = out_shape.dims[k];
      old += (rem % d) * in_strides[source_slot[k]];
      rem /= d;
    }
    index_map[i] = old;
  }
  Matrix out(dim, dim);
  for (long i = 0; i < dim; ++i) {
    for (long j = 0; j < dim; ++j) out(i, j) = op.mat(index_map[i], index_map[j]);
  }
  return DenseOperator{std::move(out_shape), std::move(out), op.role};
}

DenseOperator fuse_adjacent(const DenseOperator& op, const std::vector<int>& group_sizes) {
  int covered = 0;
  SystemShape out_shape;
  for (int g : group_sizes) {
    if (g < 1) throw DomainError("group sizes must be positive");
    long d = 1;
    for (int k = 0; k < g; ++k) {
      if (covered >= op.shape.parties()) throw DomainError("group sizes exceed the party count");
      d *= op.shape.dims[covered++];
    }
    out_shape.dims.push_back(static_cast<int>(d));
  }
  if (covered != op.shape.parties()) throw DomainError("group sizes must cover all parties");
  return DenseOperator{std::move(out_shape), op.mat, op.role};
}

std::vector<double> hermitian_spectrum(const DenseOperator& op) {
  check_hermitian(op.mat);
  const long dim = op.mat.rows();
  Eigen::VectorXd ev;
  if (dim <= 1024) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(op.mat);
    ev = es.eigenvalues();
    const Matrix recon =
        es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    if (max_abs(op.mat - recon) > tol().spectrum_residual) {
      throw DomainError("eigendecomposition residual too large");
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> es(op.mat, Eigen::EigenvaluesOnly);
    ev = es.eigenvalues();
  }
  if (std::abs(ev.sum() - op.mat.trace().real()) > tol().spectrum_trace) {
    throw DomainError("eigenvalue sum does not match the trace");
  }
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double trace_norm(const DenseOperator& op) {
  double sum = 0.0;
  for (double l : hermitian_spectrum(op)) sum += std::abs(l);
  return sum;
}

double trace_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.shape != b.shape) throw DomainError("trace distance requires matching shapes");
  const Complex ta = a.mat.trace(), tb = b.mat.trace();
  if (std::abs(ta - tb) > tol().trace_match) {
    throw DomainError("trace distance is defined for equal-trace operators");
  }
  Matrix diff = a.mat - b.mat;
  // Fix the sign of the difference from its first nonzero entry so that the
  // two argument orders run the identical computation (exact symmetry).
  for (long i = 0; i < diff.size(); ++i) {
    const Complex c = diff.data()[i];
    if (c != 0.0) {
      if (c.real() < 0.0 || (c.real() == 0.0 && c.imag() < 0.0)) diff = -diff;
      break;
    }
  }
  return 0.5 * trace_norm(DenseOperator{a.shape, std::move(diff), OperatorRole::Hermitian});
}

double von_neumann_entropy(const DenseOperator& rho) {
  double s = 0.0;
  for (double l : hermitian_spectrum(rho)) {
    if (l < tol().state_min_eigenvalue) {
      throw DomainError("entropy input has a negative eigenvalue beyond tolerance");
    }
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

namespace {

/// Apply a one-party matrix to the row (left) index of the given party.
Matrix apply_left(const Matrix& k, const Matrix& m, long left, int d, long right) {
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (long a = 0; a < left; ++a) {
    for (long b = 0; b < right; ++b) {
      const long base = a * d * right + b;
      for (int y = 0; y < d; ++y) {
        for (int x = 0; x < d; ++x) {
          const Complex c = k(y, x);
          if (c == 0.0) continue;
          out.row(base + y * right) += c * m.row(base + x * right);
        }
      }
    }
  }
  return out;
}

}  // namespace

DenseOperator apply_local_channel(const DenseOperator& rho, const LocalChannel& ch) {
  if (ch.parties() != rho.shape.parties()) {
    throw DomainError("channel party count does not match the state");
  }
  Matrix cur = rho.mat;
  long left = 1;
  for (int p = 0; p < rho.shape.parties(); ++p) {
    const int d = rho.shape.dims[p];
    long right = 1;
    for (int q = p + 1; q < rho.shape.parties(); ++q) right *= rho.shape.dims[q];
    Matrix next = Matrix::Zero(cur.rows(), cur.cols());
    for (const Matrix& k : ch.kraus[p]) {
      if (k.rows() != d) throw DomainError("Kraus dimension mismatch");
      Matrix km = apply_left(k, cur, left, d, right);
      next += apply_left(k.conjugate(), km.transpose(), left, d, right).transpose();
    }
    cur = std::move(next);
    left *= d;
  }
  if (rho.role == OperatorRole::State &&
      std::abs(cur.trace().real() - 1.0) > tol().channel_trace_preserving) {
    throw DomainError("channel application failed to preserve the trace");
  }
  return DenseOperator{rho.shape, std::move(cur), rho.role};
}

DenseOperator apply_local_unitary(const DenseOperator& rho, const std::vector<Matrix>& us) {
  LocalChannel ch;
  ch.kraus.reserve(us.size());
  for (const Matrix& u : us) ch.kraus.push_back({u});
  return apply_local_channel(rho, ch);
}

PureState random_pure_state(const SystemShape& shape, std::uint64_t seed) {
  check_shape(shape);
  Rng rng(seed);
  Vector v(shape.total_dim());
  for (long i = 0; i < v.size(); ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
  v /= v.norm();
  return PureState{shape, std::move(v)};
}

DenseOperator random_mixed_state(const SystemShape& shape, int rank, std::uint64_t seed) {
  check_shape(shape);
  const int dim = shape.total_dim();
  if (rank < 1) throw DomainError("rank must be positive");
  Rng rng(seed);
  Matrix g(dim, rank);
  for (long i = 0; i < g.rows(); ++i) {
    for (long j = 0; j < g.cols(); ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Symmetrize away the last bits of rounding noise.
  rho = 0.5 * (rho + Matrix(rho.adjoint()));
  return DenseOperator{shape, std::move(rho), OperatorRole::State};
}

Matrix random_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is Haar.
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= (rjj == 0.0) ? 1.0 : rjj / std::abs(rjj);
  }
  return q;
}

std::vector<Matrix> random_local_unitary(const SystemShape& shape, std::uint64_t seed) {
  std::vector<Matrix> us;
  us.reserve(shape.parties());
  for (int p = 0; p < shape.parties(); ++p) {
    us.push_back(random_unitary(shape.dims[p], Rng::derive_seed(seed, p)));
  }
  return us;
}

LocalChannel random_local_channel(const SystemShape& shape, int kraus_count, std::uint64_t seed) {
  if (kraus_count < 1) throw DomainError("need at least one Kraus operator");
  std::vector<std::vector<Matrix>> kraus(shape.parties());
  for (int p = 0; p < shape.parties(); ++p) {
    const int d = shape.dims[p];
    // Random isometry from d to d*kraus_count, split into blocks.
    Matrix u = random_unitary(d * kraus_count, Rng::derive_seed(seed, p));
    for (int k = 0; k < kraus_count; ++k) {
      kraus[p].push_back(u.block(k * d, 0, d, d));
    }
  }
  return make_local_channel(shape, std::move(kraus));
}

}  // namespace qcorr
