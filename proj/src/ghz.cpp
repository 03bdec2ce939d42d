#include "qcorr/ghz.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "qcorr/cumulant.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

namespace {

void check_range(int n) {
  if (n < 1 || n > limits().max_ghz_table_n) {
    throw DomainError("n out of range 1.." + std::to_string(limits().max_ghz_table_n));
  }
}

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

mpz_class power(int base, int exp) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return p;
}

Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

Rational c_coefficient_sum(int n) {
  check_range(n);
  Rational total = 0;
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) {
      mpz_class num = power(m - i, n) * factorial(m - 1);
      if ((m + i - 1) % 2 != 0) num = -num;
      mpz_class den = power(2, m) * factorial(i) * factorial(m - i);
      Rational term(num, den);
      term.canonicalize();
      total += term;
    }
  }
  total.canonicalize();
  return total;
}

Rational c_coefficient_derivative(int n) {
  check_range(n);
  // Power series of 1 + e^l up to order n-1, then its exact reciprocal;
  // the coefficient of l^(n-1) times (n-1)! is the derivative at 0. The
  // route carries a (-1)^(n-1) prefactor: for every n >= 2 this equals the
  // plain sign flip (even-order derivatives vanish), and it also covers the
  // degenerate n = 1 case.
  std::vector<Rational> series(n);
  series[0] = 2;
  for (int k = 1; k < n; ++k) series[k] = Rational(mpz_class(1), factorial(k));
  std::vector<Rational> recip(n);
  recip[0] = Rational(1, 2);
  for (int k = 1; k < n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += series[j] * recip[k - j];
    recip[k] = -acc / series[0];
    recip[k].canonicalize();
  }
  Rational out = Rational(factorial(n - 1)) * recip[n - 1];
  if (n % 2 == 0) out = -out;
  out.canonicalize();
  return out;
}

Rational classical_measure(int n) {
  if (n < 2) throw DomainError("measures need at least two parties");
  check_range(n);
  if (n % 2 != 0) return 0;
  Rational out = Rational(power(2, n - 1)) * rational_abs(c_coefficient_sum(n));
  out.canonicalize();
  return out;
}

Rational ghz_measure(int n) {
  if (n < 2) throw DomainError("measures need at least two parties");
  check_range(n);
  if (n % 2 != 0) return Rational(1, 2);
  const Rational c = c_coefficient_sum(n);
  const Rational half(1, 2);
  Rational out = classical_measure(n) +
                 (rational_abs(c + half) + rational_abs(c - half) - 2 * rational_abs(c)) / 2;
  out.canonicalize();
  return out;
}

DenseOperator ghz_state(int n) {
  if (n < 1 || (1L << n) > limits().max_dense_dim) throw ResourceError("GHZ state too large for the dense guard");
  const long dim = 1L << n;
  Vector v = Vector::Zero(dim);
  v(0) = v(dim - 1) = 1.0 / std::sqrt(2.0);
  SystemShape shape;
  shape.dims.assign(n, 2);
  return to_density(PureState{std::move(shape), std::move(v)});
}

DenseOperator classical_correlated_state(int n) {
  if (n < 1 || (1L << n) > limits().max_dense_dim) throw ResourceError("state too large for the dense guard");
  const long dim = 1L << n;
  Matrix m = Matrix::Zero(dim, dim);
  m(0, 0) = m(dim - 1, dim - 1) = 0.5;
  SystemShape shape;
  shape.dims.assign(n, 2);
  return DenseOperator{std::move(shape), std::move(m), OperatorRole::State};
}

double classical_cumulant_dense_check(int n) {
  if (n < 2 || n > 6) throw ResourceError("dense check limited to n in 2..6");
  const DenseOperator c = cumulant(classical_correlated_state(n)).op;
  const double cn = mpq_get_d(c_coefficient_sum(n).get_mpq_t());
  const long dim = 1L << n;
  Matrix expected = Matrix::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    const bool even = (std::popcount(static_cast<std::uint64_t>(i)) & 1) == 0;
    expected(i, i) = even ? cn : -cn;
  }
  return (c.mat - expected).cwiseAbs().maxCoeff();
}

double ghz_offdiagonal_check(int n) {
  if (n < 2 || n > 6) throw ResourceError("dense check limited to n in 2..6");
  const DenseOperator cg = cumulant(ghz_state(n)).op;
  const DenseOperator cc = cumulant(classical_correlated_state(n)).op;
  const long dim = 1L << n;
  Matrix corners = Matrix::Zero(dim, dim);
  corners(0, dim - 1) = corners(dim - 1, 0) = 0.5;
  return (cg.mat - cc.mat - corners).cwiseAbs().maxCoeff();
}

std::vector<GhzRow> fig1_table(int max_n) {
  if (max_n < 2 || max_n > limits().max_ghz_table_n) {
    throw DomainError("table range is 2.." + std::to_string(limits().max_ghz_table_n));
  }
  std::vector<GhzRow> rows;
  rows.reserve(max_n - 1);
  for (int n = 2; n <= max_n; ++n) {
    rows.push_back(GhzRow{n, c_coefficient_sum(n), ghz_measure(n), classical_measure(n)});
  }
  return rows;
}

std::string fig1_csv(const std::vector<GhzRow>& rows) {
  std::ostringstream os;
  os << "n,c_n,measure_ghz,measure_classical,c_n_float,measure_ghz_float,measure_classical_float\n";
  os.precision(12);
  for (const GhzRow& row : rows) {
    os << row.n << "," << row.c_n.get_str() << "," << row.measure_ghz.get_str() << ","
       << row.measure_classical.get_str() << "," << mpq_get_d(row.c_n.get_mpq_t()) << ","
       << mpq_get_d(row.measure_ghz.get_mpq_t()) << ","
       << mpq_get_d(row.measure_classical.get_mpq_t()) << "\n";
  }
  return os.str();
}

}  // namespace qcorr
