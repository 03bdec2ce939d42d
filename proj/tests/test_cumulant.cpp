#include "qcorr/cumulant.hpp"

#include <cmath>

#include "doctest.h"
#include "qcorr/errors.hpp"
#include "qcorr/ghz.hpp"

using namespace qcorr;

namespace {

DenseOperator bell_state() { return ghz_state(2); }

DenseOperator w_state() {
  Vector v = Vector::Zero(8);
  v(4) = v(2) = v(1) = 1.0 / std::sqrt(3.0);
  return to_density(make_pure_state(SystemShape{{2, 2, 2}}, v));
}

/// Diagonal state of three bits with even parity, uniformly weighted;
/// a classical distribution whose three-party mutual entropy is negative.
DenseOperator parity_state() {
  Matrix m = Matrix::Zero(8, 8);
  for (int i : {0, 3, 5, 6}) m(i, i) = 0.25;
  return make_state(SystemShape{{2, 2, 2}}, m);
}

double max_entry(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("pseudo state") {
  const auto r1 = random_mixed_state(SystemShape{{2}}, 2, 11);
  const auto r2 = random_mixed_state(SystemShape{{3}}, 3, 12);
  const auto prod = tensor_product(r1, r2);
  CHECK(max_entry(pseudo_state(prod).mat - prod.mat) < 1e-13);

  CHECK(max_entry(pseudo_state(bell_state()).mat - 0.25 * Matrix::Identity(4, 4)) < 1e-14);

  // Every single-party partial trace of rho - pseudo(rho) vanishes.
  for (int t = 0; t < 10; ++t) {
    const auto rho = random_mixed_state(SystemShape{{2, 2, 2}}, 8, 100 + t);
    const DenseOperator ps = pseudo_state(rho);
    CHECK(std::abs(ps.mat.trace().real() - 1.0) < 1e-10);
    const DenseOperator diff = make_hermitian(rho.shape, rho.mat - ps.mat);
    for (int drop = 1; drop <= 3; ++drop) {
      const SubsetMask keep = SubsetMask::full(3).without(drop);
      CHECK(max_entry(partial_trace(diff, keep).mat) < 1e-9);
    }
  }

  CHECK_THROWS_AS(pseudo_state(random_mixed_state(SystemShape{{4}}, 4, 1)), DomainError);
}

TEST_CASE("cumulant vanishes exactly on bipartite products") {
  // Bipartite products of every split must have vanishing cumulants.
  for (int t = 0; t < 6; ++t) {
    for (int n = 3; n <= 4; ++n) {
      const SubsetMask full = SubsetMask::full(n);
      for (std::uint32_t bits = 1; bits + 1 < full.bits(); ++bits) {
        SubsetMask s1(bits);
        if (!s1.subset_of(full) || !s1.contains(1)) continue;
        const SubsetMask s2 = full.minus(s1);
        SystemShape shape1, shape2;
        for (int p = 0; p < s1.count(); ++p) shape1.dims.push_back(2);
        for (int p = 0; p < s2.count(); ++p) shape2.dims.push_back(2);
        const auto a = random_mixed_state(shape1, shape1.total_dim(), 7000 + 10 * t);
        const auto b = random_mixed_state(shape2, shape2.total_dim(), 7001 + 10 * t);
        // Parties of s1 first, then s2's; relabeling parties is harmless
        // for a product-vanishing check.
        const auto prod = tensor_product(a, b);
        CHECK(max_entry(cumulant(prod).op.mat) < 1e-10);
      }
    }
  }
}

TEST_CASE("worked cumulants") {
  const auto classical3 = classical_correlated_state(3);
  CHECK(max_entry(cumulant(classical3).op.mat) < 1e-12);

  const auto ghz3 = ghz_state(3);
  const CumulantOperator c = cumulant(ghz3);
  CHECK(std::abs(c.op.mat.trace()) < 1e-10);
  CHECK(max_entry(c.op.mat) > 0.4);
  CHECK(correlation_measure(ghz3) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("cumulant of subset") {
  const auto rho = random_mixed_state(SystemShape{{2, 2, 2}}, 8, 55);
  const auto full = cumulant_of_subset(rho, SubsetMask::full(3));
  CHECK(max_entry(full.mat - cumulant(rho).op.mat) == 0.0);

  const auto single = cumulant_of_subset(rho, SubsetMask::of({2}));
  CHECK(max_entry(single.mat - partial_trace(rho, SubsetMask::of({2})).mat) == 0.0);

  const auto pair = cumulant_of_subset(rho, SubsetMask::of({1, 3}));
  CHECK(std::abs(pair.mat.trace()) < 1e-10);
  for (int party = 0; party < 2; ++party) {
    const SubsetMask keep = party == 0 ? SubsetMask::of({2}) : SubsetMask::of({1});
    CHECK(max_entry(partial_trace(make_hermitian(pair.shape, pair.mat), keep).mat) < 1e-9);
  }

  CHECK_THROWS_AS(cumulant_of_subset(rho, SubsetMask()), DomainError);
}

TEST_CASE("cumulant sum rebuilds the state") {
  {
    const auto r1 = random_mixed_state(SystemShape{{2}}, 2, 1);
    const auto r2 = random_mixed_state(SystemShape{{2}}, 2, 2);
    const auto prod = tensor_product(r1, r2);
    CHECK(max_entry(ursell_reconstruct(prod).mat - prod.mat) < 1e-12);
  }
  for (int t = 0; t < 5; ++t) {
    const auto psi = random_pure_state(SystemShape{{2, 2, 2}}, 300 + t);
    const auto rho = to_density(psi);
    CHECK(max_entry(ursell_reconstruct(rho).mat - rho.mat) < 1e-9);
  }
  for (int t = 0; t < 3; ++t) {
    const auto rho = random_mixed_state(SystemShape{{2, 2, 2, 2}}, 16, 400 + t);
    CHECK(max_entry(ursell_reconstruct(rho).mat - rho.mat) < 1e-9);
  }
  SystemShape seven;
  seven.dims.assign(7, 2);
  CHECK_THROWS_AS(ursell_reconstruct(random_mixed_state(seven, 1, 9)), ResourceError);
}

TEST_CASE("correlation measure worked values") {
  CHECK(correlation_measure(classical_correlated_state(2)) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(correlation_measure(bell_state()) == doctest::Approx(0.75).epsilon(1e-10));
  // W-state value frozen from this pipeline; equals 4/9.
  CHECK(correlation_measure(w_state()) == doctest::Approx(4.0 / 9.0).epsilon(1e-9));
}

TEST_CASE("total correlation") {
  const auto r1 = random_mixed_state(SystemShape{{2}}, 2, 21);
  const auto r2 = random_mixed_state(SystemShape{{2}}, 2, 22);
  const auto r3 = random_mixed_state(SystemShape{{2}}, 2, 23);
  const auto prod = tensor_product(tensor_product(r1, r2), r3);
  CHECK(total_correlation(prod) < 1e-10);

  // rho1 x rho23 carries exactly the pair's correlation.
  const auto pair = random_mixed_state(SystemShape{{2, 2}}, 4, 24);
  const auto split = tensor_product(r1, pair);
  CHECK(total_correlation(split) == doctest::Approx(correlation_measure(pair)).epsilon(1e-9));

  // At two parties the total and genuine measures are the same number.
  CHECK(total_correlation(bell_state()) == doctest::Approx(0.75).epsilon(1e-10));
  const auto rho2 = random_mixed_state(SystemShape{{2, 2}}, 4, 25);
  CHECK(total_correlation(rho2) == doctest::Approx(correlation_measure(rho2)).epsilon(1e-9));
}

TEST_CASE("squared-norm measure") {
  const auto r1 = random_mixed_state(SystemShape{{2}}, 2, 31);
  const auto r2 = random_mixed_state(SystemShape{{2}}, 2, 32);
  CHECK(lui_mcf(tensor_product(r1, r2)) < 1e-12);

  for (int t = 0; t < 5; ++t) {
    const auto rho = random_mixed_state(SystemShape{{2, 2, 2}}, 8, 600 + t);
    const Matrix c = cumulant(rho).op.mat;
    CHECK(lui_mcf(rho) == doctest::Approx((c * c).trace().real()).epsilon(1e-9));
    // Also the squared Frobenius norm, for Hermitian operators.
    CHECK(lui_mcf(rho) == doctest::Approx(c.squaredNorm()).epsilon(1e-9));
  }

  const auto ghz3 = ghz_state(3);
  const double base = lui_mcf(ghz3);
  CHECK(base > 0.0);
  for (int t = 0; t < 5; ++t) {
    const auto us = random_local_unitary(ghz3.shape, 700 + t);
    CHECK(std::abs(lui_mcf(apply_local_unitary(ghz3, us)) - base) < 1e-9);
  }
}

TEST_CASE("three-party mutual entropy") {
  const auto p1 = to_density(random_pure_state(SystemShape{{2}}, 41));
  const auto p2 = to_density(random_pure_state(SystemShape{{2}}, 42));
  const auto p3 = to_density(random_pure_state(SystemShape{{2}}, 43));
  const auto prod = tensor_product(tensor_product(p1, p2), p3);
  CHECK(std::abs(mutual_entropy_3(prod)) < 1e-9);

  CHECK(std::abs(mutual_entropy_3(ghz_state(3))) < 1e-9);

  // The even-parity mixture is a frozen negative witness: S = 2, all pair
  // marginals are flat on four strings (2 bits), singles are flat (1 bit),
  // so the alternating sum is 2 - 6 + 3 = -1.
  CHECK(mutual_entropy_3(parity_state()) == doctest::Approx(-1.0).epsilon(1e-9));

  CHECK_THROWS_AS(mutual_entropy_3(bell_state()), DomainError);
}

TEST_CASE("relative entropy to the marginal product") {
  const auto r1 = random_mixed_state(SystemShape{{2}}, 2, 51);
  const auto r2 = random_mixed_state(SystemShape{{2}}, 2, 52);
  const auto r3 = random_mixed_state(SystemShape{{2}}, 2, 53);
  const auto prod = tensor_product(tensor_product(r1, r2), r3);
  CHECK(std::abs(relative_entropy_total(prod)) < 1e-9);

  // On rho1 x rho23 it reduces to the two-party mutual entropy S(2:3).
  const auto pair = random_mixed_state(SystemShape{{2, 2}}, 4, 54);
  const auto split = tensor_product(r1, pair);
  const double s2 = von_neumann_entropy(partial_trace(pair, SubsetMask::of({1})));
  const double s3 = von_neumann_entropy(partial_trace(pair, SubsetMask::of({2})));
  const double s23 = von_neumann_entropy(pair);
  CHECK(relative_entropy_total(split) == doctest::Approx(s2 + s3 - s23).epsilon(1e-9));

  CHECK(relative_entropy_total(ghz_state(3)) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("report serialization") {
  CorrelationReport r;
  r.n_parties = 3;
  r.m_c = 0.5;
  r.m_tc = 1.25;
  CHECK(report_to_json(r) == R"({"n_parties":3,"m_c":0.5,"m_tc":1.25})");
  r.m_tc.reset();
  r.lui_mcf = 0.25;
  CHECK(report_to_json(r) == R"({"n_parties":3,"m_c":0.5,"lui_mcf":0.25})");
  CHECK(report_to_csv(r) ==
        "n_parties,m_c,m_tc,lui_mcf,mutual_entropy,relative_entropy_total\n3,0.5,,0.25,,");
}
