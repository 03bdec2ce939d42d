#include "qcorr/three_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "qcorr/cumulant.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

PureState canonical_state(const CanonicalParams& p) {
  if (std::abs(p.norm_squared() - 1.0) > tol().unit_norm) {
    throw DomainError("canonical parameters must be normalized");
  }
  Vector v = Vector::Zero(8);
  v(0) = p.a0 * Complex(std::cos(p.phi), std::sin(p.phi));  // |000>
  v(4) = p.b1;                                              // |100>
  v(2) = p.b2;                                              // |010>
  v(1) = p.b3;                                              // |001>
  v(7) = p.a1;                                              // |111>
  return PureState{SystemShape{{2, 2, 2}}, std::move(v)};
}

double element_100_010(const CanonicalParams& p) {
  return p.b1 * p.b2 * (1.0 - 2.0 * p.a0 * p.a0) * (p.a1 * p.a1 + p.b3 * p.b3);
}

double element_111_111(const CanonicalParams& p) {
  const double a0s = p.a0 * p.a0, a1s = p.a1 * p.a1;
  const double b1s = p.b1 * p.b1, b2s = p.b2 * p.b2, b3s = p.b3 * p.b3;
  return a1s * a0s * (1.0 - 2.0 * a1s) + 2.0 * b1s * b2s * b3s +
         2.0 * a1s * (b1s * b2s + b2s * b3s + b1s * b3s);
}

std::optional<int> is_product_pure(const PureState& psi, double tol_purity) {
  const DenseOperator rho = to_density(psi);
  if (rho.shape.parties() != 3) throw DomainError("expected a three-party pure state");
  for (int party = 1; party <= 3; ++party) {
    const DenseOperator m = partial_trace(rho, SubsetMask::of({party}));
    const double purity = (m.mat * m.mat).trace().real();
    if (purity >= 1.0 - tol_purity) return party;
  }
  return std::nullopt;
}

CanonicalParams random_canonical_params(std::uint64_t seed) {
  Rng rng(seed);
  // Uniform on the 4-sphere for the magnitudes, uniform phase.
  double v[5];
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& c : v) {
      c = rng.gaussian();
      norm += c * c;
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  CanonicalParams p;
  p.a0 = v[0] / norm;
  p.a1 = v[1] / norm;
  p.b1 = v[2] / norm;
  p.b2 = v[3] / norm;
  p.b3 = v[4] / norm;
  p.phi = 2.0 * M_PI * rng.uniform();
  return p;
}

ProductLawReport product_law_harness(std::uint64_t seed, int trials, double eps) {
  if (trials < 1) throw DomainError("need at least one trial");
  ProductLawReport report;
  report.trials = trials;
  report.min_mc_nonproduct = std::numeric_limits<double>::infinity();
  const double product_tol = 1e-4;  // purity tolerance near the product manifold

  for (int t = 0; t < trials; ++t) {
    const CanonicalParams p = random_canonical_params(Rng::derive_seed(seed, t));
    const PureState psi = canonical_state(p);
    const DenseOperator rho = to_density(psi);
    const CumulantOperator c = cumulant(rho);
    const double mc = 0.5 * trace_norm(c.op);
    report.max_corner_element = std::max(report.max_corner_element, std::abs(c.op.mat(0, 7)));
    const auto split = is_product_pure(psi, product_tol);
    if (mc < eps && !split.has_value()) {
      ++report.violations;
    }
    if (!split.has_value()) {
      report.min_mc_nonproduct = std::min(report.min_mc_nonproduct, mc);
    }
  }

  // Contrapositive: planted products (mixed single party times a pure
  // pair) must measure zero.
  for (int t = 0; t < std::max(trials / 10, 1); ++t) {
    const std::uint64_t s = Rng::derive_seed(seed ^ 0x5eedULL, t);
    const DenseOperator one = random_mixed_state(SystemShape{{2}}, 2, Rng::derive_seed(s, 0));
    const PureState pair = random_pure_state(SystemShape{{2, 2}}, Rng::derive_seed(s, 1));
    const DenseOperator rho = tensor_product(one, to_density(pair));
    if (correlation_measure(rho) > tol().measure_invariance) {
      ++report.violations;
    }
  }
  return report;
}

std::string product_law_to_json(const ProductLawReport& report) {
  nlohmann::ordered_json j;
  j["trials"] = report.trials;
  j["violations"] = report.violations;
  j["min_mc_nonproduct"] = report.min_mc_nonproduct;
  j["max_corner_element"] = report.max_corner_element;
  return j.dump();
}

}  // namespace qcorr
