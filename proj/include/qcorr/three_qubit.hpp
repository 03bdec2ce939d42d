#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qcorr/dense.hpp"

namespace qcorr {

/// Parameters of the canonical three-qubit pure-state family
/// a0 e^(i phi)|000> + b1|100> + b2|010> + b3|001> + a1|111>,
/// which reaches every three-qubit pure state up to local unitaries.
struct CanonicalParams {
  double a0 = 1.0;
  double a1 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
  double phi = 0.0;

  double norm_squared() const { return a0 * a0 + a1 * a1 + b1 * b1 + b2 * b2 + b3 * b3; }
};

PureState canonical_state(const CanonicalParams& p);

/// Closed-form cumulant entries of the family.
double element_100_010(const CanonicalParams& p);  // <100|C|010>
double element_111_111(const CanonicalParams& p);  // <111|C|111>

/// If some single party's marginal is pure to within tol, returns that party
/// (the state factorizes across {party}|{rest}); otherwise nullopt.
std::optional<int> is_product_pure(const PureState& psi, double tol);

struct ProductLawReport {
  int trials = 0;
  int violations = 0;
  double min_mc_nonproduct = 0.0;  // smallest measure among non-product samples
  double max_corner_element = 0.0; // largest |<000|C|111>| seen
};

/// Randomized check that a vanishing measure implies a product state on the
/// canonical family (and that planted products give a vanishing measure).
/// Any sample with measure < eps that is not product to tolerance 1e-4
/// counts as a violation.
ProductLawReport product_law_harness(std::uint64_t seed, int trials, double eps);

std::string product_law_to_json(const ProductLawReport& report);

CanonicalParams random_canonical_params(std::uint64_t seed);

}  // namespace qcorr
