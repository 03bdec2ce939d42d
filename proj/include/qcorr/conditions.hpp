#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcorr/cumulant.hpp"
#include "qcorr/dense.hpp"

namespace qcorr {

enum class MeasureKind {
  GenuineCorrelation,  // M_C, half the cumulant trace norm
  TotalCorrelation,    // M_TC, distance to the marginal product
  SquaredCumulantNorm, // M'_C, sum of squared cumulant eigenvalues
};

double evaluate_measure(MeasureKind kind, const DenseOperator& rho);
std::string measure_name(MeasureKind kind);

struct ConditionOutcome {
  bool checked = false;
  bool passed = true;
  double worst = 0.0;  // largest deviation/violation observed
};

/// Results for the five legitimacy conditions: nonnegativity, vanishing on
/// bipartite products, local-unitary invariance, ancilla-augmentation
/// invariance, monotonicity under local channels.
struct ConditionReport {
  MeasureKind kind = MeasureKind::GenuineCorrelation;
  std::array<ConditionOutcome, 5> conditions;

  const ConditionOutcome& condition(int number) const { return conditions.at(number - 1); }
  bool all_passed() const;
};

struct HarnessOptions {
  int product_trials = 20;
  int unitary_trials = 100;
  int augment_trials = 10;
  int channel_trials = 100;
  int ancilla_dim = 2;
  int kraus_count = 2;
  /// Monotonicity under channels is exploratory for M'_C (off by default
  /// there, on for the other measures).
  bool check_condition5 = true;
};

/// Statistical check of the five conditions on one fixture state.
/// For TotalCorrelation, condition 2 is checked in its weaker full-product
/// form (the measure is a total, not genuine, correlation measure).
ConditionReport condition_harness(const DenseOperator& rho, MeasureKind kind,
                                  std::uint64_t seed, const HarnessOptions& opts = {});

/// rho ⊗ sigma_1 ⊗ ... ⊗ sigma_N with each single-party ancilla fused into
/// its party (dims multiply).
DenseOperator augment_with_ancillas(const DenseOperator& rho,
                                    const std::vector<DenseOperator>& ancillas);

/// Same, but taking the joint ancilla state; rejects correlated ancillas as
/// invalid fixtures (the augmentation condition quantifies over products
/// only).
DenseOperator augment_with_ancilla_state(const DenseOperator& rho, const DenseOperator& sigma);

}  // namespace qcorr
