#include "qcorr/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

double evaluate_measure(MeasureKind kind, const DenseOperator& rho) {
  switch (kind) {
    case MeasureKind::GenuineCorrelation: return correlation_measure(rho);
    case MeasureKind::TotalCorrelation: return total_correlation(rho);
    case MeasureKind::SquaredCumulantNorm: return lui_mcf(rho);
  }
  throw DomainError("unknown measure kind");
}

std::string measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::GenuineCorrelation: return "m_c";
    case MeasureKind::TotalCorrelation: return "m_tc";
    case MeasureKind::SquaredCumulantNorm: return "lui_mcf";
  }
  return "?";
}

bool ConditionReport::all_passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionOutcome& c) { return !c.checked || c.passed; });
}

namespace {

DenseOperator product_over_blocks(const std::vector<SubsetMask>& blocks,
                                  const std::vector<DenseOperator>& states) {
  // Tensor in block order, then put parties back in ascending order.
  DenseOperator term = states[0];
  for (std::size_t b = 1; b < states.size(); ++b) term = tensor_product(term, states[b]);
  std::vector<int> concat;
  for (const SubsetMask& b : blocks) {
    for (int p : b.parties()) concat.push_back(p);
  }
  std::vector<int> source_slot(concat.size());
  for (int k = 0; k < static_cast<int>(concat.size()); ++k) {
    source_slot[k] = static_cast<int>(
        std::find(concat.begin(), concat.end(), k + 1) - concat.begin());
  }
  return permute_parties(term, source_slot);
}

SystemShape sub_shape(const SystemShape& shape, SubsetMask s) {
  SystemShape out;
  for (int p : s.parties()) out.dims.push_back(shape.dims[p - 1]);
  return out;
}

}  // namespace

DenseOperator augment_with_ancillas(const DenseOperator& rho,
                                    const std::vector<DenseOperator>& ancillas) {
  const int n = rho.shape.parties();
  if (static_cast<int>(ancillas.size()) != n) {
    throw DomainError("need one ancilla state per party");
  }
  DenseOperator joint = rho;
  for (const DenseOperator& a : ancillas) {
    if (a.shape.parties() != 1) throw DomainError("ancillas must be single-party states");
    joint = tensor_product(joint, a);
  }
  // Interleave: party i followed by its ancilla (currently at slot n + i).
  std::vector<int> source_slot;
  for (int p = 0; p < n; ++p) {
    source_slot.push_back(p);
    source_slot.push_back(n + p);
  }
  joint = permute_parties(joint, source_slot);
  return fuse_adjacent(joint, std::vector<int>(n, 2));
}

DenseOperator augment_with_ancilla_state(const DenseOperator& rho, const DenseOperator& sigma) {
  const int n = rho.shape.parties();
  if (sigma.shape.parties() != n) {
    throw DomainError("joint ancilla must have one party per system party");
  }
  // The augmentation condition is stated for uncorrelated ancillas only;
  // reject anything else as an invalid fixture rather than a violation.
  std::vector<SubsetMask> blocks;
  std::vector<DenseOperator> marginals;
  for (int p = 1; p <= n; ++p) {
    blocks.push_back(SubsetMask::of({p}));
    marginals.push_back(partial_trace(sigma, blocks.back()));
  }
  const DenseOperator product = product_over_blocks(blocks, marginals);
  if ((sigma.mat - product.mat).cwiseAbs().maxCoeff() > tol().marginal_annihilation) {
    throw DomainError("ancilla state is correlated; augmentation fixture is invalid");
  }
  return augment_with_ancillas(rho, marginals);
}

ConditionReport condition_harness(const DenseOperator& rho, MeasureKind kind,
                                  std::uint64_t seed, const HarnessOptions& opts) {
  const int n = rho.shape.parties();
  if (n > 4) throw ResourceError("condition harness is limited to 4 parties");

  ConditionReport report;
  report.kind = kind;
  const double slack = tol().measure_invariance;
  const double base = evaluate_measure(kind, rho);

  // 1: nonnegativity.
  {
    ConditionOutcome& c = report.conditions[0];
    c.checked = true;
    c.worst = std::min(base, 0.0);
    c.passed = base >= -slack;
  }

  // 2: vanishing on products. Genuine measures must vanish on every
  // bipartite product; the total measure only on full products.
  {
    ConditionOutcome& c = report.conditions[1];
    c.checked = true;
    for (int t = 0; t < opts.product_trials; ++t) {
      const std::uint64_t s = Rng::derive_seed(seed, 1000 + t);
      Rng pick(s);
      std::vector<SubsetMask> blocks;
      if (kind == MeasureKind::TotalCorrelation) {
        for (int p = 1; p <= n; ++p) blocks.push_back(SubsetMask::of({p}));
      } else {
        // Random bipartition: nonempty proper subset and its complement.
        const SubsetMask full = SubsetMask::full(n);
        std::uint32_t bits = 0;
        while (bits == 0 || bits == full.bits()) {
          bits = static_cast<std::uint32_t>(pick.below(full.bits() + 1));
        }
        blocks = {SubsetMask(bits), full.minus(SubsetMask(bits))};
        if (blocks[0].lowest() > blocks[1].lowest()) std::swap(blocks[0], blocks[1]);
      }
      std::vector<DenseOperator> states;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const SystemShape shape = sub_shape(rho.shape, blocks[b]);
        states.push_back(random_mixed_state(shape, shape.total_dim(),
                                            Rng::derive_seed(s, b)));
      }
      const double value = evaluate_measure(kind, product_over_blocks(blocks, states));
      c.worst = std::max(c.worst, value);
    }
    c.passed = c.worst <= slack;
  }

  // 3: local-unitary invariance.
  {
    ConditionOutcome& c = report.conditions[2];
    c.checked = true;
    for (int t = 0; t < opts.unitary_trials; ++t) {
      const auto us = random_local_unitary(rho.shape, Rng::derive_seed(seed, 2000 + t));
      const double value = evaluate_measure(kind, apply_local_unitary(rho, us));
      c.worst = std::max(c.worst, std::abs(value - base));
    }
    c.passed = c.worst <= slack;
  }

  // 4: invariance under uncorrelated local ancillas.
  {
    ConditionOutcome& c = report.conditions[3];
    c.checked = true;
    for (int t = 0; t < opts.augment_trials; ++t) {
      const std::uint64_t s = Rng::derive_seed(seed, 3000 + t);
      std::vector<DenseOperator> ancillas;
      for (int p = 0; p < n; ++p) {
        ancillas.push_back(random_mixed_state(SystemShape{{opts.ancilla_dim}},
                                              opts.ancilla_dim, Rng::derive_seed(s, p)));
      }
      const double value = evaluate_measure(kind, augment_with_ancillas(rho, ancillas));
      c.worst = std::max(c.worst, std::abs(value - base));
    }
    c.passed = c.worst <= slack;
  }

  // 5: monotonicity under local channels (statistical evidence only).
  if (opts.check_condition5) {
    ConditionOutcome& c = report.conditions[4];
    c.checked = true;
    for (int t = 0; t < opts.channel_trials; ++t) {
      const auto ch = random_local_channel(rho.shape, opts.kraus_count,
                                           Rng::derive_seed(seed, 4000 + t));
      const double value = evaluate_measure(kind, apply_local_channel(rho, ch));
      c.worst = std::max(c.worst, value - base);
    }
    c.passed = c.worst <= slack;
  }

  return report;
}

}  // namespace qcorr
