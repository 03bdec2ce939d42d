// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in the criterion bodies.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qcorr/conditions.hpp"
#include "qcorr/cumulant.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/ghz.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/stabilizer.hpp"
#include "qcorr/three_qubit.hpp"

using namespace qcorr;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool criterion1(std::string& detail) {
  const double cls = correlation_measure(classical_correlated_state(2));
  const double bell = correlation_measure(ghz_state(2));
  std::ostringstream os;
  os << "m_c(classical2)=" << cls << " m_c(bell)=" << bell;
  detail = os.str();
  return std::abs(cls - 0.5) <= 1e-10 && std::abs(bell - 0.75) <= 1e-10;
}

bool criterion2(std::string& detail) {
  const double cls = correlation_measure(classical_correlated_state(3));
  const DenseOperator g3 = ghz_state(3);
  const double ghz = correlation_measure(g3);
  const double mutual = mutual_entropy_3(g3);
  const double relative = relative_entropy_total(g3);
  std::ostringstream os;
  os << "m_c(classical3)=" << cls << " m_c(ghz3)=" << ghz << " S(1:2:3)=" << mutual
     << " S(rho||prod)=" << relative;
  detail = os.str();
  return cls <= 1e-10 && std::abs(ghz - 0.5) <= 1e-10 && std::abs(mutual) <= 1e-9 &&
         std::abs(relative - 3.0) <= 1e-9;
}

bool criterion3(std::string& detail) {
  const std::vector<std::pair<int, Rational>> table{
      {2, Rational(1, 4)},    {4, Rational(-1, 8)},   {6, Rational(1, 4)},
      {8, Rational(-17, 16)}, {10, Rational(31, 4)},  {12, Rational(-691, 8)},
      {14, Rational(5461, 4)}, {16, Rational(-929569, 32)}};
  for (const auto& [n, expected] : table) {
    if (c_coefficient_sum(n) != expected || c_coefficient_derivative(n) != expected) {
      detail = "table value mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  for (int n = 1; n <= 63; n += 2) {
    if (c_coefficient_sum(n) != 0 && n > 1) {
      detail = "odd coefficient nonzero at n=" + std::to_string(n);
      return false;
    }
  }
  for (int n = 1; n <= 32; ++n) {
    if (c_coefficient_sum(n) != c_coefficient_derivative(n)) {
      detail = "formula disagreement at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "8 table values, odd zeros to 63, agreement to 32";
  return true;
}

bool criterion4(std::string& detail) {
  double worst_measure = 0.0, worst_entry = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const double ghz_closed = mpq_get_d(ghz_measure(n).get_mpq_t());
    const double cls_closed = mpq_get_d(classical_measure(n).get_mpq_t());
    worst_measure = std::max(worst_measure,
                             std::abs(correlation_measure(ghz_state(n)) - ghz_closed));
    worst_measure = std::max(
        worst_measure,
        std::abs(correlation_measure(classical_correlated_state(n)) - cls_closed));
    worst_entry = std::max(worst_entry, classical_cumulant_dense_check(n));
    worst_entry = std::max(worst_entry, ghz_offdiagonal_check(n));
  }
  for (int n = 8; n <= 64; n += 2) {
    if (ghz_measure(n) != classical_measure(n)) {
      detail = "closed forms differ at even n=" + std::to_string(n);
      return false;
    }
  }
  std::ostringstream os;
  os << "worst measure dev=" << worst_measure << " worst entry dev=" << worst_entry
     << ", closed-form equality holds for even n in 8..64";
  detail = os.str();
  return worst_measure <= 1e-9 && worst_entry <= 1e-12;
}

bool criterion5(std::string& detail) {
  const StabilizerGroup graph = validate_stabilizer(
      {parse_pauli("XZI"), parse_pauli("ZXZ"), parse_pauli("IZX")});
  const CumulantExpansion ce = cumulant_coefficients(graph);
  const std::vector<std::int64_t> expected{0, 0, 1, 1, 0, 0, 1, 1};  // beta=1 on G2,G1G2,G2G3,G1G2G3
  if (ce.beta != expected) {
    detail = "graph-state GHZ3 coefficients wrong";
    return false;
  }
  if (stabilizer_measure(graph) != 0.5) {
    detail = "graph-state GHZ3 measure not exactly 1/2";
    return false;
  }
  double worst = 0.0;
  const int groups = 100;
  for (int t = 0; t < groups; ++t) {
    const int n = 2 + t % 5;
    const StabilizerGroup g = random_stabilizer_group(n, Rng::derive_seed(0xacce97, t));
    const double dev =
        std::abs(stabilizer_measure(g) - correlation_measure(dense_from_stabilizer(g)));
    worst = std::max(worst, dev);
  }
  std::ostringstream os;
  os << groups << " random groups, worst dense deviation=" << worst;
  detail = os.str();
  return worst <= 1e-9;
}

bool criterion6(std::string& detail) {
  HarnessOptions opts;
  opts.product_trials = 20;
  opts.unitary_trials = 100;
  opts.channel_trials = 100;
  opts.augment_trials = 5;

  const int states = 50;
  int lui_cond4_failures = 0;
  for (int t = 0; t < states; ++t) {
    SystemShape shape;
    switch (t % 4) {
      case 0: shape.dims = {2, 2}; break;
      case 1: shape.dims = {2, 2, 2}; break;
      case 2: shape.dims = {3, 2, 2}; break;
      case 3: shape.dims = {2, 2, 2, 2}; break;
    }
    const std::uint64_t seed = Rng::derive_seed(0xc0d1710, t);
    const DenseOperator rho = random_mixed_state(shape, shape.total_dim(), seed);
    const ConditionReport mc =
        condition_harness(rho, MeasureKind::GenuineCorrelation, seed + 1, opts);
    if (!mc.all_passed()) {
      for (int c = 1; c <= 5; ++c) {
        if (mc.condition(c).checked && !mc.condition(c).passed) {
          detail = "m_c condition " + std::to_string(c) + " failed on state " +
                   std::to_string(t) + " (worst " + std::to_string(mc.condition(c).worst) + ")";
        }
      }
      return false;
    }
    if (t % 10 == 0) {
      HarnessOptions lui_opts = opts;
      lui_opts.check_condition5 = false;
      const ConditionReport lui =
          condition_harness(rho, MeasureKind::SquaredCumulantNorm, seed + 2, lui_opts);
      if (!(lui.condition(1).passed && lui.condition(2).passed && lui.condition(3).passed)) {
        detail = "lui_mcf lost one of conditions 1-3 on state " + std::to_string(t);
        return false;
      }
      if (!lui.condition(4).passed) ++lui_cond4_failures;
    }
  }
  if (lui_cond4_failures == 0) {
    detail = "lui_mcf never violated condition 4; expected at least one fixture";
    return false;
  }
  std::ostringstream os;
  os << states << " states passed all five conditions for m_c; lui_mcf broke condition 4 on "
     << lui_cond4_failures << " fixtures while keeping 1-3";
  detail = os.str();
  return true;
}

bool criterion7(std::string& detail) {
  double worst_ptrace = 0.0, worst_recon = 0.0;
  const int states = 50;
  for (int t = 0; t < states; ++t) {
    SystemShape shape;
    shape.dims.assign(2 + t % 3, 2);
    if (t % 5 == 4) shape.dims[0] = 3;
    const DenseOperator rho =
        random_mixed_state(shape, shape.total_dim(), Rng::derive_seed(0x5712c7, t));
    const int n = shape.parties();
    const CumulantOperator c = cumulant(rho);
    for (int p = 1; p <= n; ++p) {
      const auto reduced = partial_trace(c.op, SubsetMask::full(n).without(p));
      worst_ptrace = std::max(worst_ptrace, reduced.mat.cwiseAbs().maxCoeff());
    }
    worst_recon = std::max(worst_recon,
                           (ursell_reconstruct(rho).mat - rho.mat).cwiseAbs().maxCoeff());
  }
  std::ostringstream os;
  os << states << " states, worst marginal residue=" << worst_ptrace
     << " worst reconstruction=" << worst_recon;
  detail = os.str();
  return worst_ptrace <= 1e-9 && worst_recon <= 1e-9;
}

bool criterion8(std::string& detail) {
  const ProductLawReport report = product_law_harness(0x7e0437, 10000, 1e-6);
  if (report.violations != 0) {
    detail = std::to_string(report.violations) + " product-law violations";
    return false;
  }
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const CanonicalParams p = random_canonical_params(Rng::derive_seed(0xa99e8d1, t));
    const Matrix c = cumulant(to_density(canonical_state(p))).op.mat;
    worst = std::max(worst, std::abs(c(4, 2) - element_100_010(p)));
    worst = std::max(worst, std::abs(c(7, 7).real() - element_111_111(p)));
  }
  CanonicalParams w;
  w.a0 = w.a1 = 0.0;
  w.b1 = w.b2 = w.b3 = 1.0 / std::sqrt(3.0);
  const double w_mc = correlation_measure(to_density(canonical_state(w)));
  std::ostringstream os;
  os << "10000 samples, 0 violations; worst matrix-element deviation=" << worst
     << "; m_c(W)=" << w_mc;
  detail = os.str();
  return worst <= 1e-10 && w_mc > 0.05;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  const std::vector<Criterion> criteria{
      {1, "two-party worked values", 1.0, criterion1},
      {2, "three-party worked values and entropies", 1.0, criterion2},
      {3, "exact c_N table and formula agreement", 1.0, criterion3},
      {4, "GHZ closed forms versus the dense pipeline", 30.0, criterion4},
      {5, "stabilizer algorithm and dense equivalence", 120.0, criterion5},
      {6, "five-condition legitimacy suite", 300.0, criterion6},
      {7, "marginal annihilation and cumulant-sum identity", 120.0, criterion7},
      {8, "three-qubit product law and matrix elements", 120.0, criterion8},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.number != only) continue;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget_seconds) {
      ok = false;
      detail += " [exceeded the " + std::to_string(c.budget_seconds) + "s budget]";
    }
    std::printf("criterion %d [%s]: %s (%.2fs) %s\n", c.number, c.title.c_str(),
                ok ? "PASS" : "FAIL", secs, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
