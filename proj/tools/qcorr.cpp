// Command line front end: correlation measures of dense states, the
// combinatorial stabilizer backend, the exact GHZ tables and a self test.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcorr/conditions.hpp"
#include "qcorr/cumulant.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/ghz.hpp"
#include "qcorr/io.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/stabilizer.hpp"
#include "qcorr/three_qubit.hpp"

namespace {

using namespace qcorr;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------- measure

int run_measure(const std::string& path, const std::string& which, bool as_json, bool as_csv) {
  const DenseOperator rho = load_state_file(path);
  CorrelationReport report;
  report.n_parties = rho.shape.parties();
  report.m_c = correlation_measure(rho);
  const bool all = which == "all";
  if (all || which == "mtc") report.m_tc = total_correlation(rho);
  if (all || which == "lui") report.lui_mcf = lui_mcf(rho);

  if (as_json) {
    std::cout << report_to_json(report) << "\n";
  } else if (as_csv) {
    std::cout << report_to_csv(report) << "\n";
  } else {
    if (all || which == "mc") std::cout << "m_c = " << fmt(report.m_c) << "\n";
    if (report.m_tc) std::cout << "m_tc = " << fmt(*report.m_tc) << "\n";
    if (report.lui_mcf) std::cout << "lui_mcf = " << fmt(*report.lui_mcf) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- compare

int run_compare(const std::string& path) {
  const DenseOperator rho = load_state_file(path);
  CorrelationReport report;
  report.n_parties = rho.shape.parties();
  report.m_c = correlation_measure(rho);
  report.m_tc = total_correlation(rho);
  report.lui_mcf = lui_mcf(rho);
  report.mutual_entropy = mutual_entropy_3(rho);  // demands exactly 3 parties
  report.relative_entropy_total = relative_entropy_total(rho);

  std::cout << "n_parties = " << report.n_parties << "\n"
            << "m_c = " << fmt(report.m_c) << "\n"
            << "m_tc = " << fmt(*report.m_tc) << "\n"
            << "lui_mcf = " << fmt(*report.lui_mcf) << "\n"
            << "mutual_entropy = " << fmt(*report.mutual_entropy) << "\n"
            << "relative_entropy_total = " << fmt(*report.relative_entropy_total) << "\n";
  return 0;
}

// -------------------------------------------------------------- stabilizer

SubsetMask parse_subset(const std::string& csv) {
  SubsetMask s;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    int party = 0;
    try {
      party = std::stoi(csv.substr(pos, next - pos));
    } catch (const std::exception&) {
      throw ParseError("subset must be a comma separated list of party indices");
    }
    if (party < 1 || party > 32) throw ParseError("party indices are 1-based, at most 32");
    s = s.with(party);
    pos = next + 1;
  }
  if (s.empty()) throw ParseError("subset must not be empty");
  return s;
}

int run_stabilizer(const std::string& path, const std::string& subset_csv, bool check_dense) {
  const StabilizerGroup g = validate_stabilizer(load_stabilizer_file(path));
  std::cout << "qubits = " << g.n << ", generators = " << g.k() << "\n";

  if (!subset_csv.empty()) {
    const SubsetMask s = parse_subset(subset_csv);
    const ReducedMeasureResult r = reduced_measure(g, s);
    if (r.single_party) {
      std::cout << "single-party subset: measure 0 by convention\n";
    }
    std::cout << "m_c = " << fmt(r.value) << "\n";
    if (check_dense && !r.single_party) {
      if (g.k() != g.n || g.n > 8) throw ResourceError("dense cross-check needs k = n <= 8");
      const double dense = correlation_measure(partial_trace(dense_from_stabilizer(g), s));
      std::cout << "dense m_c = " << fmt(dense) << "\n"
                << "max deviation = " << fmt(std::abs(dense - r.value)) << "\n";
    }
    return 0;
  }

  const CumulantExpansion ce = cumulant_coefficients(g);
  std::cout << "nonzero cumulant coefficients (beta / 2^" << g.n << "):\n";
  for (std::size_t e = 0; e < ce.beta.size(); ++e) {
    if (ce.beta[e] != 0) {
      std::cout << "  " << format_pauli(ce.elements[e]) << "  beta = " << ce.beta[e] << "\n";
    }
  }
  const double mc = stabilizer_measure(g);
  std::cout << "m_c = " << fmt(mc) << "\n";

  if (check_dense) {
    if (g.n > 8) throw ResourceError("dense cross-check limited to 8 qubits");
    const double dense = correlation_measure(dense_from_stabilizer(g));
    std::cout << "dense m_c = " << fmt(dense) << "\n"
              << "max deviation = " << fmt(std::abs(dense - mc)) << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- ghz table

int run_ghz_table(int max_n, bool as_csv) {
  const auto rows = fig1_table(max_n);
  if (as_csv) {
    std::cout << fig1_csv(rows);
    return 0;
  }
  std::printf("%4s  %16s  %20s  %20s\n", "n", "c_n", "measure_ghz", "measure_classical");
  for (const GhzRow& row : rows) {
    std::printf("%4d  %16s  %20s  %20s\n", row.n, row.c_n.get_str().c_str(),
                row.measure_ghz.get_str().c_str(), row.measure_classical.get_str().c_str());
  }
  return 0;
}

// ---------------------------------------------------------------- selftest

struct SelfTest {
  bool ok = true;

  void check(const std::string& name, bool passed, const std::string& detail = "") {
    std::cout << (passed ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!passed) {
      ok = false;
      if (first_failure.empty()) first_failure = name;
    }
  }

  std::string first_failure;
};

int run_selftest(std::uint64_t seed, bool fast) {
  SelfTest st;

  {  // worked two- and three-party values
    const double bell = correlation_measure(ghz_state(2));
    const double cls2 = correlation_measure(classical_correlated_state(2));
    const double ghz3 = correlation_measure(ghz_state(3));
    const double cls3 = correlation_measure(classical_correlated_state(3));
    st.check("worked-values",
             std::abs(bell - 0.75) < 1e-10 && std::abs(cls2 - 0.5) < 1e-10 &&
                 std::abs(ghz3 - 0.5) < 1e-10 && cls3 < 1e-10,
             "bell=" + fmt(bell) + " ghz3=" + fmt(ghz3));
  }

  {  // exact coefficient formulas
    bool pass = c_coefficient_sum(8) == Rational(-17, 16);
    for (int n = 1; n <= 24 && pass; ++n) {
      pass = c_coefficient_sum(n) == c_coefficient_derivative(n);
    }
    st.check("cn-formulas", pass);
  }

  {  // legitimacy conditions
    HarnessOptions opts;
    if (fast) {
      opts.product_trials = 5;
      opts.unitary_trials = 10;
      opts.augment_trials = 3;
      opts.channel_trials = 10;
    }
    bool pass = true;
    std::string detail;
    const std::vector<DenseOperator> fixtures{
        ghz_state(2), ghz_state(3), random_mixed_state(SystemShape{{2, 2, 2}}, 8, seed + 1)};
    for (std::size_t f = 0; f < fixtures.size() && pass; ++f) {
      const auto report = condition_harness(fixtures[f], MeasureKind::GenuineCorrelation,
                                            seed + 10 * f, opts);
      if (!report.all_passed()) {
        pass = false;
        for (int c = 1; c <= 5; ++c) {
          if (report.condition(c).checked && !report.condition(c).passed) {
            detail = "m_c condition " + std::to_string(c) + " on fixture " + std::to_string(f);
          }
        }
      }
    }
    if (pass && !condition_harness(ghz_state(3), MeasureKind::TotalCorrelation, seed, opts)
                     .all_passed()) {
      pass = false;
      detail = "m_tc conditions";
    }
    if (pass) {
      HarnessOptions lui_opts = opts;
      lui_opts.check_condition5 = false;
      const auto lui = condition_harness(ghz_state(3), MeasureKind::SquaredCumulantNorm,
                                         seed + 99, lui_opts);
      if (!(lui.condition(1).passed && lui.condition(2).passed && lui.condition(3).passed &&
            !lui.condition(4).passed)) {
        pass = false;
        detail = "lui_mcf must keep conditions 1-3 and break condition 4";
      }
    }
    st.check("condition-harness", pass, detail);
  }

  {  // dense vs combinatorial stabilizer backend
    const int groups = fast ? 10 : 40;
    double worst = 0.0;
    for (int t = 0; t < groups; ++t) {
      const int n = 2 + t % 5;
      const StabilizerGroup g = random_stabilizer_group(n, Rng::derive_seed(seed, 500 + t));
      worst = std::max(worst, std::abs(stabilizer_measure(g) -
                                       correlation_measure(dense_from_stabilizer(g))));
    }
    st.check("dense-stabilizer-equivalence", worst < 1e-9, "worst=" + fmt(worst));
  }

  {  // cumulant-sum reconstruction and marginal annihilation
    const int trials = fast ? 6 : 20;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      const int n = 2 + t % 3;
      SystemShape shape;
      shape.dims.assign(n, 2);
      const auto rho = random_mixed_state(shape, shape.total_dim(),
                                          Rng::derive_seed(seed, 700 + t));
      worst = std::max(worst,
                       (ursell_reconstruct(rho).mat - rho.mat).cwiseAbs().maxCoeff());
      const auto c = cumulant(rho);
      for (int p = 1; p <= n; ++p) {
        const auto reduced = partial_trace(c.op, SubsetMask::full(n).without(p));
        worst = std::max(worst, reduced.mat.cwiseAbs().maxCoeff());
      }
    }
    st.check("ursell-identity", worst < 1e-9, "worst=" + fmt(worst));
  }

  {  // three-qubit product-law harness
    const int trials = fast ? 1000 : 10000;
    const ProductLawReport report = product_law_harness(seed, trials, 1e-6);
    st.check("product-law-harness", report.violations == 0,
             "violations=" + std::to_string(report.violations));
  }

  if (!st.ok) {
    std::cout << "selftest FAILED at: " << st.first_failure << "\n";
    return 1;
  }
  std::cout << "selftest passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-party correlation measures from the state cumulant"};
  app.require_subcommand(1);

  auto* measure = app.add_subcommand("measure", "Correlation measures of a dense state file");
  std::string measure_input, measure_kind = "all";
  bool measure_json = false, measure_csv = false;
  measure->add_option("--input", measure_input, "state JSON file")->required();
  measure->add_option("--measure", measure_kind, "mc|mtc|lui|all")
      ->check(CLI::IsMember({"mc", "mtc", "lui", "all"}));
  auto* jf = measure->add_flag("--json", measure_json, "JSON report");
  measure->add_flag("--csv", measure_csv, "CSV report")->excludes(jf);

  auto* stab = app.add_subcommand("stabilizer", "Combinatorial measure of a stabilizer state");
  std::string stab_file, stab_subset;
  bool stab_dense = false;
  stab->add_option("--generators", stab_file, "generator file, one Pauli per line")->required();
  stab->add_option("--subset", stab_subset, "comma separated party indices (1-based)");
  stab->add_flag("--check-dense", stab_dense, "cross-validate against the dense pipeline");

  auto* ghz = app.add_subcommand("ghz-table", "Exact GHZ/classical measure table");
  int ghz_max = 16;
  bool ghz_csv = false;
  ghz->add_option("--max-n", ghz_max, "largest party count")->required();
  ghz->add_flag("--csv", ghz_csv, "CSV output");

  auto* compare = app.add_subcommand("compare", "All measures of a 3-party state side by side");
  std::string compare_input;
  compare->add_option("--input", compare_input, "state JSON file")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property checks");
  std::uint64_t seed = 12345;
  bool fast = false;
  selftest->add_option("--seed", seed, "master seed");
  selftest->add_flag("--fast", fast, "reduced trial counts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (measure->parsed()) return run_measure(measure_input, measure_kind, measure_json, measure_csv);
    if (stab->parsed()) return run_stabilizer(stab_file, stab_subset, stab_dense);
    if (ghz->parsed()) return run_ghz_table(ghz_max, ghz_csv);
    if (compare->parsed()) return run_compare(compare_input);
    if (selftest->parsed()) return run_selftest(seed, fast);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
