#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcorr/conditions.hpp"
#include "qcorr/cumulant.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/ghz.hpp"
#include "qcorr/io.hpp"
#include "qcorr/stabilizer.hpp"
#include "qcorr/three_qubit.hpp"

namespace py = pybind11;
using namespace qcorr;

namespace {

DenseOperator state_from(const Matrix& mat, const std::vector<int>& dims) {
  return make_state(SystemShape{dims}, mat);
}

SubsetMask mask_from(const std::vector<int>& parties) {
  SubsetMask s;
  for (int p : parties) {
    if (p < 1 || p > 32) throw DomainError("party indices are 1-based, at most 32");
    s = s.with(p);
  }
  return s;
}

StabilizerGroup group_from(const std::vector<std::string>& lines) {
  std::vector<PauliOperator> gens;
  gens.reserve(lines.size());
  for (const std::string& line : lines) gens.push_back(parse_pauli(line));
  return validate_stabilizer(std::move(gens));
}

py::dict report_dict(const ConditionReport& report) {
  py::dict out;
  out["measure"] = measure_name(report.kind);
  py::list conds;
  for (int c = 1; c <= 5; ++c) {
    py::dict entry;
    entry["condition"] = c;
    entry["checked"] = report.condition(c).checked;
    entry["passed"] = report.condition(c).passed;
    entry["worst"] = report.condition(c).worst;
    conds.append(entry);
  }
  out["conditions"] = conds;
  out["all_passed"] = report.all_passed();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-party correlation measures from the state cumulant";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseFailure", PyExc_ValueError);

  // Dense pipeline.
  m.def(
      "correlation_measure",
      [](const Matrix& mat, const std::vector<int>& dims) {
        return correlation_measure(state_from(mat, dims));
      },
      py::arg("rho"), py::arg("dims"),
      "Genuine multi-party correlation: half the trace norm of the cumulant.");
  m.def(
      "total_correlation",
      [](const Matrix& mat, const std::vector<int>& dims) {
        return total_correlation(state_from(mat, dims));
      },
      py::arg("rho"), py::arg("dims"));
  m.def(
      "lui_mcf",
      [](const Matrix& mat, const std::vector<int>& dims) {
        return lui_mcf(state_from(mat, dims));
      },
      py::arg("rho"), py::arg("dims"),
      "Squared-norm cumulant functional (local-unitary invariant).");
  m.def(
      "mutual_entropy_3",
      [](const Matrix& mat, const std::vector<int>& dims) {
        return mutual_entropy_3(state_from(mat, dims));
      },
      py::arg("rho"), py::arg("dims"));
  m.def(
      "relative_entropy_total",
      [](const Matrix& mat, const std::vector<int>& dims) {
        return relative_entropy_total(state_from(mat, dims));
      },
      py::arg("rho"), py::arg("dims"));
  m.def(
      "cumulant",
      [](const Matrix& mat, const std::vector<int>& dims) {
        return Matrix(cumulant(state_from(mat, dims)).op.mat);
      },
      py::arg("rho"), py::arg("dims"), "Cumulant of the state as a dense matrix.");
  m.def(
      "pseudo_state",
      [](const Matrix& mat, const std::vector<int>& dims) {
        return Matrix(pseudo_state(state_from(mat, dims)).mat);
      },
      py::arg("rho"), py::arg("dims"));
  m.def(
      "partial_trace",
      [](const Matrix& mat, const std::vector<int>& dims, const std::vector<int>& keep) {
        return Matrix(partial_trace(make_hermitian(SystemShape{dims}, mat), mask_from(keep)).mat);
      },
      py::arg("op"), py::arg("dims"), py::arg("keep"),
      "Reduce a Hermitian operator to the 1-based parties in keep.");
  m.def(
      "trace_distance",
      [](const Matrix& a, const Matrix& b, const std::vector<int>& dims) {
        return trace_distance(make_hermitian(SystemShape{dims}, a),
                              make_hermitian(SystemShape{dims}, b));
      },
      py::arg("a"), py::arg("b"), py::arg("dims"));
  m.def(
      "von_neumann_entropy",
      [](const Matrix& mat, const std::vector<int>& dims) {
        return von_neumann_entropy(state_from(mat, dims));
      },
      py::arg("rho"), py::arg("dims"));
  m.def(
      "condition_harness",
      [](const Matrix& mat, const std::vector<int>& dims, const std::string& measure,
         std::uint64_t seed, int trials) {
        MeasureKind kind = MeasureKind::GenuineCorrelation;
        if (measure == "mtc") kind = MeasureKind::TotalCorrelation;
        else if (measure == "lui") kind = MeasureKind::SquaredCumulantNorm;
        else if (measure != "mc") throw DomainError("measure must be mc, mtc or lui");
        HarnessOptions opts;
        opts.unitary_trials = trials;
        opts.channel_trials = trials;
        opts.check_condition5 = kind != MeasureKind::SquaredCumulantNorm;
        return report_dict(condition_harness(state_from(mat, dims), kind, seed, opts));
      },
      py::arg("rho"), py::arg("dims"), py::arg("measure") = "mc", py::arg("seed") = 12345,
      py::arg("trials") = 50);

  // Stabilizer backend.
  m.def(
      "stabilizer_measure",
      [](const std::vector<std::string>& gens) { return stabilizer_measure(group_from(gens)); },
      py::arg("generators"),
      "M_C of the stabilizer state given its generators, e.g. ['XZI','ZXZ','IZX'].");
  m.def(
      "stabilizer_beta",
      [](const std::vector<std::string>& gens) {
        const CumulantExpansion ce = cumulant_coefficients(group_from(gens));
        std::vector<std::pair<std::string, std::int64_t>> out;
        for (std::size_t e = 0; e < ce.beta.size(); ++e) {
          out.emplace_back(format_pauli(ce.elements[e]), ce.beta[e]);
        }
        return out;
      },
      py::arg("generators"), "Pairs (element, beta) of the cumulant expansion.");
  m.def(
      "stabilizer_spectrum",
      [](const std::vector<std::string>& gens) {
        return stabilizer_spectrum(cumulant_coefficients(group_from(gens)));
      },
      py::arg("generators"));
  m.def(
      "stabilizer_reduced_measure",
      [](const std::vector<std::string>& gens, const std::vector<int>& subset) {
        const auto r = reduced_measure(group_from(gens), mask_from(subset));
        return py::make_tuple(r.value, r.single_party);
      },
      py::arg("generators"), py::arg("subset"),
      "(measure, single_party_flag) of the reduced state on the 1-based subset.");
  m.def(
      "stabilizer_dense",
      [](const std::vector<std::string>& gens) {
        return Matrix(dense_from_stabilizer(group_from(gens)).mat);
      },
      py::arg("generators"));

  // Exact GHZ analysis.
  m.def(
      "c_coefficient",
      [](int n) { return c_coefficient_sum(n).get_str(); },
      py::arg("n"), "Exact fraction string of the classical-cumulant coefficient.");
  m.def(
      "ghz_table",
      [](int max_n) {
        py::list rows;
        for (const GhzRow& row : fig1_table(max_n)) {
          py::dict d;
          d["n"] = row.n;
          d["c_n"] = row.c_n.get_str();
          d["measure_ghz"] = row.measure_ghz.get_str();
          d["measure_classical"] = row.measure_classical.get_str();
          d["c_n_float"] = mpq_get_d(row.c_n.get_mpq_t());
          d["measure_ghz_float"] = mpq_get_d(row.measure_ghz.get_mpq_t());
          d["measure_classical_float"] = mpq_get_d(row.measure_classical.get_mpq_t());
          rows.append(d);
        }
        return rows;
      },
      py::arg("max_n"));
  m.def("ghz_state", [](int n) { return Matrix(ghz_state(n).mat); }, py::arg("n"));
  m.def(
      "classical_correlated_state",
      [](int n) { return Matrix(classical_correlated_state(n).mat); }, py::arg("n"));

  // Three-qubit canonical family.
  m.def(
      "canonical_state",
      [](double a0, double a1, double b1, double b2, double b3, double phi) {
        return Vector(canonical_state(CanonicalParams{a0, a1, b1, b2, b3, phi}).amps);
      },
      py::arg("a0"), py::arg("a1"), py::arg("b1"), py::arg("b2"), py::arg("b3"),
      py::arg("phi") = 0.0);
  m.def(
      "product_law_harness",
      [](std::uint64_t seed, int trials, double eps) {
        const ProductLawReport r = product_law_harness(seed, trials, eps);
        py::dict d;
        d["trials"] = r.trials;
        d["violations"] = r.violations;
        d["min_mc_nonproduct"] = r.min_mc_nonproduct;
        d["max_corner_element"] = r.max_corner_element;
        return d;
      },
      py::arg("seed") = 12345, py::arg("trials") = 1000, py::arg("eps") = 1e-6);

  m.def(
      "load_state_json",
      [](const std::string& path) {
        const DenseOperator rho = load_state_file(path);
        return py::make_tuple(Matrix(rho.mat), rho.shape.dims);
      },
      py::arg("path"), "(matrix, dims) from a state JSON file.");

#ifdef QCORR_VERSION
  m.attr("__version__") = QCORR_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
