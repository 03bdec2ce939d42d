#pragma once

#include <optional>
#include <string>

#include "qcorr/dense.hpp"
#include "qcorr/partitions.hpp"

namespace qcorr {

/// Traceless Hermitian remainder of a state after subtracting everything its
/// proper-subset marginals can reconstruct. Vanishes on bipartite products.
struct CumulantOperator {
  DenseOperator op;
  SystemShape source_shape;
};

/// Partition-sum combination of marginals whose every single-party partial
/// trace matches the input state's.
DenseOperator pseudo_state(const DenseOperator& rho);

CumulantOperator cumulant(const DenseOperator& rho);

/// Cumulant of the reduced state on s; for a singleton this is the marginal
/// itself.
DenseOperator cumulant_of_subset(const DenseOperator& rho, SubsetMask s);

/// Sum of block-products of subset cumulants over all partitions; must
/// reproduce rho.
DenseOperator ursell_reconstruct(const DenseOperator& rho);

/// M_C: half the trace norm of the cumulant.
double correlation_measure(const DenseOperator& rho);

/// M_TC: trace distance to the product of single-party marginals.
double total_correlation(const DenseOperator& rho);

/// M'_C: sum of squared cumulant eigenvalues (local-unitary-invariant
/// correlation function; not augmentation invariant).
double lui_mcf(const DenseOperator& rho);

/// Three-party mutual entropy S(1:2:3); may be negative.
double mutual_entropy_3(const DenseOperator& rho);

/// Relative entropy from the state to the product of its marginals,
/// sum_i S(rho_i) - S(rho).
double relative_entropy_total(const DenseOperator& rho);

struct CorrelationReport {
  int n_parties = 0;
  double m_c = 0.0;
  std::optional<double> m_tc;
  std::optional<double> lui_mcf;
  std::optional<double> mutual_entropy;
  std::optional<double> relative_entropy_total;
};

/// JSON object with fixed field names; absent fields are omitted.
std::string report_to_json(const CorrelationReport& report);
std::string report_to_csv(const CorrelationReport& report);

}  // namespace qcorr
