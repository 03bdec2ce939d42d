#include "qcorr/cumulant.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

namespace {

/// Marginals keyed by subset mask, filled lazily; every subset is used by
/// many partitions.
class MarginalCache {
 public:
  explicit MarginalCache(const DenseOperator& rho) : rho_(rho) {}

  const DenseOperator& get(SubsetMask s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    const SubsetMask full = SubsetMask::full(rho_.shape.parties());
    DenseOperator red = (s == full) ? rho_ : partial_trace(rho_, s);
    return cache_.emplace(s, std::move(red)).first->second;
  }

 private:
  const DenseOperator& rho_;
  std::map<SubsetMask, DenseOperator> cache_;
};

/// Tensor the given per-block operators together in canonical block order and
/// permute the parties back to ascending order.
DenseOperator block_product(const std::vector<SubsetMask>& blocks,
                            const std::vector<const DenseOperator*>& factors) {
  DenseOperator term = *factors[0];
  for (std::size_t b = 1; b < factors.size(); ++b) {
    term = tensor_product(term, *factors[b]);
  }
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

DenseOperator pseudo_state_impl(const DenseOperator& rho, MarginalCache& cache) {
  const int n = rho.shape.parties();
  if (n < 2) throw DomainError("pseudo-state requires at least two parties");

  Matrix acc = Matrix::Zero(rho.mat.rows(), rho.mat.cols());
  for_each_partition(SubsetMask::full(n), [&](const SetPartition& part) {
    if (part.block_count() < 2) return;
    std::vector<const DenseOperator*> factors;
    factors.reserve(part.blocks.size());
    for (const SubsetMask& b : part.blocks) factors.push_back(&cache.get(b));
    const DenseOperator term = block_product(part.blocks, factors);
    acc += static_cast<double>(pseudo_coefficient(part.block_count())) * term.mat;
  });
  return DenseOperator{rho.shape, std::move(acc), OperatorRole::Hermitian};
}

void require_state(const DenseOperator& rho) {
  if (rho.role != OperatorRole::State) {
    throw DomainError("operation requires a density matrix, not a bare Hermitian operator");
  }
}

}  // namespace

DenseOperator pseudo_state(const DenseOperator& rho) {
  require_state(rho);
  MarginalCache cache(rho);
  return pseudo_state_impl(rho, cache);
}

CumulantOperator cumulant(const DenseOperator& rho) {
  require_state(rho);
  MarginalCache cache(rho);
  const DenseOperator pseudo = pseudo_state_impl(rho, cache);
  DenseOperator c{rho.shape, rho.mat - pseudo.mat, OperatorRole::Hermitian};
  if (std::abs(c.mat.trace()) > tol().cumulant_trace) {
    throw DomainError("cumulant trace deviates from zero beyond tolerance");
  }
  // Tracing out any single party must annihilate the cumulant.
  const int n = rho.shape.parties();
  for (int p = 1; p <= n; ++p) {
    const DenseOperator reduced = partial_trace(c, SubsetMask::full(n).without(p));
    if (reduced.mat.cwiseAbs().maxCoeff() > tol().marginal_annihilation) {
      throw DomainError("cumulant marginal over party " + std::to_string(p) +
                        " failed to vanish");
    }
  }
  return CumulantOperator{std::move(c), rho.shape};
}

DenseOperator cumulant_of_subset(const DenseOperator& rho, SubsetMask s) {
  require_state(rho);
  if (s.empty()) throw DomainError("subset cumulant needs a nonempty subset");
  if (!s.subset_of(SubsetMask::full(rho.shape.parties()))) {
    throw DomainError("subset references parties outside the shape");
  }
  const SubsetMask full = SubsetMask::full(rho.shape.parties());
  DenseOperator reduced = (s == full) ? rho : partial_trace(rho, s);
  if (s.count() == 1) return reduced;  // C^(i) is the marginal itself
  return cumulant(reduced).op;
}

DenseOperator ursell_reconstruct(const DenseOperator& rho) {
  require_state(rho);
  const int n = rho.shape.parties();
  if (n > limits().max_ursell_parties) {
    throw ResourceError("reconstruction guard: at most " +
                        std::to_string(limits().max_ursell_parties) + " parties");
  }
  if (n < 2) throw DomainError("reconstruction requires at least two parties");

  // Subset cumulants, smallest first so reduced-state cumulants are cheap.
  std::map<SubsetMask, DenseOperator> subset_cumulant;
  const SubsetMask full = SubsetMask::full(n);
  for (std::uint32_t bits = 1; bits <= full.bits(); ++bits) {
    SubsetMask s(bits);
    if (!s.subset_of(full)) continue;
    subset_cumulant.emplace(s, cumulant_of_subset(rho, s));
  }

  Matrix acc = Matrix::Zero(rho.mat.rows(), rho.mat.cols());
  for_each_partition(full, [&](const SetPartition& part) {
    std::vector<const DenseOperator*> factors;
    factors.reserve(part.blocks.size());
    for (const SubsetMask& b : part.blocks) factors.push_back(&subset_cumulant.at(b));
    acc += block_product(part.blocks, factors).mat;
  });
  return DenseOperator{rho.shape, std::move(acc), OperatorRole::Hermitian};
}

double correlation_measure(const DenseOperator& rho) {
  return 0.5 * trace_norm(cumulant(rho).op);
}

double total_correlation(const DenseOperator& rho) {
  require_state(rho);
  const int n = rho.shape.parties();
  if (n < 2) throw DomainError("total correlation requires at least two parties");
  std::vector<SubsetMask> blocks;
  std::vector<DenseOperator> marginals;
  std::vector<const DenseOperator*> factors;
  for (int p = 1; p <= n; ++p) blocks.push_back(SubsetMask::of({p}));
  for (int p = 1; p <= n; ++p) marginals.push_back(partial_trace(rho, blocks[p - 1]));
  for (const DenseOperator& m : marginals) factors.push_back(&m);
  const DenseOperator product = block_product(blocks, factors);
  return trace_distance(rho, product);
}

double lui_mcf(const DenseOperator& rho) {
  double sum = 0.0;
  for (double l : hermitian_spectrum(cumulant(rho).op)) sum += l * l;
  return sum;
}

double mutual_entropy_3(const DenseOperator& rho) {
  require_state(rho);
  if (rho.shape.parties() != 3) throw DomainError("mutual entropy is defined for exactly 3 parties");
  auto s = [&](std::initializer_list<int> keep) {
    return von_neumann_entropy(partial_trace(rho, SubsetMask::of(keep)));
  };
  return von_neumann_entropy(rho) - s({1, 2}) - s({2, 3}) - s({1, 3}) + s({1}) + s({2}) + s({3});
}

double relative_entropy_total(const DenseOperator& rho) {
  require_state(rho);
  double sum = 0.0;
  for (int p = 1; p <= rho.shape.parties(); ++p) {
    sum += von_neumann_entropy(partial_trace(rho, SubsetMask::of({p})));
  }
  return sum - von_neumann_entropy(rho);
}

std::string report_to_json(const CorrelationReport& report) {
  nlohmann::ordered_json j;
  j["n_parties"] = report.n_parties;
  j["m_c"] = report.m_c;
  if (report.m_tc) j["m_tc"] = *report.m_tc;
  if (report.lui_mcf) j["lui_mcf"] = *report.lui_mcf;
  if (report.mutual_entropy) j["mutual_entropy"] = *report.mutual_entropy;
  if (report.relative_entropy_total) j["relative_entropy_total"] = *report.relative_entropy_total;
  return j.dump();
}

std::string report_to_csv(const CorrelationReport& report) {
  auto cell = [](const std::optional<double>& v) {
    if (!v) return std::string();
    std::ostringstream os;
    os.precision(12);
    os << *v;
    return os.str();
  };
  std::ostringstream os;
  os << "n_parties,m_c,m_tc,lui_mcf,mutual_entropy,relative_entropy_total\n";
  os << report.n_parties << "," << cell(report.m_c) << "," << cell(report.m_tc) << ","
     << cell(report.lui_mcf) << "," << cell(report.mutual_entropy) << ","
     << cell(report.relative_entropy_total);
  return os.str();
}

}  // namespace qcorr
