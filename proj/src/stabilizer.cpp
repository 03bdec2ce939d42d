#include "qcorr/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "qcorr/errors.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

namespace {

// Phase exponents of s_a * s_b = i^g s_(a xor b), indexed by the codes
// x + 2z: I=0, X=1, Z=2, Y=3. Cyclic products (XY, YZ, ZX) pick up +i.
constexpr int kPhaseTable[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 3, 1},
    {0, 1, 0, 3},
    {0, 3, 1, 0},
};

int qubit_code(const PauliOperator& p, int q) {
  return static_cast<int>(((p.x_bits >> q) & 1) | (((p.z_bits >> q) & 1) << 1));
}

}  // namespace

PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.n != q.n) throw DomainError("Pauli operands act on different qubit counts");
  int t = p.phase_exp + q.phase_exp;
  std::uint64_t both = (p.x_bits | p.z_bits) & (q.x_bits | q.z_bits);
  for (; both != 0; both &= both - 1) {
    const int qb = std::countr_zero(both);
    t += kPhaseTable[qubit_code(p, qb)][qubit_code(q, qb)];
  }
  return PauliOperator{p.n, p.x_bits ^ q.x_bits, p.z_bits ^ q.z_bits, t & 3};
}

bool pauli_commutes(const PauliOperator& p, const PauliOperator& q) {
  const int sym = std::popcount(p.x_bits & q.z_bits) + std::popcount(p.z_bits & q.x_bits);
  return (sym & 1) == 0;
}

PauliOperator parse_pauli(std::string_view text) {
  std::size_t pos = 0;
  int t = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') t = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    t += 1;
    ++pos;
  }
  if (pos == text.size()) throw ParseError("Pauli string has no letters", static_cast<int>(pos) + 1);
  PauliOperator p;
  p.phase_exp = t & 3;
  p.n = 0;
  for (; pos < text.size(); ++pos, ++p.n) {
    if (p.n >= 32) throw ParseError("at most 32 qubits supported", static_cast<int>(pos) + 1);
    const std::uint64_t bit = 1ull << p.n;
    switch (text[pos]) {
      case 'I': break;
      case 'X': p.x_bits |= bit; break;
      case 'Z': p.z_bits |= bit; break;
      case 'Y': p.x_bits |= bit; p.z_bits |= bit; break;
      default:
        throw ParseError(std::string("unexpected character '") + text[pos] + "' in Pauli string",
                         static_cast<int>(pos) + 1);
    }
  }
  return p;
}

std::string format_pauli(const PauliOperator& p) {
  static const char* kSign[4] = {"+", "+i", "-", "-i"};
  std::string out = kSign[p.phase_exp & 3];
  static const char kLetter[4] = {'I', 'X', 'Z', 'Y'};
  for (int q = 0; q < p.n; ++q) out += kLetter[qubit_code(p, q)];
  return out;
}

Matrix dense_pauli(const PauliOperator& p) {
  const long dim = 1L << p.n;
  if (p.n > limits().max_dense_stabilizer_qubits) {
    throw ResourceError("dense Pauli render capped at " +
                        std::to_string(limits().max_dense_stabilizer_qubits) + " qubits");
  }
  // Map qubit q (bit q of the operator) to basis-index bit n-1-q: qubit 1 is
  // the most significant digit of the index.
  std::uint64_t xi = 0, zi = 0;
  for (int q = 0; q < p.n; ++q) {
    if ((p.x_bits >> q) & 1) xi |= 1ull << (p.n - 1 - q);
    if ((p.z_bits >> q) & 1) zi |= 1ull << (p.n - 1 - q);
  }
  static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex base = kPhase[(p.phase_exp + std::popcount(p.x_bits & p.z_bits)) & 3];
  Matrix m = Matrix::Zero(dim, dim);
  for (long col = 0; col < dim; ++col) {
    const double sign = (std::popcount(static_cast<std::uint64_t>(col) & zi) & 1) ? -1.0 : 1.0;
    m(static_cast<long>(col ^ static_cast<long>(xi)), col) = base * sign;
  }
  return m;
}

StabilizerGroup validate_stabilizer(std::vector<PauliOperator> generators) {
  if (generators.empty()) throw DomainError("stabilizer group needs at least one generator");
  const int n = generators[0].n;
  if (n < 1 || n > 32) throw DomainError("qubit count out of range 1..32");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].n != n) {
      throw DomainError("generator " + std::to_string(i + 1) + " has a different qubit count");
    }
    if (!generators[i].is_hermitian()) {
      throw DomainError("generator " + std::to_string(i + 1) +
                        " is not Hermitian (imaginary phase)");
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!pauli_commutes(generators[i], generators[j])) {
        throw DomainError("generators " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " anticommute");
      }
    }
  }
  // GF(2) independence of the (x|z) rows; a dependency would put I (or -I)
  // in the generating set's span.
  std::vector<std::uint64_t> basis;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::uint64_t v = generators[i].x_bits | (generators[i].z_bits << 32);
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    if (v == 0) {
      throw DomainError("generator " + std::to_string(i + 1) +
                        " is a product of earlier generators");
    }
    basis.push_back(v);
  }
  if (static_cast<int>(generators.size()) > n) {
    throw DomainError("more independent generators than qubits");
  }
  return StabilizerGroup{n, std::move(generators)};
}

std::vector<std::pair<std::uint32_t, PauliOperator>> enumerate_elements(const StabilizerGroup& g) {
  const int k = g.k();
  if (k > limits().max_spectrum_qubits) {
    throw ResourceError("element enumeration capped at 2^" +
                        std::to_string(limits().max_spectrum_qubits) + " elements");
  }
  std::vector<std::pair<std::uint32_t, PauliOperator>> out;
  out.reserve(1u << k);
  PauliOperator cur = PauliOperator::identity(g.n);
  out.emplace_back(0u, cur);
  for (std::uint32_t i = 1; i < (1u << k); ++i) {
    const std::uint32_t gray = i ^ (i >> 1);
    const std::uint32_t prev = (i - 1) ^ ((i - 1) >> 1);
    const int j = std::countr_zero(gray ^ prev);
    cur = pauli_multiply(cur, g.generators[j]);
    out.emplace_back(gray, cur);
  }
  return out;
}

DenseOperator dense_from_stabilizer(const StabilizerGroup& g) {
  if (g.k() != g.n) {
    throw DomainError("dense construction needs k = n generators (a pure stabilizer state)");
  }
  if (g.n > limits().max_dense_stabilizer_qubits) {
    throw ResourceError("dense stabilizer render capped at " +
                        std::to_string(limits().max_dense_stabilizer_qubits) + " qubits");
  }
  const long dim = 1L << g.n;
  Matrix acc = Matrix::Zero(dim, dim);
  for (const auto& [exp, elem] : enumerate_elements(g)) {
    acc += dense_pauli(elem);
  }
  acc /= static_cast<double>(dim);
  // The render must be a rank-1 projector.
  if (std::abs(acc.trace().real() - 1.0) > tol().trace) {
    throw DomainError("stabilizer render has wrong trace");
  }
  if ((acc * acc - acc).cwiseAbs().maxCoeff() > 1e-9) {
    throw DomainError("stabilizer render is not idempotent");
  }
  SystemShape shape;
  shape.dims.assign(g.n, 2);
  return DenseOperator{std::move(shape), std::move(acc), OperatorRole::State};
}

std::vector<PauliOperator> reduced_stabilizer(const StabilizerGroup& g, SubsetMask s) {
  if (!s.subset_of(SubsetMask::full(g.n))) {
    throw DomainError("subset references qubits outside the group");
  }
  std::vector<PauliOperator> out;
  for (const auto& [exp, elem] : enumerate_elements(g)) {
    if (elem.support().subset_of(s)) out.push_back(elem);
  }
  return out;
}

namespace {

/// F(b, r): sum over all ways of extending b fixed blocks with r further
/// labeled elements (joining existing blocks or opening new ones) of
/// (-1)^B (B-1)! at the final block count B. Exact in 64 bits for
/// b + r <= max_beta_qubits.
class ExtensionTable {
 public:
  explicit ExtensionTable(int n) : n_(n), table_((n + 1) * (n + 1), 0) {
    for (int b = 0; b <= n; ++b) {
      for (int r = 0; b + r <= n; ++r) {
        table_[b * (n + 1) + r] = compute(b, r);
      }
    }
  }

  std::int64_t operator()(int b, int r) const { return table_[b * (n_ + 1) + r]; }

 private:
  static std::int64_t compute(int b, int r) {
    std::vector<std::int64_t> weight(b + r + 1, 0);
    weight[b] = 1;
    for (int step = 0; step < r; ++step) {
      std::vector<std::int64_t> next(weight.size(), 0);
      for (int blocks = 0; blocks <= b + step; ++blocks) {
        if (weight[blocks] == 0) continue;
        next[blocks] += weight[blocks] * blocks;  // join an existing block
        next[blocks + 1] += weight[blocks];       // open a new block
      }
      weight = std::move(next);
    }
    std::int64_t sum = 0;
    std::int64_t sign_fact = -1;  // (-1)^B (B-1)! at B=1
    for (int blocks = 1; blocks <= b + r; ++blocks) {
      sum += weight[blocks] * sign_fact;
      sign_fact *= -(blocks);
    }
    return sum;
  }

  int n_;
  std::vector<std::int64_t> table_;
};

/// beta coefficients for an arbitrary stabilizer group acting on n_parties
/// qubits (used both for full states and support-restricted subgroups).
std::pair<std::vector<PauliOperator>, std::vector<std::int64_t>> beta_for_group(
    const StabilizerGroup& g) {
  const int n = g.n;
  if (n > limits().max_beta_qubits) {
    throw ResourceError("cumulant coefficients capped at " +
                        std::to_string(limits().max_beta_qubits) + " qubits");
  }
  const auto enumerated = enumerate_elements(g);
  const std::size_t count = enumerated.size();
  std::vector<PauliOperator> elements(count);
  for (const auto& [exp, elem] : enumerated) elements[exp] = elem;

  // Support masks of all elements, for the per-element good-block scan.
  std::vector<std::uint32_t> supports(count);
  for (std::size_t e = 0; e < count; ++e) {
    supports[e] = static_cast<std::uint32_t>(elements[e].x_bits | elements[e].z_bits);
  }

  const ExtensionTable F(n);
  std::vector<std::int64_t> beta(count, 0);
  std::vector<char> good(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> good_masks;
  for (std::size_t m = 0; m < count; ++m) {
    const PauliOperator& M = elements[m];
    const std::uint32_t supp = supports[m];
    const int r = n - std::popcount(supp);

    // Good blocks: supports of elements that equal M's restriction there.
    good_masks.clear();
    for (std::size_t e = 0; e < count; ++e) {
      const std::uint32_t se = supports[e];
      if (se != 0 && elements[e].x_bits == (M.x_bits & se) &&
          elements[e].z_bits == (M.z_bits & se)) {
        good[se] = 1;
        good_masks.push_back(se);
      }
    }

    // Sum (-1)^B (B-1)! over all partitions of the qubit set whose trace on
    // supp(M) consists of good blocks; non-support qubits are free. Blocks
    // containing the lowest remaining qubit are enumerated as that qubit
    // joined with each subset of the rest.
    std::int64_t acc = 0;
    auto recurse = [&](auto&& self, std::uint32_t remaining, int blocks) -> void {
      if (remaining == 0) {
        acc += F(blocks, r);
        return;
      }
      const std::uint32_t low = remaining & (~remaining + 1);
      const std::uint32_t rest = remaining ^ low;
      std::uint32_t sub = rest;
      while (true) {
        const std::uint32_t q = low | sub;
        if (good[q]) self(self, remaining ^ q, blocks + 1);
        if (sub == 0) break;
        sub = (sub - 1) & rest;
      }
    };
    if (supp == 0) {
      acc = F(0, n);
    } else {
      recurse(recurse, supp, 0);
    }
    beta[m] = -acc;
    for (std::uint32_t se : good_masks) good[se] = 0;
  }
  return {std::move(elements), std::move(beta)};
}

/// In-place Walsh-Hadamard transform; v[w] becomes sum_a v[a] (-1)^{w.a}.
void walsh_hadamard(std::vector<std::int64_t>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

/// M_C from the integer expansion: eigenvalue numerators are the transform
/// of beta, each appearing with multiplicity 2^(n-k), so the measure
/// collapses to sum |wht| / 2^(k+1) regardless of n.
double measure_from_beta(std::vector<std::int64_t> beta, int k) {
  walsh_hadamard(beta);
  unsigned __int128 sum = 0;
  for (std::int64_t w : beta) sum += static_cast<unsigned __int128>(w < 0 ? -w : w);
  return static_cast<double>(sum) / std::ldexp(1.0, k + 1);
}

}  // namespace

CumulantExpansion cumulant_coefficients(const StabilizerGroup& g) {
  if (g.k() != g.n) {
    throw DomainError("cumulant coefficients require k = n generators");
  }
  if (g.n < 2) throw DomainError("cumulant needs at least two qubits");
  auto [elements, beta] = beta_for_group(g);
  if (beta[0] != 0) throw DomainError("identity coefficient must vanish");
  return CumulantExpansion{g, std::move(elements), std::move(beta)};
}

std::vector<double> stabilizer_spectrum(const CumulantExpansion& ce) {
  const int k = ce.group.k();
  if (k > limits().max_spectrum_qubits) {
    throw ResourceError("sign-assignment sweep capped at 2^" +
                        std::to_string(limits().max_spectrum_qubits));
  }
  std::vector<std::int64_t> wht = ce.beta;
  walsh_hadamard(wht);
  std::int64_t total = 0;
  for (std::int64_t w : wht) total += w;
  if (total != 0) throw DomainError("cumulant spectrum must sum to zero");
  const double scale = std::ldexp(1.0, -ce.group.n);
  std::vector<double> out(wht.size());
  for (std::size_t i = 0; i < wht.size(); ++i) out[i] = static_cast<double>(wht[i]) * scale;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double stabilizer_measure(const StabilizerGroup& g) {
  const CumulantExpansion ce = cumulant_coefficients(g);
  return measure_from_beta(ce.beta, g.k());
}

namespace {

PauliOperator restrict_to(const PauliOperator& p, const std::vector<int>& qubits) {
  PauliOperator out;
  out.n = static_cast<int>(qubits.size());
  out.phase_exp = p.phase_exp;
  for (int i = 0; i < out.n; ++i) {
    const int q = qubits[i] - 1;
    if ((p.x_bits >> q) & 1) out.x_bits |= 1ull << i;
    if ((p.z_bits >> q) & 1) out.z_bits |= 1ull << i;
  }
  return out;
}

}  // namespace

ReducedMeasureResult reduced_measure(const StabilizerGroup& g, SubsetMask s) {
  if (s.empty()) throw DomainError("reduced measure needs a nonempty subset");
  if (!s.subset_of(SubsetMask::full(g.n))) {
    throw DomainError("subset references qubits outside the group");
  }
  if (s.count() == 1) return ReducedMeasureResult{0.0, true};

  const std::vector<int> qubits = s.parties();
  // Independent generating subset of the support-restricted subgroup.
  std::vector<PauliOperator> chosen;
  std::vector<std::uint64_t> basis;
  for (const PauliOperator& elem : reduced_stabilizer(g, s)) {
    const PauliOperator r = restrict_to(elem, qubits);
    std::uint64_t v = r.x_bits | (r.z_bits << 32);
    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      chosen.push_back(r);
    }
  }
  if (chosen.empty()) return ReducedMeasureResult{0.0, false};  // maximally mixed

  StabilizerGroup sub{static_cast<int>(qubits.size()), std::move(chosen)};
  auto [elements, beta] = beta_for_group(sub);
  if (beta[0] != 0) throw DomainError("identity coefficient must vanish");
  return ReducedMeasureResult{measure_from_beta(std::move(beta), sub.k()), false};
}

StabilizerGroup random_stabilizer_group(int n, std::uint64_t seed) {
  if (n < 1 || n > 32) throw DomainError("qubit count out of range 1..32");
  Rng rng(seed);
  std::vector<PauliOperator> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) gens.push_back(PauliOperator{n, 0, 1ull << i, 0});

  // Scramble with a random Clifford circuit, tracking exact phases.
  const int gates = 3 * n * n + 4;
  for (int step = 0; step < gates; ++step) {
    const int kind = static_cast<int>(rng.below(n >= 2 ? 3 : 2));
    if (kind == 0) {  // Hadamard: X<->Z, Y -> -Y
      const int q = static_cast<int>(rng.below(n));
      const std::uint64_t bit = 1ull << q;
      for (PauliOperator& p : gens) {
        const bool x = p.x_bits & bit, z = p.z_bits & bit;
        if (x && z) p.phase_exp ^= 2;
        if (x != z) {
          p.x_bits ^= bit;
          p.z_bits ^= bit;
        }
      }
    } else if (kind == 1) {  // phase gate: X -> Y, Y -> -X
      const int q = static_cast<int>(rng.below(n));
      const std::uint64_t bit = 1ull << q;
      for (PauliOperator& p : gens) {
        const bool x = p.x_bits & bit, z = p.z_bits & bit;
        if (x && z) p.phase_exp ^= 2;
        if (x) p.z_bits ^= bit;
      }
    } else {  // CNOT
      const int c = static_cast<int>(rng.below(n));
      int t = static_cast<int>(rng.below(n));
      while (t == c) t = static_cast<int>(rng.below(n));
      const std::uint64_t cb = 1ull << c, tb = 1ull << t;
      for (PauliOperator& p : gens) {
        const bool xc = p.x_bits & cb, zc = p.z_bits & cb;
        const bool xt = p.x_bits & tb, zt = p.z_bits & tb;
        if (xc && zt && !(xt ^ zc)) p.phase_exp ^= 2;
        if (xc) p.x_bits ^= tb;
        if (zt) p.z_bits ^= cb;
      }
    }
  }
  for (PauliOperator& p : gens) {
    if (rng.below(2)) p.phase_exp ^= 2;
  }
  return validate_stabilizer(std::move(gens));
}

}  // namespace qcorr
