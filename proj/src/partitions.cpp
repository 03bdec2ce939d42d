#include "qcorr/partitions.hpp"

#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

SubsetMask SubsetMask::of(std::initializer_list<int> parties) {
  std::uint32_t bits = 0;
  for (int p : parties) {
    if (p < 1 || p > 32) throw DomainError("party index out of range 1..32");
    bits |= 1u << (p - 1);
  }
  return SubsetMask(bits);
}

SubsetMask SubsetMask::full(int n) {
  if (n < 0 || n > 32) throw DomainError("party count out of range 0..32");
  return n == 0 ? SubsetMask() : SubsetMask(n == 32 ? ~0u : (1u << n) - 1u);
}

std::vector<int> SubsetMask::parties() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(__builtin_ctz(b) + 1);
  }
  return out;
}

namespace {

// Lexicographic enumeration of restricted growth strings a[0..n-1] with
// a[0] = 0 and a[i] <= 1 + max(a[0..i-1]). Block j collects the elements
// whose string value is j, so blocks come out ascending by smallest element.
void visit_rgs(const std::vector<int>& elems,
               const std::function<void(const SetPartition&)>& visit) {
  const int n = static_cast<int>(elems.size());
  std::vector<int> a(n, 0);
  SetPartition part;
  part.ground_set = SubsetMask();
  for (int e : elems) part.ground_set = part.ground_set.with(e);

  auto emit = [&](int block_count) {
    part.blocks.assign(block_count, SubsetMask());
    for (int i = 0; i < n; ++i) {
      part.blocks[a[i]] = part.blocks[a[i]].with(elems[i]);
    }
    visit(part);
  };

  // Recursion over positions; value order 0,1,...,max+1 gives lexicographic
  // RGS order.
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == n) {
      emit(maxv + 1);
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      a[i] = v;
      rec(i + 1, v > maxv ? v : maxv);
    }
  };
  rec(1, 0);
}

}  // namespace

void for_each_partition(SubsetMask ground_set,
                        const std::function<void(const SetPartition&)>& visit) {
  if (ground_set.empty()) throw DomainError("cannot partition the empty set");
  const int n = ground_set.count();
  if (n > limits().max_partition_elements) {
    throw ResourceError("partition enumeration limited to " +
                        std::to_string(limits().max_partition_elements) +
                        " elements, got " + std::to_string(n));
  }
  visit_rgs(ground_set.parties(), visit);
}

std::vector<SetPartition> enumerate_partitions(SubsetMask ground_set) {
  std::vector<SetPartition> out;
  for_each_partition(ground_set, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<SetPartition> enumerate_proper_partitions(SubsetMask ground_set) {
  std::vector<SetPartition> out;
  for_each_partition(ground_set, [&](const SetPartition& p) {
    if (p.block_count() >= 2) out.push_back(p);
  });
  return out;
}

std::int64_t pseudo_coefficient(int block_count) {
  if (block_count < 2) throw DomainError("pseudo-state coefficients require >= 2 blocks");
  if (block_count > 20) throw ResourceError("coefficient exceeds 64-bit range beyond 20 blocks");
  std::int64_t fact = 1;
  for (int k = 2; k < block_count; ++k) fact *= k;
  return (block_count % 2 == 0) ? fact : -fact;
}

}  // namespace qcorr
