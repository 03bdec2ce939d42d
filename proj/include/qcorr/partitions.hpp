#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace qcorr {

/// Subset of the party index set {1, ..., N}. Party i occupies bit i-1.
/// N is capped at 32.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> parties);
  /// The full set {1, ..., n}.
  static SubsetMask full(int n);

  std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcount(bits_); }
  bool contains(int party) const { return (bits_ >> (party - 1)) & 1u; }
  /// Smallest party in the set; requires nonempty.
  int lowest() const { return __builtin_ctz(bits_) + 1; }

  SubsetMask with(int party) const { return SubsetMask(bits_ | (1u << (party - 1))); }
  SubsetMask without(int party) const { return SubsetMask(bits_ & ~(1u << (party - 1))); }
  SubsetMask intersect(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  SubsetMask unite(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  SubsetMask minus(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
  bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }
  bool disjoint_with(SubsetMask o) const { return (bits_ & o.bits_) == 0; }

  /// Parties in ascending order (1-based).
  std::vector<int> parties() const;

  auto operator<=>(const SubsetMask&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A split of ground_set into pairwise disjoint nonempty blocks whose union
/// is ground_set. Blocks are stored ascending by smallest element.
struct SetPartition {
  std::vector<SubsetMask> blocks;
  SubsetMask ground_set;

  int block_count() const { return static_cast<int>(blocks.size()); }
};

/// Visit every set partition of ground_set exactly once, in the canonical
/// (lexicographic restricted-growth-string) order. Throws ResourceError when
/// |ground_set| exceeds the partition guard, DomainError when it is empty.
void for_each_partition(SubsetMask ground_set,
                        const std::function<void(const SetPartition&)>& visit);

std::vector<SetPartition> enumerate_partitions(SubsetMask ground_set);

/// Partitions with at least two blocks; count is B(n) - 1.
std::vector<SetPartition> enumerate_proper_partitions(SubsetMask ground_set);

/// Coefficient (-1)^M (M-1)! of an M-block term in the pseudo-state sum.
/// Requires M >= 2 (exact in 64 bits through M = 20).
std::int64_t pseudo_coefficient(int block_count);

}  // namespace qcorr
