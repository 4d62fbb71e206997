#pragma once

// Small explicit finite groups given by their multiplication table. These
// serve as ground truth for the closed-form ZM-group machinery.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace zmcenter {

using Index = std::uint32_t;

/// A permutation of element indices; perm[i] is the image of element i.
using Permutation = std::vector<Index>;

class CayleyGroup {
 public:
  /// `table` is row-major, order x order; table[i*order + j] = i*j.
  /// Throws DomainError unless the table is a group table (identity, Latin
  /// square, associativity: exhaustive up to order 200, sampled above).
  CayleyGroup(std::size_t order, std::vector<Index> table, std::vector<std::string> labels);

  static CayleyGroup cyclic(std::size_t n);

  std::size_t order() const noexcept { return order_; }
  Index identity() const noexcept { return identity_; }
  Index mul(Index a, Index b) const noexcept { return table_[std::size_t{a} * order_ + b]; }
  Index inverse(Index a) const noexcept { return inverse_[a]; }
  /// Order of element a, precomputed.
  std::size_t element_order(Index a) const noexcept { return element_order_[a]; }
  const std::string& label(Index a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const Index> table() const noexcept { return table_; }

  /// "order" line, then one row of space-separated indices per element.
  void dump(std::ostream& os) const;

 private:
  std::size_t order_;
  std::vector<Index> table_;
  std::vector<std::string> labels_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
  std::vector<std::size_t> element_order_;
};

/// Reads the dump() format back; labels become the decimal indices.
CayleyGroup read_table(std::istream& is);

/// A subgroup of a CayleyGroup, stored as its sorted member indices. The
/// parent must outlive the subgroup.
class Subgroup {
 public:
  Subgroup(const CayleyGroup& parent, std::vector<Index> members);
  Subgroup(CayleyGroup&& parent, std::vector<Index> members) = delete;

  const CayleyGroup& parent() const noexcept { return *parent_; }
  const std::vector<Index>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Index g) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const CayleyGroup* parent_;
  std::vector<Index> members_;
};

namespace gg {

inline constexpr std::size_t kDefaultTableBound = 2000;
inline constexpr std::size_t kDefaultSubgroupBound = 400;
inline constexpr std::size_t kDefaultAutBound = 200;

/// Sorted members of the subgroup generated by `gens`.
std::vector<Index> closure(const CayleyGroup& g, std::span<const Index> gens);

/// Componentwise product; the first factor is the most significant digit of
/// the flattened index.
CayleyGroup direct_product(std::span<const CayleyGroup> factors,
                           std::size_t bound = kDefaultTableBound);

/// The subgroup as a group in its own right; element i of the result is
/// members()[i] and keeps its parent's label.
CayleyGroup induced_group(const Subgroup& s);

std::vector<Subgroup> subgroups(const CayleyGroup& g, std::size_t bound = kDefaultSubgroupBound);
std::vector<Subgroup> subgroups(CayleyGroup&& g, std::size_t bound = kDefaultSubgroupBound) = delete;

/// Greedy generating sequence: highest-order element first, then repeatedly a
/// highest-order element outside the current closure (lowest index on ties).
std::vector<Index> generating_sequence(const CayleyGroup& g);

/// Every table-preserving bijection, sorted lexicographically.
std::vector<Permutation> automorphisms_bruteforce(const CayleyGroup& g,
                                                  std::size_t bound = kDefaultAutBound);

/// Elements fixed by every automorphism.
Subgroup absolute_center_bruteforce(const CayleyGroup& g, std::size_t bound = kDefaultAutBound);
/// A Subgroup refers to its parent, which must outlive it.
Subgroup absolute_center_bruteforce(CayleyGroup&& g, std::size_t bound = kDefaultAutBound) = delete;

Subgroup center(const CayleyGroup& g);
Subgroup center(CayleyGroup&& g) = delete;

struct Cyclicity {
  bool cyclic;
  std::size_t order;
};

Cyclicity is_cyclic(const Subgroup& s);

/// s is normal in its parent.
bool is_normal(const Subgroup& s);

}  // namespace gg
}  // namespace zmcenter
