#pragma once

#include <vector>

#include "zmcenter/cayley_group.hpp"

namespace zmcenter::detail {

// Backtracking over images of a generating sequence. A branch is extended by
// rebuilding the partial map on the closure of the assigned generators; any
// inconsistent edge x -> x*g_i or collision of images prunes the branch.
class AutSearch {
 public:
  explicit AutSearch(const CayleyGroup& g);

  const std::vector<Index>& generators() const noexcept { return gens_; }
  /// Admissible images of the first generator (same element order).
  const std::vector<Index>& first_candidates() const { return candidates_.front(); }

  /// All automorphisms sending generators()[0] to `first_image`, in
  /// lexicographic order of the generator images.
  std::vector<Permutation> search_from(Index first_image) const;

 private:
  bool build_map(const std::vector<Index>& images, Permutation& map,
                 std::vector<char>& used) const;
  void recurse(std::vector<Index>& images, std::vector<Permutation>& out) const;

  const CayleyGroup& g_;
  std::vector<Index> gens_;
  std::vector<std::vector<Index>> candidates_;
};

}  // namespace zmcenter::detail
