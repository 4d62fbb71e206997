#include "zmcenter/kernels.hpp"

#include <algorithm>

#include "zmcenter/detail/aut_search.hpp"

namespace zmcenter::kernels {

std::vector<Index> fixed_points_serial(std::span<const Permutation> perms, std::size_t order) {
  std::vector<Index> out;
  for (Index x = 0; x < order; ++x) {
    const bool fixed =
        std::all_of(perms.begin(), perms.end(), [x](const Permutation& p) { return p[x] == x; });
    if (fixed) out.push_back(x);
  }
  return out;
}

std::vector<Index> fixed_points_parallel(std::span<const Permutation> perms, std::size_t order) {
  std::vector<char> fixed(order, 1);
  const auto n = static_cast<long long>(order);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    const auto x = static_cast<Index>(i);
    for (const auto& p : perms)
      if (p[x] != x) {
        fixed[i] = 0;
        break;
      }
  }
  std::vector<Index> out;
  for (Index x = 0; x < order; ++x)
    if (fixed[x]) out.push_back(x);
  return out;
}

std::vector<ZmElement> zm_fixed_points_serial(const ZmTriple& t, std::span<const AutTriple> auts) {
  std::vector<ZmElement> out;
  for (const auto& g : zm::elements(t)) {
    const bool fixed = std::all_of(auts.begin(), auts.end(),
                                   [&](const AutTriple& a) { return aut::apply(t, a, g) == g; });
    if (fixed) out.push_back(g);
  }
  return out;
}

std::vector<ZmElement> zm_fixed_points_parallel(const ZmTriple& t,
                                                std::span<const AutTriple> auts) {
  const auto elems = zm::elements(t);
  std::vector<char> fixed(elems.size(), 1);
  const auto n = static_cast<long long>(elems.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    for (const auto& a : auts)
      if (aut::apply(t, a, elems[i]) != elems[i]) {
        fixed[i] = 0;
        break;
      }
  }
  std::vector<ZmElement> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (fixed[i]) out.push_back(elems[i]);
  return out;
}

std::vector<Permutation> automorphisms_serial(const CayleyGroup& g) {
  if (g.order() == 1) return {Permutation{0}};
  const detail::AutSearch search(g);
  std::vector<Permutation> out;
  for (Index first : search.first_candidates()) {
    auto part = search.search_from(first);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> automorphisms_parallel(const CayleyGroup& g) {
  if (g.order() == 1) return {Permutation{0}};
  const detail::AutSearch search(g);
  const auto& firsts = search.first_candidates();
  std::vector<std::vector<Permutation>> parts(firsts.size());
  const auto n = static_cast<long long>(firsts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) parts[i] = search.search_from(firsts[i]);
  std::vector<Permutation> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zmcenter::kernels
