#pragma once

// Data-parallel inner loops of the brute-force oracles. Each kernel has a
// serial reference with the same signature; both must return identical,
// deterministically ordered results.

#include <span>
#include <vector>

#include "zmcenter/aut.hpp"
#include "zmcenter/cayley_group.hpp"
#include "zmcenter/zm.hpp"

namespace zmcenter::kernels {

/// Indices i with perm[i] == i for every permutation, ascending.
std::vector<Index> fixed_points_serial(std::span<const Permutation> perms, std::size_t order);
std::vector<Index> fixed_points_parallel(std::span<const Permutation> perms, std::size_t order);

/// Elements of ZM(m,n,r) fixed by every listed automorphism, in u-major order.
std::vector<ZmElement> zm_fixed_points_serial(const ZmTriple& t, std::span<const AutTriple> auts);
std::vector<ZmElement> zm_fixed_points_parallel(const ZmTriple& t, std::span<const AutTriple> auts);

/// Full automorphism search, split over the images of the first generator.
std::vector<Permutation> automorphisms_serial(const CayleyGroup& g);
std::vector<Permutation> automorphisms_parallel(const CayleyGroup& g);

}  // namespace zmcenter::kernels
