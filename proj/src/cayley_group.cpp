#include "zmcenter/cayley_group.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "zmcenter/detail/aut_search.hpp"
#include "zmcenter/errors.hpp"
#include "zmcenter/kernels.hpp"

namespace zmcenter {

namespace {

constexpr std::size_t kExhaustiveAssociativity = 200;
constexpr std::size_t kAssociativitySamples = 20000;

}  // namespace

CayleyGroup::CayleyGroup(std::size_t order, std::vector<Index> table,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ == 0) throw DomainError("group order must be positive");
  if (table_.size() != order_ * order_) throw DomainError("table size does not match order");
  if (labels_.size() != order_) throw DomainError("label count does not match order");
  for (Index x : table_)
    if (x >= order_) throw DomainError("table entry out of range");

  // Latin square.
  std::vector<char> seen(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order_; ++j) seen[table_[i * order_ + j]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(order_))
      throw DomainError("row " + std::to_string(i) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order_; ++j) seen[table_[j * order_ + i]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(order_))
      throw DomainError("column " + std::to_string(i) + " is not a permutation");
  }

  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    bool is_identity = true;
    for (std::size_t j = 0; j < order_ && is_identity; ++j)
      is_identity = table_[e * order_ + j] == j && table_[j * order_ + e] == j;
    if (is_identity) {
      identity_ = static_cast<Index>(e);
      found = true;
    }
  }
  if (!found) throw DomainError("table has no two-sided identity");

  auto assoc = [&](Index a, Index b, Index c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (order_ <= kExhaustiveAssociativity) {
    for (Index a = 0; a < order_; ++a)
      for (Index b = 0; b < order_; ++b)
        for (Index c = 0; c < order_; ++c)
          if (!assoc(a, b, c)) throw DomainError("table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(order_ - 1));
    for (std::size_t s = 0; s < kAssociativitySamples; ++s)
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw DomainError("table is not associative");
  }

  inverse_.resize(order_);
  element_order_.resize(order_);
  for (Index a = 0; a < order_; ++a) {
    for (Index b = 0; b < order_; ++b)
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    std::size_t k = 1;
    for (Index x = a; x != identity_; x = mul(x, a)) ++k;
    element_order_[a] = k;
  }
}

CayleyGroup CayleyGroup::cyclic(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group order must be positive");
  std::vector<Index> table(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Index>((i + j) % n);
  }
  return CayleyGroup(n, std::move(table), std::move(labels));
}

void CayleyGroup::dump(std::ostream& os) const {
  os << order_ << '\n';
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      if (j > 0) os << ' ';
      os << table_[i * order_ + j];
    }
    os << '\n';
  }
}

CayleyGroup read_table(std::istream& is) {
  std::size_t order = 0;
  if (!(is >> order) || order == 0) throw DomainError("table dump: missing order");
  std::vector<Index> table(order * order);
  for (auto& x : table)
    if (!(is >> x)) throw DomainError("table dump: truncated table");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  return CayleyGroup(order, std::move(table), std::move(labels));
}

Subgroup::Subgroup(const CayleyGroup& parent, std::vector<Index> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!contains(parent.identity())) throw DomainError("subgroup must contain the identity");
  for (Index a : members_)
    for (Index b : members_)
      if (!contains(parent.mul(a, b))) throw DomainError("member set is not closed");
}

bool Subgroup::contains(Index g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

namespace detail {

AutSearch::AutSearch(const CayleyGroup& g) : g_(g), gens_(gg::generating_sequence(g)) {
  for (Index gen : gens_) {
    std::vector<Index> cands;
    for (Index x = 0; x < g.order(); ++x)
      if (g.element_order(x) == g.element_order(gen)) cands.push_back(x);
    candidates_.push_back(std::move(cands));
  }
}

bool AutSearch::build_map(const std::vector<Index>& images, Permutation& map,
                          std::vector<char>& used) const {
  constexpr Index kUnset = static_cast<Index>(-1);
  std::fill(map.begin(), map.end(), kUnset);
  std::fill(used.begin(), used.end(), 0);
  const Index e = g_.identity();
  map[e] = e;
  used[e] = 1;
  std::deque<Index> queue{e};
  while (!queue.empty()) {
    const Index x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < images.size(); ++i) {
      const Index y = g_.mul(x, gens_[i]);
      const Index image = g_.mul(map[x], images[i]);
      if (map[y] == kUnset) {
        if (used[image]) return false;
        map[y] = image;
        used[image] = 1;
        queue.push_back(y);
      } else if (map[y] != image) {
        return false;
      }
    }
  }
  return true;
}

void AutSearch::recurse(std::vector<Index>& images, std::vector<Permutation>& out) const {
  Permutation map(g_.order());
  std::vector<char> used(g_.order());
  if (!build_map(images, map, used)) return;
  const std::size_t level = images.size();
  if (level == gens_.size()) {
    out.push_back(std::move(map));
    return;
  }
  for (Index cand : candidates_[level]) {
    if (used[cand]) continue;
    images.push_back(cand);
    recurse(images, out);
    images.pop_back();
  }
}

std::vector<Permutation> AutSearch::search_from(Index first_image) const {
  std::vector<Permutation> out;
  std::vector<Index> images{first_image};
  recurse(images, out);
  return out;
}

}  // namespace detail

namespace gg {

std::vector<Index> closure(const CayleyGroup& g, std::span<const Index> gens) {
  std::vector<char> seen(g.order());
  std::vector<Index> members{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Index x = members[head];
    for (Index s : gens) {
      const Index y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

CayleyGroup direct_product(std::span<const CayleyGroup> factors, std::size_t bound) {
  if (factors.empty()) throw DomainError("direct product needs at least one factor");
  std::size_t order = 1;
  for (const auto& f : factors) {
    if (f.order() > bound / order) throw BoundExceeded("direct product", order * f.order(), bound);
    order *= f.order();
  }
  // Digits of a flattened index, first factor most significant.
  std::vector<std::vector<Index>> digits(order, std::vector<Index>(factors.size()));
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = factors.size(); k-- > 0;) {
      digits[idx][k] = static_cast<Index>(rest % factors[k].order());
      rest /= factors[k].order();
    }
  }
  auto flatten = [&](const std::vector<Index>& ds) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) idx = idx * factors[k].order() + ds[k];
    return static_cast<Index>(idx);
  };
  std::vector<Index> table(order * order);
  std::vector<Index> prod(factors.size());
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      for (std::size_t k = 0; k < factors.size(); ++k)
        prod[k] = factors[k].mul(digits[i][k], digits[j][k]);
      table[i * order + j] = flatten(prod);
    }
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::string label = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k > 0) label += ",";
      label += factors[k].label(digits[idx][k]);
    }
    labels.push_back(label + ")");
  }
  return CayleyGroup(order, std::move(table), std::move(labels));
}

CayleyGroup induced_group(const Subgroup& s) {
  const auto& parent = s.parent();
  const auto& members = s.members();
  const std::size_t order = members.size();
  std::vector<Index> position(parent.order(), 0);
  for (std::size_t i = 0; i < order; ++i) position[members[i]] = static_cast<Index>(i);
  std::vector<Index> table(order * order);
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i) {
    labels.push_back(parent.label(members[i]));
    for (std::size_t j = 0; j < order; ++j)
      table[i * order + j] = position[parent.mul(members[i], members[j])];
  }
  return CayleyGroup(order, std::move(table), std::move(labels));
}

std::vector<Subgroup> subgroups(const CayleyGroup& g, std::size_t bound) {
  if (g.order() > bound) throw BoundExceeded("subgroup enumeration", g.order(), bound);
  struct Node {
    std::vector<Index> members;
    std::vector<Index> gens;
  };
  std::set<std::vector<Index>> seen;
  std::vector<Node> found;
  auto add = [&](std::vector<Index> gens) {
    auto members = closure(g, gens);
    if (seen.insert(members).second) found.push_back({std::move(members), std::move(gens)});
  };
  for (Index x = 0; x < g.order(); ++x) add({x});
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (Index x = 0; x < g.order(); ++x) {
      if (std::binary_search(found[head].members.begin(), found[head].members.end(), x)) continue;
      auto gens = found[head].gens;
      gens.push_back(x);
      add(std::move(gens));
    }
  }
  std::sort(found.begin(), found.end(), [](const Node& a, const Node& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& node : found) out.emplace_back(g, std::move(node.members));
  return out;
}

std::vector<Index> generating_sequence(const CayleyGroup& g) {
  std::vector<Index> gens;
  std::vector<Index> span_set{g.identity()};
  while (span_set.size() < g.order()) {
    Index best = g.identity();
    std::size_t best_order = 0;
    for (Index x = 0; x < g.order(); ++x) {
      if (std::binary_search(span_set.begin(), span_set.end(), x)) continue;
      if (g.element_order(x) > best_order) {
        best = x;
        best_order = g.element_order(x);
      }
    }
    gens.push_back(best);
    span_set = closure(g, gens);
  }
  return gens;
}

std::vector<Permutation> automorphisms_bruteforce(const CayleyGroup& g, std::size_t bound) {
  if (g.order() > bound) throw BoundExceeded("automorphism enumeration", g.order(), bound);
  return kernels::automorphisms_parallel(g);
}

Subgroup absolute_center_bruteforce(const CayleyGroup& g, std::size_t bound) {
  const auto auts = automorphisms_bruteforce(g, bound);
  return Subgroup(g, kernels::fixed_points_parallel(auts, g.order()));
}

Subgroup center(const CayleyGroup& g) {
  std::vector<Index> members;
  for (Index z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Index x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) members.push_back(z);
  }
  return Subgroup(g, std::move(members));
}

Cyclicity is_cyclic(const Subgroup& s) {
  const bool cyclic = std::any_of(s.members().begin(), s.members().end(), [&](Index x) {
    return s.parent().element_order(x) == s.order();
  });
  return {cyclic, s.order()};
}

bool is_normal(const Subgroup& s) {
  const auto& g = s.parent();
  for (Index x = 0; x < g.order(); ++x)
    for (Index h : s.members())
      if (!s.contains(g.mul(g.mul(g.inverse(x), h), x))) return false;
  return true;
}

}  // namespace gg
}  // namespace zmcenter
