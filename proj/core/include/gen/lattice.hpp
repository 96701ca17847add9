#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gen/element_set.hpp"
#include "gen/group.hpp"

namespace gen {

struct LatticeLimits {
  /// Upper bound on the number of subgroups enumerated before giving up.
  std::size_t max_subgroups = 50000;
};

/// Maximal subgroups, their intersections and the Frattini subgroup of a
/// group. Every list is sorted by (cardinality, bitmask).
struct SubgroupFamily {
  std::vector<ElementSet> all;
  std::vector<ElementSet> maximal;
  std::vector<ElementSet> intersections;
  /// `intersections` plus the whole group.
  std::vector<ElementSet> with_group;
  /// Intersection of all maximal subgroups; the whole group when there are none.
  ElementSet frattini;
};

/// Every subgroup, duplicate-free, in canonical order.
///
/// Seeds with the cyclic subgroups and joins known subgroups with single
/// elements until nothing new appears.
std::vector<ElementSet> all_subgroups(const Group& g, const LatticeLimits& limits = {});

std::vector<ElementSet> maximal_subgroups(const Group& g, std::span<const ElementSet> all);
std::vector<ElementSet> maximal_subgroups(const Group& g);

/// Closes `maximal` under pairwise intersection.
std::vector<ElementSet> intersection_subgroups(std::span<const ElementSet> maximal);

SubgroupFamily intersection_family(const Group& g, const LatticeLimits& limits = {});

/// Smallest member of the family's `with_group` list containing `position`.
ElementSet closure_ceil(const SubgroupFamily& family, const ElementSet& position);

}  // namespace gen
