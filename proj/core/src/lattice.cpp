#include "gen/lattice.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "gen/errors.hpp"

namespace gen {

namespace {

struct Candidate {
  ElementSet members;
  std::vector<Element> gens;
};

void sort_canonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
}

}  // namespace

std::vector<ElementSet> all_subgroups(const Group& g, const LatticeLimits& limits) {
  const std::size_t n = g.order();
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Candidate> found;

  const auto record = [&](ElementSet members, std::vector<Element> gens) {
    if (!seen.insert(members).second) return;
    if (seen.size() > limits.max_subgroups) {
      throw ResourceLimit("subgroup enumeration exceeded " + std::to_string(limits.max_subgroups) +
                          " subgroups");
    }
    found.push_back({std::move(members), std::move(gens)});
  };

  ElementSet trivial(n);
  trivial.insert(Group::identity());
  record(trivial, {});

  // Distinct cyclic subgroups; joining with x depends only on <x>.
  std::vector<Element> cyclic_gens;
  std::vector<ElementSet> cyclic;
  for (Element x = 1; x < n; ++x) {
    ElementSet c = join_with(g, trivial, {}, x);
    if (std::find(cyclic.begin(), cyclic.end(), c) != cyclic.end()) continue;
    cyclic.push_back(c);
    cyclic_gens.push_back(x);
    record(c, {x});
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      if (cyclic[c].is_subset_of(found[i].members)) continue;
      // Copy: `found` may reallocate inside record().
      const Candidate base = found[i];
      ElementSet joined = join_with(g, base.members, base.gens, cyclic_gens[c]);
      if (seen.contains(joined)) continue;
      auto gens = base.gens;
      gens.push_back(cyclic_gens[c]);
      record(std::move(joined), std::move(gens));
    }
  }

  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto& cand : found) out.push_back(std::move(cand.members));
  sort_canonical(out);
  return out;
}

std::vector<ElementSet> maximal_subgroups(const Group& g, std::span<const ElementSet> all) {
  const ElementSet whole = g.all_elements();
  std::vector<ElementSet> out;
  for (const auto& m : all) {
    if (m == whole) continue;
    bool maximal = true;
    for (const auto& k : all) {
      if (k != whole && k.size() > m.size() && m.is_subset_of(k)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  sort_canonical(out);
  return out;
}

std::vector<ElementSet> maximal_subgroups(const Group& g) {
  const auto all = all_subgroups(g);
  return maximal_subgroups(g, all);
}

std::vector<ElementSet> intersection_subgroups(std::span<const ElementSet> maximal) {
  std::unordered_set<ElementSet, ElementSetHash> seen(maximal.begin(), maximal.end());
  std::vector<ElementSet> out(maximal.begin(), maximal.end());
  // Intersecting new members with each maximal subgroup reaches every
  // intersection of a nonempty subfamily.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& m : maximal) {
      ElementSet meet = out[i] & m;
      if (seen.insert(meet).second) out.push_back(std::move(meet));
    }
  }
  sort_canonical(out);
  return out;
}

SubgroupFamily intersection_family(const Group& g, const LatticeLimits& limits) {
  SubgroupFamily family;
  family.all = all_subgroups(g, limits);
  family.maximal = maximal_subgroups(g, family.all);
  family.intersections = intersection_subgroups(family.maximal);
  family.with_group = family.intersections;
  family.with_group.push_back(g.all_elements());
  sort_canonical(family.with_group);
  family.frattini = g.all_elements();
  for (const auto& m : family.maximal) family.frattini &= m;
  return family;
}

ElementSet closure_ceil(const SubgroupFamily& family, const ElementSet& position) {
  // The family is closed under intersection, so the meet of the maximal
  // subgroups containing `position` is its least member above it.
  ElementSet result = family.with_group.back();
  for (const auto& m : family.maximal) {
    if (position.is_subset_of(m)) result &= m;
  }
  return result;
}

}  // namespace gen
