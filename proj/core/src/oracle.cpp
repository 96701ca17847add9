#include "gen/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gen/achievement.hpp"
#include "gen/errors.hpp"
#include "gen/lattice.hpp"

namespace gen {

namespace {

void check_cap(const Group& g, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxOracleCap);
  if (g.order() > limit) {
    throw ResourceLimit("oracle limited to groups of order <= " + std::to_string(limit) +
                        ", got " + std::to_string(g.order()));
  }
}

bool generates(const Group& g, std::uint64_t mask) {
  return generated_subgroup(g, ElementSet::from_mask(g.order(), mask)).is_full();
}

}  // namespace

GrundyMemo GrundyMemo::build(const Group& g, std::size_t cap) {
  check_cap(g, cap);
  GrundyMemo memo;
  memo.order_ = g.order();
  const std::uint64_t count = std::uint64_t{1} << g.order();
  memo.values_.assign(count, 0);
  memo.generating_.assign(count, false);
  // Options are supersets, hence numerically larger masks.
  for (std::uint64_t mask = count; mask-- > 0;) {
    if (generates(g, mask)) {
      memo.generating_[mask] = true;
      continue;
    }
    std::uint32_t seen = 0;  // values never exceed |G| <= 24
    for (std::size_t x = 0; x < g.order(); ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if (mask & bit) continue;
      seen |= std::uint32_t{1} << memo.values_[mask | bit];
    }
    memo.values_[mask] = static_cast<std::uint8_t>(std::countr_one(seen));
  }
  return memo;
}

unsigned grundy(const Group& g, const ElementSet& position, std::size_t cap) {
  return GrundyMemo::build(g, cap).value(position);
}

unsigned brute_deficiency(const Group& g, const ElementSet& set) {
  const std::size_t n = g.order();
  for (std::size_t k = 0; k <= n; ++k) {
    // Enumerate k-subsets of 0..n-1 as increasing index tuples.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      ElementSet trial = set;
      for (auto x : pick) trial.insert(static_cast<Element>(x));
      if (generated_subgroup(g, trial).is_full()) return static_cast<unsigned>(k);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return static_cast<unsigned>(n);  // unreachable: all of G generates G
}

PositionInvarianceReport verify_position_invariance(const Group& g, std::size_t cap) {
  const GrundyMemo memo = GrundyMemo::build(g, cap);
  const SubgroupFamily family = intersection_family(g);
  const GameReport report = nim_of_game(g);

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  for (std::size_t i = 0; i < family.with_group.size(); ++i) index[family.with_group[i]] = i;

  PositionInvarianceReport out;
  out.grundy_empty = memo.value(std::uint64_t{0});
  out.grundy_identity = memo.value(std::uint64_t{1});
  for (std::uint64_t mask = 0; mask < memo.positions(); ++mask) {
    const ElementSet position = ElementSet::from_mask(g.order(), mask);
    const auto& type = report.classes.at(index.at(closure_ceil(family, position))).type;
    const unsigned expected = std::popcount(mask) % 2 == 0 ? type.even : type.odd;
    const unsigned actual = memo.value(mask);
    ++out.positions_checked;
    if (expected != actual) {
      ++out.violation_count;
      if (out.violations.size() < 16) out.violations.push_back({mask, expected, actual});
    }
  }
  return out;
}

}  // namespace gen
