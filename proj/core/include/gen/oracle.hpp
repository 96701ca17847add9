#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gen/element_set.hpp"
#include "gen/group.hpp"

// Brute-force ground truth. Nothing in here uses maximal subgroups or
// structure classes; it only knows how to multiply.

namespace gen {

inline constexpr std::size_t kDefaultOracleCap = 16;
/// 2^24 one-byte memo entries; anything beyond is not worth attempting.
inline constexpr std::size_t kMaxOracleCap = 24;

/// Sprague-Grundy values of every position of the game, indexed by bitmask.
///
/// Every generating set is treated as a terminal position of value 0.
/// Generating sets that cannot arise in play (those with no element whose
/// removal leaves a nongenerating set) are never reached from the empty
/// position, so values of reachable positions are unaffected.
class GrundyMemo {
 public:
  /// Throws ResourceLimit if |G| exceeds `cap` (or kMaxOracleCap).
  static GrundyMemo build(const Group& g, std::size_t cap = kDefaultOracleCap);

  unsigned value(std::uint64_t mask) const { return values_.at(mask); }
  unsigned value(const ElementSet& position) const { return value(position.low_word()); }
  bool generating(std::uint64_t mask) const { return generating_.at(mask); }
  std::size_t order() const noexcept { return order_; }
  std::size_t positions() const noexcept { return values_.size(); }

 private:
  std::size_t order_ = 0;
  std::vector<std::uint8_t> values_;
  std::vector<bool> generating_;
};

unsigned grundy(const Group& g, const ElementSet& position, std::size_t cap = kDefaultOracleCap);

/// Fewest extra elements making `set` generate G, by trying all k-subsets for
/// k = 0, 1, 2, ...
unsigned brute_deficiency(const Group& g, const ElementSet& set);

struct PositionViolation {
  std::uint64_t mask = 0;
  unsigned expected = 0;
  unsigned actual = 0;
};

struct PositionInvarianceReport {
  std::size_t positions_checked = 0;
  std::size_t violation_count = 0;
  /// First few violations, for diagnostics.
  std::vector<PositionViolation> violations;
  unsigned grundy_empty = 0;
  unsigned grundy_identity = 0;

  bool ok() const noexcept { return violation_count == 0; }
};

/// Checks grundy(P) against the type of the structure class of P (even or odd
/// component by |P| mod 2) for every position P.
PositionInvarianceReport verify_position_invariance(const Group& g,
                                                    std::size_t cap = kDefaultOracleCap);

}  // namespace gen
