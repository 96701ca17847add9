#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gen/element_set.hpp"

namespace gen {

/// Hard ceiling on group order; ElementSet is a 256-bit mask.
inline constexpr std::size_t kMaxSupportedOrder = ElementSet::kCapacity;
inline constexpr std::size_t kDefaultMaxOrder = 256;

enum class GroupSource { cyclic, product, permutation, file, table };

std::string_view to_string(GroupSource source);

/// Points 0..degree-1; image[i] is the image of point i.
using Permutation = std::vector<std::uint32_t>;

/// A finite group stored as its full Cayley table. Element 0 is the identity.
///
/// Instances are immutable once built; every constructor validates (or
/// guarantees by construction) the group axioms.
class Group {
 public:
  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element x, Element y) const noexcept {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  Element inverse(Element x) const noexcept { return inverse_[x]; }

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  GroupSource source() const noexcept { return source_; }

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet all_elements() const { return ElementSet::full(order_); }

  /// Builds and validates a group from a flat row-major table.
  /// Throws ValidationError naming the first violated axiom.
  static Group from_table(std::size_t order, std::vector<std::uint8_t> table,
                          std::vector<std::string> labels, GroupSource source,
                          std::size_t max_order = kDefaultMaxOrder);

  /// Same as from_table but skips the O(n^3) associativity check; for
  /// callers whose construction guarantees it.
  static Group from_trusted_table(std::size_t order, std::vector<std::uint8_t> table,
                                  std::vector<std::string> labels, GroupSource source);

 private:
  Group(std::size_t order, std::vector<std::uint8_t> table, std::vector<std::string> labels,
        GroupSource source);

  std::size_t order_ = 0;
  std::vector<std::uint8_t> table_;
  std::vector<std::uint8_t> inverse_;
  std::vector<std::string> labels_;
  GroupSource source_ = GroupSource::table;
};

Group cyclic_group(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

/// Element (g, h) gets index g * |H| + h.
Group direct_product(const Group& g, const Group& h, std::size_t max_order = kDefaultMaxOrder);

/// Closes the generators under composition. (x*y)(p) = x(y(p)).
Group group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                              std::size_t max_order = kDefaultMaxOrder);

/// Parses the Cayley table format: order on the first line, then one row per
/// element; '#' starts a comment line.
Group group_from_cayley_file(std::string_view text, std::size_t max_order = kDefaultMaxOrder);

/// Dihedral group of order 2n: r^i s^a, index a * n + i.
Group dihedral_group(std::size_t n, std::size_t max_order = kDefaultMaxOrder);
Group symmetric_group(std::size_t n, std::size_t max_order = kDefaultMaxOrder);
Group alternating_group(std::size_t n, std::size_t max_order = kDefaultMaxOrder);
Group quaternion_group();

/// The subgroup `members` as a standalone group, elements in index order.
/// `members` must be a subgroup.
Group induced_subgroup(const Group& g, const ElementSet& members);

ElementSet generated_subgroup(const Group& g, const ElementSet& generators);

/// Generated subgroup of an existing subgroup plus one element. `gens`
/// generate `base`.
ElementSet join_with(const Group& g, const ElementSet& base, const std::vector<Element>& gens,
                     Element x);

std::size_t element_order(const Group& g, Element x);

/// Smallest size of a generating set, d(G). Increasing-size search; each
/// extension only uses elements outside the subgroup generated so far.
std::size_t min_generating_size(const Group& g);

/// A generating set of size d(G); deterministic for a given table.
std::vector<Element> minimal_generating_set(const Group& g);

bool is_abelian(const Group& g);

/// Least common multiple of the element orders.
std::size_t exponent(const Group& g);

/// Largest element order; equals |G| iff G is cyclic.
std::size_t max_element_order(const Group& g);

bool is_cyclic(const Group& g);

}  // namespace gen
