#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gen/element_set.hpp"
#include "gen/group.hpp"
#include "gen/lattice.hpp"

namespace gen {

/// Least nonnegative integer not in `values`.
unsigned mex(std::span<const unsigned> values);

/// (parity of |I|, nim-value of even-sized positions, nim-value of odd-sized positions).
struct TypeTriple {
  unsigned parity = 0;
  unsigned even = 0;
  unsigned odd = 0;

  friend bool operator==(const TypeTriple&, const TypeTriple&) = default;
  std::string to_string() const;
};

/// Membership in E_m / O_m, with the a/b split used for odd classes of
/// deficiency 2.
struct DeficiencyClassLabel {
  bool odd = false;
  unsigned deficiency = 0;
  /// 'a' when no option is even of deficiency 2, 'b' otherwise; O_2 only.
  std::optional<char> refinement;

  friend bool operator==(const DeficiencyClassLabel&, const DeficiencyClassLabel&) = default;
  std::string to_string() const;
};

/// Deficiency of every subgroup, computed as the distance to the whole group
/// in the digraph K -> <K, g>.
class DeficiencyTable {
 public:
  DeficiencyTable(const Group& g, std::span<const ElementSet> subgroups);

  /// `subgroup` must be one of the subgroups passed at construction.
  unsigned of(const ElementSet& subgroup) const;
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::unordered_map<ElementSet, unsigned, ElementSetHash> values_;
};

unsigned deficiency(const Group& g, std::span<const ElementSet> subgroups, const ElementSet& subgroup);

/// Deficiency of an arbitrary subset, via its closure in the family.
unsigned deficiency_of_set(const Group& g, const SubgroupFamily& family, const ElementSet& set);
unsigned deficiency_of_set(const SubgroupFamily& family, const DeficiencyTable& table,
                           const ElementSet& set);

struct StructureClass {
  ElementSet subgroup;
  unsigned parity = 0;
  unsigned deficiency = 0;
  /// Indices into the owning class list, ascending.
  std::vector<std::size_t> options;
  TypeTriple type;
  DeficiencyClassLabel label;
};

/// One class per member of the family's `with_group` list, same order.
/// Options of X_I are the classes of ceil(I + g) for g outside I.
std::vector<StructureClass> build_structure_classes(const Group& g, const SubgroupFamily& family);
std::vector<StructureClass> build_structure_classes(const Group& g, const SubgroupFamily& family,
                                                    const DeficiencyTable& table);

/// Assigns type triples in reverse topological order of the option digraph.
/// Throws std::logic_error if the option relation has a cycle.
void compute_types(std::vector<StructureClass>& classes);

void label_deficiency_classes(std::vector<StructureClass>& classes);

struct GameReport {
  std::string group;
  std::size_t order = 0;
  std::size_t min_generators = 0;
  std::size_t maximal_count = 0;
  std::size_t intersection_count = 0;
  unsigned nim = 0;
  TypeTriple frattini_type;
  std::size_t frattini_index = 0;
  std::vector<StructureClass> classes;
};

/// Full pipeline: lattice, structure classes, types. The nim-value is the
/// even component of the Frattini class type.
GameReport nim_of_game(const Group& g, const std::string& name = "",
                       const LatticeLimits& limits = {});

/// Graphviz digraph of the structure classes. Node ids are subgroup bitmasks.
std::string export_structure_digraph(const GameReport& report);

/// JSON document for a report, classes in canonical order.
std::string report_to_json(const GameReport& report, int indent = 2);

}  // namespace gen
