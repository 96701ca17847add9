#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "gen/element_set.hpp"
#include "gen/group.hpp"
#include "gen/lattice.hpp"

namespace gen {

/// G = T x H with T a Sylow 2-subgroup and H the odd-order elements.
struct Decomposition {
  ElementSet two_part;
  ElementSet odd_part;
  bool valid = false;
};

/// A Sylow p-subgroup, grown greedily by p-elements normalizing the current
/// p-subgroup. p must be prime.
ElementSet sylow_subgroup(const Group& g, std::size_t p);

bool is_normal(const Group& g, const ElementSet& subgroup);

Decomposition decompose_sylow2(const Group& g);

/// Every Sylow subgroup is normal.
bool is_nilpotent(const Group& g);

struct Prediction {
  bool applicable = false;
  unsigned nim = 0;
  /// Which clause fired; "n/a" when not applicable.
  std::string case_label = "n/a";
};

/// Closed-form nim-value for groups with a Sylow 2-direct factor.
Prediction predict_nim(const Group& g, const Decomposition& dec);

struct ConsistencyReport {
  std::string expr;
  std::size_t order = 0;
  std::size_t min_generators = 0;
  bool decomposable = false;
  bool nilpotent = false;
  std::optional<unsigned> predicted;
  unsigned computed = 0;
  std::string case_label;
  /// False only when a prediction exists and disagrees.
  bool match = true;
};

ConsistencyReport verify_theorem(const Group& g, const std::string& expr,
                                 const LatticeLimits& limits = {});

std::string consistency_tsv_header();
std::string to_tsv_row(const ConsistencyReport& report);
std::string consistency_to_json(const ConsistencyReport& report, int indent = -1);

}  // namespace gen
