#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gen/group.hpp"

namespace gengame {

struct GroupExpr;
using ExprPtr = std::shared_ptr<const GroupExpr>;

using Cycle = std::vector<std::uint32_t>;
/// A permutation written as a product of disjoint cycles; empty is the identity.
using CycleWord = std::vector<Cycle>;

struct TrivialExpr {
  friend bool operator==(const TrivialExpr&, const TrivialExpr&) = default;
};
struct CyclicExpr {
  std::size_t n = 1;
  friend bool operator==(const CyclicExpr&, const CyclicExpr&) = default;
};
struct PowerExpr {
  ExprPtr base;
  std::size_t exponent = 1;
};
struct ProductExpr {
  ExprPtr left;
  ExprPtr right;
};
struct PermExpr {
  std::size_t degree = 1;
  std::vector<CycleWord> generators;
  friend bool operator==(const PermExpr&, const PermExpr&) = default;
};
struct CayleyExpr {
  std::string path;
  friend bool operator==(const CayleyExpr&, const CayleyExpr&) = default;
};
/// D<n> (dihedral of order 2n), S<n>, A<n>, Q8.
struct NamedExpr {
  char family = 'D';
  std::size_t n = 1;
  friend bool operator==(const NamedExpr&, const NamedExpr&) = default;
};

bool operator==(const PowerExpr& a, const PowerExpr& b);
bool operator==(const ProductExpr& a, const ProductExpr& b);

struct GroupExpr {
  std::variant<TrivialExpr, CyclicExpr, PowerExpr, ProductExpr, PermExpr, CayleyExpr, NamedExpr> node;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// Grammar (whitespace allowed between tokens):
///
///   expr  := term ('x' term)*            left-associative
///   term  := atom ('^' int)*
///   atom  := '1' | 'Z' int | 'D' int | 'S' int | 'A' int | 'Q8'
///          | 'perm(' int (';' cycles)* ')' | 'cayley(' path ')' | '(' expr ')'
///
/// Throws gen::ParseError with a 1-based column.
GroupExpr parse_group_expr(std::string_view text);

/// Canonical text; parse_group_expr(render(e)) == e.
std::string render(const GroupExpr& expr);

struct BuildOptions {
  std::size_t max_order = gen::kDefaultMaxOrder;
  /// Relative cayley() paths resolve against this directory.
  std::filesystem::path base_dir;
};

gen::Group build_group(const GroupExpr& expr, const BuildOptions& options = {});

/// Splits a top-level product (or power with exponent >= 2) into its two
/// factors, matching the index layout direct_product uses.
std::optional<std::pair<GroupExpr, GroupExpr>> split_product(const GroupExpr& expr);

}  // namespace gengame
