#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gengame/expr.hpp"

namespace gengame {

/// One non-comment catalog line: `<expr> [*<k>]`.
struct CatalogEntry {
  std::size_t line = 0;
  std::string text;
  std::optional<GroupExpr> expr;
  std::optional<unsigned> expected_nim;
  /// Set when the expression failed to parse; `expr` is empty then.
  std::string error;
};

/// Blank lines and lines starting with '#' are skipped; a '#' after the
/// expression starts a trailing comment.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

}  // namespace gengame
