#include "gengame/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "gen/errors.hpp"

namespace gengame {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    CatalogEntry entry;
    entry.line = line_no;
    std::string_view expr_text = line;
    if (const auto star = line.rfind('*'); star != std::string_view::npos) {
      const std::string_view digits = line.substr(star + 1);
      const bool numeric = !digits.empty() && digits.size() < 6 &&
                           std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (numeric) {
        entry.expected_nim = static_cast<unsigned>(std::stoul(std::string(digits)));
        expr_text = trim(line.substr(0, star));
      }
    }
    entry.text = std::string(expr_text);
    try {
      entry.expr = parse_group_expr(expr_text);
    } catch (const gen::ParseError& e) {
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace gengame
