#include "gen/group.hpp"

#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "gen/errors.hpp"

namespace gen {

namespace {

void check_order_cap(std::size_t order, std::size_t max_order, std::string_view what) {
  const std::size_t cap = std::min(max_order, kMaxSupportedOrder);
  if (order > cap) {
    throw ResourceLimit(std::string(what) + " has order " + std::to_string(order) +
                        ", above the configured maximum of " + std::to_string(cap));
  }
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& x, const Permutation& y) {
  Permutation r(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) r[p] = x[y[p]];
  return r;
}

}  // namespace

std::string_view to_string(GroupSource source) {
  switch (source) {
    case GroupSource::cyclic: return "cyclic";
    case GroupSource::product: return "product";
    case GroupSource::permutation: return "permutation";
    case GroupSource::file: return "file";
    case GroupSource::table: return "table";
  }
  return "table";
}

Group::Group(std::size_t order, std::vector<std::uint8_t> table, std::vector<std::string> labels,
             GroupSource source)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)), source_(source) {
  if (labels_.empty()) labels_ = index_labels(order_);
  inverse_.assign(order_, 0);
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      if (table_[x * order_ + y] == 0) {
        inverse_[x] = static_cast<std::uint8_t>(y);
        break;
      }
    }
  }
}

Group Group::from_trusted_table(std::size_t order, std::vector<std::uint8_t> table,
                                std::vector<std::string> labels, GroupSource source) {
  return Group(order, std::move(table), std::move(labels), source);
}

Group Group::from_table(std::size_t order, std::vector<std::uint8_t> table,
                        std::vector<std::string> labels, GroupSource source,
                        std::size_t max_order) {
  if (order == 0) throw ValidationError("group order must be positive");
  check_order_cap(order, max_order, "table");
  if (table.size() != order * order) {
    throw ValidationError("table has " + std::to_string(table.size()) + " entries, expected " +
                          std::to_string(order * order));
  }
  if (!labels.empty() && labels.size() != order) {
    throw ValidationError("label count does not match group order");
  }
  const auto at = [&](std::size_t x, std::size_t y) -> std::size_t { return table[x * order + y]; };
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      if (at(x, y) >= order) {
        throw ValidationError("entry (" + std::to_string(x) + "," + std::to_string(y) +
                              ") is out of range");
      }
    }
  }
  for (std::size_t x = 0; x < order; ++x) {
    if (at(0, x) != x || at(x, 0) != x) {
      throw ValidationError("element 0 is not the identity (fails at element " +
                            std::to_string(x) + ")");
    }
  }
  for (std::size_t x = 0; x < order; ++x) {
    std::vector<bool> row(order, false);
    std::vector<bool> col(order, false);
    for (std::size_t y = 0; y < order; ++y) {
      if (row[at(x, y)]) {
        throw ValidationError("row " + std::to_string(x) + " repeats element " +
                              std::to_string(at(x, y)));
      }
      if (col[at(y, x)]) {
        throw ValidationError("column " + std::to_string(x) + " repeats element " +
                              std::to_string(at(y, x)));
      }
      row[at(x, y)] = true;
      col[at(y, x)] = true;
    }
  }
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t xy = at(x, y);
      for (std::size_t z = 0; z < order; ++z) {
        if (at(xy, z) != at(x, at(y, z))) {
          throw ValidationError("associativity fails for triple (" + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  return Group(order, std::move(table), std::move(labels), source);
}

Group cyclic_group(std::size_t n, std::size_t max_order) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  check_order_cap(n, max_order, "Z" + std::to_string(n));
  std::vector<std::uint8_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<std::uint8_t>((i + j) % n);
  return Group::from_trusted_table(n, std::move(table), index_labels(n), GroupSource::cyclic);
}

Group direct_product(const Group& g, const Group& h, std::size_t max_order) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  check_order_cap(ng * nh, max_order, "direct product");
  const std::size_t n = ng * nh;
  std::vector<std::uint8_t> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < ng; ++a) {
    for (std::size_t b = 0; b < nh; ++b) {
      const std::size_t x = a * nh + b;
      labels[x] = "(" + g.label(static_cast<Element>(a)) + "," + h.label(static_cast<Element>(b)) + ")";
      for (std::size_t c = 0; c < ng; ++c) {
        const std::size_t ac = g.mul(static_cast<Element>(a), static_cast<Element>(c));
        for (std::size_t d = 0; d < nh; ++d) {
          const std::size_t bd = h.mul(static_cast<Element>(b), static_cast<Element>(d));
          table[x * n + c * nh + d] = static_cast<std::uint8_t>(ac * nh + bd);
        }
      }
    }
  }
  return Group::from_trusted_table(n, std::move(table), std::move(labels), GroupSource::product);
}

Group group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                              std::size_t max_order) {
  if (degree == 0) throw InvalidArgument("permutation degree must be positive");
  for (const auto& gen : generators) {
    if (gen.size() != degree) {
      throw InvalidArgument("generator has degree " +
                            std::to_string(gen.size()) + ", expected " + std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    for (auto p : gen) {
      if (p >= degree || hit[p]) throw InvalidArgument("generator is not a bijection on 0.." +
                                                       std::to_string(degree - 1));
      hit[p] = true;
    }
  }
  const std::size_t cap = std::min(max_order, kMaxSupportedOrder);

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Permutation> elements{id};
  std::map<Permutation, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation next = compose(elements[i], gen);
      if (index.contains(next)) continue;
      if (elements.size() == cap) {
        throw ResourceLimit("permutation closure exceeds the configured maximum order of " +
                            std::to_string(cap));
      }
      index.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::uint8_t> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = cycle_notation(elements[x]);
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = static_cast<std::uint8_t>(index.at(compose(elements[x], elements[y])));
  }
  return Group::from_trusted_table(n, std::move(table), std::move(labels),
                                   GroupSource::permutation);
}

Group group_from_cayley_file(std::string_view text, std::size_t max_order) {
  // Content lines with their physical (1-based) line numbers.
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    lines.emplace_back(line_no, line);
  }

  const auto read_numbers = [](std::size_t ln, std::string_view line) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (true) {
      pos = line.find_first_not_of(" \t", pos);
      if (pos == std::string_view::npos) break;
      std::size_t value = 0;
      const auto* begin = line.data() + pos;
      const auto [ptr, ec] = std::from_chars(begin, line.data() + line.size(), value);
      if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
        throw ParseError("expected a nonnegative integer", ln, pos + 1);
      }
      out.push_back(value);
      pos = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
  };

  if (lines.empty()) throw ParseError("missing group order", line_no == 0 ? 1 : line_no);
  const auto header = read_numbers(lines[0].first, lines[0].second);
  if (header.size() != 1) throw ParseError("first line must contain only the order", lines[0].first);
  const std::size_t n = header[0];
  if (n == 0) throw ParseError("group order must be positive", lines[0].first);
  check_order_cap(n, max_order, "Cayley table");
  if (lines.size() < n + 1) {
    throw ParseError("expected " + std::to_string(n) + " table rows, found " +
                         std::to_string(lines.size() - 1),
                     lines.back().first + 1);
  }
  if (lines.size() > n + 1) throw ParseError("unexpected extra row", lines[n + 1].first);

  std::vector<std::uint8_t> table(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto [ln, line] = lines[r + 1];
    const auto row = read_numbers(ln, line);
    if (row.size() != n) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n),
                       ln);
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c] >= n) throw ParseError("entry " + std::to_string(row[c]) + " out of range", ln);
      table[r * n + c] = static_cast<std::uint8_t>(row[c]);
    }
  }
  return Group::from_table(n, std::move(table), {}, GroupSource::file, max_order);
}

Group dihedral_group(std::size_t n, std::size_t max_order) {
  if (n == 0) throw InvalidArgument("dihedral parameter must be positive");
  check_order_cap(2 * n, max_order, "D" + std::to_string(n));
  const std::size_t order = 2 * n;
  std::vector<std::uint8_t> table(order * order);
  std::vector<std::string> labels(order);
  // r^i s^a * r^j s^b = r^(i + (-1)^a j) s^(a+b)
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t x = a * n + i;
      labels[x] = (i == 0 && a == 0) ? "e" : (i == 0 ? "" : "r" + std::to_string(i)) + (a ? "s" : "");
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t k = a == 0 ? (i + j) % n : (i + n - j) % n;
          table[x * order + b * n + j] = static_cast<std::uint8_t>(((a + b) % 2) * n + k);
        }
      }
    }
  }
  return Group::from_trusted_table(order, std::move(table), std::move(labels), GroupSource::table);
}

Group symmetric_group(std::size_t n, std::size_t max_order) {
  if (n == 0) throw InvalidArgument("symmetric group degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(n);
    std::iota(swap.begin(), swap.end(), 0U);
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
  }
  if (n >= 3) {
    Permutation cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens.push_back(cycle);
  }
  return group_from_permutations(n, gens, max_order);
}

Group alternating_group(std::size_t n, std::size_t max_order) {
  if (n == 0) throw InvalidArgument("alternating group degree must be positive");
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0U);
    p[0] = 1;
    p[1] = static_cast<std::uint32_t>(k);
    p[k] = 0;
    gens.push_back(p);
  }
  return group_from_permutations(n, gens, max_order);
}

Group quaternion_group() {
  // Index 2u + s encodes (-1)^s * unit[u] with units 1, i, j, k.
  static constexpr int kUnitMul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  static const std::vector<std::string> kLabels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::uint8_t> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const auto& [unit, sign] = kUnitMul[x / 2][y / 2];
      const int s = (sign + x % 2 + y % 2) % 2;
      table[static_cast<std::size_t>(x * 8 + y)] = static_cast<std::uint8_t>(2 * unit + s);
    }
  }
  return Group::from_trusted_table(8, std::move(table), kLabels, GroupSource::table);
}

Group induced_subgroup(const Group& g, const ElementSet& members) {
  const auto elems = members.elements();
  if (elems.empty() || elems.front() != Group::identity()) {
    throw InvalidArgument("subgroup must contain the identity");
  }
  std::vector<std::uint8_t> position(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) position[elems[i]] = static_cast<std::uint8_t>(i);
  const std::size_t n = elems.size();
  std::vector<std::uint8_t> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = g.label(elems[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Element p = g.mul(elems[i], elems[j]);
      if (!members.contains(p)) throw InvalidArgument("element set is not closed under products");
      table[i * n + j] = position[p];
    }
  }
  return Group::from_trusted_table(n, std::move(table), std::move(labels), GroupSource::table);
}

ElementSet generated_subgroup(const Group& g, const ElementSet& generators) {
  const auto gens = generators.elements();
  ElementSet result(g.order());
  result.insert(Group::identity());
  std::vector<Element> queue{Group::identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto s : gens) {
      const Element next = g.mul(queue[i], s);
      if (!result.contains(next)) {
        result.insert(next);
        queue.push_back(next);
      }
    }
  }
  return result;
}

ElementSet join_with(const Group& g, const ElementSet& base, const std::vector<Element>& gens,
                     Element x) {
  if (base.contains(x)) return base;
  ElementSet result = base;
  std::vector<Element> queue = base.elements();
  std::vector<Element> all_gens = gens;
  all_gens.push_back(x);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto s : all_gens) {
      const Element next = g.mul(queue[i], s);
      if (!result.contains(next)) {
        result.insert(next);
        queue.push_back(next);
      }
    }
  }
  return result;
}

std::size_t element_order(const Group& g, Element x) {
  std::size_t k = 1;
  Element power = x;
  while (power != Group::identity()) {
    power = g.mul(power, x);
    if (++k > g.order()) throw std::logic_error("element order exceeds group order");
  }
  return k;
}

namespace {

struct GeneratorSearch {
  const Group& group;
  std::vector<Element> candidates;
  std::vector<Element> chosen;

  bool extend(std::size_t remaining, std::size_t start, const ElementSet& current) {
    if (current.is_full()) return true;
    if (remaining == 0) return false;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const Element x = candidates[i];
      if (current.contains(x)) continue;
      chosen.push_back(x);
      if (extend(remaining - 1, i + 1, join_with(group, current, chosen, x))) return true;
      chosen.pop_back();
    }
    return false;
  }
};

// One representative per nontrivial cyclic subgroup, smallest index first.
std::vector<Element> cyclic_representatives(const Group& g) {
  std::vector<Element> reps;
  std::vector<ElementSet> seen;
  for (Element x = 1; x < g.order(); ++x) {
    ElementSet single(g.order());
    single.insert(x);
    ElementSet cyc = generated_subgroup(g, single);
    bool duplicate = false;
    for (const auto& s : seen) {
      if (s == cyc) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      seen.push_back(std::move(cyc));
      reps.push_back(x);
    }
  }
  return reps;
}

}  // namespace

std::vector<Element> minimal_generating_set(const Group& g) {
  if (g.order() == 1) return {};
  GeneratorSearch search{g, cyclic_representatives(g), {}};
  ElementSet trivial(g.order());
  trivial.insert(Group::identity());
  for (std::size_t k = 1;; ++k) {
    search.chosen.clear();
    if (search.extend(k, 0, trivial)) return search.chosen;
  }
}

std::size_t min_generating_size(const Group& g) {
  return minimal_generating_set(g).size();
}

bool is_abelian(const Group& g) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

std::size_t exponent(const Group& g) {
  std::size_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

std::size_t max_element_order(const Group& g) {
  std::size_t best = 1;
  for (Element x = 0; x < g.order(); ++x) best = std::max(best, element_order(g, x));
  return best;
}

bool is_cyclic(const Group& g) {
  return max_element_order(g) == g.order();
}

}  // namespace gen
