#include "gen/achievement.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "gen/errors.hpp"

namespace gen {

unsigned mex(std::span<const unsigned> values) {
  std::vector<bool> present(values.size() + 1, false);
  for (auto v : values)
    if (v < present.size()) present[v] = true;
  unsigned m = 0;
  while (present[m]) ++m;
  return m;
}

std::string TypeTriple::to_string() const {
  return "(" + std::to_string(parity) + "," + std::to_string(even) + "," + std::to_string(odd) + ")";
}

std::string DeficiencyClassLabel::to_string() const {
  std::string out = odd ? "O_" : "E_";
  out += std::to_string(deficiency);
  if (refinement) out += std::string("^") + *refinement;
  return out;
}

namespace {

// Greedy generating set: keep each element not already generated.
std::vector<Element> small_generating_set(const Group& g, const ElementSet& subgroup) {
  std::vector<Element> gens;
  ElementSet current(g.order());
  current.insert(Group::identity());
  subgroup.for_each([&](Element x) {
    if (current.contains(x)) return;
    current = join_with(g, current, gens, x);
    gens.push_back(x);
  });
  return gens;
}

}  // namespace

DeficiencyTable::DeficiencyTable(const Group& g, std::span<const ElementSet> subgroups) {
  std::vector<ElementSet> order(subgroups.begin(), subgroups.end());
  std::sort(order.begin(), order.end(),
            [](const ElementSet& a, const ElementSet& b) { return CanonicalLess{}(b, a); });
  const ElementSet whole = g.all_elements();
  for (const auto& k : order) {
    if (k == whole) {
      values_[k] = 0;
      continue;
    }
    const auto gens = small_generating_set(g, k);
    unsigned best = ~0U;
    // If x lies in an earlier join J then <K, x> is inside J, and its
    // deficiency is no smaller than J's.
    ElementSet covered = k;
    for (Element x = 0; x < g.order(); ++x) {
      if (covered.contains(x)) continue;
      const ElementSet joined = join_with(g, k, gens, x);
      covered |= joined;
      const auto it = values_.find(joined);
      if (it == values_.end()) {
        throw std::logic_error("subgroup list is missing the join of a listed subgroup");
      }
      best = std::min(best, it->second + 1);
    }
    values_[k] = best;
  }
}

unsigned DeficiencyTable::of(const ElementSet& subgroup) const {
  const auto it = values_.find(subgroup);
  if (it == values_.end()) throw InvalidArgument("deficiency requested for an unknown subgroup");
  return it->second;
}

unsigned deficiency(const Group& g, std::span<const ElementSet> subgroups, const ElementSet& subgroup) {
  return DeficiencyTable(g, subgroups).of(subgroup);
}

unsigned deficiency_of_set(const Group& g, const SubgroupFamily& family, const ElementSet& set) {
  return deficiency_of_set(family, DeficiencyTable(g, family.all), set);
}

unsigned deficiency_of_set(const SubgroupFamily& family, const DeficiencyTable& table,
                           const ElementSet& set) {
  return table.of(closure_ceil(family, set));
}

std::vector<StructureClass> build_structure_classes(const Group& g, const SubgroupFamily& family) {
  return build_structure_classes(g, family, DeficiencyTable(g, family.all));
}

std::vector<StructureClass> build_structure_classes(const Group& g, const SubgroupFamily& family,
                                                    const DeficiencyTable& table) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  for (std::size_t i = 0; i < family.with_group.size(); ++i) index[family.with_group[i]] = i;

  std::vector<StructureClass> classes;
  classes.reserve(family.with_group.size());
  for (const auto& members : family.with_group) {
    StructureClass cls;
    cls.subgroup = members;
    cls.parity = static_cast<unsigned>(members.size() % 2);
    cls.deficiency = table.of(members);
    for (Element x = 0; x < g.order(); ++x) {
      if (members.contains(x)) continue;
      ElementSet position = members;
      position.insert(x);
      cls.options.push_back(index.at(closure_ceil(family, position)));
    }
    std::sort(cls.options.begin(), cls.options.end());
    cls.options.erase(std::unique(cls.options.begin(), cls.options.end()), cls.options.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

void compute_types(std::vector<StructureClass>& classes) {
  const std::size_t n = classes.size();
  std::vector<std::size_t> pending(n);
  std::vector<std::vector<std::size_t>> parents(n);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = classes[i].options.size();
    for (auto j : classes[i].options) parents[j].push_back(i);
    if (pending[i] == 0) ready.push_back(i);
  }

  std::size_t done = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.back();
    ready.pop_back();
    ++done;
    auto& cls = classes[i];
    if (cls.options.empty()) {
      cls.type = {cls.parity, 0, 0};
    } else {
      std::vector<unsigned> evens;
      std::vector<unsigned> odds;
      for (auto j : cls.options) {
        evens.push_back(classes[j].type.even);
        odds.push_back(classes[j].type.odd);
      }
      unsigned a = 0;
      unsigned b = 0;
      if (cls.parity == 0) {
        a = mex(odds);
        evens.push_back(a);
        b = mex(evens);
      } else {
        b = mex(evens);
        odds.push_back(b);
        a = mex(odds);
      }
      cls.type = {cls.parity, a, b};
    }
    for (auto p : parents[i])
      if (--pending[p] == 0) ready.push_back(p);
  }
  if (done != n) throw std::logic_error("structure class option relation contains a cycle");
}

void label_deficiency_classes(std::vector<StructureClass>& classes) {
  for (auto& cls : classes) {
    cls.label = {cls.parity == 1, cls.deficiency, std::nullopt};
    if (cls.parity == 1 && cls.deficiency == 2) {
      const bool has_even2 = std::any_of(cls.options.begin(), cls.options.end(), [&](std::size_t j) {
        return classes[j].parity == 0 && classes[j].deficiency == 2;
      });
      cls.label.refinement = has_even2 ? 'b' : 'a';
    }
  }
}

GameReport nim_of_game(const Group& g, const std::string& name, const LatticeLimits& limits) {
  const SubgroupFamily family = intersection_family(g, limits);
  const DeficiencyTable table(g, family.all);

  GameReport report;
  report.group = name;
  report.order = g.order();
  report.min_generators = min_generating_size(g);
  report.maximal_count = family.maximal.size();
  report.intersection_count = family.intersections.size();
  report.classes = build_structure_classes(g, family, table);
  compute_types(report.classes);
  label_deficiency_classes(report.classes);
  const auto it = std::find(family.with_group.begin(), family.with_group.end(), family.frattini);
  report.frattini_index = static_cast<std::size_t>(it - family.with_group.begin());
  report.frattini_type = report.classes.at(report.frattini_index).type;
  report.nim = report.frattini_type.even;
  return report;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_structure_digraph(const GameReport& report) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape("GEN(" + report.group + ")") << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& cls = report.classes[i];
    os << "  s" << cls.subgroup.to_hex() << " [label=\"" << cls.subgroup.to_hex() << " ("
       << cls.subgroup.size() << "), \xCE\xB4=" << cls.deficiency << ", " << cls.type.to_string()
       << "\\n" << cls.label.to_string() << "\"";
    if (i == report.frattini_index) os << ", peripheries=2";
    os << "];\n";
  }
  for (const auto& cls : report.classes) {
    for (auto j : cls.options) {
      os << "  s" << cls.subgroup.to_hex() << " -> s" << report.classes[j].subgroup.to_hex() << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string report_to_json(const GameReport& report, int indent) {
  using nlohmann::ordered_json;
  const auto triple = [](const TypeTriple& t) { return ordered_json::array({t.parity, t.even, t.odd}); };
  ordered_json doc;
  doc["group"] = report.group;
  doc["order"] = report.order;
  doc["dG"] = report.min_generators;
  doc["nim"] = report.nim;
  doc["frattini_type"] = triple(report.frattini_type);
  auto classes = ordered_json::array();
  for (const auto& cls : report.classes) {
    ordered_json c;
    c["subgroup_size"] = cls.subgroup.size();
    c["parity"] = cls.parity;
    c["deficiency"] = cls.deficiency;
    c["type"] = triple(cls.type);
    c["options"] = cls.options;
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  return doc.dump(indent);
}

}  // namespace gen
