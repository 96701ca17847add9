#include "gen/classifier.hpp"

#include <sstream>

#include "json.hpp"

#include "gen/achievement.hpp"
#include "gen/errors.hpp"

namespace gen {

namespace {

bool is_power_of(std::size_t value, std::size_t p) {
  while (value % p == 0) value /= p;
  return value == 1;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool normalizes(const Group& g, Element x, const ElementSet& subgroup) {
  const Element inv = g.inverse(x);
  bool ok = true;
  subgroup.for_each([&](Element y) {
    if (ok && !subgroup.contains(g.mul(g.mul(x, y), inv))) ok = false;
  });
  return ok;
}

}  // namespace

ElementSet sylow_subgroup(const Group& g, std::size_t p) {
  if (p < 2 || prime_divisors(p) != std::vector<std::size_t>{p}) {
    throw InvalidArgument("sylow_subgroup needs a prime, got " + std::to_string(p));
  }
  ElementSet current(g.order());
  current.insert(Group::identity());
  std::vector<Element> gens;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element x = 1; x < g.order(); ++x) {
      if (current.contains(x) || !is_power_of(element_order(g, x), p)) continue;
      if (!normalizes(g, x, current)) continue;
      ElementSet next = join_with(g, current, gens, x);
      if (!is_power_of(next.size(), p)) continue;
      current = std::move(next);
      gens.push_back(x);
      grew = true;
    }
  }
  return current;
}

bool is_normal(const Group& g, const ElementSet& subgroup) {
  for (Element x = 0; x < g.order(); ++x)
    if (!normalizes(g, x, subgroup)) return false;
  return true;
}

Decomposition decompose_sylow2(const Group& g) {
  Decomposition dec;
  dec.odd_part = ElementSet(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (element_order(g, x) % 2 == 1) dec.odd_part.insert(x);
  dec.two_part = sylow_subgroup(g, 2);

  bool closed = true;
  dec.odd_part.for_each([&](Element x) {
    dec.odd_part.for_each([&](Element y) {
      if (closed && !dec.odd_part.contains(g.mul(x, y))) closed = false;
    });
  });
  if (!closed) return dec;
  if (dec.two_part.size() * dec.odd_part.size() != g.order()) return dec;
  if (!is_normal(g, dec.two_part)) return dec;
  bool commute = true;
  dec.two_part.for_each([&](Element t) {
    dec.odd_part.for_each([&](Element h) {
      if (commute && g.mul(t, h) != g.mul(h, t)) commute = false;
    });
  });
  dec.valid = commute;
  return dec;
}

bool is_nilpotent(const Group& g) {
  for (auto p : prime_divisors(g.order()))
    if (!is_normal(g, sylow_subgroup(g, p))) return false;
  return true;
}

Prediction predict_nim(const Group& g, const Decomposition& dec) {
  if (!dec.valid) return {};
  const std::size_t n = g.order();
  const auto fire = [](unsigned nim, const char* label) { return Prediction{true, nim, label}; };
  if (n == 1) return fire(0, "trivial");
  const std::size_t d = min_generating_size(g);
  if (n % 2 == 1) return d <= 2 ? fire(2, "odd-d1-2") : fire(1, "odd-d3+");
  if (is_cyclic(g)) {
    if (n == 2) return fire(2, "Z2");
    if (n % 4 == 0) return fire(1, "Z4k");
    return fire(4, "Z4k+2");
  }
  if (dec.two_part.size() == 4 && exponent(induced_subgroup(g, dec.two_part)) == 2 &&
      min_generating_size(induced_subgroup(g, dec.odd_part)) <= 2) {
    return fire(1, "Z2^2xH");
  }
  return fire(0, "otherwise");
}

ConsistencyReport verify_theorem(const Group& g, const std::string& expr,
                                 const LatticeLimits& limits) {
  ConsistencyReport out;
  out.expr = expr;
  out.order = g.order();
  const GameReport game = nim_of_game(g, expr, limits);
  out.min_generators = game.min_generators;
  out.computed = game.nim;
  const Decomposition dec = decompose_sylow2(g);
  out.decomposable = dec.valid;
  out.nilpotent = is_nilpotent(g);
  const Prediction prediction = predict_nim(g, dec);
  out.case_label = prediction.case_label;
  if (prediction.applicable) {
    out.predicted = prediction.nim;
    out.match = prediction.nim == game.nim;
  }
  return out;
}

std::string consistency_tsv_header() {
  return "group\torder\tdG\tdecomposable\tnilpotent\tpredicted\tcomputed\tcase\tmatch";
}

std::string to_tsv_row(const ConsistencyReport& r) {
  std::ostringstream os;
  os << r.expr << '\t' << r.order << '\t' << r.min_generators << '\t'
     << (r.decomposable ? "yes" : "no") << '\t' << (r.nilpotent ? "yes" : "no") << '\t'
     << (r.predicted ? "*" + std::to_string(*r.predicted) : std::string("-")) << '\t' << '*'
     << r.computed << '\t' << r.case_label << '\t' << (r.match ? "yes" : "no");
  return os.str();
}

std::string consistency_to_json(const ConsistencyReport& r, int indent) {
  nlohmann::ordered_json doc;
  doc["group"] = r.expr;
  doc["order"] = r.order;
  doc["dG"] = r.min_generators;
  doc["decomposable"] = r.decomposable;
  doc["nilpotent"] = r.nilpotent;
  doc["predicted"] = r.predicted ? nlohmann::ordered_json(*r.predicted) : nlohmann::ordered_json(nullptr);
  doc["computed"] = r.computed;
  doc["case"] = r.case_label;
  doc["match"] = r.match;
  return doc.dump(indent);
}

}  // namespace gen
