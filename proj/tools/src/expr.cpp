#include "gengame/expr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gen/errors.hpp"

namespace gengame {

bool operator==(const PowerExpr& a, const PowerExpr& b) {
  return a.exponent == b.exponent && *a.base == *b.base;
}

bool operator==(const ProductExpr& a, const ProductExpr& b) {
  return *a.left == *b.left && *a.right == *b.right;
}

namespace {

ExprPtr share(GroupExpr e) { return std::make_shared<const GroupExpr>(std::move(e)); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const {
    throw gen::ParseError(what, 0, pos + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool consume_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::size_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) fail_at("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  std::size_t positive(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    const std::size_t n = integer();
    if (n == 0) fail_at(std::string(what) + " must be positive", start);
    return n;
  }

  GroupExpr expr() {
    GroupExpr left = term();
    while (peek('x')) {
      ++pos_;
      GroupExpr right = term();
      left = GroupExpr{ProductExpr{share(std::move(left)), share(std::move(right))}};
    }
    return left;
  }

  GroupExpr term() {
    GroupExpr base = atom();
    while (peek('^')) {
      ++pos_;
      const std::size_t k = positive("exponent");
      base = GroupExpr{PowerExpr{share(std::move(base)), k}};
    }
    return base;
  }

  GroupExpr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a group expression");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GroupExpr inner = expr();
      expect(')');
      return inner;
    }
    if (consume_word("perm(")) return perm();
    if (consume_word("cayley(")) {
      const auto close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated cayley(");
      std::string path(text_.substr(pos_, close - pos_));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.front()))) path.erase(0, 1);
      if (path.empty()) fail("empty cayley() path");
      pos_ = close + 1;
      return GroupExpr{CayleyExpr{std::move(path)}};
    }
    if (consume_word("Q8")) return GroupExpr{NamedExpr{'Q', 8}};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (integer() != 1) fail_at("only '1' may appear as a bare number", start);
      return GroupExpr{TrivialExpr{}};
    }
    ++pos_;
    switch (c) {
      case 'Z': return GroupExpr{CyclicExpr{positive("cyclic order")}};
      case 'D':
      case 'S':
      case 'A': return GroupExpr{NamedExpr{c, positive("degree")}};
      default: fail_at("unknown group '" + std::string(1, c) + "'", start);
    }
  }

  GroupExpr perm() {
    PermExpr out;
    out.degree = positive("permutation degree");
    while (peek(';')) {
      ++pos_;
      out.generators.push_back(cycle_word(out.degree));
    }
    expect(')');
    return GroupExpr{std::move(out)};
  }

  CycleWord cycle_word(std::size_t degree) {
    CycleWord word;
    std::vector<bool> used(degree, false);
    if (!peek('(')) fail("expected a cycle");
    while (peek('(')) {
      ++pos_;
      Cycle cycle;
      while (!peek(')')) {
        skip_ws();
        const std::size_t at = pos_;
        const std::size_t point = integer();
        if (point >= degree) fail_at("point " + std::to_string(point) + " outside degree", at);
        if (used[point]) fail_at("point " + std::to_string(point) + " repeated", at);
        used[point] = true;
        cycle.push_back(static_cast<std::uint32_t>(point));
        if (peek(',')) ++pos_;
      }
      ++pos_;
      if (!cycle.empty()) word.push_back(std::move(cycle));
    }
    return word;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_product(const GroupExpr& e) { return std::holds_alternative<ProductExpr>(e.node); }

std::string render_word(const CycleWord& word) {
  if (word.empty()) return "()";
  std::string out;
  for (const auto& cycle : word) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

gen::Permutation to_permutation(std::size_t degree, const CycleWord& word) {
  gen::Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  for (const auto& cycle : word) {
    for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return p;
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) {
  return Parser(text).parse();
}

std::string render(const GroupExpr& expr) {
  struct Visitor {
    std::string operator()(const TrivialExpr&) const { return "1"; }
    std::string operator()(const CyclicExpr& e) const { return "Z" + std::to_string(e.n); }
    std::string operator()(const PowerExpr& e) const {
      const std::string base = render(*e.base);
      return (is_product(*e.base) ? "(" + base + ")" : base) + "^" + std::to_string(e.exponent);
    }
    std::string operator()(const ProductExpr& e) const {
      const std::string right = render(*e.right);
      return render(*e.left) + " x " + (is_product(*e.right) ? "(" + right + ")" : right);
    }
    std::string operator()(const PermExpr& e) const {
      std::string out = "perm(" + std::to_string(e.degree);
      for (const auto& word : e.generators) out += "; " + render_word(word);
      return out + ")";
    }
    std::string operator()(const CayleyExpr& e) const { return "cayley(" + e.path + ")"; }
    std::string operator()(const NamedExpr& e) const {
      if (e.family == 'Q') return "Q8";
      return std::string(1, e.family) + std::to_string(e.n);
    }
  };
  return std::visit(Visitor{}, expr.node);
}

gen::Group build_group(const GroupExpr& expr, const BuildOptions& options) {
  struct Visitor {
    const BuildOptions& opt;
    gen::Group operator()(const TrivialExpr&) const { return gen::cyclic_group(1, opt.max_order); }
    gen::Group operator()(const CyclicExpr& e) const { return gen::cyclic_group(e.n, opt.max_order); }
    gen::Group operator()(const PowerExpr& e) const {
      const gen::Group base = build_group(*e.base, opt);
      gen::Group result = base;
      for (std::size_t i = 1; i < e.exponent; ++i) result = gen::direct_product(result, base, opt.max_order);
      return result;
    }
    gen::Group operator()(const ProductExpr& e) const {
      return gen::direct_product(build_group(*e.left, opt), build_group(*e.right, opt), opt.max_order);
    }
    gen::Group operator()(const PermExpr& e) const {
      std::vector<gen::Permutation> gens;
      for (const auto& word : e.generators) gens.push_back(to_permutation(e.degree, word));
      return gen::group_from_permutations(e.degree, gens, opt.max_order);
    }
    gen::Group operator()(const CayleyExpr& e) const {
      std::filesystem::path path(e.path);
      if (path.is_relative() && !opt.base_dir.empty()) path = opt.base_dir / path;
      std::ifstream in(path);
      if (!in) throw gen::InvalidArgument("cannot read Cayley file " + path.string());
      std::ostringstream text;
      text << in.rdbuf();
      return gen::group_from_cayley_file(text.str(), opt.max_order);
    }
    gen::Group operator()(const NamedExpr& e) const {
      switch (e.family) {
        case 'D': return gen::dihedral_group(e.n, opt.max_order);
        case 'S': return gen::symmetric_group(e.n, opt.max_order);
        case 'A': return gen::alternating_group(e.n, opt.max_order);
        default: return gen::quaternion_group();
      }
    }
  };
  return std::visit(Visitor{options}, expr.node);
}

std::optional<std::pair<GroupExpr, GroupExpr>> split_product(const GroupExpr& expr) {
  if (const auto* p = std::get_if<ProductExpr>(&expr.node)) return std::pair{*p->left, *p->right};
  if (const auto* p = std::get_if<PowerExpr>(&expr.node); p && p->exponent >= 2) {
    GroupExpr left = p->exponent == 2 ? *p->base : GroupExpr{PowerExpr{p->base, p->exponent - 1}};
    return std::pair{std::move(left), *p->base};
  }
  return std::nullopt;
}

}  // namespace gengame
