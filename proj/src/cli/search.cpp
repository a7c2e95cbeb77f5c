#include "cdalg/cli/search.hpp"

#include "cdalg/cayley_dickson.hpp"
#include "cdalg/cli/suites.hpp"
#include "cdalg/essentiality.hpp"

#include <cctype>

namespace cdalg::cli {

namespace {

constexpr std::array<std::string_view, kFlagCount> kFlagNames{
    "associative", "commutative", "alternative", "right_alternative",
    "centrally_essential", "left_n_essential", "right_n_essential",
};

constexpr std::size_t index(Flag f) { return static_cast<std::size_t>(f); }

}  // namespace

const std::array<Flag, kFlagCount>& all_flags() {
  static const std::array<Flag, kFlagCount> flags{
      Flag::associative, Flag::commutative, Flag::alternative, Flag::right_alternative,
      Flag::centrally_essential, Flag::left_n_essential, Flag::right_n_essential,
  };
  return flags;
}

std::string_view to_string(Flag f) { return kFlagNames[index(f)]; }

std::optional<Flag> parse_flag(std::string_view name) {
  for (Flag f : all_flags())
    if (to_string(f) == name) return f;
  return std::nullopt;
}

struct Filter::Node {
  enum class Kind { constant, flag, negation, conjunction, disjunction } kind;
  Flag flag = Flag::associative;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Filter::Node>;
using Kind = Filter::Node::Kind;

std::shared_ptr<Filter::Node> make_node(Kind k) {
  auto n = std::make_shared<Filter::Node>();
  n->kind = k;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse_all() {
    skip();
    if (pos_ == s_.size()) return make_node(Kind::constant);
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    while (accept('|')) lhs = binary(Kind::disjunction, lhs, term());
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (accept('&')) lhs = binary(Kind::conjunction, lhs, factor());
    return lhs;
  }

  NodePtr factor() {
    if (accept('!')) {
      auto n = make_node(Kind::negation);
      n->lhs = factor();
      return n;
    }
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail(pos_ == s_.size() ? "unexpected end of filter" : "unexpected '" + std::string(1, s_[pos_]) + "'");
    const std::string_view name = s_.substr(start, pos_ - start);
    const auto f = parse_flag(name);
    if (!f) fail("unknown flag '" + std::string(name) + "'");
    auto n = make_node(Kind::flag);
    n->flag = *f;
    return n;
  }

  static NodePtr binary(Kind k, NodePtr lhs, NodePtr rhs) {
    auto n = make_node(k);
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FilterError("filter: " + msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Truth eval(const Filter::Node& n, const FlagValues& v) {
  switch (n.kind) {
    case Kind::constant: return true;
    case Kind::flag: return v[index(n.flag)];
    case Kind::negation: {
      const Truth t = eval(*n.lhs, v);
      return t ? Truth(!*t) : std::nullopt;
    }
    case Kind::conjunction: {
      const Truth a = eval(*n.lhs, v), b = eval(*n.rhs, v);
      if ((a && !*a) || (b && !*b)) return false;
      if (a && b) return true;
      return std::nullopt;
    }
    case Kind::disjunction: {
      const Truth a = eval(*n.lhs, v), b = eval(*n.rhs, v);
      if ((a && *a) || (b && *b)) return true;
      if (a && b) return false;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool fits(const FiniteAlgebra& a, std::uint64_t budget) {
  const auto o = Submodule::full(a.modulus(), a.rank()).order();
  return o && *o <= budget;
}

}  // namespace

Filter Filter::parse(std::string_view text) {
  Filter f;
  f.text_ = std::string(text);
  f.root_ = Parser(text).parse_all();
  return f;
}

Truth Filter::evaluate(const FlagValues& values) const { return eval(*root_, values); }

nlohmann::json SearchRow::to_json() const {
  nlohmann::json flag_obj = nlohmann::json::object();
  for (Flag f : all_flags()) {
    const Truth t = flags[index(f)];
    flag_obj[std::string(to_string(f))] = t ? nlohmann::json(*t) : nlohmann::json(nullptr);
  }
  return {{"base", base}, {"params", params}, {"rank", rank}, {"status", skipped ? "skipped" : "match"}, {"flags", std::move(flag_obj)}};
}

FlagValues evaluate_flags(const FiniteAlgebra& a, const FiniteAlgebra* parent, const Vector* alpha, std::uint64_t budget) {
  FlagValues v{};
  v[index(Flag::associative)] = is_associative(a);
  v[index(Flag::commutative)] = is_commutative(a);
  const bool right_alt = is_right_alternative(a);
  v[index(Flag::right_alternative)] = right_alt;
  v[index(Flag::alternative)] = right_alt && is_left_alternative(a);
  if (fits(a, budget)) {
    v[index(Flag::centrally_essential)] = is_centrally_essential(a, budget).verdict;
    v[index(Flag::left_n_essential)] = is_left_n_essential(a, budget).verdict;
    v[index(Flag::right_n_essential)] = is_right_n_essential(a, budget).verdict;
  } else if (parent && alpha && fits(*parent, budget)) {
    v[index(Flag::centrally_essential)] = centrally_essential_criterion(*parent, *alpha, budget).verdict;
    const bool n = n_essential_criterion(*parent, *alpha, budget).verdict;
    v[index(Flag::left_n_essential)] = n;
    v[index(Flag::right_n_essential)] = n;
  }
  return v;
}

SearchResult search(const SearchOptions& options, const Filter& filter) {
  SearchResult result;
  auto record = [&](Residue n, const std::vector<Residue>& params, const FiniteAlgebra& a, const FlagValues& flags) {
    ++result.searched;
    const Truth t = filter.evaluate(flags);
    if (t && !*t) return;
    SearchRow row{n, params, a.rank(), !t.has_value(), flags};
    (t ? result.matched : result.skipped) += 1;
    result.rows.push_back(std::move(row));
  };
  for (Residue n : options.bases) {
    const FiniteAlgebra k = base_ring(n);
    record(n, {}, k, evaluate_flags(k, nullptr, nullptr, options.budget));
    if (options.depth <= 0) continue;
    SuiteOptions so;
    so.bases = {n};
    so.depth = options.depth;
    so.z2_depth = options.depth;
    so.budget = options.budget;
    for_each_doubling(so, [&](const Doubling& d) {
      record(n, d.params, d.doubled, evaluate_flags(d.doubled, &d.base, &d.alpha, options.budget));
    });
  }
  return result;
}

}  // namespace cdalg::cli
