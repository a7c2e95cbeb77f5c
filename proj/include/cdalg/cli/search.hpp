// Parameter-space search over Cayley-Dickson towers with a boolean filter on
// property flags. Flags that cannot be decided within budget are unknown and
// combine under three-valued logic; a row whose filter value is unknown is
// reported as skipped.

#pragma once

#include "cdalg/algebra.hpp"

#include <json.hpp>

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdalg::cli {

enum class Flag {
  associative,
  commutative,
  alternative,
  right_alternative,
  centrally_essential,
  left_n_essential,
  right_n_essential,
};

inline constexpr std::size_t kFlagCount = 7;

const std::array<Flag, kFlagCount>& all_flags();
std::string_view to_string(Flag f);
std::optional<Flag> parse_flag(std::string_view name);

using Truth = std::optional<bool>;
using FlagValues = std::array<Truth, kFlagCount>;

class FilterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grammar: expr := term ('|' term)*, term := factor ('&' factor)*,
/// factor := '!' factor | '(' expr ')' | flag. An empty filter is true.
class Filter {
 public:
  static Filter parse(std::string_view text);
  Truth evaluate(const FlagValues& values) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

struct SearchOptions {
  std::vector<Residue> bases{2, 3, 4, 5};
  int depth = 3;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

struct SearchRow {
  Residue base = 0;
  std::vector<Residue> params;
  Eigen::Index rank = 0;
  bool skipped = false;
  FlagValues flags{};
  nlohmann::json to_json() const;
};

struct SearchResult {
  std::vector<SearchRow> rows;
  std::size_t searched = 0;
  std::size_t matched = 0;
  std::size_t skipped = 0;
};

/// Flags of one algebra. Essentiality flags are definitional when the algebra
/// fits the budget. Otherwise, if `parent` and `alpha` describe it as a double,
/// the criteria on the parent are used; failing that they stay unknown.
FlagValues evaluate_flags(const FiniteAlgebra& a, const FiniteAlgebra* parent, const Vector* alpha, std::uint64_t budget);

/// Visits every tower of length 0..depth over each base with unit scalar
/// parameters, in lexicographic order.
SearchResult search(const SearchOptions& options, const Filter& filter);

}  // namespace cdalg::cli
