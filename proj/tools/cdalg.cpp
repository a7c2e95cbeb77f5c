// cdalg: build, analyze, verify and search Cayley-Dickson algebras over Z/n.
//
//   cdalg build --base 4 --params 1,1,1 [--out doc.json] [--all-stages]
//   cdalg build --presentation quaternion --base 3 --params 1,1 [--out doc.json]
//   cdalg analyze doc.json
//   cdalg verify thm-1.5 [--n-range 2..9] [--bases 2,3,4] [--depth 3] [--json report.json]
//   cdalg search --bases 2..5 --depth 3 --filter "centrally_essential & !associative" [--out rows.jsonl]
//
// Exit status: 0 success, 1 verification failure, 2 usage or construction error.
// CDALG_ENUM_BUDGET overrides the enumeration budget.

#include "cdalg/cayley_dickson.hpp"
#include "cdalg/cli/document.hpp"
#include "cdalg/cli/search.hpp"
#include "cdalg/cli/suites.hpp"
#include "cdalg/essentiality.hpp"
#include "cdalg/presentations.hpp"
#include "cdalg/structure.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace cdalg;
using namespace cdalg::cli;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t budget_from_env() {
  const char* env = std::getenv("CDALG_ENUM_BUDGET");
  if (!env || !*env) return kDefaultEnumerationBudget;
  std::uint64_t v = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("CDALG_ENUM_BUDGET must be a non-negative integer");
  return v;
}

Residue parse_int(std::string_view s) {
  Residue v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("not an integer: '" + std::string(s) + "'");
  return v;
}

// Accepts "a..b" or a single integer.
std::pair<Residue, Residue> parse_range(std::string_view s) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const Residue v = parse_int(s);
    return {v, v};
  }
  const Residue lo = parse_int(s.substr(0, dots)), hi = parse_int(s.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + std::string(s) + "'");
  return {lo, hi};
}

// Comma-separated integers and ranges, e.g. "2..4,6".
std::vector<Residue> parse_list(std::string_view s) {
  std::vector<Residue> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto [lo, hi] = parse_range(s.substr(0, comma));
    for (Residue v = lo; v <= hi; ++v) out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<Residue> parse_moduli(const std::string& s) {
  auto out = parse_list(s);
  for (Residue n : out)
    if (n < 2) throw UsageError("moduli must be at least 2");
  return out;
}

bool fits(const FiniteAlgebra& a, std::uint64_t budget) {
  const auto o = Submodule::full(a.modulus(), a.rank()).order();
  return o && *o <= budget;
}

std::string order_string(const Submodule& s) {
  const auto o = s.order();
  return o ? std::to_string(*o) : std::string(">2^64");
}

std::string truth(const Truth& t) { return t ? (*t ? "true" : "false") : "unknown"; }

void print_flags(std::ostream& out, const FiniteAlgebra& a, const FlagValues& flags, std::uint64_t budget) {
  const bool definitional = fits(a, budget);
  for (Flag f : all_flags()) {
    const Truth& t = flags[static_cast<std::size_t>(f)];
    out << "  " << to_string(f) << ": " << truth(t);
    const bool essential_flag = f == Flag::centrally_essential || f == Flag::left_n_essential || f == Flag::right_n_essential;
    if (essential_flag) out << (t ? (definitional ? " [definitional]" : " [criterion]") : " [over budget]");
    out << "\n";
  }
}

std::filesystem::path stage_path(const std::filesystem::path& out, std::size_t stage) {
  std::filesystem::path p = out;
  p.replace_filename(out.stem().string() + "." + std::to_string(stage) + out.extension().string());
  return p;
}

int cmd_build(Residue base, const std::vector<Residue>& params, const std::string& out, bool all_stages, std::uint64_t budget) {
  TowerSpec spec = TowerSpec::scalars(base, params);
  const auto stages = build_tower(spec);
  const std::size_t first = all_stages ? 0 : stages.size() - 1;
  for (std::size_t s = first; s < stages.size(); ++s) {
    const FiniteAlgebra& a = stages[s];
    const FiniteAlgebra* parent = s ? &stages[s - 1] : nullptr;
    const std::vector<Residue> prefix(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(s));
    std::optional<Vector> alpha;
    if (parent) alpha = scalar(*parent, params[s - 1]);
    std::cout << "stage " << s << " " << tower_name(base, prefix) << ": rank " << a.rank()
              << ", |R| = " << order_string(Submodule::full(a.modulus(), a.rank())) << "\n";
    print_flags(std::cout, a, evaluate_flags(a, parent, alpha ? &*alpha : nullptr, budget), budget);
    if (!out.empty()) {
      TowerSpec prefix_spec = TowerSpec::scalars(base, prefix);
      const auto path = all_stages ? stage_path(out, s) : std::filesystem::path(out);
      save(path, AlgebraDocument{a, tower_provenance(prefix_spec)});
      std::cout << "  written: " << path.string() << "\n";
    }
  }
  return 0;
}

int cmd_build_presentation(const std::string& name, Residue base, const std::vector<Residue>& params, const std::string& out,
                           std::uint64_t budget) {
  std::vector<Residue> all{base};
  all.insert(all.end(), params.begin(), params.end());
  std::optional<FiniteAlgebra> a;
  if (name == "quaternion" && params.size() == 2) {
    a = quaternion_algebra(base, params[0], params[1]);
  } else if (name == "octonion" && params.size() == 3) {
    a = octonion_algebra(base, params[0], params[1], params[2]);
  } else {
    throw UsageError("--presentation quaternion takes 2 parameters, octonion takes 3");
  }
  std::cout << name << "(Z" << base;
  for (std::size_t i = 0; i < params.size(); ++i) std::cout << (i ? "," : ";") << params[i];
  std::cout << "): rank " << a->rank() << ", |R| = " << order_string(Submodule::full(base, a->rank())) << "\n";
  print_flags(std::cout, *a, evaluate_flags(*a, nullptr, nullptr, budget), budget);
  if (!out.empty()) {
    save(out, AlgebraDocument{*a, presentation_provenance(name, all)});
    std::cout << "  written: " << out << "\n";
  }
  return 0;
}

void print_verdict(const std::string& name, const EssentialityVerdict& v, const FiniteAlgebra& a) {
  std::cout << "  " << name << ": " << (v.verdict ? "true" : "false") << " [" << to_string(v.method) << "]";
  if (!v.verdict && v.witness) std::cout << " witness " << format_element(a, *v.witness);
  if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
  std::cout << "\n";
}

// The tower behind a document's provenance, with the map from the document
// basis onto the tower basis.
struct TowerView {
  std::vector<FiniteAlgebra> stages;
  BasisMap map;
};

std::optional<TowerView> tower_view(const AlgebraDocument& doc) {
  if (auto spec = tower_from_provenance(doc.provenance)) {
    return TowerView{build_tower(*spec), BasisMap::identity(doc.algebra.rank())};
  }
  const auto& p = doc.provenance;
  if (!p.is_object() || p.value("kind", "") != "presentation") return std::nullopt;
  const std::string name = p.value("name", "");
  const auto params = p.at("params").get<std::vector<Residue>>();
  if (params.empty()) return std::nullopt;
  const std::vector<Residue> tower_params(params.begin() + 1, params.end());
  if (name == "quaternion" && tower_params.size() == 2)
    return TowerView{build_tower(TowerSpec::scalars(params[0], tower_params)), quaternion_tower_map()};
  if (name == "octonion" && tower_params.size() == 3)
    return TowerView{build_tower(TowerSpec::scalars(params[0], tower_params)), octonion_tower_map()};
  return std::nullopt;
}

Submodule to_document(const Submodule& s, const BasisMap& map, Residue n, Eigen::Index rank) {
  BasisMap inv;
  inv.entries.resize(map.entries.size());
  for (std::size_t i = 0; i < map.entries.size(); ++i)
    inv.entries[static_cast<std::size_t>(map.entries[i].target)] = {static_cast<Eigen::Index>(i), map.entries[i].negate};
  std::vector<Vector> gens;
  for (std::size_t g = 0; g < s.generator_count(); ++g) gens.push_back(inv.apply(s.generator(g), n));
  return Submodule::span(n, rank, gens);
}

int cmd_analyze(const std::string& path, std::uint64_t budget) {
  const AlgebraDocument doc = load(path);
  const FiniteAlgebra& a = doc.algebra;
  const Residue n = a.modulus();
  std::cout << "modulus " << n << ", rank " << a.rank() << ", |R| = " << order_string(Submodule::full(n, a.rank())) << "\n";
  if (!doc.provenance.empty()) std::cout << "provenance: " << doc.provenance.dump() << "\n";

  const CenterReport c = center(a);
  std::cout << "centers:\n"
            << "  |N(R)| = " << order_string(c.associative) << "\n"
            << "  |K(R)| = " << order_string(c.commutative) << "\n"
            << "  |Z(R)| = " << order_string(c.center) << "\n";
  const EssentialityData data = essentiality_data(a);
  std::cout << "essentiality data:\n"
            << "  |C| = " << order_string(data.center) << "\n"
            << "  |[A,A]| = " << order_string(data.commutator_ideal) << "\n"
            << "  |I| = " << order_string(data.commutator_annihilator) << "\n"
            << "  |B| = " << order_string(data.symmetric_center) << "\n"
            << "  |skew| = " << order_string(data.skew_span) << "\n"
            << "  |J| = " << order_string(data.skew_annihilator) << "\n";
  std::cout << "properties:\n"
            << "  associative: " << (is_associative(a) ? "true" : "false") << "\n"
            << "  commutative: " << (is_commutative(a) ? "true" : "false") << "\n"
            << "  alternative: " << (is_alternative(a) ? "true" : "false") << "\n"
            << "  right_alternative: " << (is_right_alternative(a) ? "true" : "false") << "\n";
  std::cout << "definitional verdicts:\n";
  if (fits(a, budget)) {
    print_verdict("centrally_essential", is_centrally_essential(a, budget), a);
    print_verdict("left_n_essential", is_left_n_essential(a, budget), a);
    print_verdict("right_n_essential", is_right_n_essential(a, budget), a);
  } else {
    std::cout << "  skipped: |R| exceeds the enumeration budget of " << budget << "\n";
  }

  const auto view = tower_view(doc);
  if (!view || view->stages.size() < 2) return 0;
  const FiniteAlgebra& doubled = view->stages.back();
  const FiniteAlgebra& parent = view->stages[view->stages.size() - 2];
  const auto check = verify_basis_map(a, doubled, view->map);
  if (!check.ok) {
    std::cout << "provenance does not reproduce the document: " << check.violation << "\n";
    return 0;
  }
  const EssentialityData pdata = essentiality_data(parent);
  const Submodule n_formula = to_document(predicted_associative_center(pdata, parent, doubled), view->map, n, a.rank());
  const Submodule z_formula = to_document(predicted_center(pdata, parent, doubled), view->map, n, a.rank());
  std::cout << "doubling formulas:\n"
            << "  |N(R)| by formula = " << order_string(n_formula) << ", equal to solve: " << (n_formula == c.associative ? "yes" : "no") << "\n"
            << "  |Z(R)| by formula = " << order_string(z_formula) << ", equal to solve: " << (z_formula == c.center ? "yes" : "no") << "\n";
  const auto& p = doc.provenance;
  std::cout << "criterion verdicts:\n";
  std::vector<Residue> params;
  if (p.value("kind", "") == "presentation") params = p.at("params").get<std::vector<Residue>>();
  if (params.size() == 3) {
    print_verdict("centrally_essential & !commutative", quaternion_criterion(params[0], params[1], params[2]), base_ring(n));
  } else if (params.size() == 4) {
    print_verdict("centrally_essential & !associative", octonion_criterion(params[0], params[1], params[2], params[3]), base_ring(n));
  }
  const Residue last = params.empty() ? 0 : params.back();
  Vector alpha;
  if (params.empty()) {
    const auto spec = tower_from_provenance(p);
    const auto& lp = spec->params.back();
    alpha = std::holds_alternative<Residue>(lp) ? scalar(parent, std::get<Residue>(lp)) : std::get<Vector>(lp);
  } else {
    alpha = scalar(parent, last);
  }
  if (fits(parent, budget)) {
    print_verdict("centrally_essential", centrally_essential_criterion(parent, alpha, budget), parent);
    print_verdict("n_essential", n_essential_criterion(parent, alpha, budget), parent);
  } else {
    std::cout << "  skipped: base of the double exceeds the enumeration budget\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, const std::string& json_out) {
  const auto report = run_suite(suite, options);
  for (const auto& r : report.results) {
    std::cout << to_string(r.outcome) << "  " << r.instance << "  " << r.check;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
  }
  std::cout << suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.count(Outcome::pass) << " passed, "
            << report.count(Outcome::fail) << " failed, " << report.count(Outcome::skipped) << " skipped, "
            << report.seconds << " s)\n";
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) throw UsageError("cannot write " + json_out);
    f << report.to_json().dump(2) << "\n";
  }
  return report.passed() ? 0 : kExitFailure;
}

int cmd_search(const SearchOptions& options, const std::string& filter_text, const std::string& out) {
  const Filter filter = Filter::parse(filter_text);
  const SearchResult result = search(options, filter);
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw UsageError("cannot write " + out);
  }
  std::ostream& rows = out.empty() ? std::cout : file;
  for (const auto& row : result.rows) rows << row.to_json().dump() << "\n";
  std::cerr << "searched " << result.searched << " algebras: " << result.matched << " matched, " << result.skipped
            << " undecided within budget\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Dickson algebras over Z/n"};
  app.require_subcommand(1);

  Residue base = 0;
  std::string params_text, build_out;
  bool all_stages = false;
  auto* build = app.add_subcommand("build", "Build a tower with scalar parameters");
  build->add_option("--base", base, "Modulus n of the base ring")->required();
  build->add_option("--params", params_text, "Comma-separated doubling parameters")->required();
  build->add_option("--out", build_out, "Output document");
  build->add_flag("--all-stages", all_stages, "Write and report every stage");
  std::string presentation;
  build->add_option("--presentation", presentation, "Build a quaternion or octonion presentation instead of a tower")
      ->check(CLI::IsMember({"quaternion", "octonion"}));

  std::string doc_path;
  auto* analyze = app.add_subcommand("analyze", "Report centers, ideals and essentiality of a document");
  analyze->add_option("doc", doc_path, "Algebra document")->required();

  std::string suite, n_range = "2..9", verify_bases = "2,3,4,5,6", json_out;
  int depth = 3, z2_depth = 4;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--n-range", n_range, "Moduli for presentation suites, a..b");
  verify->add_option("--bases", verify_bases, "Tower bases, e.g. 2,3,4 or 2..6");
  verify->add_option("--depth", depth, "Maximum tower depth");
  verify->add_option("--z2-depth", z2_depth, "Maximum tower depth over Z/2");
  verify->add_option("--json", json_out, "Write the report as JSON");

  std::string search_bases = "2..5", filter_text, search_out;
  int search_depth = 3;
  auto* search_cmd = app.add_subcommand("search", "Search towers for flag combinations");
  search_cmd->add_option("--bases", search_bases, "Tower bases, e.g. 2..5");
  search_cmd->add_option("--depth", search_depth, "Maximum tower depth");
  search_cmd->add_option("--filter", filter_text, "Boolean filter over property flags");
  search_cmd->add_option("--out", search_out, "Write JSON lines here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const std::uint64_t budget = budget_from_env();
    if (*build && !presentation.empty()) return cmd_build_presentation(presentation, base, parse_list(params_text), build_out, budget);
    if (*build) return cmd_build(base, parse_list(params_text), build_out, all_stages, budget);
    if (*analyze) return cmd_analyze(doc_path, budget);
    if (*verify) {
      const auto names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string list;
        for (const auto& s : names) list += (list.empty() ? "" : ", ") + s;
        throw UsageError("unknown suite '" + suite + "' (known: " + list + ")");
      }
      SuiteOptions options;
      const auto [lo, hi] = parse_range(n_range);
      if (lo < 2) throw UsageError("--n-range must start at 2 or more");
      options.n_min = lo;
      options.n_max = hi;
      options.bases = parse_moduli(verify_bases);
      options.depth = depth;
      options.z2_depth = z2_depth;
      options.budget = budget;
      return cmd_verify(suite, options, json_out);
    }
    if (*search_cmd) {
      SearchOptions options;
      options.bases = parse_moduli(search_bases);
      options.depth = search_depth;
      options.budget = budget;
      return cmd_search(options, filter_text, search_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
