#include "cdalg/cli/suites.hpp"

#include "cdalg/cayley_dickson.hpp"
#include "cdalg/essentiality.hpp"
#include "cdalg/presentations.hpp"
#include "cdalg/structure.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cdalg::cli {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
    case Outcome::skipped: return "SKIP";
  }
  return "?";
}

bool VerificationReport::passed() const { return count(Outcome::fail) == 0; }

std::size_t VerificationReport::count(Outcome o) const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [o](const auto& r) { return r.outcome == o; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) {
    rows.push_back({{"instance", r.instance}, {"check", r.check}, {"outcome", cli::to_string(r.outcome)}, {"detail", r.detail}});
  }
  return {{"suite", suite},
          {"passed", passed()},
          {"pass", count(Outcome::pass)},
          {"fail", count(Outcome::fail)},
          {"skipped", count(Outcome::skipped)},
          {"results", std::move(rows)}};
}

std::vector<Residue> units(Residue n) {
  std::vector<Residue> out;
  for (Residue u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  if (n == 1) out.push_back(0);
  return out;
}

std::string tower_name(Residue n, const std::vector<Residue>& params) {
  std::ostringstream os;
  os << "(Z" << n << ";";
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ")";
  return os.str();
}

namespace {

void visit_from(Residue n, std::vector<Residue>& params, const FiniteAlgebra& cur, int remaining,
                const std::function<void(const Doubling&)>& visit) {
  if (remaining == 0) return;
  for (Residue u : units(n)) {
    const Vector alpha = scalar(cur, u);
    const FiniteAlgebra next = cayley_dickson(cur, alpha, tower_generator(params.size() + 1));
    params.push_back(u);
    visit(Doubling{n, params, cur, alpha, next});
    visit_from(n, params, next, remaining - 1, visit);
    params.pop_back();
  }
}

std::string order_string(const Submodule& s) {
  const auto o = s.order();
  return o ? std::to_string(*o) : std::string(">2^64");
}

bool fits(const FiniteAlgebra& a, std::uint64_t budget) {
  const auto o = Submodule::full(a.modulus(), a.rank()).order();
  return o && *o <= budget;
}

std::string verdict_string(const EssentialityVerdict& v, const FiniteAlgebra& a) {
  std::string s = v.verdict ? "true" : "false";
  if (!v.verdict && v.witness) s += " (witness " + format_element(a, *v.witness) + ")";
  return s;
}

// Identifies a generator of one submodule missing from the other.
std::string difference_witness(const FiniteAlgebra& r, const Submodule& predicted, const Submodule& direct) {
  for (std::size_t i = 0; i < predicted.generator_count(); ++i)
    if (!membership(predicted.generator(i), direct)) return "predicted but absent: " + format_element(r, predicted.generator(i));
  for (std::size_t i = 0; i < direct.generator_count(); ++i)
    if (!membership(direct.generator(i), predicted)) return "present but not predicted: " + format_element(r, direct.generator(i));
  return "";
}

InstanceResult submodule_check(std::string instance, std::string check, const FiniteAlgebra& r, const Submodule& predicted,
                               const Submodule& direct) {
  InstanceResult res{std::move(instance), std::move(check), Outcome::pass, ""};
  res.detail = "order " + order_string(direct);
  if (!(predicted == direct)) {
    res.outcome = Outcome::fail;
    res.detail = "predicted order " + order_string(predicted) + ", direct order " + order_string(direct) + "; " +
                 difference_witness(r, predicted, direct);
  }
  return res;
}

InstanceResult agreement(std::string instance, std::string check, const EssentialityVerdict& criterion,
                         const FiniteAlgebra& base, const EssentialityVerdict& definitional, const FiniteAlgebra& doubled) {
  InstanceResult res{std::move(instance), std::move(check), Outcome::pass, ""};
  res.detail = "criterion " + verdict_string(criterion, base) + ", definitional " + verdict_string(definitional, doubled);
  if (criterion.verdict != definitional.verdict) res.outcome = Outcome::fail;
  return res;
}

InstanceResult boolean_check(std::string instance, std::string check, bool expected, bool actual) {
  return {std::move(instance), std::move(check), expected == actual ? Outcome::pass : Outcome::fail,
          std::string("expected ") + (expected ? "true" : "false") + ", got " + (actual ? "true" : "false")};
}

InstanceResult skipped(std::string instance, std::string check, std::string why) {
  return {std::move(instance), std::move(check), Outcome::skipped, std::move(why)};
}

void suite_thm_1_3(const SuiteOptions& o, VerificationReport& rep) {
  for_each_doubling(o, [&](const Doubling& d) {
    const std::string name = tower_name(d.modulus, d.params);
    const auto data = essentiality_data(d.base);
    rep.results.push_back(submodule_check(name, "N(R) = C + I nu", d.doubled,
                                          predicted_associative_center(data, d.base, d.doubled),
                                          associative_center(d.doubled)));
    if (!fits(d.doubled, o.budget)) {
      const bool crit = n_essential_criterion(d.base, d.alpha, o.budget).verdict;
      rep.results.push_back(skipped(name, "N-essential criterion", std::string("criterion ") + (crit ? "true" : "false") +
                                                                      "; double exceeds enumeration budget"));
      return;
    }
    const auto crit = n_essential_criterion(d.base, d.alpha, o.budget);
    rep.results.push_back(agreement(name, "left N-essential criterion", crit, d.base,
                                    is_left_n_essential(d.doubled, o.budget), d.doubled));
    rep.results.push_back(agreement(name, "right N-essential criterion", crit, d.base,
                                    is_right_n_essential(d.doubled, o.budget), d.doubled));
  });
}

void suite_thm_1_4(const SuiteOptions& o, VerificationReport& rep) {
  for_each_doubling(o, [&](const Doubling& d) {
    const std::string name = tower_name(d.modulus, d.params);
    const auto data = essentiality_data(d.base);
    rep.results.push_back(submodule_check(name, "Z(R) = (B ∩ C) + (I ∩ J) nu", d.doubled,
                                          predicted_center(data, d.base, d.doubled), center(d.doubled).center));
    if (!fits(d.doubled, o.budget)) {
      const bool crit = centrally_essential_criterion(d.base, d.alpha, o.budget).verdict;
      rep.results.push_back(skipped(name, "centrally essential criterion", std::string("criterion ") + (crit ? "true" : "false") +
                                                                              "; double exceeds enumeration budget"));
      return;
    }
    rep.results.push_back(agreement(name, "centrally essential criterion",
                                    centrally_essential_criterion(d.base, d.alpha, o.budget), d.base,
                                    is_centrally_essential(d.doubled, o.budget), d.doubled));
  });
}

void suite_thm_1_5(const SuiteOptions& o, VerificationReport& rep) {
  const auto stages = build_tower(TowerSpec::scalars(4, {1, 1, 1, 1}));
  const FiniteAlgebra& oct = stages[3];
  const FiniteAlgebra& sed = stages[4];
  const std::string name = tower_name(4, {1, 1, 1});
  rep.results.push_back(boolean_check(name, "alternative", true, is_alternative(oct)));
  rep.results.push_back(boolean_check(name, "associative", false, is_associative(oct)));
  rep.results.push_back(boolean_check(name, "commutative", false, is_commutative(oct)));
  const auto ce = is_centrally_essential(oct, o.budget);
  InstanceResult r = boolean_check(name, "centrally essential (definitional)", true, ce.verdict);
  r.detail += ", " + std::to_string(ce.cost) + " nonzero elements scanned";
  if (!ce.verdict && ce.witness) r.detail += ", witness " + format_element(oct, *ce.witness);
  rep.results.push_back(std::move(r));
  rep.results.push_back(boolean_check(tower_name(4, {1, 1, 1, 1}), "right alternative", false, is_right_alternative(sed)));
  rep.results.push_back(boolean_check(tower_name(4, {1, 1, 1, 1}), "left alternative", false, is_left_alternative(sed)));
}

template <class Definitional>
void presentation_sweep(const SuiteOptions& o, VerificationReport& rep, int rank_power, const std::string& label,
                        const std::function<EssentialityVerdict(Residue)>& criterion,
                        const std::function<FiniteAlgebra(Residue)>& build, Definitional definitional) {
  for (Residue n = o.n_min; n <= o.n_max; ++n) {
    const std::string name = label + "(Z" + std::to_string(n) + ";1,1" + (rank_power == 8 ? ",1)" : ")");
    const auto crit = criterion(n);
    unsigned __int128 size = 1;
    for (int i = 0; i < rank_power; ++i) size *= static_cast<unsigned __int128>(n);
    if (size > o.budget) {
      rep.results.push_back(skipped(name, crit.property, std::string("criterion ") + (crit.verdict ? "true" : "false") +
                                                             "; algebra exceeds enumeration budget"));
      continue;
    }
    const FiniteAlgebra a = build(n);
    const bool def = definitional(a);
    InstanceResult r{name, crit.property, crit.verdict == def ? Outcome::pass : Outcome::fail, ""};
    r.detail = std::string("criterion ") + (crit.verdict ? "true" : "false") + ", definitional " + (def ? "true" : "false");
    rep.results.push_back(std::move(r));
  }
}

void suite_prop_5_2(const SuiteOptions& o, VerificationReport& rep) {
  presentation_sweep(
      o, rep, 4, "quaternion", [](Residue n) { return quaternion_criterion(n, 1, 1); },
      [](Residue n) { return quaternion_algebra(n, 1, 1); },
      [&](const FiniteAlgebra& a) { return !is_commutative(a) && is_centrally_essential(a, o.budget).verdict; });
}

void suite_prop_5_3(const SuiteOptions& o, VerificationReport& rep) {
  presentation_sweep(
      o, rep, 8, "octonion", [](Residue n) { return octonion_criterion(n, 1, 1, 1); },
      [](Residue n) { return octonion_algebra(n, 1, 1, 1); },
      [&](const FiniteAlgebra& a) { return !is_associative(a) && is_centrally_essential(a, o.budget).verdict; });
}

void suite_lemma_5_1(const SuiteOptions& o, VerificationReport& rep) {
  for (Residue n = o.n_min; n <= o.n_max; ++n) {
    const std::string name = "quaternion(Z" + std::to_string(n) + ";1,1)";
    const FiniteAlgebra q = quaternion_algebra(n, 1, 1);
    const auto data = essentiality_data(q);
    const auto lhs = is_essential_ideal(data.commutator_annihilator, data.symmetric_center, q, o.budget);
    const auto rhs = is_essential_ideal(two_torsion(n), Submodule::full(n, 1), base_ring(n), o.budget);
    InstanceResult r{name, "I essential in B <=> Ann(2) essential in Z/n", lhs.verdict == rhs.verdict ? Outcome::pass : Outcome::fail, ""};
    r.detail = std::string("I in B: ") + (lhs.verdict ? "true" : "false") + ", Ann(2) in Z/n: " + (rhs.verdict ? "true" : "false");
    rep.results.push_back(std::move(r));

    // B = C and I = J = N + Ni + Nj + Nk with N = Ann(2).
    std::vector<Vector> gens;
    const Submodule ann = two_torsion(n);
    for (Eigen::Index k = 1; k < 4; ++k)
      for (std::size_t g = 0; g < ann.generator_count(); ++g) gens.push_back(scale(q, ann.generator(g)[0], basis(q, k)));
    std::vector<Vector> ideal_gens = gens;
    for (std::size_t g = 0; g < ann.generator_count(); ++g) ideal_gens.push_back(scalar(q, ann.generator(g)[0]));
    gens.push_back(q.unit());
    const Submodule expected_center = Submodule::span(n, 4, gens);
    const Submodule expected_ideal = Submodule::span(n, 4, ideal_gens);
    const bool ok = data.center == expected_center && data.symmetric_center == data.center &&
                    data.commutator_annihilator == expected_ideal && data.skew_annihilator == expected_ideal;
    rep.results.push_back({name, "B = C = K + N{i,j,k}, I = J = N{1,i,j,k}", ok ? Outcome::pass : Outcome::fail,
                           "|C| = " + order_string(data.center) + ", |I| = " + order_string(data.commutator_annihilator) +
                               ", |J| = " + order_string(data.skew_annihilator)});
  }
}

void suite_remark_2_5(const SuiteOptions& o, VerificationReport& rep) {
  for_each_doubling(o, [&](const Doubling& d) {
    const bool base_ok = is_associative(d.base) && is_commutative(d.base);
    rep.results.push_back(boolean_check(tower_name(d.modulus, d.params), "associative <=> base associative and commutative",
                                        base_ok, is_associative(d.doubled)));
  });
}

void suite_lemma_2_1(const SuiteOptions& o, VerificationReport& rep) {
  // The first two bases are commutative, so their doubles are associative;
  // the quaternion bases over Z/3 and Z/4 exercise proper subsets of N(R).
  const std::vector<std::pair<Residue, std::vector<Residue>>> bases{{2, {1, 1}}, {4, {1}}, {3, {1, 1}}, {4, {1, 3}}};
  for (const auto& [n, params] : bases) {
    const auto stages = build_tower(TowerSpec::scalars(n, params));
    const FiniteAlgebra& a = stages.back();
    const FiniteAlgebra r = cayley_dickson(a, a.unit(), tower_generator(params.size() + 1));
    const Submodule nr = associative_center(r);
    const Submodule c = center(a).center;
    const Submodule ann = annihilator(commutator_ideal(a), c, a);
    const Submodule whole = Submodule::full(n, a.rank());
    std::size_t pairs = 0, members = 0, disagreements = 0;
    std::string witness;
    for (const auto& x : enumerate(whole, o.budget)) {
      for (const auto& y : enumerate(whole, o.budget)) {
        ++pairs;
        const bool ids = n_membership_by_identities(a, x, y);
        const bool in_n = membership(pair(a, x, y), nr);
        const bool closed_form = membership(x, c) && membership(y, ann);
        members += in_n ? 1 : 0;
        if (ids != in_n || ids != closed_form) {
          if (disagreements++ == 0) {
            witness = "x = " + format_element(a, x) + ", y = " + format_element(a, y) + ": identities " +
                      (ids ? "hold" : "fail") + ", membership " + (in_n ? "true" : "false");
          }
        }
      }
    }
    InstanceResult res{tower_name(n, params), "identity systems <=> (x, y) in N(R)",
                       disagreements == 0 ? Outcome::pass : Outcome::fail,
                       std::to_string(pairs) + " pairs, " + std::to_string(members) + " in N(R), " +
                           std::to_string(disagreements) + " disagreements"};
    if (!witness.empty()) res.detail += "; first: " + witness;
    rep.results.push_back(std::move(res));
  }
}

using SuiteFn = void (*)(const SuiteOptions&, VerificationReport&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"thm-1.3", suite_thm_1_3},       {"thm-1.4", suite_thm_1_4},       {"thm-1.5", suite_thm_1_5},
      {"prop-5.2", suite_prop_5_2},     {"prop-5.3", suite_prop_5_3},     {"lemma-5.1", suite_lemma_5_1},
      {"remark-2.5", suite_remark_2_5}, {"lemma-2.1", suite_lemma_2_1},
  };
  return r;
}

}  // namespace

void for_each_doubling(const SuiteOptions& options, const std::function<void(const Doubling&)>& visit) {
  for (Residue n : options.bases) {
    std::vector<Residue> params;
    const int depth = n == 2 ? std::max(options.depth, options.z2_depth) : options.depth;
    visit_from(n, params, base_ring(n), depth, visit);
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  VerificationReport rep;
  rep.suite = name;
  const auto start = std::chrono::steady_clock::now();
  it->second(options, rep);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace cdalg::cli
