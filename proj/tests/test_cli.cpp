#include "cdalg/cli/document.hpp"
#include "cdalg/cli/search.hpp"
#include "cdalg/cli/suites.hpp"
#include "cdalg/presentations.hpp"
#include "cdalg/structure.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace cdalg;
using namespace cdalg::cli;

TEST(Document, RoundTripIsByteIdentical) {
  const TowerSpec spec = TowerSpec::scalars(4, {1, 3, 1});
  const AlgebraDocument doc{build_tower(spec).back(), tower_provenance(spec)};
  const std::string text = dump(doc);
  const AlgebraDocument back = parse(text);
  EXPECT_EQ(dump(back), text);
  EXPECT_EQ(back.algebra, doc.algebra);
  EXPECT_EQ(center(back.algebra).center, center(doc.algebra).center);

  const auto path = std::filesystem::temp_directory_path() / "cdalg_roundtrip.json";
  save(path, doc);
  EXPECT_EQ(dump(load(path)), text);
  std::filesystem::remove(path);
}

TEST(Document, ProvenanceRoundTrip) {
  TowerSpec spec = TowerSpec::scalars(3, {1, 2});
  spec.params.emplace_back(Vector((Vector(4) << 2, 0, 0, 0).finished()));
  const auto back = tower_from_provenance(tower_provenance(spec));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(build_tower(*back).back(), build_tower(spec).back());
  EXPECT_FALSE(tower_from_provenance(presentation_provenance("quaternion", {3, 1, 1})).has_value());
}

TEST(Document, RejectsMalformedInput) {
  EXPECT_THROW(parse("{"), DocumentError);
  EXPECT_THROW(parse("[]"), DocumentError);
  auto j = to_json(AlgebraDocument{quaternion_algebra(3, 1, 1), {}});
  auto wrong_version = j;
  wrong_version["format_version"] = 2;
  EXPECT_THROW(from_json(wrong_version), DocumentError);
  auto missing = j;
  missing.erase("unit");
  EXPECT_THROW(from_json(missing), DocumentError);
  auto broken = j;
  broken["involution"][1][1] = 1;
  EXPECT_THROW(from_json(broken), DocumentError);
}

TEST(Filter, ParsesAndEvaluatesThreeValued) {
  FlagValues v{};
  v[static_cast<std::size_t>(Flag::associative)] = false;
  v[static_cast<std::size_t>(Flag::commutative)] = true;
  EXPECT_EQ(Filter::parse("").evaluate(v), true);
  EXPECT_EQ(Filter::parse("commutative & !associative").evaluate(v), true);
  EXPECT_EQ(Filter::parse("associative | (commutative & associative)").evaluate(v), false);
  EXPECT_EQ(Filter::parse("centrally_essential").evaluate(v), std::nullopt);
  EXPECT_EQ(Filter::parse("centrally_essential & associative").evaluate(v), false);
  EXPECT_EQ(Filter::parse("centrally_essential | commutative").evaluate(v), true);
  EXPECT_EQ(Filter::parse("!centrally_essential").evaluate(v), std::nullopt);
  EXPECT_THROW(Filter::parse("associative &"), FilterError);
  EXPECT_THROW(Filter::parse("(associative"), FilterError);
  EXPECT_THROW(Filter::parse("flying"), FilterError);
}

TEST(Search, DepthZeroBaseRingsAreCommutative) {
  SearchOptions opts;
  opts.bases = {2, 3, 4, 5, 6};
  opts.depth = 0;
  const auto result = search(opts, Filter::parse("commutative"));
  EXPECT_EQ(result.searched, 5u);
  EXPECT_EQ(result.matched, 5u);
}

TEST(Search, FindsTheZ4Octonions) {
  SearchOptions opts;
  opts.bases = {4};
  opts.depth = 3;
  const auto result = search(opts, Filter::parse("centrally_essential & !associative"));
  bool found = false;
  for (const auto& row : result.rows) found |= row.params == std::vector<Residue>{1, 1, 1} && !row.skipped;
  EXPECT_TRUE(found);
}

TEST(Search, UndecidableRowsAreSkippedNotDropped) {
  SearchOptions opts;
  opts.bases = {6};
  opts.depth = 3;
  opts.budget = 1000;
  const auto result = search(opts, Filter::parse("centrally_essential"));
  EXPECT_GT(result.skipped, 0u);
  for (const auto& row : result.rows)
    if (row.skipped) {
      EXPECT_EQ(row.to_json()["status"], "skipped");
    }
}

TEST(Suites, DeterministicReports) {
  SuiteOptions opts;
  opts.bases = {2, 3};
  opts.depth = 2;
  opts.z2_depth = 2;
  for (const auto& name : suite_names()) {
    const auto a = run_suite(name, opts);
    const auto b = run_suite(name, opts);
    EXPECT_EQ(a.to_json(), b.to_json()) << name;
    EXPECT_TRUE(a.passed()) << name;
  }
  EXPECT_THROW(run_suite("thm-9.9", opts), std::invalid_argument);
}

TEST(Suites, SweepCoversEnoughInstances) {
  std::size_t count = 0;
  for_each_doubling(SuiteOptions{}, [&](const Doubling& d) {
    EXPECT_EQ(d.doubled.rank(), 2 * d.base.rank());
    ++count;
  });
  EXPECT_GE(count, 40u);
  EXPECT_EQ(units(6), (std::vector<Residue>{1, 5}));
}
