#include "cdalg/cayley_dickson.hpp"
#include "cdalg/presentations.hpp"
#include "cdalg/structure.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cdalg;

namespace {

Vector random_element(std::mt19937_64& rng, const FiniteAlgebra& a) {
  std::uniform_int_distribution<Residue> dist(0, a.modulus() - 1);
  Vector x(a.rank());
  for (Eigen::Index i = 0; i < a.rank(); ++i) x[i] = dist(rng);
  return x;
}

// (a1, a2)(a3, a4) = (a1 a3 + alpha (a4 a2*), a1* a4 + a3 a2), spelled out
// with base operations only.
Vector doubled_product(const FiniteAlgebra& a, const Vector& alpha, const Vector& x, const Vector& y) {
  const Eigen::Index d = a.rank();
  const Vector a1 = x.head(d), a2 = x.tail(d), a3 = y.head(d), a4 = y.tail(d);
  const Vector first = add(a, mul(a, a1, a3), mul(a, alpha, mul(a, a4, apply_involution(a, a2))));
  const Vector second = add(a, mul(a, apply_involution(a, a1), a4), mul(a, a3, a2));
  return pair(a, first, second);
}

}  // namespace

TEST(CayleyDickson, ProductMatchesPairFormula) {
  std::mt19937_64 rng(1);
  const FiniteAlgebra q = quaternion_algebra(6, 1, 5);
  const Vector alpha = scalar(q, 5);
  const FiniteAlgebra o = cayley_dickson(q, alpha, "l");
  for (int trial = 0; trial < 100; ++trial) {
    const Vector x = random_element(rng, o), y = random_element(rng, o);
    EXPECT_EQ(mul(o, x, y), doubled_product(q, alpha, x, y));
  }
}

TEST(CayleyDickson, UnitAndInvolution) {
  const auto stages = build_tower(TowerSpec::scalars(5, {2, 3}));
  const FiniteAlgebra& a = stages[1];
  const FiniteAlgebra& r = stages[2];
  EXPECT_EQ(r.unit(), embed(a, a.unit()));
  Matrix expected = Matrix::Zero(4, 4);
  expected.topLeftCorner(2, 2) = a.involution();
  expected.bottomRightCorner(2, 2) = Matrix::Identity(2, 2) * 4;
  EXPECT_EQ(r.involution(), expected);
}

TEST(CayleyDickson, NuActsAsSecondCoordinate) {
  std::mt19937_64 rng(2);
  const FiniteAlgebra q = quaternion_algebra(4, 1, 3);
  const FiniteAlgebra r = cayley_dickson(q, scalar(q, 1), "l");
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = random_element(rng, q);
    EXPECT_EQ(mul(r, nu(q), embed(q, x)), embed_second(q, x));
    EXPECT_EQ(mul(r, embed(q, x), nu(q)), embed_second(q, apply_involution(q, x)));
  }
  EXPECT_EQ(mul(r, nu(q), nu(q)), embed(q, scalar(q, 1)));
}

TEST(CayleyDickson, LabelsAndRanks) {
  const auto stages = build_tower(TowerSpec::scalars(3, {1, 1, 1}));
  ASSERT_EQ(stages.size(), 4u);
  EXPECT_EQ(stages[0].rank(), 1);
  EXPECT_EQ(stages[3].rank(), 8);
  EXPECT_EQ(stages[2].labels(), (std::vector<std::string>{"1", "i", "j", "ji"}));
  EXPECT_EQ(stages[3].labels(), (std::vector<std::string>{"1", "i", "j", "ji", "l", "li", "lj", "lji"}));
  EXPECT_EQ(tower_generator(1), "i");
  EXPECT_EQ(tower_generator(8), "s");
  EXPECT_EQ(tower_generator(9), "g9");
}

TEST(CayleyDickson, TowerPropertiesByStage) {
  const auto stages = build_tower(TowerSpec::scalars(3, {1, 2, 1, 1}));
  EXPECT_TRUE(is_commutative(stages[1]) && is_associative(stages[1]));
  EXPECT_TRUE(is_associative(stages[2]));
  EXPECT_FALSE(is_commutative(stages[2]));
  EXPECT_TRUE(is_alternative(stages[3]));
  EXPECT_FALSE(is_associative(stages[3]));
  EXPECT_FALSE(is_right_alternative(stages[4]));
  EXPECT_FALSE(is_left_alternative(stages[4]));
}

TEST(CayleyDickson, DoublingAssociativeIffBaseAssociativeAndCommutative) {
  for (Residue n : {2, 3, 4}) {
    const auto stages = build_tower(TowerSpec::scalars(n, {1, 1, 1}));
    for (std::size_t s = 0; s + 1 < stages.size(); ++s) {
      const bool base_ok = is_associative(stages[s]) && is_commutative(stages[s]);
      EXPECT_EQ(is_associative(stages[s + 1]), base_ok) << n << " stage " << s;
    }
  }
}

TEST(CayleyDickson, ConstructionErrorsCarryStage) {
  try {
    build_tower(TowerSpec::scalars(4, {1, 2}));
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.failure(), ConstructionFailure::NotInvertible);
    EXPECT_EQ(e.stage(), 2);
  }
  TowerSpec spec = TowerSpec::scalars(3, {1, 1});
  spec.params.emplace_back(Vector((Vector(4) << 0, 1, 0, 0).finished()));
  try {
    build_tower(spec);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.failure(), ConstructionFailure::NotCentral);
    EXPECT_EQ(e.stage(), 3);
  }
  TowerSpec big = TowerSpec::scalars(2, {1, 1, 1, 1});
  big.max_rank = 8;
  try {
    build_tower(big);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.failure(), ConstructionFailure::RankBudgetExceeded);
  }
}

TEST(CayleyDickson, NonScalarParameter) {
  // 1 + 2i is central, symmetric and its own inverse in (Z/4; 1, 1).
  const FiniteAlgebra q = quaternion_algebra(4, 1, 1);
  const Vector alpha = (Vector(4) << 1, 2, 0, 0).finished();
  const FiniteAlgebra r = cayley_dickson(q, alpha, "l");
  EXPECT_TRUE(validate_algebra(r).empty());
  EXPECT_EQ(mul(r, nu(q), nu(q)), embed(q, alpha));
  const auto data = essentiality_data(q);
  EXPECT_EQ(predicted_associative_center(data, q, r), associative_center(r));
  EXPECT_EQ(predicted_center(data, q, r), center(r).center);
}

TEST(CayleyDickson, RequireDoubleOf) {
  const auto stages = build_tower(TowerSpec::scalars(3, {1, 1}));
  EXPECT_NO_THROW(require_double_of(stages[1], stages[2]));
  EXPECT_THROW(require_double_of(stages[0], stages[2]), std::invalid_argument);
}
