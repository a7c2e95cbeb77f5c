#include "cdalg/cayley_dickson.hpp"
#include "cdalg/presentations.hpp"

#include <gtest/gtest.h>

using namespace cdalg;

namespace {

Vector element(std::initializer_list<Residue> coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (Residue c : coords) v[i++] = c;
  return v;
}

}  // namespace

TEST(Quaternion, MultiplicationTable) {
  const FiniteAlgebra q = quaternion_algebra(7, 2, 3);
  const Vector i = basis(q, 1), j = basis(q, 2), k = basis(q, 3);
  EXPECT_EQ(mul(q, i, i), scalar(q, 2));
  EXPECT_EQ(mul(q, j, j), scalar(q, 3));
  EXPECT_EQ(mul(q, k, k), scalar(q, -6));
  EXPECT_EQ(mul(q, i, j), k);
  EXPECT_EQ(mul(q, j, i), negate(q, k));
  EXPECT_TRUE(is_associative(q));
  EXPECT_EQ(q.labels(), (std::vector<std::string>{"1", "i", "j", "k"}));
}

TEST(Quaternion, MatchesTowerUnderSignedMap) {
  for (Residue n : {2, 3, 4, 5, 6, 8, 9}) {
    for (Residue a = 1; a < n; ++a) {
      for (Residue b = 1; b < n; ++b) {
        if (std::gcd(a, n) != 1 || std::gcd(b, n) != 1) continue;
        const FiniteAlgebra tower = build_tower(TowerSpec::scalars(n, {a, b})).back();
        const auto check = verify_basis_map(quaternion_algebra(n, a, b), tower, quaternion_tower_map());
        EXPECT_TRUE(check.ok) << n << " " << a << " " << b << ": " << check.violation;
      }
    }
  }
}

TEST(Quaternion, WrongMapIsRejected) {
  const FiniteAlgebra tower = build_tower(TowerSpec::scalars(5, {1, 2})).back();
  const BasisMap unsigned_map = BasisMap::identity(4);
  const auto check = verify_basis_map(quaternion_algebra(5, 1, 2), tower, unsigned_map);
  EXPECT_FALSE(check.ok);
  EXPECT_NE(check.violation.find("product"), std::string::npos);
  BasisMap not_bijective{{{0, false}, {1, false}, {1, false}, {3, true}}};
  EXPECT_FALSE(not_bijective.is_bijection());
  EXPECT_FALSE(verify_basis_map(quaternion_algebra(5, 1, 2), tower, not_bijective).ok);
}

TEST(Quaternion, NonUnitParametersRejected) {
  EXPECT_THROW(quaternion_algebra(4, 2, 1), ConstructionError);
  EXPECT_THROW(octonion_algebra(6, 1, 3, 1), ConstructionError);
}

TEST(Octonion, BasisRelations) {
  const FiniteAlgebra o = octonion_algebra(7, 2, 3, 5);
  const Vector f1 = basis(o, 1), f2 = basis(o, 2), f3 = basis(o, 3), f4 = basis(o, 4);
  EXPECT_EQ(mul(o, f1, f1), scalar(o, 2));
  EXPECT_EQ(mul(o, f2, f2), scalar(o, 3));
  EXPECT_EQ(mul(o, f4, f4), scalar(o, 5));
  EXPECT_EQ(mul(o, f1, f2), f3);
  EXPECT_TRUE(is_alternative(o));
  EXPECT_FALSE(is_associative(o));
  // Every basis element other than 1 is skew and squares to a scalar.
  for (Eigen::Index s = 1; s < 8; ++s) {
    const Vector e = basis(o, s);
    EXPECT_EQ(apply_involution(o, e), negate(o, e));
    const Vector sq = mul(o, e, e);
    EXPECT_EQ(sq.tail(7), Vector::Zero(7)) << o.label(s);
  }
  EXPECT_EQ(o.labels().back(), "f7");
}

TEST(Octonion, DoublesTheQuaternionPresentation) {
  // f_{4+s} = f4 f_s up to sign for s = 1, 2, 3.
  const FiniteAlgebra o = octonion_algebra(5, 1, 2, 3);
  for (Eigen::Index s = 1; s <= 3; ++s) {
    const Vector p = mul(o, basis(o, 4), basis(o, s));
    const Vector e = basis(o, 4 + s);
    EXPECT_TRUE(p == e || p == negate(o, e)) << format_element(o, p);
  }
}

TEST(PullBack, RelabelsWithoutChangingTheAlgebra) {
  const FiniteAlgebra tower = build_tower(TowerSpec::scalars(3, {1, 1, 2})).back();
  const FiniteAlgebra pulled = pull_back(tower, octonion_tower_map(), {"1", "a", "b", "c", "d", "e", "f", "g"});
  EXPECT_TRUE(verify_basis_map(pulled, tower, octonion_tower_map()).ok);
  EXPECT_EQ(pulled.label(7), "g");
  EXPECT_EQ(octonion_tower_map().apply(element({0, 0, 0, 0, 0, 0, 0, 1}), 3), element({0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(octonion_tower_map().apply(element({0, 0, 0, 1, 0, 0, 0, 0}), 3), element({0, 0, 0, 2, 0, 0, 0, 0}));
}
