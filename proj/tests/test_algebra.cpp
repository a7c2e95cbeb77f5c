#include "cdalg/algebra.hpp"
#include "cdalg/cayley_dickson.hpp"
#include "cdalg/presentations.hpp"
#include "oracle.hpp"

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

// Z/n[i] with i^2 = -1 and conjugation: commutative, with a central element i
// that is not symmetric.
AlgebraTables gaussian(Residue n) {
  AlgebraTables t;
  t.modulus = n;
  t.rank = 2;
  t.structure = {1, 0, 0, 1, 0, 1, n - 1, 0};
  t.unit = (Vector(2) << 1, 0).finished();
  t.involution = (Matrix(2, 2) << 1, 0, 0, n - 1).finished();
  t.labels = {"1", "i"};
  return t;
}

}  // namespace

TEST(FiniteAlgebra, BaseRing) {
  const FiniteAlgebra z6 = base_ring(6);
  EXPECT_EQ(z6.rank(), 1);
  EXPECT_TRUE(is_associative(z6));
  EXPECT_TRUE(is_commutative(z6));
  EXPECT_TRUE(is_alternative(z6));
  EXPECT_EQ(mul(z6, scalar(z6, 4), scalar(z6, 5)), scalar(z6, 2));
}

TEST(FiniteAlgebra, ValidationRejectsBrokenTables) {
  AlgebraTables t = gaussian(5);
  EXPECT_TRUE(validate_algebra(t).empty());

  AlgebraTables bad_unit = t;
  bad_unit.unit = (Vector(2) << 0, 1).finished();
  EXPECT_FALSE(validate_algebra(bad_unit).empty());
  EXPECT_THROW(FiniteAlgebra{bad_unit}, InvalidAlgebra);

  AlgebraTables bad_square = t;
  bad_square.involution = (Matrix(2, 2) << 1, 1, 0, 1).finished();
  EXPECT_FALSE(validate_algebra(bad_square).empty());

  AlgebraTables bad_size = t;
  bad_size.structure.pop_back();
  EXPECT_FALSE(validate_algebra(bad_size).empty());

  // Quaternions with the identity involution: not anti-multiplicative.
  const FiniteAlgebra q = quaternion_algebra(3, 1, 1);
  AlgebraTables qt = q.tables();
  qt.involution = Matrix::Identity(4, 4);
  const auto v = validate_algebra(qt);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().find("anti"), std::string::npos);
}

TEST(FiniteAlgebra, ProductIsBilinear) {
  std::mt19937_64 rng(3);
  const FiniteAlgebra o = octonion_algebra(6, 1, 5, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector x = random_element(rng, o), y = random_element(rng, o), z = random_element(rng, o);
    const Residue c = std::uniform_int_distribution<Residue>(0, 5)(rng);
    EXPECT_EQ(mul(o, add(o, x, scale(o, c, y)), z), add(o, mul(o, x, z), scale(o, c, mul(o, y, z))));
    EXPECT_EQ(mul(o, z, add(o, x, scale(o, c, y))), add(o, mul(o, z, x), scale(o, c, mul(o, z, y))));
  }
}

TEST(FiniteAlgebra, AssociatorIsTrilinear) {
  std::mt19937_64 rng(5);
  const auto stages = build_tower(TowerSpec::scalars(4, {1, 3, 1, 1}));
  const FiniteAlgebra& s = stages.back();
  for (int trial = 0; trial < 30; ++trial) {
    const Vector x = random_element(rng, s), x2 = random_element(rng, s);
    const Vector y = random_element(rng, s), z = random_element(rng, s);
    EXPECT_EQ(associator(s, add(s, x, x2), y, z), add(s, associator(s, x, y, z), associator(s, x2, y, z)));
    EXPECT_EQ(associator(s, y, add(s, x, x2), z), add(s, associator(s, y, x, z), associator(s, y, x2, z)));
    EXPECT_EQ(associator(s, y, z, add(s, x, x2)), add(s, associator(s, y, z, x), associator(s, y, z, x2)));
  }
}

TEST(FiniteAlgebra, InvolutionIsAntiMultiplicative) {
  std::mt19937_64 rng(9);
  const FiniteAlgebra o = octonion_algebra(5, 2, 3, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const Vector x = random_element(rng, o), y = random_element(rng, o);
    EXPECT_EQ(apply_involution(o, mul(o, x, y)), mul(o, apply_involution(o, y), apply_involution(o, x)));
  }
}

TEST(FiniteAlgebra, BasisPredicatesMatchElementwiseChecks) {
  // Quaternions over Z/3 are small enough to test every triple.
  const FiniteAlgebra q = quaternion_algebra(3, 1, 2);
  bool assoc = true, comm = true;
  const auto all = oracle::all_tuples(3, 4);
  for (const auto& x : all)
    for (const auto& y : all) {
      comm &= commutator(q, oracle::vec(x), oracle::vec(y)).isZero();
      for (const auto& z : {oracle::Tuple{0, 1, 0, 0}, oracle::Tuple{0, 0, 1, 1}})
        assoc &= associator(q, oracle::vec(x), oracle::vec(y), oracle::vec(z)).isZero();
    }
  EXPECT_EQ(is_associative(q), assoc);
  EXPECT_EQ(is_commutative(q), comm);
  EXPECT_TRUE(is_associative(q));
  EXPECT_FALSE(is_commutative(q));
}

TEST(FiniteAlgebra, CentralElementsMatchBruteForce) {
  const FiniteAlgebra q = quaternion_algebra(4, 1, 1);
  for (const auto& t : oracle::all_tuples(4, 4)) {
    const Vector x = oracle::vec(t);
    bool central = true;
    for (Eigen::Index i = 0; i < 4; ++i) {
      const Vector e = basis(q, i);
      central &= mul(q, x, e) == mul(q, e, x);
    }
    EXPECT_EQ(is_central(q, x), central);
  }
}

TEST(FiniteAlgebra, InverseMatchesBruteForce) {
  const FiniteAlgebra q = quaternion_algebra(4, 1, 3);
  const auto all = oracle::all_tuples(4, 4);
  for (const auto& t : all) {
    const Vector x = oracle::vec(t);
    bool invertible = false;
    for (const auto& u : all) {
      const Vector y = oracle::vec(u);
      invertible |= mul(q, x, y) == q.unit() && mul(q, y, x) == q.unit();
    }
    const auto inv = inverse(q, x);
    ASSERT_EQ(inv.has_value(), invertible) << format_element(q, x);
    if (inv) {
      EXPECT_EQ(mul(q, x, *inv), q.unit());
      EXPECT_EQ(mul(q, *inv, x), q.unit());
    }
  }
}

TEST(CentralScalar, CertificatesFailInOrder) {
  const FiniteAlgebra q = quaternion_algebra(3, 1, 1);
  try {
    CentralScalar::certify(q, basis(q, 1));
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.failure(), ConstructionFailure::NotCentral);
  }
  const FiniteAlgebra g{gaussian(5)};
  try {
    CentralScalar::certify(g, basis(g, 1));
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.failure(), ConstructionFailure::NotSymmetric);
  }
  const FiniteAlgebra z4 = base_ring(4);
  try {
    CentralScalar::certify(z4, scalar(z4, 2));
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.failure(), ConstructionFailure::NotInvertible);
    EXPECT_EQ(e.stage(), -1);
  }
  const CentralScalar three = CentralScalar::certify(z4, scalar(z4, 3));
  EXPECT_EQ(three.inverse(), scalar(z4, 3));
}

TEST(FiniteAlgebra, FormatElement) {
  const FiniteAlgebra q = quaternion_algebra(5, 1, 1);
  EXPECT_EQ(format_element(q, zero_element(q)), "0");
  EXPECT_EQ(format_element(q, (Vector(4) << 1, 3, 0, 1).finished()), "1 + 3*i + k");
}
