// Finite unital algebras over Z/nZ given by structure constants and an
// involution, with the basic identity predicates.

#pragma once

#include "cdalg/residue_linalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdalg {

/// Raw description of an algebra, not yet validated.
struct AlgebraTables {
  Residue modulus = 2;
  Eigen::Index rank = 0;
  /// c[(i*rank + j)*rank + k]: coefficient of e_k in e_i * e_j.
  std::vector<Residue> structure;
  Vector unit;
  /// x* = involution * x (column convention).
  Matrix involution;
  std::vector<std::string> labels;
};

/// Empty iff the tables describe a unital algebra with an involution.
std::vector<std::string> validate_algebra(const AlgebraTables& tables);

class InvalidAlgebra : public std::invalid_argument {
 public:
  explicit InvalidAlgebra(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// A validated rank-d free Z/n-module with a bilinear unital product and an
/// involution. Immutable after construction.
class FiniteAlgebra {
 public:
  /// Throws InvalidAlgebra if validate_algebra reports anything.
  explicit FiniteAlgebra(AlgebraTables tables);

  Residue modulus() const noexcept { return t_.modulus; }
  Eigen::Index rank() const noexcept { return t_.rank; }
  const Vector& unit() const noexcept { return t_.unit; }
  const Matrix& involution() const noexcept { return t_.involution; }
  const std::vector<std::string>& labels() const noexcept { return t_.labels; }
  const std::string& label(Eigen::Index i) const { return t_.labels.at(static_cast<std::size_t>(i)); }
  const AlgebraTables& tables() const noexcept { return t_; }

  Residue structure(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return t_.structure[static_cast<std::size_t>((i * t_.rank + j) * t_.rank + k)];
  }

  struct Term {
    Eigen::Index index;
    Residue coeff;
  };
  /// Nonzero terms of e_i * e_j.
  const std::vector<Term>& product_terms(Eigen::Index i, Eigen::Index j) const {
    return terms_[static_cast<std::size_t>(i * t_.rank + j)];
  }

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b);

 private:
  AlgebraTables t_;
  std::vector<std::vector<Term>> terms_;
};

std::vector<std::string> validate_algebra(const FiniteAlgebra& a);

/// The rank-1 algebra Z/n with the identity involution.
FiniteAlgebra base_ring(Residue modulus);

Vector basis(const FiniteAlgebra& a, Eigen::Index i);
Vector zero_element(const FiniteAlgebra& a);
/// c * 1.
Vector scalar(const FiniteAlgebra& a, Residue c);

Vector add(const FiniteAlgebra& a, const Vector& x, const Vector& y);
Vector sub(const FiniteAlgebra& a, const Vector& x, const Vector& y);
Vector negate(const FiniteAlgebra& a, const Vector& x);
Vector scale(const FiniteAlgebra& a, Residue c, const Vector& x);

Vector mul(const FiniteAlgebra& a, const Vector& x, const Vector& y);
/// (xy)z - x(yz)
Vector associator(const FiniteAlgebra& a, const Vector& x, const Vector& y, const Vector& z);
/// xy - yx
Vector commutator(const FiniteAlgebra& a, const Vector& x, const Vector& y);
Vector apply_involution(const FiniteAlgebra& a, const Vector& x);

/// Matrix of y -> x*y in the column convention.
Matrix left_multiplication(const FiniteAlgebra& a, const Vector& x);
/// Matrix of y -> y*x in the column convention.
Matrix right_multiplication(const FiniteAlgebra& a, const Vector& x);

bool is_associative(const FiniteAlgebra& a);
bool is_commutative(const FiniteAlgebra& a);
bool is_left_alternative(const FiniteAlgebra& a);
bool is_right_alternative(const FiniteAlgebra& a);
bool is_alternative(const FiniteAlgebra& a);

/// x commutes and associates with every basis element in every slot.
bool is_central(const FiniteAlgebra& a, const Vector& x);

/// Two-sided inverse of x, solved from x*y = 1 and checked against y*x = 1.
std::optional<Vector> inverse(const FiniteAlgebra& a, const Vector& x);
inline bool is_invertible(const FiniteAlgebra& a, const Vector& x) { return inverse(a, x).has_value(); }

enum class ConstructionFailure {
  NotCentral,
  NotSymmetric,
  NotInvertible,
  InvalidAlgebra,
  RankBudgetExceeded,
};

std::string to_string(ConstructionFailure f);

class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(ConstructionFailure failure, const std::string& what, int stage = -1);
  ConstructionFailure failure() const noexcept { return failure_; }
  /// Tower stage at which construction failed, or -1.
  int stage() const noexcept { return stage_; }
  /// Message without the failure name and stage.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ConstructionFailure failure_;
  std::string detail_;
  int stage_;
};

/// An element certified central, symmetric and invertible in a given algebra.
class CentralScalar {
 public:
  /// Throws ConstructionError naming the first certificate that fails.
  static CentralScalar certify(const FiniteAlgebra& a, const Vector& x);

  const Vector& value() const noexcept { return value_; }
  const Vector& inverse() const noexcept { return inverse_; }

 private:
  CentralScalar(Vector v, Vector inv) : value_(std::move(v)), inverse_(std::move(inv)) {}
  Vector value_;
  Vector inverse_;
};

/// Human-readable rendering such as "1 + 3*i + 2*ji".
std::string format_element(const FiniteAlgebra& a, const Vector& x);

}  // namespace cdalg
