// Generalized quaternion and octonion algebras over Z/n, and signed basis
// correspondences between algebras.

#pragma once

#include "cdalg/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cdalg {

/// Source basis element s is sent to sign * (target basis element).
struct BasisMap {
  struct Entry {
    Eigen::Index target;
    bool negate = false;
  };
  std::vector<Entry> entries;

  static BasisMap identity(Eigen::Index rank);
  /// Maps every basis vector to a full vector of the target.
  Vector apply(const Vector& x, Residue modulus) const;
  bool is_bijection() const;
};

struct BasisMapCheck {
  bool ok = true;
  std::string violation;  // empty when ok
};

/// True iff the map carries products, unit and involution of `source`
/// exactly onto those of `target`.
BasisMapCheck verify_basis_map(const FiniteAlgebra& source, const FiniteAlgebra& target, const BasisMap& map);

/// Algebra on the basis b_s = map(e_s) of `target`, with the given labels.
FiniteAlgebra pull_back(const FiniteAlgebra& target, const BasisMap& map, std::vector<std::string> labels);

/// (a, b, Z/n) on 1, i, j, k with i^2 = a, j^2 = b, ij = -ji = k,
/// ik = -ki = aj, kj = -jk = bi and k^2 = -ab.
FiniteAlgebra quaternion_algebra(Residue n, Residue a, Residue b);

/// 1, i, j, k into the tower (Z/n; a, b): k = (0, -i).
BasisMap quaternion_tower_map();

/// Octonions over Z/n on 1, f1..f7, obtained from the tower (Z/n; a, b, c)
/// with f1 = i, f2 = j, f3 = k, f4 = l = (0,1), f5 = (0,-i), f6 = (0,-j),
/// f7 = (0,-k).
FiniteAlgebra octonion_algebra(Residue n, Residue a, Residue b, Residue c);

BasisMap octonion_tower_map();

}  // namespace cdalg
