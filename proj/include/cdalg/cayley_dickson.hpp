// Generalized Cayley-Dickson doubling and towers of doublings.
//
// The double (A, alpha) has underlying module A + A with product
//   (a1, a2)(a3, a4) = (a1 a3 + alpha (a4 a2*), a1* a4 + a3 a2)
// and involution (a, b)* = (a*, -b). Coordinates of (a, b) are the
// coordinates of a followed by those of b.

#pragma once

#include "cdalg/algebra.hpp"

#include <string>
#include <variant>
#include <vector>

namespace cdalg {

/// Doubles `a` by a certified parameter. Second-copy labels are
/// `generator` prepended to the first-copy label, read as nu * e.
FiniteAlgebra cayley_dickson(const FiniteAlgebra& a, const CentralScalar& alpha, const std::string& generator = "v");

/// Certifies alpha (central, symmetric, invertible in `a`) and doubles.
FiniteAlgebra cayley_dickson(const FiniteAlgebra& a, const Vector& alpha, const std::string& generator = "v");

/// nu = (0, 1) in the coordinates of the double of `base`.
Vector nu(const FiniteAlgebra& base);
/// (x, 0)
Vector embed(const FiniteAlgebra& base, const Vector& x);
/// (0, y)
Vector embed_second(const FiniteAlgebra& base, const Vector& y);
/// (x, y)
Vector pair(const FiniteAlgebra& base, const Vector& x, const Vector& y);

/// Throws if `doubled` does not have twice the rank of `base` over the same modulus.
void require_double_of(const FiniteAlgebra& base, const FiniteAlgebra& doubled);

/// A doubling parameter: either c * 1 of the current stage, or explicit
/// coordinates in the current stage.
using TowerParam = std::variant<Residue, Vector>;

struct TowerSpec {
  Residue base_modulus = 2;
  std::vector<TowerParam> params;
  Eigen::Index max_rank = 64;

  static TowerSpec scalars(Residue modulus, const std::vector<Residue>& values);
};

/// Generator label used for the t-th doubling (t >= 1): i, j, l, m, ...
std::string tower_generator(std::size_t t);

/// All stages: stage 0 is the base ring, stage t+1 doubles stage t by param t.
std::vector<FiniteAlgebra> build_tower(const TowerSpec& spec);

}  // namespace cdalg
