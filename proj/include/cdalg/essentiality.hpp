// Essentiality deciders, both by exhaustive scan of the definition and by
// the closed-form criteria for doubles and for quaternion/octonion algebras.

#pragma once

#include "cdalg/algebra.hpp"
#include "cdalg/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cdalg {

enum class Method { definitional, criterion };

std::string to_string(Method m);

struct EssentialityVerdict {
  std::string property;
  bool verdict = false;
  Method method = Method::definitional;
  /// Set on every false verdict: a nonzero r that violates the property.
  std::optional<Vector> witness;
  /// Nonzero elements r scanned.
  std::uint64_t cost = 0;
  /// Which sub-check failed, for criterion verdicts.
  std::string detail;
};

enum class Side { left, right };

/// True iff for every nonzero r in `ambient`, {s r : s in acting} (or
/// {r s} for Side::right) contains a nonzero element of `target`.
EssentialityVerdict essential_scan(const FiniteAlgebra& a, const Submodule& acting, const Submodule& target,
                                   const Submodule& ambient, Side side, std::string property,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

/// Every nonzero c in `ring` has ring*c ∩ ideal != 0.
EssentialityVerdict is_essential_ideal(const Submodule& ideal, const Submodule& ring, const FiniteAlgebra& a,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

/// Every nonzero r in A has scalars*r ∩ sub != 0.
EssentialityVerdict is_essential_submodule(const Submodule& sub, const FiniteAlgebra& a, const Submodule& scalars,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

EssentialityVerdict is_centrally_essential(const FiniteAlgebra& a, std::uint64_t budget = kDefaultEnumerationBudget);
EssentialityVerdict is_left_n_essential(const FiniteAlgebra& a, std::uint64_t budget = kDefaultEnumerationBudget);
EssentialityVerdict is_right_n_essential(const FiniteAlgebra& a, std::uint64_t budget = kDefaultEnumerationBudget);

/// Decides N-essentiality of (A, alpha) from A alone: A centrally essential
/// and I = Ann_C([A,A]) essential in C.
EssentialityVerdict n_essential_criterion(const FiniteAlgebra& a, const Vector& alpha,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Decides central essentiality of (A, alpha) from A alone: B essential in
/// the B-module A and J ∩ I essential in B.
EssentialityVerdict centrally_essential_criterion(const FiniteAlgebra& a, const Vector& alpha,
                                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Ann_{Z/n}(2) as a submodule of the rank-1 ring.
Submodule two_torsion(Residue n);

/// "Non-commutative centrally essential" for ((Z/n, a), b): Ann(2) is a
/// proper essential ideal of Z/n. Throws ConstructionError on non-unit parameters.
EssentialityVerdict quaternion_criterion(Residue n, Residue a, Residue b);
/// "Non-associative centrally essential" for (((Z/n, a), b), c); same condition.
EssentialityVerdict octonion_criterion(Residue n, Residue a, Residue b, Residue c);

}  // namespace cdalg
