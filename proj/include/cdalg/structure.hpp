// Centers, commutator ideals and annihilators of finite algebras, computed
// as kernels of basis-indexed linear systems, together with the closed-form
// descriptions of the associative center and the center of a double.

#pragma once

#include "cdalg/algebra.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace cdalg {

/// N(A): elements x with (x,a,b) = (a,x,b) = (a,b,x) = 0 for all a, b.
Submodule associative_center(const FiniteAlgebra& a);
/// K(A): elements commuting with everything.
Submodule commutative_center(const FiniteAlgebra& a);

struct CenterReport {
  Submodule associative;   // N
  Submodule commutative;   // K
  Submodule center;        // Z = N ∩ K
  std::optional<std::uint64_t> associative_order, commutative_order, center_order;
};

CenterReport center(const FiniteAlgebra& a);

/// Smallest two-sided ideal containing every commutator [e_i, e_j].
Submodule commutator_ideal(const FiniteAlgebra& a);

/// {r in within : r * g = 0 for every generator g of s}.
Submodule annihilator(const Submodule& s, const Submodule& within, const FiniteAlgebra& a);

/// B: central elements fixed by the involution.
Submodule symmetric_center(const FiniteAlgebra& a);
/// span{a - a* : a in A}
Submodule skew_span(const FiniteAlgebra& a);
/// J: elements of B annihilating every a - a*.
Submodule skew_annihilator(const FiniteAlgebra& a);

/// Stage data that determines the centers of a double of A.
struct EssentialityData {
  Submodule center;             // C = Z(A)
  Submodule commutator_ideal;   // [A, A]
  Submodule commutator_annihilator;  // I = Ann_C([A, A])
  Submodule symmetric_center;   // B
  Submodule skew_span;          // span{a - a*}
  Submodule skew_annihilator;   // J = Ann_B(skew span)
};

EssentialityData essentiality_data(const FiniteAlgebra& a);

/// {(x, y) : x in C, y in I} inside the double R of A.
Submodule predicted_associative_center(const EssentialityData& data, const FiniteAlgebra& a, const FiniteAlgebra& r);
/// {(x, y) : x in B ∩ C, y in I ∩ J} inside the double R of A.
Submodule predicted_center(const EssentialityData& data, const FiniteAlgebra& a, const FiniteAlgebra& r);

/// One side of a degree-three identity in the variables t, u, v, where t is
/// the element under test. `left_nested` selects (pq)r over p(qr).
struct IdentitySide {
  bool left_nested;
  std::array<char, 3> vars;
};

struct Identity {
  IdentitySide lhs, rhs;
  std::string text;
};

/// Parses "(xu)v=x(uv)" style identities; any letter other than u, v is the
/// element under test.
Identity parse_identity(const std::string& text);

/// The twelve identities characterizing the first component of an element of
/// N of a double: they hold for all u, v iff x is central.
std::span<const Identity> center_identities();
/// The twelve identities characterizing the second component: they hold for
/// all u, v iff y is central and annihilates [A, A].
std::span<const Identity> annihilator_identities();

/// Evaluates one identity at (t, u, v); true iff both sides agree.
bool identity_holds(const FiniteAlgebra& a, const Identity& id, const Vector& t, const Vector& u, const Vector& v);

/// True iff x satisfies every center identity and y every annihilator
/// identity, checked on all basis pairs (u, v) of A.
bool n_membership_by_identities(const FiniteAlgebra& a, const Vector& x, const Vector& y);

/// Smallest subalgebra containing 1 and the given elements.
Submodule generated_subalgebra(const FiniteAlgebra& a, std::span<const Vector> generators);

/// Every associator of basis-span generators of s vanishes (s closed under products assumed).
bool is_associative_on(const FiniteAlgebra& a, const Submodule& s);

}  // namespace cdalg
