#include "cdalg/essentiality.hpp"

#include <numeric>
#include <unordered_set>

namespace cdalg {

std::string to_string(Method m) { return m == Method::definitional ? "definitional" : "criterion"; }

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

// Membership oracle for an enumerated set, keyed by the base-n encoding of
// coordinates. Falls back to echelon membership when codes would overflow.
class ElementSet {
 public:
  ElementSet(const Submodule& s, std::uint64_t budget) : s_(s), n_(s.modulus()) {
    unsigned __int128 space = 1;
    for (Eigen::Index i = 0; i < s.ambient_rank() && space <= (std::uint64_t{1} << 62); ++i) space *= n_;
    if (space > (std::uint64_t{1} << 62)) return;
    encodable_ = true;
    const auto range = enumerate(s, budget);
    if (space <= kDenseLimit) {
      dense_.assign(static_cast<std::size_t>(space), false);
      for (const auto& v : range) dense_[static_cast<std::size_t>(encode(v))] = true;
    } else {
      for (const auto& v : range) sparse_.insert(encode(v));
    }
  }

  bool contains(const Vector& v) const {
    if (!encodable_) return membership(v, s_);
    const std::uint64_t code = encode(v);
    return dense_.empty() ? sparse_.count(code) > 0 : dense_[static_cast<std::size_t>(code)];
  }

 private:
  std::uint64_t encode(const Vector& v) const {
    std::uint64_t code = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) code = code * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v[i]);
    return code;
  }

  Submodule s_;
  Residue n_;
  bool encodable_ = false;
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

std::uint64_t checked_order(const Submodule& s, std::uint64_t budget) {
  const auto order = s.order();
  if (!order) throw BudgetExceeded(0, budget);
  if (*order > budget) throw BudgetExceeded(*order, budget);
  return *order;
}

EssentialityVerdict combine_criteria(std::string property, const EssentialityVerdict& first, std::string first_fail,
                                     const EssentialityVerdict& second, std::string second_fail) {
  EssentialityVerdict v;
  v.property = std::move(property);
  v.method = Method::criterion;
  v.cost = first.cost + second.cost;
  v.verdict = first.verdict && second.verdict;
  if (!first.verdict) {
    v.witness = first.witness;
    v.detail = std::move(first_fail);
  } else if (!second.verdict) {
    v.witness = second.witness;
    v.detail = std::move(second_fail);
  }
  return v;
}

}  // namespace

EssentialityVerdict essential_scan(const FiniteAlgebra& a, const Submodule& acting, const Submodule& target,
                                   const Submodule& ambient, Side side, std::string property, std::uint64_t budget) {
  checked_order(ambient, budget);
  checked_order(acting, budget);
  const ElementSet in_target(target, budget);

  std::vector<Residue> radices;
  for (std::size_t i = 0; i < acting.generator_count(); ++i) radices.push_back(acting.radix(i));
  const auto gens = acting.generator_list();

  EssentialityVerdict out;
  out.property = std::move(property);
  out.method = Method::definitional;
  out.verdict = true;
  for (const auto& r : enumerate(ambient, budget)) {
    if (r.isZero()) continue;
    ++out.cost;
    std::vector<Vector> images;
    images.reserve(gens.size());
    for (const auto& g : gens) images.push_back(side == Side::left ? mul(a, g, r) : mul(a, r, g));
    MixedRadixWalk<Residue> walk(a.modulus(), std::move(images), radices, a.rank());
    bool hit = false;
    do {
      const Vector& x = walk.current();
      if (!x.isZero() && in_target.contains(x)) {
        hit = true;
        break;
      }
    } while (walk.advance());
    if (!hit) {
      out.verdict = false;
      out.witness = r;
      return out;
    }
  }
  return out;
}

EssentialityVerdict is_essential_ideal(const Submodule& ideal, const Submodule& ring, const FiniteAlgebra& a,
                                       std::uint64_t budget) {
  return essential_scan(a, ring, ideal, ring, Side::left, "essential ideal", budget);
}

EssentialityVerdict is_essential_submodule(const Submodule& sub, const FiniteAlgebra& a, const Submodule& scalars,
                                           std::uint64_t budget) {
  return essential_scan(a, scalars, sub, Submodule::full(a.modulus(), a.rank()), Side::left, "essential submodule",
                        budget);
}

EssentialityVerdict is_centrally_essential(const FiniteAlgebra& a, std::uint64_t budget) {
  checked_order(Submodule::full(a.modulus(), a.rank()), budget);
  const Submodule z = center(a).center;
  return essential_scan(a, z, z, Submodule::full(a.modulus(), a.rank()), Side::left, "centrally essential", budget);
}

EssentialityVerdict is_left_n_essential(const FiniteAlgebra& a, std::uint64_t budget) {
  checked_order(Submodule::full(a.modulus(), a.rank()), budget);
  const Submodule n = associative_center(a);
  return essential_scan(a, n, n, Submodule::full(a.modulus(), a.rank()), Side::left, "left N-essential", budget);
}

EssentialityVerdict is_right_n_essential(const FiniteAlgebra& a, std::uint64_t budget) {
  checked_order(Submodule::full(a.modulus(), a.rank()), budget);
  const Submodule n = associative_center(a);
  return essential_scan(a, n, n, Submodule::full(a.modulus(), a.rank()), Side::right, "right N-essential", budget);
}

EssentialityVerdict n_essential_criterion(const FiniteAlgebra& a, const Vector& alpha, std::uint64_t budget) {
  CentralScalar::certify(a, alpha);
  const auto data = essentiality_data(a);
  const auto ce = is_centrally_essential(a, budget);
  const auto ideal = is_essential_ideal(data.commutator_annihilator, data.center, a, budget);
  return combine_criteria("N-essential double", ce, "base is not centrally essential", ideal,
                          "Ann_C([A,A]) is not essential in C");
}

EssentialityVerdict centrally_essential_criterion(const FiniteAlgebra& a, const Vector& alpha, std::uint64_t budget) {
  CentralScalar::certify(a, alpha);
  const auto data = essentiality_data(a);
  const auto sub = is_essential_submodule(data.symmetric_center, a, data.symmetric_center, budget);
  const Submodule j = intersect(data.skew_annihilator, data.commutator_annihilator);
  const auto ideal = is_essential_ideal(j, data.symmetric_center, a, budget);
  return combine_criteria("centrally essential double", sub, "B is not essential in the B-module A", ideal,
                          "J ∩ I is not essential in B");
}

Submodule two_torsion(Residue n) { return kernel(ResidueMatrix(n, Matrix::Constant(1, 1, 2))); }

namespace {

void require_units(Residue n, std::initializer_list<Residue> params) {
  for (Residue p : params) {
    if (std::gcd(detail::mod<Residue>(p, n), n) != 1) {
      throw ConstructionError(ConstructionFailure::NotInvertible,
                              std::to_string(p) + " is not invertible mod " + std::to_string(n));
    }
  }
}

EssentialityVerdict torsion_criterion(Residue n, std::string property) {
  const FiniteAlgebra k = base_ring(n);
  const Submodule ann = two_torsion(n);
  const Submodule whole = Submodule::full(n, 1);
  EssentialityVerdict v;
  v.property = std::move(property);
  v.method = Method::criterion;
  if (ann == whole) {
    v.verdict = false;
    v.witness = k.unit();
    v.detail = "Ann(2) is not proper";
    return v;
  }
  const auto ess = is_essential_ideal(ann, whole, k);
  v.verdict = ess.verdict;
  v.cost = ess.cost;
  v.witness = ess.witness;
  if (!ess.verdict) v.detail = "Ann(2) is not essential";
  return v;
}

}  // namespace

EssentialityVerdict quaternion_criterion(Residue n, Residue a, Residue b) {
  require_units(n, {a, b});
  return torsion_criterion(n, "non-commutative centrally essential");
}

EssentialityVerdict octonion_criterion(Residue n, Residue a, Residue b, Residue c) {
  require_units(n, {a, b, c});
  return torsion_criterion(n, "non-associative centrally essential");
}

}  // namespace cdalg
