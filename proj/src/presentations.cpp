#include "cdalg/presentations.hpp"

#include "cdalg/cayley_dickson.hpp"

#include <numeric>

namespace cdalg {

BasisMap BasisMap::identity(Eigen::Index rank) {
  BasisMap m;
  for (Eigen::Index i = 0; i < rank; ++i) m.entries.push_back({i, false});
  return m;
}

Vector BasisMap::apply(const Vector& x, Residue modulus) const {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t s = 0; s < entries.size(); ++s) {
    const Residue c = x[static_cast<Eigen::Index>(s)];
    out[entries[s].target] += entries[s].negate ? -c : c;
  }
  return reduce(out, modulus);
}

bool BasisMap::is_bijection() const {
  std::vector<bool> seen(entries.size(), false);
  for (const auto& e : entries) {
    if (e.target < 0 || static_cast<std::size_t>(e.target) >= entries.size() || seen[static_cast<std::size_t>(e.target)]) {
      return false;
    }
    seen[static_cast<std::size_t>(e.target)] = true;
  }
  return true;
}

BasisMapCheck verify_basis_map(const FiniteAlgebra& source, const FiniteAlgebra& target, const BasisMap& map) {
  if (source.rank() != target.rank() || source.modulus() != target.modulus()) {
    throw std::invalid_argument("verify_basis_map: rank or modulus mismatch");
  }
  if (static_cast<Eigen::Index>(map.entries.size()) != source.rank() || !map.is_bijection()) {
    return {false, "map is not a signed bijection of basis indices"};
  }
  const Residue n = source.modulus();
  auto phi = [&](const Vector& x) { return map.apply(x, n); };
  for (Eigen::Index i = 0; i < source.rank(); ++i) {
    for (Eigen::Index j = 0; j < source.rank(); ++j) {
      const Vector lhs = phi(mul(source, basis(source, i), basis(source, j)));
      const Vector rhs = mul(target, phi(basis(source, i)), phi(basis(source, j)));
      if (lhs != rhs) {
        return {false, "product (" + source.label(i) + ", " + source.label(j) + "): image of product is " +
                           format_element(target, lhs) + ", product of images is " + format_element(target, rhs)};
      }
    }
  }
  if (phi(source.unit()) != target.unit()) return {false, "unit is not preserved"};
  for (Eigen::Index i = 0; i < source.rank(); ++i) {
    if (phi(apply_involution(source, basis(source, i))) != apply_involution(target, phi(basis(source, i)))) {
      return {false, "involution is not preserved on " + source.label(i)};
    }
  }
  return {};
}

FiniteAlgebra pull_back(const FiniteAlgebra& target, const BasisMap& map, std::vector<std::string> labels) {
  const Eigen::Index d = target.rank();
  const Residue n = target.modulus();
  if (static_cast<Eigen::Index>(map.entries.size()) != d || !map.is_bijection()) {
    throw std::invalid_argument("pull_back: map is not a signed bijection");
  }
  // Inverse map: target e_t = sign * b_s.
  BasisMap inv;
  inv.entries.resize(static_cast<std::size_t>(d));
  for (std::size_t s = 0; s < map.entries.size(); ++s) {
    inv.entries[static_cast<std::size_t>(map.entries[s].target)] = {static_cast<Eigen::Index>(s), map.entries[s].negate};
  }
  auto back = [&](const Vector& x) { return inv.apply(x, n); };
  auto image = [&](Eigen::Index s) { return map.apply(basis(target, s), n); };

  AlgebraTables t;
  t.modulus = n;
  t.rank = d;
  t.structure.assign(static_cast<std::size_t>(d * d * d), 0);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const Vector p = back(mul(target, image(i), image(j)));
      for (Eigen::Index k = 0; k < d; ++k) t.structure[static_cast<std::size_t>((i * d + j) * d + k)] = p[k];
    }
  }
  t.unit = back(target.unit());
  t.involution = Matrix::Zero(d, d);
  for (Eigen::Index s = 0; s < d; ++s) t.involution.col(s) = back(apply_involution(target, image(s)));
  t.labels = std::move(labels);
  return FiniteAlgebra(std::move(t));
}

namespace {

void require_units(Residue n, std::initializer_list<Residue> params) {
  for (Residue p : params) {
    if (std::gcd(detail::mod<Residue>(p, n), n) != 1) {
      throw ConstructionError(ConstructionFailure::NotInvertible,
                              std::to_string(p) + " is not invertible mod " + std::to_string(n));
    }
  }
}

}  // namespace

FiniteAlgebra quaternion_algebra(Residue n, Residue a, Residue b) {
  require_units(n, {a, b});
  a = detail::mod<Residue>(a, n);
  b = detail::mod<Residue>(b, n);
  constexpr Eigen::Index d = 4;
  enum : Eigen::Index { one = 0, I = 1, J = 2, K = 3 };
  AlgebraTables t;
  t.modulus = n;
  t.rank = d;
  t.structure.assign(d * d * d, 0);
  auto set = [&](Eigen::Index x, Eigen::Index y, Eigen::Index z, Residue c) {
    t.structure[static_cast<std::size_t>((x * d + y) * d + z)] = detail::mod<Residue>(c, n);
  };
  for (Eigen::Index x = 0; x < d; ++x) {
    set(one, x, x, 1);
    set(x, one, x, 1);
  }
  set(I, I, one, a);
  set(J, J, one, b);
  set(K, K, one, -detail::mulmod(a, b, n));
  set(I, J, K, 1);
  set(J, I, K, -1);
  set(I, K, J, a);
  set(K, I, J, -a);
  set(K, J, I, b);
  set(J, K, I, -b);
  t.unit = Vector::Unit(d, one);
  t.involution = Matrix::Identity(d, d) * (n - 1);
  t.involution(one, one) = 1;
  t.labels = {"1", "i", "j", "k"};
  return FiniteAlgebra(std::move(t));
}

BasisMap quaternion_tower_map() { return {{{0, false}, {1, false}, {2, false}, {3, true}}}; }

BasisMap octonion_tower_map() {
  // Tower coordinates: 1, i, j, ji, l, li, lj, lji with k = (0,-i) = -ji.
  // f5 = (0,-i) = -li, f6 = (0,-j) = -lj, f7 = (0,-k) = +lji.
  return {{{0, false}, {1, false}, {2, false}, {3, true}, {4, false}, {5, true}, {6, true}, {7, false}}};
}

FiniteAlgebra octonion_algebra(Residue n, Residue a, Residue b, Residue c) {
  require_units(n, {a, b, c});
  const auto stages = build_tower(TowerSpec::scalars(n, {a, b, c}));
  return pull_back(stages.back(), octonion_tower_map(), {"1", "f1", "f2", "f3", "f4", "f5", "f6", "f7"});
}

}  // namespace cdalg
