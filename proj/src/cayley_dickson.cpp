#include "cdalg/cayley_dickson.hpp"

#include <array>

namespace cdalg {

FiniteAlgebra cayley_dickson(const FiniteAlgebra& a, const CentralScalar& alpha, const std::string& generator) {
  const Eigen::Index d = a.rank();
  const Eigen::Index dd = 2 * d;
  const Residue n = a.modulus();

  AlgebraTables t;
  t.modulus = n;
  t.rank = dd;
  t.structure.assign(static_cast<std::size_t>(dd * dd * dd), 0);

  auto store = [&](Eigen::Index i, Eigen::Index j, const Vector& first, const Vector& second) {
    const auto base = static_cast<std::size_t>((i * dd + j) * dd);
    for (Eigen::Index k = 0; k < d; ++k) {
      t.structure[base + static_cast<std::size_t>(k)] = first[k];
      t.structure[base + static_cast<std::size_t>(d + k)] = second[k];
    }
  };

  const Vector zero = zero_element(a);
  std::vector<Vector> e, es;
  for (Eigen::Index i = 0; i < d; ++i) {
    e.push_back(basis(a, i));
    es.push_back(apply_involution(a, e.back()));
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
      store(i, j, mul(a, e[i], e[j]), zero);
      // (e_i, 0)(0, e_j) = (0, e_i* e_j)
      store(i, d + j, zero, mul(a, es[i], e[j]));
      // (0, e_i)(e_j, 0) = (0, e_j e_i)
      store(d + i, j, zero, mul(a, e[j], e[i]));
      // (0, e_i)(0, e_j) = (alpha (e_j e_i*), 0)
      store(d + i, d + j, mul(a, alpha.value(), mul(a, e[j], es[i])), zero);
    }
  }

  t.unit = Vector::Zero(dd);
  t.unit.head(d) = a.unit();

  t.involution = Matrix::Zero(dd, dd);
  t.involution.topLeftCorner(d, d) = a.involution();
  t.involution.bottomRightCorner(d, d) = Matrix::Identity(d, d) * (n - 1);

  t.labels = a.labels();
  for (const auto& l : a.labels()) t.labels.push_back(l == "1" ? generator : generator + l);

  try {
    return FiniteAlgebra(std::move(t));
  } catch (const InvalidAlgebra& err) {
    throw ConstructionError(ConstructionFailure::InvalidAlgebra, err.what());
  }
}

FiniteAlgebra cayley_dickson(const FiniteAlgebra& a, const Vector& alpha, const std::string& generator) {
  if (auto v = validate_algebra(a); !v.empty()) {
    throw ConstructionError(ConstructionFailure::InvalidAlgebra, InvalidAlgebra(v).what());
  }
  return cayley_dickson(a, CentralScalar::certify(a, alpha), generator);
}

Vector nu(const FiniteAlgebra& base) { return embed_second(base, base.unit()); }

Vector embed(const FiniteAlgebra& base, const Vector& x) { return pair(base, x, zero_element(base)); }

Vector embed_second(const FiniteAlgebra& base, const Vector& y) { return pair(base, zero_element(base), y); }

Vector pair(const FiniteAlgebra& base, const Vector& x, const Vector& y) {
  if (x.size() != base.rank() || y.size() != base.rank()) {
    throw std::invalid_argument("pair: components must be elements of the base stage");
  }
  Vector out(2 * base.rank());
  out << reduce(x, base.modulus()), reduce(y, base.modulus());
  return out;
}

void require_double_of(const FiniteAlgebra& base, const FiniteAlgebra& doubled) {
  if (doubled.modulus() != base.modulus() || doubled.rank() != 2 * base.rank()) {
    throw std::invalid_argument("stage mismatch: rank-" + std::to_string(doubled.rank()) +
                                " algebra is not a double of a rank-" + std::to_string(base.rank()) + " algebra");
  }
}

TowerSpec TowerSpec::scalars(Residue modulus, const std::vector<Residue>& values) {
  TowerSpec spec;
  spec.base_modulus = modulus;
  for (Residue v : values) spec.params.emplace_back(v);
  return spec;
}

std::string tower_generator(std::size_t t) {
  static constexpr std::array<const char*, 8> names{"i", "j", "l", "m", "p", "q", "r", "s"};
  if (t >= 1 && t <= names.size()) return names[t - 1];
  return "g" + std::to_string(t);
}

std::vector<FiniteAlgebra> build_tower(const TowerSpec& spec) {
  Eigen::Index final_rank = 1;
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    final_rank *= 2;
    if (final_rank > spec.max_rank) {
      throw ConstructionError(ConstructionFailure::RankBudgetExceeded,
                              "rank " + std::to_string(final_rank) + " exceeds budget " + std::to_string(spec.max_rank),
                              static_cast<int>(i + 1));
    }
  }
  std::vector<FiniteAlgebra> stages;
  stages.push_back(base_ring(spec.base_modulus));
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    const FiniteAlgebra& cur = stages.back();
    const Vector alpha = std::visit(
        [&](const auto& p) -> Vector {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Residue>) {
            return scalar(cur, p);
          } else {
            return p;
          }
        },
        spec.params[i]);
    try {
      if (alpha.size() != cur.rank()) {
        throw std::invalid_argument("parameter has length " + std::to_string(alpha.size()) + ", stage has rank " +
                                    std::to_string(cur.rank()));
      }
      stages.push_back(cayley_dickson(cur, alpha, tower_generator(i + 1)));
    } catch (const ConstructionError& err) {
      throw ConstructionError(err.failure(), err.detail(), static_cast<int>(i + 1));
    }
  }
  return stages;
}

}  // namespace cdalg
