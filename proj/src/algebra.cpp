#include "cdalg/algebra.hpp"

#include <sstream>

namespace cdalg {

namespace {

Vector reduce_mod(const Vector& v, Residue n) { return reduce(v, n); }

Vector dense_mul(const AlgebraTables& t, const Vector& x, const Vector& y) {
  const Eigen::Index d = t.rank;
  const Residue n = t.modulus;
  Vector out = Vector::Zero(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (Eigen::Index j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const Residue xy = detail::mulmod(x[i], y[j], n);
      const auto base = static_cast<std::size_t>((i * d + j) * d);
      for (Eigen::Index k = 0; k < d; ++k) {
        const Residue c = t.structure[base + static_cast<std::size_t>(k)];
        if (c != 0) out[k] = (out[k] + detail::mulmod(xy, c, n)) % n;
      }
    }
  }
  return out;
}

Vector unit_vector(Eigen::Index d, Eigen::Index i) {
  Vector e = Vector::Zero(d);
  e[i] = 1;
  return e;
}

bool reduced(const Vector& v, Residue n) { return ((v.array() >= 0) && (v.array() < n)).all(); }

}  // namespace

std::vector<std::string> validate_algebra(const AlgebraTables& t) {
  std::vector<std::string> out;
  const Eigen::Index d = t.rank;
  const Residue n = t.modulus;
  if (n < 2) out.push_back("modulus " + std::to_string(n) + " is below 2");
  if (d < 1) out.push_back("rank must be positive");
  if (!out.empty()) return out;
  if (t.structure.size() != static_cast<std::size_t>(d * d * d)) out.push_back("structure tensor has wrong size");
  if (t.unit.size() != d) out.push_back("unit has wrong length");
  if (t.involution.rows() != d || t.involution.cols() != d) out.push_back("involution has wrong shape");
  if (t.labels.size() != static_cast<std::size_t>(d)) out.push_back("label count does not match rank");
  if (!out.empty()) return out;

  for (Residue c : t.structure) {
    if (c < 0 || c >= n) {
      out.push_back("structure constant outside [0, n)");
      break;
    }
  }
  if (!reduced(t.unit, n)) out.push_back("unit coordinates outside [0, n)");
  if (!((t.involution.array() >= 0) && (t.involution.array() < n)).all()) {
    out.push_back("involution entries outside [0, n)");
  }
  if (!out.empty()) return out;

  auto sigma = [&](const Vector& x) { return reduce_mod(t.involution * x, n); };

  for (Eigen::Index i = 0; i < d; ++i) {
    const Vector e = unit_vector(d, i);
    if (dense_mul(t, t.unit, e) != e) out.push_back("unit is not a left identity on " + t.labels[i]);
    if (dense_mul(t, e, t.unit) != e) out.push_back("unit is not a right identity on " + t.labels[i]);
  }
  const Matrix sq = (t.involution * t.involution).unaryExpr([n](Residue v) { return detail::mod<Residue>(v, n); });
  if (sq != Matrix::Identity(d, d)) out.push_back("involution does not square to the identity");
  if (sigma(t.unit) != t.unit) out.push_back("involution does not fix the unit");

  std::vector<Vector> images;
  for (Eigen::Index i = 0; i < d; ++i) images.push_back(sigma(unit_vector(d, i)));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const Vector lhs = sigma(dense_mul(t, unit_vector(d, i), unit_vector(d, j)));
      const Vector rhs = dense_mul(t, images[j], images[i]);
      if (lhs != rhs) {
        out.push_back("involution is not anti-multiplicative on (" + t.labels[i] + ", " + t.labels[j] + ")");
        return out;
      }
    }
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += "; ";
    s += x;
  }
  return s;
}

}  // namespace

InvalidAlgebra::InvalidAlgebra(std::vector<std::string> violations)
    : std::invalid_argument("invalid algebra: " + join(violations)), violations_(std::move(violations)) {}

FiniteAlgebra::FiniteAlgebra(AlgebraTables tables) : t_(std::move(tables)) {
  if (auto v = validate_algebra(t_); !v.empty()) throw InvalidAlgebra(std::move(v));
  const Eigen::Index d = t_.rank;
  terms_.resize(static_cast<std::size_t>(d * d));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      auto& terms = terms_[static_cast<std::size_t>(i * d + j)];
      for (Eigen::Index k = 0; k < d; ++k) {
        if (const Residue c = structure(i, j, k); c != 0) terms.push_back({k, c});
      }
    }
  }
}

bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.t_.modulus == b.t_.modulus && a.t_.rank == b.t_.rank && a.t_.structure == b.t_.structure &&
         a.t_.unit == b.t_.unit && a.t_.involution == b.t_.involution && a.t_.labels == b.t_.labels;
}

std::vector<std::string> validate_algebra(const FiniteAlgebra& a) { return validate_algebra(a.tables()); }

FiniteAlgebra base_ring(Residue modulus) {
  AlgebraTables t;
  t.modulus = modulus;
  t.rank = 1;
  t.structure = {1};
  t.unit = Vector::Ones(1);
  t.involution = Matrix::Identity(1, 1);
  t.labels = {"1"};
  return FiniteAlgebra(std::move(t));
}

Vector basis(const FiniteAlgebra& a, Eigen::Index i) { return unit_vector(a.rank(), i); }

Vector zero_element(const FiniteAlgebra& a) { return Vector::Zero(a.rank()); }

Vector scalar(const FiniteAlgebra& a, Residue c) { return scale(a, c, a.unit()); }

namespace {

void check(const FiniteAlgebra& a, const Vector& x) {
  if (x.size() != a.rank()) {
    throw std::invalid_argument("element of length " + std::to_string(x.size()) + " used in rank-" +
                                std::to_string(a.rank()) + " algebra");
  }
}

}  // namespace

Vector add(const FiniteAlgebra& a, const Vector& x, const Vector& y) {
  check(a, x);
  check(a, y);
  return reduce(Vector(x + y), a.modulus());
}

Vector sub(const FiniteAlgebra& a, const Vector& x, const Vector& y) {
  check(a, x);
  check(a, y);
  return reduce(Vector(x - y), a.modulus());
}

Vector negate(const FiniteAlgebra& a, const Vector& x) {
  check(a, x);
  return reduce(Vector(-x), a.modulus());
}

Vector scale(const FiniteAlgebra& a, Residue c, const Vector& x) {
  check(a, x);
  const Residue n = a.modulus();
  return x.unaryExpr([&](Residue v) { return detail::mulmod(detail::mod<Residue>(c, n), v, n); });
}

Vector mul(const FiniteAlgebra& a, const Vector& x, const Vector& y) {
  check(a, x);
  check(a, y);
  const Eigen::Index d = a.rank();
  const Residue n = a.modulus();
  Vector out = Vector::Zero(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const Residue xi = detail::mod<Residue>(x[i], n);
    if (xi == 0) continue;
    for (Eigen::Index j = 0; j < d; ++j) {
      const Residue yj = detail::mod<Residue>(y[j], n);
      if (yj == 0) continue;
      const Residue xy = detail::mulmod(xi, yj, n);
      for (const auto& term : a.product_terms(i, j)) {
        out[term.index] = (out[term.index] + detail::mulmod(xy, term.coeff, n)) % n;
      }
    }
  }
  return out;
}

Vector associator(const FiniteAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return sub(a, mul(a, mul(a, x, y), z), mul(a, x, mul(a, y, z)));
}

Vector commutator(const FiniteAlgebra& a, const Vector& x, const Vector& y) {
  return sub(a, mul(a, x, y), mul(a, y, x));
}

Vector apply_involution(const FiniteAlgebra& a, const Vector& x) {
  check(a, x);
  return reduce(Vector(a.involution() * x), a.modulus());
}

Matrix left_multiplication(const FiniteAlgebra& a, const Vector& x) {
  Matrix m(a.rank(), a.rank());
  for (Eigen::Index j = 0; j < a.rank(); ++j) m.col(j) = mul(a, x, basis(a, j));
  return m;
}

Matrix right_multiplication(const FiniteAlgebra& a, const Vector& x) {
  Matrix m(a.rank(), a.rank());
  for (Eigen::Index j = 0; j < a.rank(); ++j) m.col(j) = mul(a, basis(a, j), x);
  return m;
}

bool is_associative(const FiniteAlgebra& a) {
  const Eigen::Index d = a.rank();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k)
        if (!associator(a, basis(a, i), basis(a, j), basis(a, k)).isZero()) return false;
  return true;
}

bool is_commutative(const FiniteAlgebra& a) {
  const Eigen::Index d = a.rank();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j)
      if (!commutator(a, basis(a, i), basis(a, j)).isZero()) return false;
  return true;
}

// (x,x,y) = sum_i x_i^2 (e_i,e_i,y) + sum_{i<j} x_i x_j [(e_i,e_j,y) + (e_j,e_i,y)],
// so the identity holds iff both bracketed families vanish on basis vectors.
bool is_left_alternative(const FiniteAlgebra& a) {
  const Eigen::Index d = a.rank();
  for (Eigen::Index k = 0; k < d; ++k) {
    const Vector ek = basis(a, k);
    for (Eigen::Index i = 0; i < d; ++i) {
      const Vector ei = basis(a, i);
      if (!associator(a, ei, ei, ek).isZero()) return false;
      for (Eigen::Index j = i + 1; j < d; ++j) {
        const Vector ej = basis(a, j);
        if (!add(a, associator(a, ei, ej, ek), associator(a, ej, ei, ek)).isZero()) return false;
      }
    }
  }
  return true;
}

bool is_right_alternative(const FiniteAlgebra& a) {
  const Eigen::Index d = a.rank();
  for (Eigen::Index k = 0; k < d; ++k) {
    const Vector ek = basis(a, k);
    for (Eigen::Index i = 0; i < d; ++i) {
      const Vector ei = basis(a, i);
      if (!associator(a, ek, ei, ei).isZero()) return false;
      for (Eigen::Index j = i + 1; j < d; ++j) {
        const Vector ej = basis(a, j);
        if (!add(a, associator(a, ek, ei, ej), associator(a, ek, ej, ei)).isZero()) return false;
      }
    }
  }
  return true;
}

bool is_alternative(const FiniteAlgebra& a) { return is_left_alternative(a) && is_right_alternative(a); }

bool is_central(const FiniteAlgebra& a, const Vector& x) {
  const Eigen::Index d = a.rank();
  for (Eigen::Index i = 0; i < d; ++i) {
    const Vector ei = basis(a, i);
    if (!commutator(a, x, ei).isZero()) return false;
    for (Eigen::Index j = 0; j < d; ++j) {
      const Vector ej = basis(a, j);
      if (!associator(a, x, ei, ej).isZero() || !associator(a, ei, x, ej).isZero() ||
          !associator(a, ei, ej, x).isZero()) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Vector> inverse(const FiniteAlgebra& a, const Vector& x) {
  check(a, x);
  // x*y = 1  <=>  y^T L_x^T = 1^T
  const Matrix lt = left_multiplication(a, x).transpose();
  auto y = solve(ResidueMatrix(a.modulus(), lt), a.unit());
  if (!y) return std::nullopt;
  if (mul(a, *y, x) != a.unit()) return std::nullopt;
  return y;
}

std::string to_string(ConstructionFailure f) {
  switch (f) {
    case ConstructionFailure::NotCentral: return "NotCentral";
    case ConstructionFailure::NotSymmetric: return "NotSymmetric";
    case ConstructionFailure::NotInvertible: return "NotInvertible";
    case ConstructionFailure::InvalidAlgebra: return "InvalidAlgebra";
    case ConstructionFailure::RankBudgetExceeded: return "RankBudgetExceeded";
  }
  return "Unknown";
}

ConstructionError::ConstructionError(ConstructionFailure failure, const std::string& what, int stage)
    : std::runtime_error(to_string(failure) + ": " + what + (stage >= 0 ? " (stage " + std::to_string(stage) + ")" : "")),
      failure_(failure),
      detail_(what),
      stage_(stage) {}

CentralScalar CentralScalar::certify(const FiniteAlgebra& a, const Vector& x) {
  check(a, x);
  const Vector v = reduce(x, a.modulus());
  if (!is_central(a, v)) throw ConstructionError(ConstructionFailure::NotCentral, format_element(a, v) + " is not central");
  if (apply_involution(a, v) != v) {
    throw ConstructionError(ConstructionFailure::NotSymmetric, format_element(a, v) + " is not fixed by the involution");
  }
  auto inv = cdalg::inverse(a, v);
  if (!inv) throw ConstructionError(ConstructionFailure::NotInvertible, format_element(a, v) + " is not invertible");
  return CentralScalar(v, *inv);
}

std::string format_element(const FiniteAlgebra& a, const Vector& x) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Residue c = detail::mod<Residue>(x[i], a.modulus());
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::string& l = a.label(i);
    if (l == "1") {
      os << c;
    } else if (c == 1) {
      os << l;
    } else {
      os << c << '*' << l;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace cdalg
