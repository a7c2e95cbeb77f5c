#include "cdalg/structure.hpp"

#include "cdalg/cayley_dickson.hpp"

#include <set>
#include <stdexcept>

namespace cdalg {

namespace {

// Kernel {x : sum_k x_k col(k) = 0 for every condition column}. Columns are
// given per condition as the image of each basis vector; zero and repeated
// columns are dropped before solving.
class ConditionSystem {
 public:
  ConditionSystem(Residue modulus, Eigen::Index unknowns) : n_(modulus), rows_(unknowns) {}

  /// images[k] = value of the condition (a vector) at the k-th basis unknown.
  void add(const std::vector<Vector>& images) {
    const Eigen::Index width = images.front().size();
    for (Eigen::Index c = 0; c < width; ++c) {
      std::vector<Residue> col(static_cast<std::size_t>(rows_));
      bool nonzero = false;
      for (Eigen::Index k = 0; k < rows_; ++k) {
        col[static_cast<std::size_t>(k)] = images[static_cast<std::size_t>(k)][c];
        nonzero = nonzero || col[static_cast<std::size_t>(k)] != 0;
      }
      if (nonzero) columns_.insert(std::move(col));
    }
  }

  Submodule solve() const {
    if (columns_.empty()) return Submodule::full(n_, rows_);
    Matrix m(rows_, static_cast<Eigen::Index>(columns_.size()));
    Eigen::Index c = 0;
    for (const auto& col : columns_) {
      for (Eigen::Index k = 0; k < rows_; ++k) m(k, c) = col[static_cast<std::size_t>(k)];
      ++c;
    }
    return kernel(ResidueMatrix(n_, std::move(m)));
  }

 private:
  Residue n_;
  Eigen::Index rows_;
  std::set<std::vector<Residue>> columns_;
};

std::vector<Vector> basis_vectors(const FiniteAlgebra& a) {
  std::vector<Vector> e;
  for (Eigen::Index i = 0; i < a.rank(); ++i) e.push_back(basis(a, i));
  return e;
}

// Elements sum_m c_m g_m for each kernel vector c, where g are the generators of `within`.
Submodule combinations(const Submodule& coeffs, const Submodule& within) {
  std::vector<Vector> out;
  const Residue n = within.modulus();
  for (std::size_t i = 0; i < coeffs.generator_count(); ++i) {
    const Vector c = coeffs.generator(i);
    Vector v = Vector::Zero(within.ambient_rank());
    for (Eigen::Index m = 0; m < c.size(); ++m) {
      if (c[m] != 0) v = reduce(Vector(v + c[m] * within.generator(static_cast<std::size_t>(m))), n);
    }
    out.push_back(std::move(v));
  }
  return Submodule::span(n, within.ambient_rank(), out);
}

}  // namespace

Submodule associative_center(const FiniteAlgebra& a) {
  const Eigen::Index d = a.rank();
  const auto e = basis_vectors(a);
  ConditionSystem sys(a.modulus(), d);
  std::vector<Vector> images(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (int slot = 0; slot < 3; ++slot) {
        for (Eigen::Index k = 0; k < d; ++k) {
          const auto& x = e[k];
          const auto& u = e[i];
          const auto& v = e[j];
          images[static_cast<std::size_t>(k)] = slot == 0   ? associator(a, x, u, v)
                                                : slot == 1 ? associator(a, u, x, v)
                                                            : associator(a, u, v, x);
        }
        sys.add(images);
      }
    }
  }
  return sys.solve();
}

Submodule commutative_center(const FiniteAlgebra& a) {
  const Eigen::Index d = a.rank();
  const auto e = basis_vectors(a);
  ConditionSystem sys(a.modulus(), d);
  std::vector<Vector> images(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) images[static_cast<std::size_t>(k)] = commutator(a, e[k], e[i]);
    sys.add(images);
  }
  return sys.solve();
}

CenterReport center(const FiniteAlgebra& a) {
  Submodule n = associative_center(a);
  Submodule k = commutative_center(a);
  Submodule z = intersect(n, k);
  CenterReport r{n, k, z, {}, {}, {}};
  r.associative_order = n.order();
  r.commutative_order = k.order();
  r.center_order = z.order();
  return r;
}

Submodule commutator_ideal(const FiniteAlgebra& a) {
  const auto e = basis_vectors(a);
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) seeds.push_back(commutator(a, e[i], e[j]));
  Submodule cur = Submodule::span(a.modulus(), a.rank(), seeds);
  // Both one-sided multiplications are applied each round; the algebra need
  // not be associative, so neither side alone generates the ideal.
  while (true) {
    std::vector<Vector> next = cur.generator_list();
    for (std::size_t g = 0; g < cur.generator_count(); ++g) {
      const Vector x = cur.generator(g);
      for (const auto& b : e) {
        next.push_back(mul(a, b, x));
        next.push_back(mul(a, x, b));
      }
    }
    Submodule grown = Submodule::span(a.modulus(), a.rank(), next);
    if (grown == cur) return cur;
    cur = std::move(grown);
  }
}

Submodule annihilator(const Submodule& s, const Submodule& within, const FiniteAlgebra& a) {
  if (s.ambient_rank() != a.rank() || within.ambient_rank() != a.rank() || s.modulus() != a.modulus() ||
      within.modulus() != a.modulus()) {
    throw std::invalid_argument("annihilator: submodules must live in the algebra");
  }
  const auto w = within.generator_list();
  if (w.empty()) return within;
  ConditionSystem sys(a.modulus(), static_cast<Eigen::Index>(w.size()));
  std::vector<Vector> images(w.size());
  for (std::size_t g = 0; g < s.generator_count(); ++g) {
    const Vector target = s.generator(g);
    for (std::size_t m = 0; m < w.size(); ++m) images[m] = mul(a, w[m], target);
    sys.add(images);
  }
  return combinations(sys.solve(), within);
}

Submodule symmetric_center(const FiniteAlgebra& a) {
  const Eigen::Index d = a.rank();
  const Matrix shifted = (a.involution() - Matrix::Identity(d, d)).transpose();
  const Submodule fixed = kernel(ResidueMatrix(a.modulus(), shifted));
  return intersect(center(a).center, fixed);
}

Submodule skew_span(const FiniteAlgebra& a) {
  std::vector<Vector> gens;
  for (Eigen::Index i = 0; i < a.rank(); ++i) gens.push_back(sub(a, basis(a, i), apply_involution(a, basis(a, i))));
  return Submodule::span(a.modulus(), a.rank(), gens);
}

Submodule skew_annihilator(const FiniteAlgebra& a) { return annihilator(skew_span(a), symmetric_center(a), a); }

EssentialityData essentiality_data(const FiniteAlgebra& a) {
  Submodule c = center(a).center;
  Submodule comm = commutator_ideal(a);
  Submodule i = annihilator(comm, c, a);
  const Eigen::Index d = a.rank();
  const Matrix shifted = (a.involution() - Matrix::Identity(d, d)).transpose();
  Submodule b = intersect(c, kernel(ResidueMatrix(a.modulus(), shifted)));
  Submodule skew = skew_span(a);
  Submodule j = annihilator(skew, b, a);
  return {std::move(c), std::move(comm), std::move(i), std::move(b), std::move(skew), std::move(j)};
}

namespace {

Submodule stacked(const FiniteAlgebra& a, const FiniteAlgebra& r, const Submodule& first, const Submodule& second) {
  require_double_of(a, r);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < first.generator_count(); ++i) gens.push_back(embed(a, first.generator(i)));
  for (std::size_t i = 0; i < second.generator_count(); ++i) gens.push_back(embed_second(a, second.generator(i)));
  return Submodule::span(r.modulus(), r.rank(), gens);
}

}  // namespace

Submodule predicted_associative_center(const EssentialityData& data, const FiniteAlgebra& a, const FiniteAlgebra& r) {
  return stacked(a, r, data.center, data.commutator_annihilator);
}

Submodule predicted_center(const EssentialityData& data, const FiniteAlgebra& a, const FiniteAlgebra& r) {
  return stacked(a, r, intersect(data.symmetric_center, data.center),
                 intersect(data.commutator_annihilator, data.skew_annihilator));
}

namespace {

IdentitySide parse_side(const std::string& s) {
  // "(pq)r" or "p(qr)"
  if (s.size() != 5) throw std::invalid_argument("malformed identity side: " + s);
  if (s[0] == '(' && s[3] == ')') return {true, {s[1], s[2], s[4]}};
  if (s[1] == '(' && s[4] == ')') return {false, {s[0], s[2], s[3]}};
  throw std::invalid_argument("malformed identity side: " + s);
}

std::vector<Identity> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Identity> out;
  for (const char* t : texts) out.push_back(parse_identity(t));
  return out;
}

}  // namespace

Identity parse_identity(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("identity without '=': " + text);
  return {parse_side(text.substr(0, eq)), parse_side(text.substr(eq + 1)), text};
}

std::span<const Identity> center_identities() {
  static const std::vector<Identity> table = parse_all({
      "(xu)v=x(uv)", "(ux)v=u(xv)", "(uv)x=u(vx)",
      "v(ux)=x(vu)", "(xu)v=u(vx)", "(vu)x=(xv)u",
      "v(xu)=(vu)x", "v(ux)=(vx)u", "x(uv)=u(xv)",
      "(ux)v=(uv)x", "v(xu)=(xv)u", "x(vu)=(vx)u",
  });
  return table;
}

std::span<const Identity> annihilator_identities() {
  static const std::vector<Identity> table = parse_all({
      "(uy)v=y(vu)", "(uy)v=(yv)u", "y(vu)=u(yv)",
      "v(yu)=y(uv)", "(yu)v=(vy)u", "y(uv)=(vy)u",
      "v(uy)=(uv)y", "v(uy)=u(vy)", "(vu)y=u(vy)",
      "(yu)v=(vu)y", "v(yu)=u(yv)", "(uv)y=(yv)u",
  });
  return table;
}

namespace {

Vector evaluate(const FiniteAlgebra& a, const IdentitySide& side, const Vector& t, const Vector& u, const Vector& v) {
  auto pick = [&](char c) -> const Vector& { return c == 'u' ? u : c == 'v' ? v : t; };
  const Vector& p = pick(side.vars[0]);
  const Vector& q = pick(side.vars[1]);
  const Vector& r = pick(side.vars[2]);
  return side.left_nested ? mul(a, mul(a, p, q), r) : mul(a, p, mul(a, q, r));
}

}  // namespace

bool identity_holds(const FiniteAlgebra& a, const Identity& id, const Vector& t, const Vector& u, const Vector& v) {
  return evaluate(a, id.lhs, t, u, v) == evaluate(a, id.rhs, t, u, v);
}

bool n_membership_by_identities(const FiniteAlgebra& a, const Vector& x, const Vector& y) {
  const auto e = basis_vectors(a);
  const Vector xr = reduce(x, a.modulus());
  const Vector yr = reduce(y, a.modulus());
  for (const auto& u : e) {
    for (const auto& v : e) {
      for (const auto& id : center_identities())
        if (!identity_holds(a, id, xr, u, v)) return false;
      for (const auto& id : annihilator_identities())
        if (!identity_holds(a, id, yr, u, v)) return false;
    }
  }
  return true;
}

Submodule generated_subalgebra(const FiniteAlgebra& a, std::span<const Vector> generators) {
  std::vector<Vector> seed(generators.begin(), generators.end());
  seed.push_back(a.unit());
  Submodule cur = Submodule::span(a.modulus(), a.rank(), seed);
  while (true) {
    const auto g = cur.generator_list();
    std::vector<Vector> next = g;
    for (const auto& x : g)
      for (const auto& y : g) next.push_back(mul(a, x, y));
    Submodule grown = Submodule::span(a.modulus(), a.rank(), next);
    if (grown == cur) return cur;
    cur = std::move(grown);
  }
}

bool is_associative_on(const FiniteAlgebra& a, const Submodule& s) {
  const auto g = s.generator_list();
  for (const auto& x : g)
    for (const auto& y : g)
      for (const auto& z : g)
        if (!associator(a, x, y, z).isZero()) return false;
  return true;
}

}  // namespace cdalg
