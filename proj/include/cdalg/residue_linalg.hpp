// Exact linear algebra over Z/nZ for arbitrary n >= 2.
//
// Row spans are kept in Howell normal form, which is unique for a given
// additive span even when n has zero divisors. All vectors are row-oriented:
// the kernel of a matrix m is {v : v * m = 0}.

#pragma once

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <iterator>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace cdalg {

template <std::signed_integral T>
using VectorT = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <std::signed_integral T>
using MatrixT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Residue = std::int64_t;
using Vector = VectorT<Residue>;
using Matrix = MatrixT<Residue>;

/// Default cap on the number of elements any enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t requested, std::uint64_t budget)
      : std::runtime_error("enumeration of " + (requested == 0 ? std::string("more than 2^64")
                                                               : std::to_string(requested)) +
                           " elements exceeds budget " + std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}

  /// 0 when the requested count does not fit in 64 bits.
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

namespace detail {

template <class T>
using Wide = std::conditional_t<(sizeof(T) < 8), std::int64_t, __int128>;

template <class T>
constexpr T mod(Wide<T> x, T n) noexcept {
  Wide<T> r = x % n;
  return static_cast<T>(r < 0 ? r + n : r);
}

template <class T>
constexpr T mulmod(T a, T b, T n) noexcept {
  return mod<T>(static_cast<Wide<T>>(a) * b, n);
}

template <class T>
struct Bezout {
  T g, s, t;  // s*a + t*b == g
};

template <class T>
constexpr Bezout<T> xgcd(T a, T b) noexcept {
  T s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    T q = a / b;
    std::tie(a, b) = std::pair{b, a - q * b};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  return {a, s0, t0};
}

// Unit u of Z/n with u*a == gcd(a, n) (mod n).
template <class T>
T unit_normalizer(T a, T n) {
  const T g = std::gcd(a, n);
  const T nn = n / g;
  const T aa = a / g;
  T inv = nn == 1 ? 0 : mod<T>(xgcd<T>(aa % nn, nn).s, nn);
  // Lift inv mod n/g to a unit mod n.
  for (T u = inv; u < n + nn; u += nn) {
    if (std::gcd(u == 0 ? n : u, n) == 1) return u % n;
  }
  throw std::logic_error("unit_normalizer: no unit lift");
}

template <class T>
using Row = Eigen::Matrix<T, 1, Eigen::Dynamic>;

template <class T>
void reduce_row(Row<T>& r, T n) {
  r = r.unaryExpr([n](T x) { return mod<T>(x, n); });
}

template <class T>
Row<T> combine(T s, const Row<T>& a, T t, const Row<T>& b, T n) {
  Row<T> out(a.size());
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    out[k] = mod<T>(static_cast<Wide<T>>(s) * a[k] + static_cast<Wide<T>>(t) * b[k], n);
  }
  return out;
}

template <class T>
struct Echelon {
  std::vector<Row<T>> rows;
  std::vector<Eigen::Index> pivots;
};

// Howell normal form of the span of `rows` over Z/n.
template <class T>
Echelon<T> howell(std::vector<Row<T>> work, T n, Eigen::Index cols) {
  std::erase_if(work, [](const Row<T>& r) { return r.isZero(); });
  std::vector<Eigen::Index> pivots;
  std::size_t r = 0;
  for (Eigen::Index c = 0; c < cols && r < work.size(); ++c) {
    for (std::size_t i = r + 1; i < work.size(); ++i) {
      const T b = work[i][c];
      if (b == 0) continue;
      const T a = work[r][c];
      if (a == 0) {
        std::swap(work[r], work[i]);
        continue;
      }
      const auto [g, s, t] = xgcd<T>(a, b);
      Row<T> top = combine<T>(s, work[r], t, work[i], n);
      work[i] = combine<T>(static_cast<T>(-(b / g)), work[r], static_cast<T>(a / g), work[i], n);
      work[r] = std::move(top);
    }
    if (work[r][c] == 0) continue;
    const T u = unit_normalizer<T>(work[r][c], n);
    if (u != 1) work[r] = combine<T>(u, work[r], 0, work[r], n);
    const T p = work[r][c];
    if (p != 1) {
      Row<T> sat = combine<T>(n / p, work[r], 0, work[r], n);
      if (!sat.isZero()) work.push_back(std::move(sat));
    }
    pivots.push_back(c);
    ++r;
  }
  work.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const T p = work[k][pivots[k]];
    for (std::size_t i = 0; i < k; ++i) {
      const T q = work[i][pivots[k]] / p;
      if (q != 0) work[i] = combine<T>(1, work[i], static_cast<T>(-q), work[k], n);
    }
  }
  return {std::move(work), std::move(pivots)};
}

}  // namespace detail

/// Dense matrix over Z/nZ with entries held in [0, n).
template <std::signed_integral T>
class BasicResidueMatrix {
 public:
  BasicResidueMatrix(T modulus, MatrixT<T> entries) : modulus_(modulus), entries_(std::move(entries)) {
    if (modulus_ < 2) throw std::invalid_argument("modulus must be at least 2");
    entries_ = entries_.unaryExpr([this](T x) { return detail::mod<T>(x, modulus_); });
  }

  static BasicResidueMatrix zero(T modulus, Eigen::Index rows, Eigen::Index cols) {
    return {modulus, MatrixT<T>::Zero(rows, cols)};
  }

  static BasicResidueMatrix identity(T modulus, Eigen::Index size) {
    return {modulus, MatrixT<T>::Identity(size, size)};
  }

  T modulus() const noexcept { return modulus_; }
  Eigen::Index rows() const noexcept { return entries_.rows(); }
  Eigen::Index cols() const noexcept { return entries_.cols(); }
  const MatrixT<T>& entries() const noexcept { return entries_; }
  T operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  friend bool operator==(const BasicResidueMatrix& a, const BasicResidueMatrix& b) {
    return a.modulus_ == b.modulus_ && a.entries_.rows() == b.entries_.rows() &&
           a.entries_.cols() == b.entries_.cols() && a.entries_ == b.entries_;
  }

 private:
  T modulus_;
  MatrixT<T> entries_;
};

template <std::signed_integral T>
class BasicSubmodule;

template <std::signed_integral T>
BasicSubmodule<T> canonicalize(const BasicResidueMatrix<T>& m);

/// Additive subgroup of (Z/nZ)^d in Howell normal form. Two submodules
/// compare equal iff their spans are equal.
template <std::signed_integral T>
class BasicSubmodule {
 public:
  static BasicSubmodule zero(T modulus, Eigen::Index rank) {
    return BasicSubmodule(modulus, rank, MatrixT<T>(0, rank), {});
  }

  static BasicSubmodule full(T modulus, Eigen::Index rank) {
    return canonicalize(BasicResidueMatrix<T>::identity(modulus, rank));
  }

  /// Span of an arbitrary list of vectors of length `rank`.
  static BasicSubmodule span(T modulus, Eigen::Index rank, std::span<const VectorT<T>> vectors) {
    MatrixT<T> m(static_cast<Eigen::Index>(vectors.size()), rank);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != rank) throw std::invalid_argument("span: vector length mismatch");
      m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
    }
    return canonicalize(BasicResidueMatrix<T>(modulus, std::move(m)));
  }

  T modulus() const noexcept { return modulus_; }
  Eigen::Index ambient_rank() const noexcept { return rank_; }
  /// Canonical generators, one per row.
  const MatrixT<T>& generators() const noexcept { return gens_; }
  std::size_t generator_count() const noexcept { return pivots_.size(); }
  VectorT<T> generator(std::size_t i) const { return gens_.row(static_cast<Eigen::Index>(i)).transpose(); }
  std::vector<VectorT<T>> generator_list() const {
    std::vector<VectorT<T>> out;
    out.reserve(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) out.push_back(generator(i));
    return out;
  }
  const std::vector<Eigen::Index>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return pivots_.empty(); }

  /// Number of coefficients each generator contributes in the unique
  /// representation sum c_i g_i, 0 <= c_i < radix(i).
  T radix(std::size_t i) const { return modulus_ / gens_(static_cast<Eigen::Index>(i), pivots_[i]); }

  /// Number of elements of the span; nullopt if it exceeds 2^64 - 1.
  std::optional<std::uint64_t> order() const {
    unsigned __int128 acc = 1;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      acc *= static_cast<unsigned __int128>(radix(i));
      if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    }
    return static_cast<std::uint64_t>(acc);
  }

  friend bool operator==(const BasicSubmodule& a, const BasicSubmodule& b) {
    return a.modulus_ == b.modulus_ && a.rank_ == b.rank_ && a.gens_.rows() == b.gens_.rows() &&
           a.gens_ == b.gens_;
  }

 private:
  friend BasicSubmodule canonicalize<T>(const BasicResidueMatrix<T>& m);

  BasicSubmodule(T modulus, Eigen::Index rank, MatrixT<T> gens, std::vector<Eigen::Index> pivots)
      : modulus_(modulus), rank_(rank), gens_(std::move(gens)), pivots_(std::move(pivots)) {}

  T modulus_;
  Eigen::Index rank_;
  MatrixT<T> gens_;
  std::vector<Eigen::Index> pivots_;
};

using ResidueMatrix = BasicResidueMatrix<Residue>;
using Submodule = BasicSubmodule<Residue>;

template <std::signed_integral T>
BasicSubmodule<T> canonicalize(const BasicResidueMatrix<T>& m) {
  std::vector<detail::Row<T>> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.emplace_back(m.entries().row(i));
  auto ech = detail::howell<T>(std::move(rows), m.modulus(), m.cols());
  MatrixT<T> gens(static_cast<Eigen::Index>(ech.rows.size()), m.cols());
  for (std::size_t i = 0; i < ech.rows.size(); ++i) gens.row(static_cast<Eigen::Index>(i)) = ech.rows[i];
  return BasicSubmodule<T>(m.modulus(), m.cols(), std::move(gens), std::move(ech.pivots));
}

template <std::signed_integral T>
BasicSubmodule<T> canonicalize(const BasicSubmodule<T>& s) {
  return canonicalize(BasicResidueMatrix<T>(s.modulus(), s.generators()));
}

namespace detail {

// Rows of a Howell form whose first `skip` entries vanish, restricted to the
// remaining columns. They span the projection of the suffix subgroup.
template <class T>
BasicSubmodule<T> suffix_block(const Echelon<T>& ech, T n, Eigen::Index skip, Eigen::Index width) {
  MatrixT<T> out(0, width);
  std::vector<detail::Row<T>> keep;
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    if (ech.pivots[i] >= skip) keep.emplace_back(ech.rows[i].segment(skip, width));
  }
  out.resize(static_cast<Eigen::Index>(keep.size()), width);
  for (std::size_t i = 0; i < keep.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = keep[i];
  return canonicalize(BasicResidueMatrix<T>(n, std::move(out)));
}

template <class T>
void require_compatible(const BasicSubmodule<T>& a, const BasicSubmodule<T>& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch("submodule modulus mismatch");
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("submodule rank mismatch");
}

}  // namespace detail

/// {v : v * m = 0}, a submodule of (Z/n)^rows.
template <std::signed_integral T>
BasicSubmodule<T> kernel(const BasicResidueMatrix<T>& m) {
  const Eigen::Index r = m.rows(), c = m.cols();
  std::vector<detail::Row<T>> rows;
  rows.reserve(static_cast<std::size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) {
    detail::Row<T> row = detail::Row<T>::Zero(c + r);
    row.head(c) = m.entries().row(i);
    row[c + i] = 1;
    rows.push_back(std::move(row));
  }
  const auto ech = detail::howell<T>(std::move(rows), m.modulus(), c + r);
  return detail::suffix_block<T>(ech, m.modulus(), c, r);
}

/// Some v with v * m = b, if one exists.
template <std::signed_integral T>
std::optional<VectorT<T>> solve(const BasicResidueMatrix<T>& m, const VectorT<T>& b) {
  if (b.size() != m.cols()) throw std::invalid_argument("solve: right-hand side length mismatch");
  MatrixT<T> aug(m.rows() + 1, m.cols());
  aug.row(0) = (-b).transpose();
  aug.bottomRows(m.rows()) = m.entries();
  const auto ker = kernel(BasicResidueMatrix<T>(m.modulus(), std::move(aug)));
  if (ker.is_zero() || ker.pivots().front() != 0 || ker.generators()(0, 0) != 1) return std::nullopt;
  return VectorT<T>(ker.generators().row(0).tail(m.rows()).transpose());
}

template <std::signed_integral T>
BasicSubmodule<T> intersect(const BasicSubmodule<T>& a, const BasicSubmodule<T>& b) {
  detail::require_compatible(a, b);
  const Eigen::Index d = a.ambient_rank();
  std::vector<detail::Row<T>> rows;
  for (Eigen::Index i = 0; i < a.generators().rows(); ++i) {
    detail::Row<T> row(2 * d);
    row << a.generators().row(i), a.generators().row(i);
    rows.push_back(std::move(row));
  }
  for (Eigen::Index i = 0; i < b.generators().rows(); ++i) {
    detail::Row<T> row = detail::Row<T>::Zero(2 * d);
    row.head(d) = b.generators().row(i);
    rows.push_back(std::move(row));
  }
  const auto ech = detail::howell<T>(std::move(rows), a.modulus(), 2 * d);
  return detail::suffix_block<T>(ech, a.modulus(), d, d);
}

template <std::signed_integral T>
BasicSubmodule<T> sum(const BasicSubmodule<T>& a, const BasicSubmodule<T>& b) {
  detail::require_compatible(a, b);
  MatrixT<T> m(a.generators().rows() + b.generators().rows(), a.ambient_rank());
  m << a.generators(), b.generators();
  return canonicalize(BasicResidueMatrix<T>(a.modulus(), std::move(m)));
}

template <std::signed_integral T>
bool membership(const VectorT<T>& v, const BasicSubmodule<T>& s) {
  if (v.size() != s.ambient_rank()) throw std::invalid_argument("membership: dimension mismatch");
  const T n = s.modulus();
  detail::Row<T> rest = v.transpose().unaryExpr([n](T x) { return detail::mod<T>(x, n); });
  for (std::size_t i = 0; i < s.generator_count(); ++i) {
    const Eigen::Index c = s.pivots()[i];
    const T p = s.generators()(static_cast<Eigen::Index>(i), c);
    if (rest[c] % p != 0) return false;
    const T q = rest[c] / p;
    if (q != 0) rest = detail::combine<T>(1, rest, static_cast<T>(-q), s.generators().row(static_cast<Eigen::Index>(i)), n);
  }
  return rest.isZero();
}

/// a is contained in b.
template <std::signed_integral T>
bool is_subset(const BasicSubmodule<T>& a, const BasicSubmodule<T>& b) {
  detail::require_compatible(a, b);
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    if (!membership(a.generator(i), b)) return false;
  }
  return true;
}

/// Walks every combination sum c_i v_i with 0 <= c_i < radix_i, updating the
/// running sum by one vector addition per step.
template <std::signed_integral T>
class MixedRadixWalk {
 public:
  MixedRadixWalk(T modulus, std::vector<VectorT<T>> steps, std::vector<T> radices, Eigen::Index dim)
      : n_(modulus), steps_(std::move(steps)), radices_(std::move(radices)), digits_(steps_.size(), 0),
        current_(VectorT<T>::Zero(dim)) {
    wraps_.reserve(steps_.size());
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      wraps_.push_back(steps_[i].unaryExpr([&](T x) { return detail::mod<T>(-static_cast<detail::Wide<T>>(x) * radices_[i], n_); }));
    }
  }

  const VectorT<T>& current() const noexcept { return current_; }
  const std::vector<T>& digits() const noexcept { return digits_; }

  /// Advances to the next combination; false once every combination was seen.
  bool advance() {
    for (std::size_t k = steps_.size(); k-- > 0;) {
      add(steps_[k]);
      if (++digits_[k] < radices_[k]) return true;
      digits_[k] = 0;
      add(wraps_[k]);
    }
    return false;
  }

 private:
  void add(const VectorT<T>& v) {
    for (Eigen::Index i = 0; i < current_.size(); ++i) {
      T x = current_[i] + v[i];
      current_[i] = x >= n_ ? x - n_ : x;
    }
  }

  T n_;
  std::vector<VectorT<T>> steps_;
  std::vector<VectorT<T>> wraps_;
  std::vector<T> radices_;
  std::vector<T> digits_;
  VectorT<T> current_;
};

/// Range over every element of a submodule, each exactly once, starting at 0.
template <std::signed_integral T>
class BasicSpanRange {
 public:
  class iterator {
   public:
    using value_type = VectorT<T>;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(MixedRadixWalk<T> walk) : walk_(std::move(walk)) {}

    const VectorT<T>& operator*() const { return walk_->current(); }
    const VectorT<T>* operator->() const { return &walk_->current(); }
    iterator& operator++() {
      if (!walk_->advance()) walk_.reset();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.walk_.has_value(); }

   private:
    std::optional<MixedRadixWalk<T>> walk_;
  };

  BasicSpanRange(const BasicSubmodule<T>& s, std::uint64_t count) : s_(s), count_(count) {}

  iterator begin() const {
    std::vector<T> radices;
    for (std::size_t i = 0; i < s_.generator_count(); ++i) radices.push_back(s_.radix(i));
    return iterator(MixedRadixWalk<T>(s_.modulus(), s_.generator_list(), std::move(radices), s_.ambient_rank()));
  }
  std::default_sentinel_t end() const { return {}; }
  std::uint64_t size() const noexcept { return count_; }

 private:
  BasicSubmodule<T> s_;
  std::uint64_t count_;
};

using SpanRange = BasicSpanRange<Residue>;

/// Enumerates the span of s. Throws BudgetExceeded instead of truncating.
template <std::signed_integral T>
BasicSpanRange<T> enumerate(const BasicSubmodule<T>& s, std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto count = s.order();
  if (!count) throw BudgetExceeded(0, budget);
  if (*count > budget) throw BudgetExceeded(*count, budget);
  return BasicSpanRange<T>(s, *count);
}

/// Reduces every coordinate into [0, n).
template <std::signed_integral T>
VectorT<T> reduce(const VectorT<T>& v, T n) {
  return v.unaryExpr([n](T x) { return detail::mod<T>(x, n); });
}

/// Image of s under x -> f(x) for a linear map f given by its action on vectors.
template <std::signed_integral T, class F>
BasicSubmodule<T> image(const BasicSubmodule<T>& s, Eigen::Index target_rank, F&& f) {
  std::vector<VectorT<T>> imgs;
  for (std::size_t i = 0; i < s.generator_count(); ++i) imgs.push_back(f(s.generator(i)));
  return BasicSubmodule<T>::span(s.modulus(), target_rank, imgs);
}

}  // namespace cdalg
