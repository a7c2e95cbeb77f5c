// Brute-force reference implementations used only by tests. Everything here
// works by exhaustive enumeration of (Z/n)^d and shares no code with the
// library beyond the Vector type.

#pragma once

#include "cdalg/residue_linalg.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<std::int64_t>;
using Set = std::set<Tuple>;

inline Tuple tuple(const cdalg::Vector& v) { return Tuple(v.data(), v.data() + v.size()); }

inline cdalg::Vector vec(const Tuple& t) {
  cdalg::Vector v(static_cast<Eigen::Index>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) v[static_cast<Eigen::Index>(i)] = t[i];
  return v;
}

inline std::vector<Tuple> all_tuples(std::int64_t n, std::size_t d) {
  std::vector<Tuple> out;
  Tuple t(d, 0);
  while (true) {
    out.push_back(t);
    std::size_t k = 0;
    while (k < d && ++t[k] == n) t[k++] = 0;
    if (k == d) break;
  }
  return out;
}

inline Tuple add(const Tuple& a, const Tuple& b, std::int64_t n) {
  Tuple c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % n;
  return c;
}

// Additive closure of the generators, starting from zero.
inline Set span(std::int64_t n, std::size_t d, const std::vector<Tuple>& gens) {
  Set s{Tuple(d, 0)};
  std::vector<Tuple> frontier{Tuple(d, 0)};
  while (!frontier.empty()) {
    std::vector<Tuple> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Tuple y = add(x, g, n);
        if (s.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return s;
}

// Row vector times matrix.
inline Tuple times(const Tuple& v, const std::vector<Tuple>& rows, std::int64_t n, std::size_t cols) {
  Tuple out(cols, 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) out[c] = (out[c] + v[r] * rows[r][c]) % n;
  return out;
}

inline Set kernel(std::int64_t n, const std::vector<Tuple>& rows, std::size_t cols) {
  Set s;
  for (const auto& v : all_tuples(n, rows.size()))
    if (times(v, rows, n, cols) == Tuple(cols, 0)) s.insert(v);
  return s;
}

inline Set intersection(const Set& a, const Set& b) {
  Set s;
  for (const auto& x : a)
    if (b.count(x)) s.insert(x);
  return s;
}

inline Set elements(const cdalg::Submodule& s) {
  Set out;
  for (const auto& v : cdalg::enumerate(s)) out.insert(tuple(v));
  return out;
}

inline std::vector<Tuple> random_rows(std::mt19937_64& rng, std::int64_t n, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<std::int64_t> dist(0, n - 1);
  std::vector<Tuple> out(rows, Tuple(cols));
  for (auto& r : out)
    for (auto& x : r) x = dist(rng);
  return out;
}

inline cdalg::ResidueMatrix matrix(std::int64_t n, const std::vector<Tuple>& rows, std::size_t cols) {
  cdalg::Matrix m = cdalg::Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return {n, m};
}

inline std::vector<cdalg::Vector> vectors(const std::vector<Tuple>& rows) {
  std::vector<cdalg::Vector> out;
  for (const auto& r : rows) out.push_back(vec(r));
  return out;
}

}  // namespace oracle
