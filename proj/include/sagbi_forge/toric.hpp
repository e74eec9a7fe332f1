#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/field.hpp"
#include "sagbi_forge/groebner.hpp"
#include "sagbi_forge/polynomial.hpp"

namespace sagbi_forge {

using IntVector = std::vector<std::int64_t>;

/// Finite list of distinct nonnegative integer vectors of one length, each
/// labelled by the name of its z-variable.
class PointConfiguration {
 public:
  PointConfiguration(std::vector<IntVector> points, std::vector<std::string> labels)
      : points_(std::move(points)), labels_(std::move(labels)) {
    if (points_.size() != labels_.size()) throw DimensionError("one label per point required");
    std::set<IntVector> seen;
    std::set<std::string> seen_labels;
    for (const auto& p : points_) {
      if (p.size() != points_.front().size()) throw DimensionError("points of different length");
      for (auto x : p)
        if (x < 0) throw DomainError("point coordinates must be nonnegative");
      if (!seen.insert(p).second) throw DomainError("repeated point in configuration");
    }
    for (const auto& l : labels_)
      if (!seen_labels.insert(l).second) throw DomainError("repeated label " + l);
  }

  /// Labels z1..zn.
  explicit PointConfiguration(std::vector<IntVector> points)
      : PointConfiguration(points, default_labels(points.size())) {}

  [[nodiscard]] const std::vector<IntVector>& points() const { return points_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] std::size_t dimension() const { return points_.empty() ? 0 : points_.front().size(); }

  [[nodiscard]] std::optional<std::size_t> index_of(const IntVector& p) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i] == p) return i;
    return std::nullopt;
  }

  [[nodiscard]] std::set<IntVector> point_set() const { return {points_.begin(), points_.end()}; }

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

  static std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> l;
    for (std::size_t i = 1; i <= n; ++i) l.push_back("z" + std::to_string(i));
    return l;
  }

 private:
  std::vector<IntVector> points_;
  std::vector<std::string> labels_;
};

/// Appends a constant coordinate 1 to every point.
inline PointConfiguration homogenize(const PointConfiguration& a) {
  auto pts = a.points();
  for (auto& p : pts) p.push_back(1);
  return PointConfiguration(std::move(pts), a.labels());
}

/// Rank over the integers (equivalently the rationals) of a list of vectors.
inline std::size_t lattice_rank(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<BigInt>> m;
  for (const auto& v : vectors) {
    if (v.size() != cols) throw DimensionError("vectors of different length");
    std::vector<BigInt> row;
    for (auto x : v) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  // fraction-free elimination
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

inline std::size_t lattice_rank(const PointConfiguration& a) { return lattice_rank(a.points()); }

/// Basis of the integer relations sum c_i a_i = 0 (a basis of the rational
/// kernel, scaled to primitive integer vectors).
inline std::vector<IntVector> relation_lattice_basis(const std::vector<IntVector>& points) {
  const std::size_t n = points.size();
  if (n == 0) return {};
  const std::size_t d = points.front().size();
  // matrix with the points as columns, reduced to RREF over Q
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i) m[i][j] = static_cast<long>(points[j][i]);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < d; ++c) {
    std::size_t piv = row;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) continue;
    std::swap(m[piv], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    BigInt l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector iv;
    std::vector<BigInt> big;
    for (const auto& x : v) {
      BigInt y = x.get_num() * (l / x.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
      big.push_back(y);
    }
    for (auto& y : big) iv.push_back(BigInt(y / g).get_si());
    basis.push_back(std::move(iv));
  }
  return basis;
}

namespace detail {

/// Kernel of z_i -> t^{a_i}; points need not be distinct here.
template <class K>
Ideal<K> toric_ideal_of_points(const std::vector<IntVector>& points, const TablePtr& ztable, DomainOf<K> dom,
                               const GroebnerOptions& opts) {
  if (points.size() != ztable->count()) throw DimensionError("one z-variable per point required");
  const std::size_t d = points.empty() ? 0 : points.front().size();
  if (d == 0) {
    // every point is the empty vector, so z_i - 1 would be in the kernel
    throw DomainError("toric ideal of zero-dimensional points");
  }
  std::vector<std::string> tnames;
  for (std::size_t i = 1; i <= d; ++i) tnames.push_back("t" + std::to_string(i));
  auto ttable = make_table(std::move(tnames), Role::aux);
  std::vector<Polynomial<K>> images;
  for (const auto& p : points) {
    ExponentVector e(std::span<const std::int64_t>(p.data(), p.size()));
    images.push_back(Polynomial<K>::monomial(ttable, std::move(e), FieldTraits<K>::from_int(1, dom), dom));
  }
  return kernel_of_map(AlgebraMap<K>(ztable, ttable, std::move(images)), opts);
}

}  // namespace detail

/// Toric ideal I_A: kernel of z_i -> x^{a_i}, as the reduced grevlex
/// Groebner basis of binomials over the table of the configuration labels.
template <class K = Rational>
Ideal<K> toric_ideal(const PointConfiguration& a, DomainOf<K> dom = {}, const GroebnerOptions& opts = {}) {
  return detail::toric_ideal_of_points<K>(a.points(), make_table(a.labels(), Role::z), dom, opts);
}

/// Number of distinct points sum c_i a_i (c_i >= 0) with sum c_i g_i = D.
inline std::size_t monoid_count_at_degree(const PointConfiguration& a, const std::vector<unsigned>& grading,
                                          unsigned degree) {
  if (grading.size() != a.size()) throw DimensionError("one degree per point required");
  for (auto g : grading)
    if (g == 0) throw DomainError("grading must be positive");
  std::vector<std::set<IntVector>> level(degree + 1);
  level[0].insert(IntVector(a.dimension(), 0));
  for (unsigned d = 1; d <= degree; ++d)
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (grading[i] > d) continue;
      for (const auto& base : level[d - grading[i]]) {
        IntVector s = base;
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += a.points()[i][k];
        level[d].insert(std::move(s));
      }
    }
  return level[degree].size();
}

}  // namespace sagbi_forge
