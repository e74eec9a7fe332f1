#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/exponent_vector.hpp"
#include "sagbi_forge/field.hpp"

namespace sagbi_forge {

enum class OrderKind { lex, graded_lex, graded_reverse_lex, weight, block };

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::graded_lex: return "grlex";
    case OrderKind::graded_reverse_lex: return "grevlex";
    case OrderKind::weight: return "weight";
    case OrderKind::block: return "block";
  }
  return "?";
}

/// A multiplicative total well-order on exponent vectors of a fixed length.
///
/// Lex-type orders rank variables by `ranking` (first entry is largest);
/// the default ranking is the table order. Weight orders compare by an
/// arbitrary-precision nonnegative weight and break ties with another
/// order. Block orders compare block by block, each block carrying its own
/// lex / grlex / grevlex order on its variables; this is the elimination
/// order when the block to be eliminated comes first.
class MonomialOrder {
 public:
  struct Block {
    std::vector<std::size_t> vars;
    OrderKind kind = OrderKind::graded_reverse_lex;
  };

  static MonomialOrder lex(std::size_t n, std::vector<std::size_t> ranking = {}) {
    return ranked(OrderKind::lex, n, std::move(ranking));
  }
  static MonomialOrder graded_lex(std::size_t n, std::vector<std::size_t> ranking = {}) {
    return ranked(OrderKind::graded_lex, n, std::move(ranking));
  }
  static MonomialOrder graded_reverse_lex(std::size_t n, std::vector<std::size_t> ranking = {}) {
    return ranked(OrderKind::graded_reverse_lex, n, std::move(ranking));
  }
  static MonomialOrder of_kind(OrderKind kind, std::size_t n) {
    if (kind == OrderKind::weight || kind == OrderKind::block)
      throw DomainError("order kind needs extra data: " + to_string(kind));
    return ranked(kind, n, {});
  }

  /// Weight order. Weights must be nonnegative; with a zero weight the
  /// tie-break order must itself be a well-order (all built-ins are).
  static MonomialOrder weight(std::vector<BigInt> w, MonomialOrder tiebreak) {
    if (w.size() != tiebreak.n_) throw DimensionError("weight vector length mismatch");
    MonomialOrder o;
    o.kind_ = OrderKind::weight;
    o.n_ = w.size();
    o.small_weights_ = true;
    for (const auto& x : w) {
      if (x < 0) throw DomainError("negative weight");
      if (x >= (BigInt(1) << 40)) o.small_weights_ = false;
    }
    if (o.small_weights_)
      for (const auto& x : w) o.w64_.push_back(x.get_si());
    o.weights_ = std::move(w);
    o.tiebreak_ = std::make_shared<const MonomialOrder>(std::move(tiebreak));
    return o;
  }

  static MonomialOrder block(std::size_t n, std::vector<Block> blocks) {
    std::vector<int> seen(n, 0);
    for (const auto& b : blocks) {
      if (b.kind == OrderKind::weight || b.kind == OrderKind::block)
        throw DomainError("block inner order must be lex, grlex or grevlex");
      for (auto v : b.vars) {
        if (v >= n) throw DimensionError("block variable out of range");
        ++seen[v];
      }
    }
    for (int s : seen)
      if (s != 1) throw DomainError("blocks must partition the variables");
    MonomialOrder o;
    o.kind_ = OrderKind::block;
    o.n_ = n;
    o.blocks_ = std::move(blocks);
    return o;
  }

  /// Elimination order: `drop` block first (grevlex inside), remaining
  /// variables after it with `keep_kind`.
  static MonomialOrder elimination(std::size_t n, const std::vector<std::size_t>& drop,
                                   OrderKind keep_kind = OrderKind::graded_reverse_lex) {
    std::vector<char> is_drop(n, 0);
    for (auto v : drop) {
      if (v >= n) throw DimensionError("eliminated variable out of range");
      is_drop[v] = 1;
    }
    Block first{{}, OrderKind::graded_reverse_lex}, second{{}, keep_kind};
    for (std::size_t i = 0; i < n; ++i) (is_drop[i] ? first : second).vars.push_back(i);
    std::vector<Block> blocks;
    if (!first.vars.empty()) blocks.push_back(std::move(first));
    if (!second.vars.empty()) blocks.push_back(std::move(second));
    return block(n, std::move(blocks));
  }

  [[nodiscard]] OrderKind kind() const { return kind_; }
  [[nodiscard]] std::size_t num_vars() const { return n_; }
  [[nodiscard]] const std::vector<std::size_t>& ranking() const { return ranking_; }
  [[nodiscard]] const std::vector<BigInt>& weights() const { return weights_; }
  [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }

  [[nodiscard]] std::strong_ordering compare(const ExponentVector& u, const ExponentVector& v) const {
    if (u.size() != n_ || v.size() != n_) throw DimensionError("exponent vector length does not match order");
    return compare_unchecked(u, v);
  }

  [[nodiscard]] std::strong_ordering compare_unchecked(const ExponentVector& u,
                                                       const ExponentVector& v) const {
    switch (kind_) {
      case OrderKind::lex: return lex_on(ranking_, u, v);
      case OrderKind::graded_lex:
        if (u.degree() != v.degree()) return u.degree() <=> v.degree();
        return lex_on(ranking_, u, v);
      case OrderKind::graded_reverse_lex:
        if (u.degree() != v.degree()) return u.degree() <=> v.degree();
        return revlex_on(ranking_, u, v);
      case OrderKind::weight: {
        auto c = weight_compare(u, v);
        if (c != 0) return c;
        return tiebreak_->compare_unchecked(u, v);
      }
      case OrderKind::block:
        for (const auto& b : blocks_) {
          auto c = inner_compare(b, u, v);
          if (c != 0) return c;
        }
        return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
  }

  [[nodiscard]] bool less(const ExponentVector& u, const ExponentVector& v) const {
    return compare_unchecked(u, v) < 0;
  }
  [[nodiscard]] bool greater(const ExponentVector& u, const ExponentVector& v) const {
    return compare_unchecked(u, v) > 0;
  }

  /// Weight of `u` under this weight order's vector.
  [[nodiscard]] BigInt weight_of(const ExponentVector& u) const {
    BigInt s = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (u[i]) s += weights_[i] * static_cast<unsigned long>(u[i]);
    return s;
  }

  [[nodiscard]] std::string describe() const {
    switch (kind_) {
      case OrderKind::weight: return "weight+" + tiebreak_->describe();
      case OrderKind::block: {
        std::string s = "block(";
        for (std::size_t i = 0; i < blocks_.size(); ++i)
          s += (i ? "," : "") + to_string(blocks_[i].kind) + ":" + std::to_string(blocks_[i].vars.size());
        return s + ")";
      }
      default: return to_string(kind_);
    }
  }

 private:
  MonomialOrder() = default;

  static MonomialOrder ranked(OrderKind kind, std::size_t n, std::vector<std::size_t> ranking) {
    if (n == 0) throw DomainError("order on zero variables");
    if (ranking.empty()) {
      ranking.resize(n);
      std::iota(ranking.begin(), ranking.end(), std::size_t{0});
    }
    if (ranking.size() != n) throw DimensionError("ranking must list every variable once");
    std::vector<char> seen(n, 0);
    for (auto r : ranking) {
      if (r >= n || seen[r]) throw DomainError("ranking is not a permutation");
      seen[r] = 1;
    }
    MonomialOrder o;
    o.kind_ = kind;
    o.n_ = n;
    o.ranking_ = std::move(ranking);
    return o;
  }

  static std::strong_ordering lex_on(const std::vector<std::size_t>& vars, const ExponentVector& u,
                                     const ExponentVector& v) {
    for (auto k : vars)
      if (u[k] != v[k]) return u[k] <=> v[k];
    return std::strong_ordering::equal;
  }
  static std::strong_ordering revlex_on(const std::vector<std::size_t>& vars, const ExponentVector& u,
                                        const ExponentVector& v) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (u[*it] != v[*it]) return v[*it] <=> u[*it];
    return std::strong_ordering::equal;
  }
  static std::strong_ordering inner_compare(const Block& b, const ExponentVector& u,
                                            const ExponentVector& v) {
    if (b.kind != OrderKind::lex) {
      std::uint32_t du = 0, dv = 0;
      for (auto k : b.vars) du += u[k], dv += v[k];
      if (du != dv) return du <=> dv;
      if (b.kind == OrderKind::graded_reverse_lex) return revlex_on(b.vars, u, v);
    }
    return lex_on(b.vars, u, v);
  }
  std::strong_ordering weight_compare(const ExponentVector& u, const ExponentVector& v) const {
    if (small_weights_) {
      __int128 d = 0;
      for (std::size_t i = 0; i < n_; ++i)
        if (u[i] != v[i]) d += static_cast<__int128>(w64_[i]) * (int(u[i]) - int(v[i]));
      return d <=> 0;
    }
    return cmp(weight_of(u), weight_of(v)) <=> 0;
  }

  OrderKind kind_ = OrderKind::graded_lex;
  std::size_t n_ = 0;
  std::vector<std::size_t> ranking_;
  std::vector<BigInt> weights_;
  std::vector<long long> w64_;
  bool small_weights_ = false;
  std::shared_ptr<const MonomialOrder> tiebreak_;
  std::vector<Block> blocks_;
};

/// Graded lex on kab_table(a, b): x_1 > .. > x_a > x'_1 > .. > x'_b >
/// y'_1 > .. > y'_a > y_1 > .. > y_b.
inline MonomialOrder kab_order(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw DomainError("kab_order needs a >= 1 and b >= 1");
  return MonomialOrder::graded_lex(2 * (a + b));
}

/// w_r = 2^{N-r}, N = 2(a+b). Every entry exceeds the sum of all later ones,
/// so on the generators of the K_{a,b} subalgebra the w-initial form is the
/// kab_order leading term.
inline std::vector<BigInt> kab_weight(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw DomainError("kab_weight needs a >= 1 and b >= 1");
  const std::size_t n = 2 * (a + b);
  std::vector<BigInt> w(n);
  for (std::size_t r = 0; r < n; ++r) mpz_ui_pow_ui(w[r].get_mpz_t(), 2, n - 1 - r);
  return w;
}

}  // namespace sagbi_forge
