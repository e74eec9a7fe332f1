#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/exponent_vector.hpp"
#include "sagbi_forge/field.hpp"
#include "sagbi_forge/monomial_order.hpp"
#include "sagbi_forge/variable_table.hpp"

namespace sagbi_forge {

template <class K>
struct Term {
  ExponentVector exps;
  K coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Canonical storage order: descending graded-lex with the table ranking.
inline std::strong_ordering canonical_compare(const ExponentVector& u, const ExponentVector& v) {
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return u[i] <=> v[i];
  return std::strong_ordering::equal;
}

/// Sparse multivariate polynomial over an exact field K.
///
/// Terms are kept sorted in canonical order (see canonical_compare) with no
/// zero coefficients and no repeated exponents, so two polynomials over the
/// same table are equal iff their term lists are equal. Values are
/// immutable through the public interface.
template <class K = Rational>
class Polynomial {
 public:
  using Traits = FieldTraits<K>;
  using Domain = DomainOf<K>;
  using TermType = Term<K>;

  explicit Polynomial(TablePtr table, Domain dom = {}) : table_(std::move(table)), dom_(dom) {
    if (!table_) throw DomainError("polynomial needs a variable table");
  }

  static Polynomial constant(TablePtr table, long long c, Domain dom = {}) {
    Polynomial p(table, dom);
    K k = Traits::from_int(c, dom);
    if (!Traits::is_zero(k)) p.terms_.push_back({ExponentVector(p.table_->count()), std::move(k)});
    return p;
  }
  static Polynomial variable(TablePtr table, std::size_t index, Domain dom = {}) {
    Polynomial p(table, dom);
    if (index >= p.table_->count()) throw DimensionError("variable index out of range");
    p.terms_.push_back({ExponentVector::unit(p.table_->count(), index), Traits::from_int(1, dom)});
    return p;
  }
  static Polynomial variable(TablePtr table, const std::string& name, Domain dom = {}) {
    auto i = table->index_of(name);
    return variable(std::move(table), i, dom);
  }
  static Polynomial monomial(TablePtr table, ExponentVector e, K c, Domain dom = {}) {
    Polynomial p(table, dom);
    if (e.size() != p.table_->count()) throw DimensionError("exponent length does not match table");
    if (!Traits::is_zero(c)) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
  }
  /// Builds a polynomial from arbitrary terms: combines repeats, drops zeros.
  static Polynomial from_terms(TablePtr table, std::vector<TermType> terms, Domain dom = {}) {
    Polynomial p(table, dom);
    for (auto& t : terms) {
      if (t.exps.size() != p.table_->count()) throw DimensionError("exponent length does not match table");
      // mpq_class(num, den) does not reduce; equality needs canonical form
      if constexpr (std::is_same_v<K, Rational>) t.coeff.canonicalize();
    }
    std::sort(terms.begin(), terms.end(),
              [](const TermType& a, const TermType& b) { return canonical_compare(a.exps, b.exps) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && Traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && Traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
  }

  [[nodiscard]] const TablePtr& table() const { return table_; }
  [[nodiscard]] const Domain& domain() const { return dom_; }
  [[nodiscard]] const std::vector<TermType>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t num_terms() const { return terms_.size(); }
  [[nodiscard]] std::size_t num_vars() const { return table_->count(); }
  [[nodiscard]] std::uint32_t total_degree() const {
    return terms_.empty() ? 0 : terms_.front().exps.degree();
  }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] bool is_homogeneous() const {
    return terms_.empty() || terms_.back().exps.degree() == terms_.front().exps.degree();
  }

  /// Coefficient of x^e (zero if absent).
  [[nodiscard]] K coefficient(const ExponentVector& e) const {
    for (const auto& t : terms_)
      if (t.exps == e) return t.coeff;
    return Traits::from_int(0, dom_);
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.merge(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.merge(b, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_table(a.table_, b.table_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.table_, a.dom_);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].coeff, a.terms_[0].exps);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].coeff, b.terms_[0].exps);
    std::unordered_map<ExponentVector, K, ExponentVectorHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto [it, fresh] = acc.try_emplace(s.exps + t.exps, s.coeff * t.coeff);
        if (!fresh) it->second += s.coeff * t.coeff;
      }
    std::vector<TermType> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (!Traits::is_zero(c)) terms.push_back({e, std::move(c)});
    std::sort(terms.begin(), terms.end(),
              [](const TermType& x, const TermType& y) { return canonical_compare(x.exps, y.exps) > 0; });
    Polynomial r(a.table_, a.dom_);
    r.terms_ = std::move(terms);
    return r;
  }

  [[nodiscard]] Polynomial scale(const K& c) const {
    if (Traits::is_zero(c)) return Polynomial(table_, dom_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  /// c * x^e * this. Multiplying by a monomial preserves the term order.
  [[nodiscard]] Polynomial mul_term(const K& c, const ExponentVector& e) const {
    if (e.size() != num_vars()) throw DimensionError("exponent length does not match table");
    Polynomial r(table_, dom_);
    if (Traits::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exps + e, t.coeff * c});
    return r;
  }

  [[nodiscard]] Polynomial pow(unsigned k) const {
    Polynomial r = constant(table_, 1, dom_), base = *this;
    while (k) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  /// Order-maximal term. Throws EmptyInputError on the zero polynomial.
  [[nodiscard]] const TermType& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw EmptyInputError("leading term of the zero polynomial");
    if (order.num_vars() != num_vars()) throw DimensionError("order does not match the polynomial's table");
    const TermType* best = &terms_.front();
    for (const auto& t : terms_)
      if (order.compare_unchecked(t.exps, best->exps) > 0) best = &t;
    return *best;
  }

  /// Divides by the order-leading coefficient. Zero stays zero.
  [[nodiscard]] Polynomial monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return scale(Traits::inverse(leading_term(order).coeff));
  }

  /// Sum of the terms of maximal weight <w, e>.
  [[nodiscard]] Polynomial initial_form(std::span<const BigInt> w) const {
    if (w.size() != num_vars()) throw DimensionError("weight vector length does not match table");
    Polynomial r(table_, dom_);
    if (is_zero()) return r;
    std::vector<BigInt> ws;
    ws.reserve(terms_.size());
    BigInt best;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      BigInt s = 0;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (terms_[k].exps[i]) s += w[i] * static_cast<unsigned long>(terms_[k].exps[i]);
      if (k == 0 || s > best) best = s;
      ws.push_back(std::move(s));
    }
    for (std::size_t k = 0; k < terms_.size(); ++k)
      if (ws[k] == best) r.terms_.push_back(terms_[k]);
    return r;
  }

  /// Replaces variable i by images[i] (all over `target`).
  [[nodiscard]] Polynomial substitute(std::span<const Polynomial> images, const TablePtr& target) const {
    if (images.size() != num_vars()) throw DimensionError("one image per variable required");
    for (const auto& im : images) require_same_table(im.table(), target);
    std::vector<std::vector<Polynomial>> powers(num_vars());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1, dom_));
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      return cache[e];
    };
    std::unordered_map<ExponentVector, K, ExponentVectorHash> acc;
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, 1, dom_).scale(t.coeff);
      for (std::size_t i = 0; i < num_vars() && !prod.is_zero(); ++i)
        if (t.exps[i]) prod = prod * power(i, t.exps[i]);
      for (auto& s : prod.terms_) {
        auto [it, fresh] = acc.try_emplace(s.exps, s.coeff);
        if (!fresh) it->second += s.coeff;
      }
    }
    std::vector<TermType> terms;
    for (auto& [e, c] : acc)
      if (!Traits::is_zero(c)) terms.push_back({e, std::move(c)});
    return from_terms(target, std::move(terms), dom_);
  }

  /// Same terms read over another table with the same variable count, or
  /// with variables relocated through `index_map` (old index -> new index).
  [[nodiscard]] Polynomial relabel(const TablePtr& target, std::span<const std::size_t> index_map) const {
    if (index_map.size() != num_vars()) throw DimensionError("index map must cover every variable");
    std::vector<TermType> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
      ExponentVector e(target->count());
      for (std::size_t i = 0; i < num_vars(); ++i)
        if (t.exps[i]) {
          if (index_map[i] >= target->count()) throw DimensionError("relabel target out of range");
          e.set(index_map[i], t.exps[i]);
        }
      terms.push_back({std::move(e), t.coeff});
    }
    return from_terms(target, std::move(terms), dom_);
  }

  /// Human-readable form, e.g. "x1*y2 - xp2*yp1".
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& t = terms_[k];
      bool neg = Traits::is_negative(t.coeff);
      K mag = neg ? K(-t.coeff) : t.coeff;
      if (k == 0) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      std::string mono;
      for (std::size_t i = 0; i < num_vars(); ++i) {
        if (!t.exps[i]) continue;
        if (!mono.empty()) mono += '*';
        mono += table_->name(i);
        if (t.exps[i] > 1) mono += '^' + std::to_string(t.exps[i]);
      }
      if (mono.empty()) out += Traits::to_string(mag);
      else if (Traits::is_one(mag)) out += mono;
      else out += Traits::to_string(mag) + '*' + mono;
    }
    return out;
  }

 private:
  Polynomial merge(const Polynomial& b, bool subtract) const {
    require_same_table(table_, b.table_);
    Polynomial r(table_, dom_);
    r.terms_.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      std::strong_ordering c = std::strong_ordering::greater;
      if (i == terms_.size()) c = std::strong_ordering::less;
      else if (j < b.terms_.size()) c = canonical_compare(terms_[i].exps, b.terms_[j].exps);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({b.terms_[j].exps, subtract ? K(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        K s = subtract ? K(terms_[i].coeff - b.terms_[j].coeff) : K(terms_[i].coeff + b.terms_[j].coeff);
        if (!Traits::is_zero(s)) r.terms_.push_back({terms_[i].exps, std::move(s)});
        ++i, ++j;
      }
    }
    return r;
  }

  TablePtr table_;
  Domain dom_;
  std::vector<TermType> terms_;
};

/// Every variable of the table as a polynomial, in table order.
template <class K>
std::vector<Polynomial<K>> variables_of(const TablePtr& table, DomainOf<K> dom = {}) {
  std::vector<Polynomial<K>> v;
  for (std::size_t i = 0; i < table->count(); ++i) v.push_back(Polynomial<K>::variable(table, i, dom));
  return v;
}

template <class K>
const ExponentVector& leading_exponent(const Polynomial<K>& p, const MonomialOrder& order) {
  return p.leading_term(order).exps;
}

}  // namespace sagbi_forge
