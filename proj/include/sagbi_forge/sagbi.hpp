#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/groebner.hpp"
#include "sagbi_forge/polynomial.hpp"
#include "sagbi_forge/toric.hpp"

namespace sagbi_forge {

/// A finite generating set F of the subalgebra k[F], with the monomial
/// order used for leading terms and one z-label per generator.
template <class K = Rational>
class SubalgebraGens {
 public:
  SubalgebraGens(std::vector<Polynomial<K>> gens, MonomialOrder order, std::vector<std::string> labels)
      : gens_(std::move(gens)), order_(std::move(order)), labels_(std::move(labels)) {
    if (gens_.empty()) throw EmptyInputError("subalgebra needs at least one generator");
    if (labels_.size() != gens_.size()) throw DimensionError("one label per generator required");
    for (const auto& g : gens_) {
      if (g.is_zero()) throw EmptyInputError("zero generator");
      require_same_table(g.table(), gens_.front().table());
    }
    if (order_.num_vars() != gens_.front().num_vars()) throw DimensionError("order does not match table");
    label_table_ = make_table(labels_, Role::z);  // rejects duplicate labels
  }

  [[nodiscard]] const std::vector<Polynomial<K>>& gens() const { return gens_; }
  [[nodiscard]] const MonomialOrder& order() const { return order_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::size_t size() const { return gens_.size(); }
  [[nodiscard]] const TablePtr& table() const { return gens_.front().table(); }
  /// Polynomial ring with one variable per generator.
  [[nodiscard]] const TablePtr& label_table() const { return label_table_; }
  [[nodiscard]] DomainOf<K> domain() const { return gens_.front().domain(); }

  /// z_i -> f_i.
  [[nodiscard]] AlgebraMap<K> presentation_map() const { return AlgebraMap<K>(label_table_, table(), gens_); }

  [[nodiscard]] std::vector<ExponentVector> leading_exponents() const {
    std::vector<ExponentVector> out;
    for (const auto& g : gens_) out.push_back(g.leading_term(order_).exps);
    return out;
  }

 private:
  std::vector<Polynomial<K>> gens_;
  MonomialOrder order_;
  std::vector<std::string> labels_;
  TablePtr label_table_;
};

inline IntVector to_int_vector(const ExponentVector& e) { return IntVector(e.begin(), e.end()); }

/// Leading exponents of F, labelled by the generators' z-variables.
template <class K>
PointConfiguration initial_exponents(const SubalgebraGens<K>& f) {
  std::vector<IntVector> pts;
  for (const auto& e : f.leading_exponents()) pts.push_back(to_int_vector(e));
  return PointConfiguration(std::move(pts), f.labels());
}

template <class K>
struct SubductionResult {
  Polynomial<K> remainder;
  /// Polynomial in the label variables with combination(F) = p - remainder.
  Polynomial<K> combination;
};

namespace detail {

/// Finds e >= 0 with sum e_i lead_i = target. Generators are tried in label
/// order with the largest feasible exponent first; backtracking makes the
/// search complete.
class FactorSearch {
 public:
  explicit FactorSearch(std::vector<ExponentVector> leads) : leads_(std::move(leads)) {}

  std::optional<std::vector<unsigned>> find(const ExponentVector& target) {
    std::vector<unsigned> e(leads_.size(), 0);
    failed_.clear();
    if (dfs(0, target, e)) return e;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t i, const ExponentVector& rem, std::vector<unsigned>& e) {
    if (rem.is_zero()) return true;
    if (i == leads_.size()) return false;
    auto key = std::make_pair(i, to_int_vector(rem));
    if (failed_.count(key)) return false;
    const auto& l = leads_[i];
    unsigned kmax = 0;
    if (!l.is_zero() && l.divides(rem)) {
      kmax = ~0u;
      for (std::size_t v = 0; v < l.size(); ++v)
        if (l[v]) kmax = std::min<unsigned>(kmax, rem[v] / l[v]);
    }
    for (unsigned k = kmax + 1; k-- > 0;) {
      ExponentVector next = rem;
      if (k) {
        for (std::size_t v = 0; v < l.size(); ++v)
          if (l[v]) next.set(v, rem[v] - k * l[v]);
      }
      e[i] = k;
      if (dfs(i + 1, next, e)) return true;
    }
    e[i] = 0;
    failed_.insert(std::move(key));
    return false;
  }

  std::vector<ExponentVector> leads_;
  std::set<std::pair<std::size_t, IntVector>> failed_;
};

template <class K>
class PowerCache {
 public:
  explicit PowerCache(const SubalgebraGens<K>& f) : f_(f), cache_(f.size()) {}
  const Polynomial<K>& power(std::size_t i, unsigned e) {
    auto& c = cache_[i];
    if (c.empty()) c.push_back(Polynomial<K>::constant(f_.table(), 1, f_.domain()));
    while (c.size() <= e) c.push_back(c.back() * f_.gens()[i]);
    return c[e];
  }
  Polynomial<K> product(const std::vector<unsigned>& e) {
    Polynomial<K> p = Polynomial<K>::constant(f_.table(), 1, f_.domain());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) p = p * power(i, e[i]);
    return p;
  }

 private:
  const SubalgebraGens<K>& f_;
  std::vector<std::vector<Polynomial<K>>> cache_;
};

}  // namespace detail

/// Subduction of p against F: while the leading term of the remainder is
/// c * prod lt(f_i)^{e_i}, subtract c' * prod f_i^{e_i}.
template <class K>
SubductionResult<K> subduct_with_witness(const Polynomial<K>& p, const SubalgebraGens<K>& f) {
  using Traits = FieldTraits<K>;
  require_same_table(p.table(), f.table());
  auto leads = f.leading_exponents();
  std::vector<K> lcs;
  for (const auto& g : f.gens()) lcs.push_back(g.leading_term(f.order()).coeff);
  detail::FactorSearch search(leads);
  detail::PowerCache<K> powers(f);
  Polynomial<K> r = p;
  Polynomial<K> comb(f.label_table(), f.domain());
  while (!r.is_zero()) {
    const auto& lt = r.leading_term(f.order());
    auto e = search.find(lt.exps);
    if (!e) break;
    K denom = Traits::from_int(1, f.domain());
    for (std::size_t i = 0; i < e->size(); ++i)
      for (unsigned k = 0; k < (*e)[i]; ++k) denom *= lcs[i];
    K c = lt.coeff / denom;
    ExponentVector ze(f.size());
    for (std::size_t i = 0; i < e->size(); ++i) ze.set(i, (*e)[i]);
    r = r - powers.product(*e).scale(c);
    comb = comb + Polynomial<K>::monomial(f.label_table(), std::move(ze), c, f.domain());
  }
  return {std::move(r), std::move(comb)};
}

template <class K>
Polynomial<K> subduct(const Polynomial<K>& p, const SubalgebraGens<K>& f) {
  return subduct_with_witness(p, f).remainder;
}

template <class K>
struct SagbiResult {
  bool pass = false;
  std::size_t relations_checked = 0;
  /// On failure: the first toric relation (over the label table) whose lift
  /// does not subduct, and the remainder of the lift (an element of k[F] whose leading monomial is not in
  /// the monoid of leading monomials of F).
  std::optional<Polynomial<K>> relation;
  std::optional<Polynomial<K>> witness;
};

/// SAGBI criterion: F is a SAGBI basis iff every generator z^u - z^v of the
/// toric ideal of its leading exponents lifts to F^u - F^v subducting to 0.
template <class K>
SagbiResult<K> sagbi_check(const SubalgebraGens<K>& f, const GroebnerOptions& opts = {}) {
  std::vector<IntVector> pts;
  for (const auto& e : f.leading_exponents()) pts.push_back(to_int_vector(e));
  auto toric = detail::toric_ideal_of_points<K>(pts, f.label_table(), f.domain(), opts);
  auto phi = f.presentation_map();
  SagbiResult<K> res;
  for (const auto& rel : toric.generators) {
    opts.check_clock();
    ++res.relations_checked;
    auto rem = subduct(phi(rel), f);
    if (!rem.is_zero()) {
      res.relation = rel;
      res.witness = std::move(rem);
      return res;
    }
  }
  res.pass = true;
  return res;
}

namespace detail {

/// Exponent vectors e with sum e_i deg_i == d.
inline void weighted_compositions(const std::vector<unsigned>& deg, unsigned d, std::size_t i,
                                  std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (i == deg.size()) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (unsigned k = 0; k * deg[i] <= d; ++k) {
    cur[i] = k;
    weighted_compositions(deg, d - k * deg[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace detail

/// Dimension of the degree-D part of k[F] for homogeneous generators of
/// positive degree: rank of all degree-D products, by exact elimination.
template <class K>
std::size_t subalgebra_graded_dim(const SubalgebraGens<K>& f, unsigned degree) {
  std::vector<unsigned> deg;
  for (const auto& g : f.gens()) {
    if (!g.is_homogeneous() || g.total_degree() == 0)
      throw DomainError("graded dimension needs homogeneous generators of positive degree");
    deg.push_back(g.total_degree());
  }
  std::vector<std::vector<unsigned>> exps;
  std::vector<unsigned> cur(deg.size(), 0);
  detail::weighted_compositions(deg, degree, 0, cur, exps);
  detail::PowerCache<K> powers(f);
  std::map<std::vector<std::uint16_t>, Polynomial<K>> echelon;  // keyed by canonical leading exponent
  auto key = [](const Polynomial<K>& p) {
    const auto& e = p.terms().front().exps;
    return std::vector<std::uint16_t>(e.begin(), e.end());
  };
  for (const auto& e : exps) {
    Polynomial<K> p = powers.product(e);
    while (!p.is_zero()) {
      auto it = echelon.find(key(p));
      if (it == echelon.end()) break;
      p = p - it->second.scale(p.terms().front().coeff);
    }
    if (p.is_zero()) continue;
    auto lead_inv = FieldTraits<K>::inverse(p.terms().front().coeff);
    auto k = key(p);
    echelon.emplace(std::move(k), p.scale(lead_inv));
  }
  return echelon.size();
}

}  // namespace sagbi_forge
