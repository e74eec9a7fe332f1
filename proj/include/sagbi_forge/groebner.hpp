#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/monomial_order.hpp"
#include "sagbi_forge/polynomial.hpp"
#include "sagbi_forge/variable_table.hpp"

namespace sagbi_forge {

/// Limits for Buchberger runs. Exceeding either throws BudgetExceeded.
struct GroebnerOptions {
  std::optional<std::uint32_t> degree_cap;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static GroebnerOptions with_budget(std::chrono::duration<double> seconds) {
    GroebnerOptions o;
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(seconds);
    return o;
  }
  void check_clock() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      throw BudgetExceeded("time budget exceeded during Groebner basis computation");
  }
};

template <class K = Rational>
struct Ideal {
  TablePtr table;
  std::vector<Polynomial<K>> generators;

  Ideal(TablePtr t, std::vector<Polynomial<K>> gens) : table(std::move(t)) {
    for (auto& g : gens) {
      require_same_table(table, g.table());
      if (!g.is_zero()) generators.push_back(std::move(g));
    }
  }
  [[nodiscard]] bool is_zero() const { return generators.empty(); }
};

template <class K = Rational>
struct GroebnerBasis {
  std::vector<Polynomial<K>> basis;
  MonomialOrder order;

  [[nodiscard]] bool is_unit() const {
    return basis.size() == 1 && basis[0].total_degree() == 0;
  }
  /// Sorted list of polynomial strings; the serialized form of a basis.
  [[nodiscard]] std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& g : basis) out.push_back(g.to_string());
    return out;
  }
};

namespace detail {

template <class K>
using Terms = std::vector<Term<K>>;

template <class K>
Terms<K> sorted_by(const Polynomial<K>& p, const MonomialOrder& order) {
  Terms<K> t = p.terms();
  std::sort(t.begin(), t.end(),
            [&](const Term<K>& a, const Term<K>& b) { return order.compare_unchecked(a.exps, b.exps) > 0; });
  return t;
}

/// a[ia..] - q * x^shift * b[ib..], both inputs descending in `order`.
template <class K>
Terms<K> sub_scaled(Terms<K>& a, std::size_t ia, const Terms<K>& b, std::size_t ib, const K& q,
                    const ExponentVector& shift, const MonomialOrder& order) {
  using Traits = FieldTraits<K>;
  Terms<K> r;
  r.reserve(a.size() - ia + b.size() - ib);
  std::size_t i = ia, j = ib;
  std::optional<ExponentVector> bj;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !bj) bj = b[j].exps + shift;
    std::strong_ordering c = std::strong_ordering::greater;
    if (i == a.size()) c = std::strong_ordering::less;
    else if (j < b.size()) c = order.compare_unchecked(a[i].exps, *bj);
    if (c > 0) {
      r.push_back(std::move(a[i++]));
    } else if (c < 0) {
      r.push_back({std::move(*bj), K(-(b[j].coeff * q))});
      bj.reset();
      ++j;
    } else {
      K s = a[i].coeff - b[j].coeff * q;
      if (!Traits::is_zero(s)) r.push_back({std::move(a[i].exps), std::move(s)});
      ++i, ++j;
      bj.reset();
    }
  }
  return r;
}

template <class K>
struct Reducer {
  Terms<K> terms;  // descending in the active order
  ExponentVector lm;
  std::uint64_t mask = 0;
  K lc_inv;
  bool active = true;
};

template <class K>
Reducer<K> make_reducer(Terms<K> t) {
  Reducer<K> r;
  r.lm = t.front().exps;
  r.mask = r.lm.support_mask();
  r.lc_inv = FieldTraits<K>::inverse(t.front().coeff);
  r.terms = std::move(t);
  return r;
}

template <class K>
const Reducer<K>* find_reducer(const std::vector<Reducer<K>>& basis, const ExponentVector& m) {
  std::uint64_t mm = m.support_mask();
  for (const auto& r : basis)
    if (r.active && (r.mask & ~mm) == 0 && r.lm.divides(m)) return &r;
  return nullptr;
}

/// Full reduction: no term of the result is divisible by an active leading
/// monomial. Leading terms are rewritten first, divisors tried in order.
template <class K>
Terms<K> full_reduce(Terms<K> p, const std::vector<Reducer<K>>& basis, const MonomialOrder& order,
                     const GroebnerOptions* opts = nullptr) {
  Terms<K> out;
  std::size_t pos = 0;
  std::size_t steps = 0;
  while (pos < p.size()) {
    const Reducer<K>* r = find_reducer(basis, p[pos].exps);
    if (!r) {
      out.push_back(std::move(p[pos++]));
      continue;
    }
    if (opts && (++steps & 255) == 0) opts->check_clock();
    K q = p[pos].coeff * r->lc_inv;
    ExponentVector shift = p[pos].exps - r->lm;
    p = sub_scaled(p, pos + 1, r->terms, 1, q, shift, order);
    pos = 0;
  }
  return out;
}

template <class K>
void make_monic(Terms<K>& t) {
  if (t.empty() || FieldTraits<K>::is_one(t.front().coeff)) return;
  K inv = FieldTraits<K>::inverse(t.front().coeff);
  for (auto& x : t) x.coeff *= inv;
}

struct Pair {
  std::size_t i, j;  // i < j
  ExponentVector lcm;
};

/// Buchberger with the normal selection strategy and the Gebauer-Moeller
/// installation of the product and chain criteria.
template <class K>
class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GroebnerOptions& opts)
      : order_(order), opts_(opts), pairs_(PairLess{&order_}) {}

  void add_generator(const Polynomial<K>& g) {
    auto t = full_reduce(sorted_by(g, order_), basis_, order_, &opts_);
    if (t.empty()) return;
    make_monic(t);
    update(make_reducer(std::move(t)));
  }

  void run() {
    while (!pairs_.empty()) {
      opts_.check_clock();
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (opts_.degree_cap && p.lcm.degree() > *opts_.degree_cap)
        throw BudgetExceeded("S-pair degree " + std::to_string(p.lcm.degree()) + " exceeds cap " +
                             std::to_string(*opts_.degree_cap));
      auto s = spoly(p);
      if (s.empty()) continue;
      s = full_reduce(std::move(s), basis_, order_, &opts_);
      if (s.empty()) continue;
      make_monic(s);
      update(make_reducer(std::move(s)));
    }
  }

  /// Reduced basis: interreduced, monic, sorted by ascending leading term.
  std::vector<Terms<K>> reduced() const {
    std::vector<Reducer<K>> minimal;
    for (const auto& r : basis_)
      if (r.active) minimal.push_back(r);
    for (const auto& r : minimal)
      if (r.lm.is_zero()) {
        Terms<K> one{r.terms.front()};
        make_monic(one);
        return {std::move(one)};
      }
    std::vector<Terms<K>> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      minimal[k].active = false;
      Terms<K> tail(minimal[k].terms.begin() + 1, minimal[k].terms.end());
      Terms<K> t{minimal[k].terms.front()};
      auto red = full_reduce(std::move(tail), minimal, order_, &opts_);
      for (auto& x : red) t.push_back(std::move(x));
      minimal[k].active = true;
      make_monic(t);
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [&](const Terms<K>& a, const Terms<K>& b) {
      return order_.compare_unchecked(a.front().exps, b.front().exps) < 0;
    });
    return out;
  }

 private:
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      auto c = order->compare_unchecked(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    }
  };

  Terms<K> spoly(const Pair& p) {
    const auto& f = basis_[p.i];
    const auto& g = basis_[p.j];
    // f and g are monic: S = (L/lm f) f - (L/lm g) g, leading terms cancel.
    Terms<K> a;
    a.reserve(f.terms.size());
    ExponentVector sf = p.lcm - f.lm;
    for (std::size_t k = 1; k < f.terms.size(); ++k) a.push_back({f.terms[k].exps + sf, f.terms[k].coeff});
    return sub_scaled(a, 0, g.terms, 1, FieldTraits<K>::from_int(1, FieldTraits<K>::domain_of(f.lc_inv)),
                      p.lcm - g.lm, order_);
  }

  void update(Reducer<K> h) {
    const std::size_t hi = basis_.size();
    const ExponentVector& hl = h.lm;
    // candidate new pairs (g, h)
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g)
      if (basis_[g].active) cand.push_back({g, hi, basis_[g].lm.lcm(hl)});
    std::vector<char> coprime(cand.size());
    for (std::size_t k = 0; k < cand.size(); ++k) coprime[k] = basis_[cand[k].i].lm.coprime(hl);

    // chain criterion among the new pairs, keeping coprime ones for now
    std::vector<char> keep(cand.size(), 1);
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (coprime[k]) continue;
      for (std::size_t m = 0; m < cand.size(); ++m) {
        if (m == k || !keep[m]) continue;
        if (cand[m].lcm.divides(cand[k].lcm)) {
          // ties on equal lcm keep the earlier pair
          if (cand[m].lcm == cand[k].lcm && m > k && !coprime[m]) continue;
          keep[k] = 0;
          break;
        }
      }
    }
    // drop pairs with equal lcm where one is coprime (product criterion)
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (!keep[k] || !coprime[k]) continue;
      for (std::size_t m = 0; m < cand.size(); ++m)
        if (m != k && keep[m] && !coprime[m] && cand[m].lcm == cand[k].lcm) keep[m] = 0;
    }

    // old pairs made redundant by h
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (hl.divides(it->lcm) && basis_[it->i].lm.lcm(hl) != it->lcm &&
          basis_[it->j].lm.lcm(hl) != it->lcm)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (keep[k] && !coprime[k]) pairs_.insert(std::move(cand[k]));

    for (auto& g : basis_)
      if (g.active && hl.divides(g.lm)) g.active = false;
    basis_.push_back(std::move(h));
  }

  const MonomialOrder& order_;
  const GroebnerOptions& opts_;
  std::vector<Reducer<K>> basis_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace detail

/// Division of p by the list G: returns r with p - r in (G) and no term of
/// r divisible by a leading term of G.
template <class K>
Polynomial<K> reduce(const Polynomial<K>& p, std::span<const Polynomial<K>> divisors,
                     const MonomialOrder& order) {
  if (order.num_vars() != p.num_vars()) throw DimensionError("order does not match table");
  std::vector<detail::Reducer<K>> basis;
  for (const auto& g : divisors) {
    require_same_table(p.table(), g.table());
    if (!g.is_zero()) basis.push_back(detail::make_reducer(detail::sorted_by(g, order)));
  }
  auto r = detail::full_reduce(detail::sorted_by(p, order), basis, order);
  return Polynomial<K>::from_terms(p.table(), std::move(r), p.domain());
}

template <class K>
Polynomial<K> reduce(const Polynomial<K>& p, const GroebnerBasis<K>& gb) {
  return reduce<K>(p, std::span<const Polynomial<K>>(gb.basis), gb.order);
}

/// Reduced Groebner basis of I. Unique for (ideal, order); sorted by
/// ascending leading monomial.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, const MonomialOrder& order,
                            const GroebnerOptions& opts = {}) {
  if (order.num_vars() != ideal.table->count()) throw DimensionError("order does not match table");
  detail::Buchberger<K> engine(order, opts);
  for (const auto& g : ideal.generators) engine.add_generator(g);
  engine.run();
  GroebnerBasis<K> gb{{}, order};
  auto dom = ideal.generators.empty() ? DomainOf<K>{} : ideal.generators.front().domain();
  for (auto& t : engine.reduced()) gb.basis.push_back(Polynomial<K>::from_terms(ideal.table, std::move(t), dom));
  return gb;
}

/// Reduced GB of I ∩ k[vars \ drop], via a block order with `drop` first.
/// The returned basis lives over the same table; its order is the block
/// order, which restricts to `keep_kind` on the kept variables.
template <class K>
GroebnerBasis<K> eliminate(const Ideal<K>& ideal, const std::vector<std::size_t>& drop,
                           OrderKind keep_kind = OrderKind::graded_reverse_lex,
                           const GroebnerOptions& opts = {}) {
  auto order = MonomialOrder::elimination(ideal.table->count(), drop, keep_kind);
  auto full = buchberger(ideal, order, opts);
  std::vector<char> is_drop(ideal.table->count(), 0);
  for (auto v : drop) is_drop[v] = 1;
  GroebnerBasis<K> out{{}, order};
  for (auto& g : full.basis) {
    bool uses_drop = false;
    for (const auto& t : g.terms())
      for (std::size_t v = 0; v < is_drop.size() && !uses_drop; ++v)
        if (is_drop[v] && t.exps[v]) uses_drop = true;
    if (!uses_drop) out.basis.push_back(std::move(g));
  }
  return out;
}

/// Polynomial-algebra map sending source variable i to images[i].
template <class K = Rational>
struct AlgebraMap {
  TablePtr source;
  TablePtr target;
  std::vector<Polynomial<K>> images;

  AlgebraMap(TablePtr src, TablePtr tgt, std::vector<Polynomial<K>> ims)
      : source(std::move(src)), target(std::move(tgt)), images(std::move(ims)) {
    if (images.size() != source->count()) throw DimensionError("one image per source variable required");
    for (const auto& im : images) require_same_table(im.table(), target);
  }

  [[nodiscard]] Polynomial<K> operator()(const Polynomial<K>& p) const {
    require_same_table(p.table(), source);
    return p.substitute(images, target);
  }
};

/// Generators of Ker(phi), computed by eliminating the target variables
/// from (z_i - image_i). The adjoined relations make the target variables
/// eliminable directly; no saturation is needed. The result is the reduced
/// Groebner basis of the kernel under grevlex on the source table.
template <class K>
Ideal<K> kernel_of_map(const AlgebraMap<K>& phi, const GroebnerOptions& opts = {}) {
  const std::size_t nt = phi.target->count(), ns = phi.source->count();
  std::vector<std::string> names = phi.target->names();
  std::vector<Role> roles = phi.target->roles();
  for (std::size_t i = 0; i < ns; ++i) {
    if (phi.target->find(phi.source->name(i)))
      throw DomainError("source and target share variable name " + phi.source->name(i));
    names.push_back(phi.source->name(i));
    roles.push_back(phi.source->role(i));
  }
  auto joint = make_table(std::move(names), std::move(roles));
  std::vector<std::size_t> to_joint(nt);
  for (std::size_t i = 0; i < nt; ++i) to_joint[i] = i;
  auto dom = phi.images.empty() ? DomainOf<K>{} : phi.images.front().domain();
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < ns; ++i) {
    if (phi.images[i].is_zero()) throw DomainError("algebra map image must be nonzero");
    gens.push_back(Polynomial<K>::variable(joint, nt + i, dom) - phi.images[i].relabel(joint, to_joint));
  }
  std::vector<std::size_t> drop(nt);
  for (std::size_t i = 0; i < nt; ++i) drop[i] = i;
  auto gb = eliminate(Ideal<K>(joint, std::move(gens)), drop, OrderKind::graded_reverse_lex, opts);
  std::vector<std::size_t> back(nt + ns, 0);
  for (std::size_t i = 0; i < ns; ++i) back[nt + i] = i;
  std::vector<Polynomial<K>> kernel;
  for (const auto& g : gb.basis) kernel.push_back(g.relabel(phi.source, back));
  return Ideal<K>(phi.source, std::move(kernel));
}

template <class K>
bool ideal_membership(const Polynomial<K>& p, const Ideal<K>& ideal, const GroebnerOptions& opts = {}) {
  auto gb = buchberger(ideal, MonomialOrder::graded_reverse_lex(ideal.table->count()), opts);
  return reduce(p, gb).is_zero();
}

template <class K>
bool ideals_equal(const Ideal<K>& a, const Ideal<K>& b, const GroebnerOptions& opts = {}) {
  require_same_table(a.table, b.table);
  auto order = MonomialOrder::graded_reverse_lex(a.table->count());
  auto ga = buchberger(a, order, opts);
  auto gb = buchberger(b, order, opts);
  if (ga.basis.size() != gb.basis.size()) return false;
  for (std::size_t i = 0; i < ga.basis.size(); ++i)
    if (!(ga.basis[i].terms() == gb.basis[i].terms())) return false;
  return true;
}

namespace detail {

/// Smallest set of variables meeting every support (branch and bound).
inline std::size_t min_hitting_set(std::vector<std::vector<std::size_t>> sets, std::size_t n) {
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  // a superset of another support is hit automatically
  std::vector<std::vector<std::size_t>> minimal;
  for (auto& s : sets) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (std::includes(s.begin(), s.end(), m.begin(), m.end())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(s));
  }
  std::size_t best = n + 1;
  std::vector<char> chosen(n, 0);
  auto hit = [&](const std::vector<std::size_t>& s) {
    return std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v] != 0; });
  };
  auto recurse = [&](auto&& self, std::size_t size) -> void {
    // lower bound: greedily packed pairwise-disjoint unhit supports
    std::vector<char> used(n, 0);
    std::size_t bound = 0;
    const std::vector<std::size_t>* branch = nullptr;
    for (const auto& s : minimal) {
      if (hit(s)) continue;
      if (!branch) branch = &s;
      if (std::none_of(s.begin(), s.end(), [&](std::size_t v) { return used[v] != 0; })) {
        ++bound;
        for (auto v : s) used[v] = 1;
      }
    }
    if (!branch) {
      best = std::min(best, size);
      return;
    }
    if (size + bound >= best) return;
    for (auto v : *branch) {
      chosen[v] = 1;
      self(self, size + 1);
      chosen[v] = 0;
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace detail

/// Krull dimension of k[vars]/I: the largest variable subset U such that no
/// leading monomial of GB(I) lies in k[U].
template <class K>
std::size_t quotient_dimension(const Ideal<K>& ideal, const MonomialOrder& order,
                               const GroebnerOptions& opts = {}) {
  auto gb = buchberger(ideal, order, opts);
  if (gb.is_unit()) throw UnitIdealError("quotient by the unit ideal has no dimension");
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& g : gb.basis) supports.push_back(g.leading_term(order).exps.support());
  const std::size_t n = ideal.table->count();
  return n - detail::min_hitting_set(std::move(supports), n);
}

template <class K>
std::size_t quotient_dimension(const Ideal<K>& ideal, const GroebnerOptions& opts = {}) {
  return quotient_dimension(ideal, MonomialOrder::graded_reverse_lex(ideal.table->count()), opts);
}

}  // namespace sagbi_forge
