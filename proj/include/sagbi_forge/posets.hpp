#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/polynomial.hpp"
#include "sagbi_forge/toric.hpp"

namespace sagbi_forge {

/// Finite poset given by labelled elements and its covering relations.
class Poset {
 public:
  using Cover = std::pair<std::size_t, std::size_t>;  // (lower, upper)

  Poset(std::vector<std::string> labels, std::vector<Cover> covers)
      : labels_(std::move(labels)), covers_(std::move(covers)) {
    const std::size_t n = labels_.size();
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.emplace(labels_[i], i).second) throw DomainError("duplicate poset label " + labels_[i]);
    lower_.resize(n);
    upper_.resize(n);
    for (auto [lo, up] : covers_) {
      if (lo >= n || up >= n) throw DomainError("cover refers to unknown element");
      if (lo == up) throw DomainError("reflexive cover");
      lower_[up].push_back(lo);
      upper_[lo].push_back(up);
    }
    topo_ = topological_order();
    // below_[u][v]: u < v
    below_.assign(n, std::vector<char>(n, 0));
    for (auto v : topo_)
      for (auto lo : lower_[v]) {
        below_[lo][v] = 1;
        for (std::size_t u = 0; u < n; ++u)
          if (below_[u][lo]) below_[u][v] = 1;
      }
    for (auto [lo, up] : covers_)
      for (auto mid : upper_[lo])
        if (mid != up && below_[mid][up]) throw DomainError("covers are not transitively reduced");
    std::sort(covers_.begin(), covers_.end());
    if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
      throw DomainError("repeated cover");
  }

  static Poset from_labels(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& covers) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = i;
    std::vector<Cover> c;
    for (const auto& [lo, up] : covers) {
      auto a = idx.find(lo), b = idx.find(up);
      if (a == idx.end() || b == idx.end()) throw DomainError("cover refers to unknown label");
      c.emplace_back(a->second, b->second);
    }
    return Poset(std::move(labels), std::move(c));
  }

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] std::size_t index_of(const std::string& l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return i;
    throw DomainError("unknown poset element " + l);
  }
  [[nodiscard]] const std::vector<Cover>& covers() const { return covers_; }
  [[nodiscard]] const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }
  [[nodiscard]] const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }
  /// A linear extension (every element after all of its lower covers).
  [[nodiscard]] const std::vector<std::size_t>& linear_extension() const { return topo_; }

  [[nodiscard]] bool less(std::size_t u, std::size_t v) const { return below_.at(u).at(v) != 0; }
  [[nodiscard]] bool leq(std::size_t u, std::size_t v) const { return u == v || less(u, v); }
  [[nodiscard]] bool comparable(std::size_t u, std::size_t v) const { return leq(u, v) || leq(v, u); }

 private:
  std::vector<std::size_t> topological_order() const {
    const std::size_t n = labels_.size();
    std::vector<std::size_t> indeg(n), order;
    for (std::size_t i = 0; i < n; ++i) indeg[i] = lower_[i].size();
    for (std::size_t i = 0; i < n; ++i)
      if (!indeg[i]) order.push_back(i);
    for (std::size_t k = 0; k < order.size(); ++k)
      for (auto up : upper_[order[k]])
        if (--indeg[up] == 0) order.push_back(up);
    if (order.size() != n) throw DomainError("cover relation has a cycle");
    return order;
  }

  std::vector<std::string> labels_;
  std::vector<Cover> covers_;
  std::vector<std::vector<std::size_t>> lower_, upper_;
  std::vector<std::vector<char>> below_;
  std::vector<std::size_t> topo_;
};

/// Down-closed subset, stored as sorted element indices.
struct PosetIdeal {
  std::vector<std::size_t> members;

  [[nodiscard]] bool contains(std::size_t x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  [[nodiscard]] bool subset_of(const PosetIdeal& o) const {
    return std::includes(o.members.begin(), o.members.end(), members.begin(), members.end());
  }
  [[nodiscard]] std::size_t size() const { return members.size(); }
  friend bool operator==(const PosetIdeal&, const PosetIdeal&) = default;
  /// Enumeration order: by cardinality, then lexicographic on indices.
  friend bool operator<(const PosetIdeal& a, const PosetIdeal& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  }
};

inline bool is_down_closed(const Poset& p, const std::vector<std::size_t>& subset) {
  std::vector<char> in(p.size(), 0);
  for (auto x : subset) in.at(x) = 1;
  for (auto x : subset)
    for (auto lo : p.lower_covers(x))
      if (!in[lo]) return false;
  return true;
}

/// Smallest ideal containing `gens` (any subset, not necessarily an antichain).
inline PosetIdeal down_set(const Poset& p, const std::vector<std::size_t>& gens) {
  std::vector<char> in(p.size(), 0);
  for (auto g : gens)
    for (std::size_t u = 0; u < p.size(); ++u)
      if (p.leq(u, g)) in[u] = 1;
  PosetIdeal out;
  for (std::size_t u = 0; u < p.size(); ++u)
    if (in[u]) out.members.push_back(u);
  return out;
}

/// All poset ideals, including the empty set and the whole poset.
inline std::vector<PosetIdeal> enumerate_ideals(const Poset& p) {
  const auto& ext = p.linear_extension();
  std::vector<char> in(p.size(), 0);
  std::vector<PosetIdeal> out;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == ext.size()) {
      PosetIdeal id;
      for (std::size_t u = 0; u < p.size(); ++u)
        if (in[u]) id.members.push_back(u);
      out.push_back(std::move(id));
      return;
    }
    std::size_t x = ext[k];
    self(self, k + 1);
    const auto& lows = p.lower_covers(x);
    if (std::all_of(lows.begin(), lows.end(), [&](std::size_t l) { return in[l] != 0; })) {
      in[x] = 1;
      self(self, k + 1);
      in[x] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline PosetIdeal ideal_union(const PosetIdeal& a, const PosetIdeal& b) {
  PosetIdeal r;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                 std::back_inserter(r.members));
  return r;
}

inline PosetIdeal ideal_intersection(const PosetIdeal& a, const PosetIdeal& b) {
  PosetIdeal r;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(r.members));
  return r;
}

inline bool is_antichain(const Poset& p, const std::vector<std::size_t>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (p.comparable(a[i], a[j])) return false;
  return true;
}

inline PosetIdeal ideal_from_antichain(const Poset& p, const std::vector<std::size_t>& antichain) {
  if (!is_antichain(p, antichain)) throw DomainError("generators do not form an antichain");
  return down_set(p, antichain);
}

/// Maximal elements of the ideal.
inline std::vector<std::size_t> antichain_of_ideal(const Poset& p, const PosetIdeal& ideal) {
  std::vector<std::size_t> out;
  for (auto x : ideal.members) {
    const auto& ups = p.upper_covers(x);
    if (std::none_of(ups.begin(), ups.end(), [&](std::size_t u) { return ideal.contains(u); }))
      out.push_back(x);
  }
  return out;
}

/// Do all maximal chains have the same number of elements?
inline bool is_graded(const Poset& p) {
  if (p.size() == 0) return true;
  std::vector<std::size_t> shortest(p.size()), longest(p.size());
  for (auto x : p.linear_extension()) {
    const auto& lows = p.lower_covers(x);
    if (lows.empty()) {
      shortest[x] = longest[x] = 1;
      continue;
    }
    shortest[x] = SIZE_MAX;
    longest[x] = 0;
    for (auto l : lows) {
      shortest[x] = std::min(shortest[x], shortest[l] + 1);
      longest[x] = std::max(longest[x], longest[l] + 1);
    }
  }
  std::size_t lo = SIZE_MAX, hi = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.upper_covers(x).empty()) lo = std::min(lo, shortest[x]), hi = std::max(hi, longest[x]);
  return lo == hi;
}

/// Pi_{a,b}. Elements in basis order e_1..e_{a-1}, e'_2..e'_{a-1},
/// f'_1..f'_{b-1}, f_2..f_b, labelled e1, ep2, fp1, f2, ...
inline Poset build_pi(int a, int b) {
  if (a < 2 || b < 2) throw DomainError("Pi_{a,b} needs a >= 2 and b >= 2");
  if (a > b) throw DomainError("Pi_{a,b} needs a <= b");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> at;
  auto add = [&](const std::string& l) {
    at[l] = labels.size();
    labels.push_back(l);
  };
  auto e = [](int i) { return "e" + std::to_string(i); };
  auto ep = [](int i) { return "ep" + std::to_string(i); };
  auto fp = [](int j) { return "fp" + std::to_string(j); };
  auto f = [](int j) { return "f" + std::to_string(j); };
  for (int i = 1; i <= a - 1; ++i) add(e(i));
  for (int i = 2; i <= a - 1; ++i) add(ep(i));
  for (int j = 1; j <= b - 1; ++j) add(fp(j));
  for (int j = 2; j <= b; ++j) add(f(j));

  std::vector<Poset::Cover> covers;
  auto cover = [&](const std::string& lo, const std::string& up) { covers.emplace_back(at.at(lo), at.at(up)); };
  for (int i = 1; i <= a - 2; ++i) cover(e(i + 1), e(i));
  for (int j = 2; j <= b - 1; ++j) cover(f(j), f(j + 1));
  for (int j = 1; j <= b - 2; ++j) cover(fp(j), fp(j + 1));
  for (int i = 2; i <= a - 2; ++i) cover(ep(i + 1), ep(i));
  cover(e(a - 1), fp(1));
  for (int j = 1; j <= b - 1; ++j) cover(f(j + 1), fp(j));
  if (a >= 3) cover(fp(1), ep(a - 1));
  for (int i = 2; i <= a - 1; ++i) cover(e(i - 1), ep(i));
  return Poset(std::move(labels), std::move(covers));
}

/// Name of the Hibi variable of an ideal: "zI" followed by "_<label>" for
/// each member in basis order ("zI" alone for the empty ideal).
inline std::string hibi_label(const Poset& p, const PosetIdeal& ideal) {
  std::string s = "zI";
  for (auto m : ideal.members) s += "_" + p.label(m);
  return s;
}

inline TablePtr hibi_table(const Poset& p, const std::vector<PosetIdeal>& ideals) {
  std::vector<std::string> names;
  for (const auto& i : ideals) names.push_back(hibi_label(p, i));
  return make_table(std::move(names), Role::z);
}

/// Ambient ring of the Hibi ring: x_1..x_n for the elements, x_{n+1} the
/// homogenizing variable.
inline TablePtr hibi_ambient_table(const Poset& p) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= p.size() + 1; ++i) names.push_back("x" + std::to_string(i));
  return make_table(std::move(names), Role::aux);
}

/// (prod_{p in I} x_p) x_{n+1}, one per ideal in enumeration order.
template <class K = Rational>
std::vector<Polynomial<K>> hibi_generators(const Poset& p, DomainOf<K> dom = {}) {
  auto table = hibi_ambient_table(p);
  std::vector<Polynomial<K>> out;
  for (const auto& ideal : enumerate_ideals(p)) {
    ExponentVector e(table->count());
    for (auto m : ideal.members) e.set(m, 1);
    e.set(p.size(), 1);
    out.push_back(Polynomial<K>::monomial(table, std::move(e), FieldTraits<K>::from_int(1, dom), dom));
  }
  return out;
}

/// z_I z_J - z_{I u J} z_{I n J} over all incomparable pairs of ideals.
template <class K = Rational>
std::vector<Polynomial<K>> hibi_toric_gens(const Poset& p, DomainOf<K> dom = {}) {
  auto ideals = enumerate_ideals(p);
  auto table = hibi_table(p, ideals);
  auto index = [&](const PosetIdeal& id) {
    return static_cast<std::size_t>(std::lower_bound(ideals.begin(), ideals.end(), id) - ideals.begin());
  };
  auto z = [&](std::size_t i) { return Polynomial<K>::variable(table, i, dom); };
  std::vector<Polynomial<K>> out;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (ideals[i].subset_of(ideals[j]) || ideals[j].subset_of(ideals[i])) continue;
      auto u = index(ideal_union(ideals[i], ideals[j]));
      auto n = index(ideal_intersection(ideals[i], ideals[j]));
      out.push_back(z(i) * z(j) - z(u) * z(n));
    }
  return out;
}

/// B_{a,b}: 0/1 indicator vectors of the ideals of Pi_{a,b} on the basis
/// order of build_pi, labelled by hibi_label.
inline PointConfiguration encode_ideals_B(int a, int b) {
  auto p = build_pi(a, b);
  std::vector<IntVector> pts;
  std::vector<std::string> labels;
  for (const auto& ideal : enumerate_ideals(p)) {
    IntVector v(p.size(), 0);
    for (auto m : ideal.members) v[m] = 1;
    pts.push_back(std::move(v));
    labels.push_back(hibi_label(p, ideal));
  }
  return PointConfiguration(std::move(pts), std::move(labels));
}

}  // namespace sagbi_forge
