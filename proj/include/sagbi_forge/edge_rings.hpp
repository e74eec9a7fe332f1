#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/groebner.hpp"
#include "sagbi_forge/posets.hpp"
#include "sagbi_forge/sagbi.hpp"
#include "sagbi_forge/toric.hpp"

namespace sagbi_forge {

// ---------------------------------------------------------------------------
// Graphs

/// Finite simple connected graph on vertices 1..d.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph(int d, std::vector<Edge> edges) : d_(d) {
    if (d < 2) throw DomainError("graph needs at least two vertices");
    for (auto [i, j] : edges) {
      if (i < 1 || j < 1 || i > d || j > d) throw DomainError("edge endpoint out of range");
      if (i == j) throw DomainError("graph has a loop");
      edges_.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw DomainError("graph has a repeated edge");
    if (!connected()) throw DomainError("graph is not connected");
  }

  [[nodiscard]] int vertices() const { return d_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }

  /// Colour 0/1 per vertex (index 0 is vertex 1), if one exists.
  [[nodiscard]] std::optional<std::vector<int>> two_coloring() const {
    std::vector<int> colour(d_, -1);
    colour[0] = 0;
    std::vector<int> stack{0};
    auto adj = adjacency();
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          return std::nullopt;
        }
      }
    }
    return colour;
  }
  [[nodiscard]] bool is_bipartite() const { return two_coloring().has_value(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  [[nodiscard]] std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(d_);
    for (auto [i, j] : edges_) {
      adj[i - 1].push_back(j - 1);
      adj[j - 1].push_back(i - 1);
    }
    return adj;
  }
  [[nodiscard]] bool connected() const {
    auto adj = adjacency();
    std::vector<char> seen(d_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (!seen[u]) seen[u] = 1, ++count, stack.push_back(u);
    }
    return count == d_;
  }

  int d_;
  std::vector<Edge> edges_;
};

inline Graph path_graph(int d) {
  std::vector<Graph::Edge> e;
  for (int i = 1; i < d; ++i) e.emplace_back(i, i + 1);
  return Graph(d, std::move(e));
}

inline Graph cycle_graph(int d) {
  if (d < 3) throw DomainError("cycle needs at least three vertices");
  std::vector<Graph::Edge> e;
  for (int i = 1; i < d; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, d);
  return Graph(d, std::move(e));
}

/// K_{1,b}: centre 1, leaves 2..b+1.
inline Graph star_graph(int b) {
  if (b < 1) throw DomainError("star needs at least one leaf");
  std::vector<Graph::Edge> e;
  for (int j = 2; j <= b + 1; ++j) e.emplace_back(1, j);
  return Graph(b + 1, std::move(e));
}

inline Graph complete_graph(int d) {
  std::vector<Graph::Edge> e;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) e.emplace_back(i, j);
  return Graph(d, std::move(e));
}

/// K_{a,b} with parts {1..a} and {a+1..a+b}.
inline Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("complete bipartite graph needs nonempty parts");
  std::vector<Graph::Edge> e;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

/// 8 vertices, 12 edges; contains the triangle {1,4,5}.
inline Graph graph_g1() {
  return Graph(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8}, {1, 4}, {1, 5}, {4, 8}, {5, 8}});
}

/// 8 vertices, 12 edges; bipartite with parts {1,3,5,7} and {2,4,6,8}.
inline Graph graph_g2() {
  return Graph(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 4}, {1, 6}, {2, 5}, {3, 6}, {6, 7}, {7, 8}, {5, 8}});
}

/// "g1", "g2", "path:d", "cycle:d", "star:b", "complete:d",
/// "complete_bipartite:a,b".
inline Graph named_graph(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("bad graph parameter '" + tok + "' in " + spec);
      }
      if (used != tok.size()) throw ParseError("bad graph parameter '" + tok + "' in " + spec);
      args.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto want = [&](std::size_t n) {
    if (args.size() != n) throw ParseError("graph '" + name + "' takes " + std::to_string(n) + " parameter(s)");
  };
  if (name == "g1") return want(0), graph_g1();
  if (name == "g2") return want(0), graph_g2();
  if (name == "path") return want(1), path_graph(args[0]);
  if (name == "cycle") return want(1), cycle_graph(args[0]);
  if (name == "star") return want(1), star_graph(args[0]);
  if (name == "complete") return want(1), complete_graph(args[0]);
  if (name == "complete_bipartite") return want(2), complete_bipartite_graph(args[0], args[1]);
  throw ParseError("unknown graph name '" + name + "'");
}

inline std::string edge_label(int i, int j) { return "z" + std::to_string(i) + "_" + std::to_string(j); }

/// f_ij = x_i y_j - x_j y_i per edge, over x_1..x_d, y_1..y_d with graded lex.
template <class K = Rational>
SubalgebraGens<K> binomial_gens(const Graph& g, DomainOf<K> dom = {}) {
  const auto d = static_cast<std::size_t>(g.vertices());
  auto table = graph_table(d);
  auto var = [&](std::size_t idx) { return Polynomial<K>::variable(table, idx, dom); };
  std::vector<Polynomial<K>> gens;
  std::vector<std::string> labels;
  for (auto [i, j] : g.edges()) {
    gens.push_back(var(i - 1) * var(d + j - 1) - var(j - 1) * var(d + i - 1));
    labels.push_back(edge_label(i, j));
  }
  return SubalgebraGens<K>(std::move(gens), MonomialOrder::graded_lex(2 * d), std::move(labels));
}

/// min(n, 2d-4) for bipartite graphs, min(n, 2d-3) otherwise. For d = 2 the
/// bipartite formula gives 0 while dim R(K_2) = 1, so d = 2 returns n.
inline std::size_t dim_upper_bound(const Graph& g) {
  const std::size_t n = g.num_edges(), d = static_cast<std::size_t>(g.vertices());
  if (d == 2) return n;
  return std::min(n, g.is_bipartite() ? 2 * d - 4 : 2 * d - 3);
}

enum class DimStrategy { kernel, lattice };

inline std::string to_string(DimStrategy s) { return s == DimStrategy::kernel ? "kernel" : "lattice"; }

struct DimResult {
  std::size_t dimension = 0;
  DimStrategy strategy = DimStrategy::kernel;
  std::string note;
};

/// Rank of the initial exponents; valid only when F passes sagbi_check.
template <class K>
DimResult lattice_dimension(const SubalgebraGens<K>& f, const GroebnerOptions& opts = {}) {
  if (!sagbi_check(f, opts).pass)
    throw StrategyError("generators are not a SAGBI basis; the lattice strategy does not apply");
  return {lattice_rank(initial_exponents(f)), DimStrategy::lattice,
          "rank of the initial exponents of a verified SAGBI basis"};
}

template <class K>
DimResult kernel_dimension(const SubalgebraGens<K>& f, const GroebnerOptions& opts = {}) {
  auto ker = kernel_of_map(f.presentation_map(), opts);
  return {quotient_dimension(ker, opts), DimStrategy::kernel,
          "Krull dimension of the presentation quotient over " + f.domain().name()};
}

template <class K = Rational>
DimResult dim_edge_ring(const Graph& g, DimStrategy strategy = DimStrategy::kernel, DomainOf<K> dom = {},
                        const GroebnerOptions& opts = {}) {
  auto f = binomial_gens<K>(g, dom);
  return strategy == DimStrategy::kernel ? kernel_dimension(f, opts) : lattice_dimension(f, opts);
}

/// prod_{j=1}^k f_{2j-1,2j} - f_{1,2k} prod_{j=1}^{k-1} f_{2j,2j+1} for C_{2k}.
template <class K = Rational>
Polynomial<K> even_cycle_extra_gen(int k, DomainOf<K> dom = {}) {
  if (k < 2) throw DomainError("even cycle extra generator needs k >= 2");
  const auto d = static_cast<std::size_t>(2 * k);
  auto table = graph_table(d);
  auto f = [&](int i, int j) {
    auto x = [&](int v) { return Polynomial<K>::variable(table, static_cast<std::size_t>(v - 1), dom); };
    auto y = [&](int v) { return Polynomial<K>::variable(table, d + static_cast<std::size_t>(v - 1), dom); };
    return x(i) * y(j) - x(j) * y(i);
  };
  auto left = Polynomial<K>::constant(table, 1, dom);
  auto right = f(1, 2 * k);
  for (int j = 1; j <= k; ++j) left = left * f(2 * j - 1, 2 * j);
  for (int j = 1; j <= k - 1; ++j) right = right * f(2 * j, 2 * j + 1);
  return left - right;
}

// ---------------------------------------------------------------------------
// The K_{a,b} frame

/// Positions of the variables of R_{a,b}: z_ij (i <= a, j <= b) first, then
/// z_{i i' j' j} (i < i', j' < j), both in lexicographic index order.
class KabIndex {
 public:
  KabIndex(int a, int b) : a_(a), b_(b) {
    for (int i = 1; i <= a; ++i)
      for (int j = 1; j <= b; ++j) labels_.push_back(edge_label(i, j));
    for (int i = 1; i <= a; ++i)
      for (int i2 = i + 1; i2 <= a; ++i2)
        for (int j2 = 1; j2 <= b; ++j2)
          for (int j = j2 + 1; j <= b; ++j) {
            quart_[{i, i2, j2, j}] = labels_.size();
            labels_.push_back("z" + std::to_string(i) + "_" + std::to_string(i2) + "_" + std::to_string(j2) + "_" +
                              std::to_string(j));
          }
  }
  [[nodiscard]] std::size_t quad(int i, int j) const {
    if (i < 1 || i > a_ || j < 1 || j > b_) throw std::logic_error("quadric index out of range");
    return static_cast<std::size_t>((i - 1) * b_ + (j - 1));
  }
  [[nodiscard]] std::size_t quart(int i, int i2, int j2, int j) const {
    auto it = quart_.find({i, i2, j2, j});
    if (it == quart_.end()) throw std::logic_error("quartic index out of range");
    return it->second;
  }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::size_t count() const { return labels_.size(); }

 private:
  int a_, b_;
  std::vector<std::string> labels_;
  std::map<std::tuple<int, int, int, int>, std::size_t> quart_;
};

/// Ring R_{a,b}, one z-variable per generator of the K_{a,b} subalgebra.
inline TablePtr kab_relation_table(int a, int b) { return make_table(KabIndex(a, b).labels(), Role::z); }

inline void require_kab(int a, int b) {
  if (a < 2) throw DomainError("K_{a,b} frame needs a >= 2 (use the star graph for a = 1)");
  if (a > b) throw DomainError("K_{a,b} frame needs a <= b");
}

/// A_{a,b} from its definition: e_i + f_j and e_i + e'_i' + f'_j' + f_j,
/// with e_i = x_i, e'_i' = y'_i', f'_j' = x'_j', f_j = y_j in kab_table order.
inline PointConfiguration kab_configuration(int a, int b) {
  require_kab(a, b);
  const std::size_t n = 2 * static_cast<std::size_t>(a + b);
  auto x = [&](int i) { return static_cast<std::size_t>(i - 1); };
  auto xp = [&](int j) { return static_cast<std::size_t>(a + j - 1); };
  auto yp = [&](int i) { return static_cast<std::size_t>(a + b + i - 1); };
  auto y = [&](int j) { return static_cast<std::size_t>(2 * a + b + j - 1); };
  std::vector<IntVector> pts;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      IntVector v(n, 0);
      v[x(i)] = v[y(j)] = 1;
      pts.push_back(std::move(v));
    }
  for (int i = 1; i <= a; ++i)
    for (int i2 = i + 1; i2 <= a; ++i2)
      for (int j2 = 1; j2 <= b; ++j2)
        for (int j = j2 + 1; j <= b; ++j) {
          IntVector v(n, 0);
          v[x(i)] = v[yp(i2)] = v[xp(j2)] = v[y(j)] = 1;
          pts.push_back(std::move(v));
        }
  return PointConfiguration(std::move(pts), KabIndex(a, b).labels());
}

template <class K = Rational>
struct KabFrame {
  int a, b;
  TablePtr table;
  MonomialOrder order;
  std::vector<BigInt> weight;
  SubalgebraGens<K> gens;
  PointConfiguration config;

  [[nodiscard]] const TablePtr& relation_table() const { return gens.label_table(); }
  [[nodiscard]] AlgebraMap<K> phi() const { return gens.presentation_map(); }
  /// Weight A^T w of each z-variable.
  [[nodiscard]] std::vector<BigInt> z_weights() const {
    std::vector<BigInt> out;
    for (const auto& p : config.points()) {
      BigInt s = 0;
      for (std::size_t r = 0; r < p.size(); ++r) s += weight[r] * BigInt(static_cast<long>(p[r]));
      out.push_back(s);
    }
    return out;
  }
};

/// f_ij = x_i y_j - x'_j y'_i and f_{i i' j' j} = f_ij' f_i'j - f_ij f_i'j'.
template <class K = Rational>
KabFrame<K> kab_frame(int a, int b, DomainOf<K> dom = {}) {
  require_kab(a, b);
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  auto table = kab_table(ua, ub);
  auto var = [&](std::size_t idx) { return Polynomial<K>::variable(table, idx, dom); };
  auto f = [&](int i, int j) {
    return var(i - 1) * var(2 * ua + ub + j - 1) - var(ua + j - 1) * var(ua + ub + i - 1);
  };
  std::vector<Polynomial<K>> gens;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) gens.push_back(f(i, j));
  for (int i = 1; i <= a; ++i)
    for (int i2 = i + 1; i2 <= a; ++i2)
      for (int j2 = 1; j2 <= b; ++j2)
        for (int j = j2 + 1; j <= b; ++j) gens.push_back(f(i, j2) * f(i2, j) - f(i, j) * f(i2, j2));
  auto order = kab_order(ua, ub);
  SubalgebraGens<K> sg(std::move(gens), order, KabIndex(a, b).labels());
  return KabFrame<K>{a, b, table, order, kab_weight(ua, ub), std::move(sg), kab_configuration(a, b)};
}

namespace detail {

/// Collects polynomials, skipping zeros and duplicates up to sign.
template <class K>
class SignedDedup {
 public:
  bool add(Polynomial<K> p) {
    if (p.is_zero()) return false;
    if (!seen_.insert(key(p)).second) return false;
    items_.push_back(std::move(p));
    return true;
  }
  [[nodiscard]] bool contains(const Polynomial<K>& p) const { return !p.is_zero() && seen_.count(key(p)); }
  std::vector<Polynomial<K>> take() { return std::move(items_); }

  static std::string key(const Polynomial<K>& p) {
    return FieldTraits<K>::is_negative(p.terms().front().coeff) ? (-p).to_string() : p.to_string();
  }

 private:
  std::set<std::string> seen_;
  std::vector<Polynomial<K>> items_;
};

template <class K>
struct KabVars {
  KabIndex idx;
  TablePtr table;
  DomainOf<K> dom;
  KabVars(int a, int b, DomainOf<K> d) : idx(a, b), table(make_table(idx.labels(), Role::z)), dom(d) {}
  [[nodiscard]] Polynomial<K> z(int i, int j) const { return Polynomial<K>::variable(table, idx.quad(i, j), dom); }
  [[nodiscard]] Polynomial<K> z(int i, int i2, int j2, int j) const {
    return Polynomial<K>::variable(table, idx.quart(i, i2, j2, j), dom);
  }
};

/// Visits (i, j, p, p', q', q) with p < p', q' < q.
template <class F>
void for_quad_quart(int a, int b, F&& fn) {
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int p = 1; p <= a; ++p)
        for (int p2 = p + 1; p2 <= a; ++p2)
          for (int q2 = 1; q2 <= b; ++q2)
            for (int q = q2 + 1; q <= b; ++q) fn(i, j, p, p2, q2, q);
}

/// Visits (i, i', j', j, p, p', q', q) with i < i', j' < j, p < p', q' < q.
template <class F>
void for_quart_quart(int a, int b, F&& fn) {
  for (int i = 1; i <= a; ++i)
    for (int i2 = i + 1; i2 <= a; ++i2)
      for (int j2 = 1; j2 <= b; ++j2)
        for (int j = j2 + 1; j <= b; ++j)
          for (int p = 1; p <= a; ++p)
            for (int p2 = p + 1; p2 <= a; ++p2)
              for (int q2 = 1; q2 <= b; ++q2)
                for (int q = q2 + 1; q <= b; ++q) fn(i, i2, j2, j, p, p2, q2, q);
}

}  // namespace detail

/// The eleven binomial families generating I_{A_{a,b}}, over R_{a,b}.
/// Zero instances are skipped; duplicates up to sign keep the first.
template <class K = Rational>
std::vector<Polynomial<K>> toric_binomials(int a, int b, DomainOf<K> dom = {}) {
  require_kab(a, b);
  detail::KabVars<K> v(a, b, dom);
  detail::SignedDedup<K> out;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int p = i + 1; p <= a; ++p)
        for (int q = j + 1; q <= b; ++q) out.add(v.z(i, j) * v.z(p, q) - v.z(i, q) * v.z(p, j));
  detail::for_quad_quart(a, b, [&](int i, int j, int p, int p2, int q2, int q) {
    auto lead = v.z(i, j) * v.z(p, p2, q2, q);
    if (i < p && q < j) out.add(lead - v.z(p, q) * v.z(i, p2, q2, j));
    if (p <= i && q < j) out.add(lead - v.z(i, q) * v.z(p, p2, q2, j));
    if (i < p && j <= q) out.add(lead - v.z(p, j) * v.z(i, p2, q2, q));
  });
  detail::for_quart_quart(a, b, [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
    auto lead = v.z(i, i2, j2, j) * v.z(p, p2, q2, q);
    if (i <= p && i2 <= p2 && j2 <= q2 && j <= q) out.add(lead - v.z(i, i2, q2, q) * v.z(p, p2, j2, j));
    if (i > p && i2 < p2 && j2 <= q2 && j <= q) out.add(lead - v.z(p, i2, q2, q) * v.z(i, p2, j2, j));
    if (i < p && i2 > p2 && j2 <= q2 && j <= q) out.add(lead - v.z(i, p2, q2, q) * v.z(p, i2, j2, j));
    if (i <= p && i2 <= p2 && j2 > q2 && j < q) out.add(lead - v.z(i, i2, j2, q) * v.z(p, p2, q2, j));
    if (i <= p && i2 <= p2 && j2 < q2 && j > q) out.add(lead - v.z(i, i2, q2, j) * v.z(p, p2, j2, q));
    if ((i > p && i2 < p2 && j2 > q2 && j < q) || (i < p && i2 > p2 && j2 < q2 && j > q))
      out.add(lead - v.z(p, i2, j2, q) * v.z(i, p2, q2, j));
    if ((i > p && i2 < p2 && j2 < q2 && j > q) || (i < p && i2 > p2 && j2 > q2 && j < q))
      out.add(lead - v.z(p, i2, q2, j) * v.z(i, p2, j2, q));
  });
  return out.take();
}

/// An element of Ker(phi_{a,b}) with the binomial its first two monomials
/// form (its expected initial form under A^T w).
template <class K>
struct KernelRelation {
  int family;
  Polynomial<K> relation;
  Polynomial<K> head;
};

/// The thirteen relation families in Ker(phi_{a,b}), signs as listed, in
/// family order then lexicographic (i, i', j', j, p, p', q', q) order.
/// Zero instances are skipped; duplicates up to sign keep the first.
template <class K = Rational>
std::vector<KernelRelation<K>> kernel_relations_with_heads(int a, int b, DomainOf<K> dom = {}) {
  require_kab(a, b);
  detail::KabVars<K> v(a, b, dom);
  detail::SignedDedup<K> seen;
  std::vector<KernelRelation<K>> out;
  auto add = [&](int family, Polynomial<K> head, Polynomial<K> tail) {
    auto rel = head + tail;
    if (seen.add(rel)) out.push_back({family, std::move(rel), std::move(head)});
  };
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int p = i + 1; p <= a; ++p)
        for (int q = j + 1; q <= b; ++q)
          add(1, v.z(i, j) * v.z(p, q) - v.z(i, q) * v.z(p, j), -v.z(i, p, j, q));
  detail::for_quad_quart(a, b, [&](int i, int j, int p, int p2, int q2, int q) {
    auto lead = v.z(i, j) * v.z(p, p2, q2, q);
    if (i < p && q < j)
      add(2, lead - v.z(p, q) * v.z(i, p2, q2, j),
          v.z(i, q2) * v.z(p, p2, q, j) + v.z(p2, j) * v.z(i, p, q2, q) + v.z(p2, q2) * v.z(i, p, q, j));
  });
  detail::for_quad_quart(a, b, [&](int i, int j, int p, int p2, int q2, int q) {
    if (p <= i && q < j)
      add(3, v.z(i, j) * v.z(p, p2, q2, q) - v.z(i, q) * v.z(p, p2, q2, j), v.z(i, q2) * v.z(p, p2, q, j));
  });
  detail::for_quad_quart(a, b, [&](int i, int j, int p, int p2, int q2, int q) {
    if (i < p && j <= q)
      add(4, v.z(i, j) * v.z(p, p2, q2, q) - v.z(p, j) * v.z(i, p2, q2, q), v.z(p2, j) * v.z(i, p, q2, q));
  });
  using Fam = std::function<void(int, int, int, int, int, int, int, int)>;
  std::vector<Fam> quartic_families = {
      [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
        if (i <= p && i2 <= p2 && j2 <= q2 && j <= q)
          add(5, v.z(i, i2, j2, j) * v.z(p, p2, q2, q) - v.z(i, i2, q2, q) * v.z(p, p2, j2, j),
              Polynomial<K>(v.table, dom));
      },
      [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
        if (i > p && i2 < p2 && j2 <= q2 && j <= q)
          add(6, v.z(i, i2, j2, j) * v.z(p, p2, q2, q) - v.z(p, i2, q2, q) * v.z(i, p2, j2, j),
              v.z(p, i, q2, q) * v.z(i2, p2, j2, j));
      },
      [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
        if (i < p && i2 > p2 && j2 <= q2 && j <= q)
          add(7, v.z(i, i2, j2, j) * v.z(p, p2, q2, q) - v.z(i, p2, q2, q) * v.z(p, i2, j2, j),
              v.z(p2, i2, j2, j) * v.z(i, p, q2, q));
      },
      [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
        if (i <= p && i2 <= p2 && j2 > q2 && j < q)
          add(8, v.z(i, i2, j2, j) * v.z(p, p2, q2, q) - v.z(i, i2, j2, q) * v.z(p, p2, q2, j),
              v.z(i, i2, j, q) * v.z(p, p2, q2, j2));
      },
      [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
        if (i <= p && i2 <= p2 && j2 < q2 && j > q)
          add(9, v.z(i, i2, j2, j) * v.z(p, p2, q2, q) - v.z(i, i2, q2, j) * v.z(p, p2, j2, q),
              v.z(i, i2, j2, q2) * v.z(p, p2, q, j));
      },
      [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
        if (i > p && i2 < p2 && j2 > q2 && j < q)
          add(10, v.z(i, i2, j2, j) * v.z(p, p2, q2, q) - v.z(p, i2, j2, q) * v.z(i, p2, q2, j),
              v.z(p, i, j2, q) * v.z(i2, p2, q2, j) + v.z(i, p2, j, q) * v.z(p, i2, q2, j2) -
                  v.z(i2, p2, j, q) * v.z(p, i, q2, j2));
      },
      [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
        if (i < p && i2 > p2 && j2 < q2 && j > q)
          add(11, v.z(i, i2, j2, j) * v.z(p, p2, q2, q) - v.z(p, i2, j2, q) * v.z(i, p2, q2, j),
              v.z(i, p, q2, j) * v.z(p2, i2, j2, q) + v.z(p, i2, q, j) * v.z(i, p2, j2, q2) -
                  v.z(p2, i2, q, j) * v.z(i, p, j2, q2));
      },
      [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
        if (i > p && i2 < p2 && j2 < q2 && j > q)
          add(12, v.z(i, i2, j2, j) * v.z(p, p2, q2, q) - v.z(p, i2, q2, j) * v.z(i, p2, j2, q),
              v.z(p, i, q2, j) * v.z(i2, p2, j2, q) + v.z(i, p2, q, j) * v.z(p, i2, j2, q2) -
                  v.z(i2, p2, q, j) * v.z(p, i, j2, q2));
      },
      [&](int i, int i2, int j2, int j, int p, int p2, int q2, int q) {
        if (i < p && i2 > p2 && j2 > q2 && j < q)
          add(13, v.z(i, i2, j2, j) * v.z(p, p2, q2, q) - v.z(p, i2, q2, j) * v.z(i, p2, j2, q),
              v.z(i, p, j2, q) * v.z(p2, i2, q2, j) + v.z(p, i2, j, q) * v.z(i, p2, q2, j2) -
                  v.z(p2, i2, j, q) * v.z(i, p, q2, j2));
      },
  };
  for (auto& fam : quartic_families) detail::for_quart_quart(a, b, fam);
  return out;
}

template <class K = Rational>
std::vector<Polynomial<K>> kernel_relations(int a, int b, DomainOf<K> dom = {}) {
  std::vector<Polynomial<K>> out;
  for (auto& r : kernel_relations_with_heads<K>(a, b, dom)) out.push_back(std::move(r.relation));
  return out;
}

// ---------------------------------------------------------------------------
// Unimodular map A_{a,b} -> B_{a,b}

/// Integer map on kab_table coordinates: prefix sums on the e-block, prefix
/// sums from e'_2 on the e'-block, suffix sums on the f'- and f-blocks.
/// `rows` are the kept coordinates in poset basis order (e_1..e_{a-1},
/// e'_2..e'_{a-1}, f'_1..f'_{b-1}, f_2..f_b); `dropped` are the e_a, f_1
/// and e'_a coordinates, constant 1, 1, 0 on A_{a,b}.
struct UnimodularMap {
  std::vector<IntVector> rows;
  std::vector<IntVector> dropped;
  IntVector dropped_values;

  [[nodiscard]] static IntVector apply_rows(const std::vector<IntVector>& m, const IntVector& v) {
    IntVector out;
    for (const auto& row : m) {
      if (row.size() != v.size()) throw DimensionError("vector length does not match the map");
      std::int64_t s = 0;
      for (std::size_t c = 0; c < v.size(); ++c) s += row[c] * v[c];
      out.push_back(s);
    }
    return out;
  }
  [[nodiscard]] IntVector operator()(const IntVector& v) const { return apply_rows(rows, v); }
};

inline UnimodularMap unimodular_map(int a, int b) {
  require_kab(a, b);
  const std::size_t n = 2 * static_cast<std::size_t>(a + b);
  auto x = [&](int i) { return static_cast<std::size_t>(i - 1); };
  auto xp = [&](int j) { return static_cast<std::size_t>(a + j - 1); };
  auto yp = [&](int i) { return static_cast<std::size_t>(a + b + i - 1); };
  auto y = [&](int j) { return static_cast<std::size_t>(2 * a + b + j - 1); };
  auto sum_row = [&](auto col, int lo, int hi) {
    IntVector r(n, 0);
    for (int k = lo; k <= hi; ++k) r[col(k)] += 1;
    return r;
  };
  UnimodularMap m;
  for (int k = 1; k <= a - 1; ++k) m.rows.push_back(sum_row(x, 1, k));
  for (int k = 2; k <= a - 1; ++k) m.rows.push_back(sum_row(yp, 2, k));
  for (int k = 1; k <= b - 1; ++k) m.rows.push_back(sum_row(xp, k, b));
  for (int k = 2; k <= b; ++k) m.rows.push_back(sum_row(y, k, b));
  m.dropped.push_back(sum_row(x, 1, a));
  m.dropped.push_back(sum_row(y, 1, b));
  auto ea = sum_row(yp, 2, a);
  for (int k = 1; k <= b - 1; ++k) ea[xp(k)] -= 1;
  m.dropped.push_back(std::move(ea));
  m.dropped_values = {1, 1, 0};
  return m;
}

/// The ideals of Pi_{a,b} as listed by generators: the empty ideal,
/// <e_i>, <f_j>, <e_i,f_j>, <e_i,e'_i'>, <e_i,e'_i',f_j>, <f'_j',f_j>,
/// <e_i,f'_j',f_j>, <e_i,e'_i',f'_j',f_j>, each index over the elements
/// that exist (e_1..e_{a-1}, e'_2..e'_{a-1}, f'_1..f'_{b-1}, f_2..f_b) with
/// i < i' and j' < j. Sorted and deduplicated.
inline std::vector<PosetIdeal> listed_ideals(const Poset& pi, int a, int b) {
  std::set<PosetIdeal> out;
  auto id = [&](const std::string& l) { return pi.index_of(l); };
  auto e = [&](int i) { return id("e" + std::to_string(i)); };
  auto ep = [&](int i) { return id("ep" + std::to_string(i)); };
  auto fp = [&](int j) { return id("fp" + std::to_string(j)); };
  auto f = [&](int j) { return id("f" + std::to_string(j)); };
  auto put = [&](std::vector<std::size_t> gens) { out.insert(down_set(pi, gens)); };
  put({});
  for (int i = 1; i <= a - 1; ++i) put({e(i)});
  for (int j = 2; j <= b; ++j) put({f(j)});
  for (int i = 1; i <= a - 1; ++i)
    for (int j = 2; j <= b; ++j) put({e(i), f(j)});
  for (int i = 1; i <= a - 1; ++i)
    for (int i2 = std::max(i + 1, 2); i2 <= a - 1; ++i2) {
      put({e(i), ep(i2)});
      for (int j = 2; j <= b; ++j) put({e(i), ep(i2), f(j)});
    }
  for (int j2 = 1; j2 <= b - 1; ++j2)
    for (int j = std::max(j2 + 1, 2); j <= b; ++j) {
      put({fp(j2), f(j)});
      for (int i = 1; i <= a - 1; ++i) {
        put({e(i), fp(j2), f(j)});
        for (int i2 = std::max(i + 1, 2); i2 <= a - 1; ++i2) put({e(i), ep(i2), fp(j2), f(j)});
      }
    }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Verification pipeline

struct StepRecord {
  std::string name;
  bool pass = false;
  std::optional<double> ms;
  std::optional<std::string> witness;
};

struct VerificationReport {
  int a = 0, b = 0;
  std::vector<StepRecord> steps;
  std::optional<std::size_t> dimension;
  bool gorenstein_expected = false;
  bool graded = false;
  std::string field;
  bool budget_exceeded = false;

  [[nodiscard]] bool pass() const {
    return !budget_exceeded && !steps.empty() &&
           std::all_of(steps.begin(), steps.end(), [](const StepRecord& s) { return s.pass; });
  }
};

inline std::size_t kab_generator_count(int a, int b) {
  auto c2 = [](int n) { return static_cast<std::size_t>(n * (n - 1) / 2); };
  return static_cast<std::size_t>(a * b) + c2(a) * c2(b);
}

/// Runs the four-step ideal comparison for K_{a,b}, the subduction
/// criterion, and the lattice-rank dimension check. Steps run in order; a
/// budget overrun stops the run and marks the report.
template <class K = Rational>
VerificationReport verify_main_theorems(int a, int b, DomainOf<K> dom = {}, const GroebnerOptions& opts = {},
                                        bool timings = false) {
  require_kab(a, b);
  VerificationReport rep;
  rep.a = a;
  rep.b = b;
  rep.field = dom.name();
  rep.gorenstein_expected = (a == 2 || a == b);
  const Poset pi = build_pi(a, b);
  rep.graded = is_graded(pi);

  const auto frame = kab_frame<K>(a, b, dom);
  const auto& config = frame.config;
  const auto ideals = enumerate_ideals(pi);
  const auto umap = unimodular_map(a, b);
  const auto rtable = frame.relation_table();
  bool sagbi_pass = false;

  auto run = [&](const std::string& name, auto&& body) {
    if (rep.budget_exceeded) return;
    StepRecord step{name, false, std::nullopt, std::nullopt};
    auto t0 = std::chrono::steady_clock::now();
    try {
      step.witness = body();
      step.pass = !step.witness.has_value();
    } catch (const BudgetExceeded& e) {
      step.witness = std::string("budget exceeded: ") + e.what();
      rep.budget_exceeded = true;
    }
    if (timings)
      step.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.steps.push_back(std::move(step));
  };

  // z-variable of A_{a,b} for each ideal of Pi_{a,b}, via the unimodular map.
  std::vector<std::size_t> ideal_to_z(ideals.size(), SIZE_MAX);

  run("unimodular_equivalence", [&]() -> std::optional<std::string> {
    std::map<IntVector, std::size_t> image;
    for (std::size_t r = 0; r < config.size(); ++r) {
      const auto& pt = config.points()[r];
      if (UnimodularMap::apply_rows(umap.dropped, pt) != umap.dropped_values)
        return "dropped coordinates are not constant at " + config.labels()[r];
      if (!image.emplace(umap(pt), r).second) return "map is not injective at " + config.labels()[r];
    }
    auto b_config = encode_ideals_B(a, b);
    if (b_config.size() != image.size()) return "image has a different size from B";
    for (std::size_t k = 0; k < b_config.size(); ++k) {
      auto it = image.find(b_config.points()[k]);
      if (it == image.end()) return "ideal " + b_config.labels()[k] + " is not in the image";
      ideal_to_z[k] = it->second;
    }
    if (listed_ideals(pi, a, b) != ideals) return std::string("listed ideals differ from the enumerated ideals");
    if (ideals.size() != kab_generator_count(a, b)) return std::string("ideal count differs from ab + C(a,2)C(b,2)");
    return std::nullopt;
  });

  run("toric_ideal", [&]() -> std::optional<std::string> {
    auto ia = toric_ideal<K>(config, dom, opts);
    if (!ideals_equal(ia, Ideal<K>(rtable, toric_binomials<K>(a, b, dom)), opts))
      return std::string("toric ideal of A differs from the ideal of the binomial families");
    if (std::find(ideal_to_z.begin(), ideal_to_z.end(), SIZE_MAX) != ideal_to_z.end())
      return std::string("no correspondence between ideals and z-variables");
    std::vector<Polynomial<K>> hibi;
    for (const auto& g : hibi_toric_gens<K>(pi, dom)) hibi.push_back(g.relabel(rtable, ideal_to_z));
    if (!ideals_equal(ia, Ideal<K>(rtable, std::move(hibi)), opts))
      return std::string("toric ideal of A differs from the Hibi relations under the encoding");
    return std::nullopt;
  });

  const auto relations = kernel_relations_with_heads<K>(a, b, dom);

  run("kernel_relations", [&]() -> std::optional<std::string> {
    auto phi = frame.phi();
    for (const auto& r : relations)
      if (!phi(r.relation).is_zero())
        return "phi does not vanish on " + r.relation.to_string();
    return std::nullopt;
  });

  run("initial_forms", [&]() -> std::optional<std::string> {
    const auto w = frame.z_weights();
    detail::SignedDedup<K> binomials;
    for (auto& g : toric_binomials<K>(a, b, dom)) binomials.add(std::move(g));
    for (const auto& r : relations) {
      auto in = r.relation.initial_form(w);
      if (!(in == r.head)) return "initial form of " + r.relation.to_string() + " is " + in.to_string();
      if (!binomials.contains(in)) return "initial form " + in.to_string() + " is not a listed binomial";
    }
    return std::nullopt;
  });

  run("sagbi_criterion", [&]() -> std::optional<std::string> {
    auto res = sagbi_check(frame.gens, opts);
    sagbi_pass = res.pass;
    if (res.pass) return std::nullopt;
    return "lifted relation does not subduct; remainder " + res.witness->to_string();
  });

  run("dimension", [&]() -> std::optional<std::string> {
    auto r = lattice_rank(config);
    if (sagbi_pass) rep.dimension = r;
    auto expected = static_cast<std::size_t>(2 * (a + b - 2));
    if (r != expected) return "lattice rank " + std::to_string(r) + ", expected " + std::to_string(expected);
    return std::nullopt;
  });

  return rep;
}

}  // namespace sagbi_forge
