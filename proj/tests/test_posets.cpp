#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace sagbi_forge;
using sagbi_forge::testing::Gen;
using sagbi_forge::testing::parse;

namespace {

/// All down-closed subsets by checking every subset against the covers.
std::set<std::vector<std::size_t>> brute_ideals(const Poset& p) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = p.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (auto [lo, up] : p.covers())
      if ((mask >> up & 1) && !(mask >> lo & 1)) ok = false;
    if (!ok) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.insert(s);
  }
  return out;
}

/// Element counts of all maximal chains, by walking covers.
std::set<std::size_t> maximal_chain_lengths(const Poset& p) {
  std::set<std::size_t> out;
  auto walk = [&](auto&& self, std::size_t x, std::size_t len) -> void {
    if (p.upper_covers(x).empty()) {
      out.insert(len);
      return;
    }
    for (auto u : p.upper_covers(x)) self(self, u, len + 1);
  };
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.lower_covers(x).empty()) walk(walk, x, 1);
  return out;
}

Poset antichain(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back("p" + std::to_string(i + 1));
  return Poset(l, {});
}

Poset chain(std::size_t n) {
  std::vector<std::string> l;
  std::vector<Poset::Cover> c;
  for (std::size_t i = 0; i < n; ++i) l.push_back("c" + std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return Poset(l, c);
}

std::size_t expected_ideal_count(int a, int b) { return kab_generator_count(a, b); }

}  // namespace

TEST(Poset, Validation) {
  EXPECT_THROW(Poset({"a", "b"}, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(Poset({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), DomainError);
  EXPECT_THROW(Poset({"a", "a"}, {}), DomainError);
  EXPECT_THROW(Poset({"a"}, {{0, 0}}), DomainError);
  auto p = chain(3);
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_FALSE(p.less(2, 0));
}

TEST(BuildPi, Pi22) {
  auto p = build_pi(2, 2);
  EXPECT_EQ(p.labels(), (std::vector<std::string>{"e1", "fp1", "f2"}));
  std::vector<Poset::Cover> want{{p.index_of("e1"), p.index_of("fp1")}, {p.index_of("f2"), p.index_of("fp1")}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(p.covers(), want);
}

TEST(BuildPi, SizesAndErrors) {
  for (int b = 2; b <= 6; ++b) EXPECT_EQ(build_pi(2, b).size(), static_cast<std::size_t>(2 * b - 1));
  auto p33 = build_pi(3, 3);
  EXPECT_EQ(p33.size(), 7u);
  EXPECT_EQ(enumerate_ideals(p33).size(), 18u);
  EXPECT_THROW(build_pi(1, 3), DomainError);
  EXPECT_THROW(build_pi(4, 3), DomainError);
}

TEST(EnumerateIdeals, Examples) {
  EXPECT_EQ(enumerate_ideals(antichain(2)).size(), 4u);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_ideals(chain(n)).size(), n + 1);
  auto p = build_pi(2, 2);
  auto ids = enumerate_ideals(p);
  std::vector<std::vector<std::string>> got;
  for (const auto& id : ids) {
    std::vector<std::string> l;
    for (auto m : id.members) l.push_back(p.label(m));
    got.push_back(l);
  }
  std::vector<std::vector<std::string>> want{{}, {"e1"}, {"f2"}, {"e1", "f2"}, {"e1", "fp1", "f2"}};
  EXPECT_EQ(got, want);
}

TEST(IdealOps, UnionIntersection) {
  auto p = build_pi(3, 3);
  auto e1 = p.index_of("e1"), e2 = p.index_of("e2"), f2 = p.index_of("f2"), f3 = p.index_of("f3");
  auto i13 = down_set(p, {e1, f3}), i22 = down_set(p, {e2, f2});
  EXPECT_EQ(ideal_union(i13, i22), down_set(p, {e1, f3}));
  EXPECT_EQ(ideal_intersection(i13, i22), down_set(p, {e2, f2}));
  PosetIdeal empty;
  EXPECT_EQ(ideal_union(i13, empty), i13);
  EXPECT_EQ(ideal_intersection(i22, i22), i22);
}

TEST(Antichains, Examples) {
  auto p = build_pi(2, 2);
  EXPECT_TRUE(ideal_from_antichain(p, {}).members.empty());
  EXPECT_TRUE(antichain_of_ideal(p, PosetIdeal{}).empty());
  auto top = ideal_from_antichain(p, {p.index_of("fp1")});
  EXPECT_EQ(top.members.size(), 3u);
  EXPECT_THROW(ideal_from_antichain(p, {p.index_of("e1"), p.index_of("fp1")}), DomainError);
  auto p34 = build_pi(3, 4);
  for (const auto& id : enumerate_ideals(p34)) EXPECT_EQ(ideal_from_antichain(p34, antichain_of_ideal(p34, id)), id);
}

TEST(Hibi, Generators) {
  auto a2 = antichain(2);
  auto gens = hibi_generators<Rational>(a2);
  auto t = gens[0].table();
  std::vector<Polynomial<>> want{parse("x3", t), parse("x1*x3", t), parse("x2*x3", t), parse("x1*x2*x3", t)};
  EXPECT_EQ(gens, want);
  auto g22 = hibi_generators<Rational>(build_pi(2, 2));
  EXPECT_EQ(g22.size(), 5u);
  EXPECT_EQ(g22[0].table()->count(), 4u);
  EXPECT_EQ(g22[0].to_string(), "x4");
}

TEST(Hibi, ToricGens) {
  EXPECT_TRUE(hibi_toric_gens<Rational>(chain(4)).empty());
  auto p = build_pi(2, 2);
  auto rels = hibi_toric_gens<Rational>(p);
  ASSERT_EQ(rels.size(), 1u);
  auto want = parse("zI_e1*zI_f2 - zI_e1_f2*zI", rels[0].table());
  EXPECT_EQ(rels[0], want);
}

TEST(Hibi, ToricGensGenerateToricIdealOfB) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
    auto p = build_pi(a, b);
    auto ib = toric_ideal<Rational>(homogenize(encode_ideals_B(a, b)));
    EXPECT_TRUE(ideals_equal(ib, Ideal<>(ib.table, hibi_toric_gens<Rational>(p))));
  }
}

TEST(IsGraded, Examples) {
  EXPECT_TRUE(is_graded(build_pi(2, 5)));
  EXPECT_FALSE(is_graded(build_pi(3, 4)));
  EXPECT_TRUE(is_graded(build_pi(3, 3)));
  EXPECT_TRUE(is_graded(chain(3)));
  EXPECT_TRUE(is_graded(antichain(3)));
  EXPECT_FALSE(is_graded(Poset({"a", "b", "c"}, {{0, 1}})));
}

TEST(EncodeB, Examples) {
  auto b22 = encode_ideals_B(2, 2);
  EXPECT_EQ(b22.points()[0], (IntVector{0, 0, 0}));
  EXPECT_EQ(b22.points().back(), (IntVector{1, 1, 1}));
  for (int a = 2; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) EXPECT_EQ(encode_ideals_B(a, b).size(), kab_generator_count(a, b));
}

// --- properties -----------------------------------------------------------

TEST(PosetProperties, EnumerationMatchesBruteForce) {
  for (int a = 2; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) {
      auto p = build_pi(a, b);
      auto ids = enumerate_ideals(p);
      std::set<std::vector<std::size_t>> got;
      for (const auto& id : ids) {
        EXPECT_TRUE(is_down_closed(p, id.members));
        got.insert(id.members);
      }
      EXPECT_EQ(got.size(), ids.size());
      EXPECT_EQ(got, brute_ideals(p));
      EXPECT_EQ(ids.size(), expected_ideal_count(a, b));
    }
}

TEST(PosetProperties, DistributiveLattice) {
  Gen gen(3);
  auto p = build_pi(4, 5);
  auto ids = enumerate_ideals(p);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& i = ids[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(ids.size()) - 1))];
    const auto& j = ids[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(ids.size()) - 1))];
    const auto& k = ids[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(ids.size()) - 1))];
    EXPECT_EQ(ideal_intersection(ideal_union(i, j), k), ideal_union(ideal_intersection(i, k), ideal_intersection(j, k)));
    EXPECT_TRUE(is_down_closed(p, ideal_union(i, j).members));
    EXPECT_TRUE(is_down_closed(p, ideal_intersection(i, j).members));
  }
}

TEST(PosetProperties, AntichainBijection) {
  for (int a = 2; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) {
      auto p = build_pi(a, b);
      std::set<std::vector<std::size_t>> antichains;
      for (const auto& id : enumerate_ideals(p)) {
        auto ac = antichain_of_ideal(p, id);
        EXPECT_TRUE(is_antichain(p, ac));
        EXPECT_EQ(ideal_from_antichain(p, ac), id);
        antichains.insert(ac);
      }
      EXPECT_EQ(antichains.size(), enumerate_ideals(p).size());
    }
}

TEST(PosetProperties, GradedIffAIs2OrAEqualsB) {
  for (int a = 2; a <= 6; ++a)
    for (int b = a; b <= 6; ++b) {
      auto p = build_pi(a, b);
      EXPECT_EQ(is_graded(p), a == 2 || a == b) << a << "," << b;
      EXPECT_EQ(is_graded(p), maximal_chain_lengths(p).size() == 1) << a << "," << b;
    }
}

TEST(PosetProperties, HibiRelationsVanish) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}}) {
    auto p = build_pi(a, b);
    auto gens = hibi_generators<Rational>(p);
    for (const auto& rel : hibi_toric_gens<Rational>(p)) EXPECT_TRUE(rel.substitute(gens, gens[0].table()).is_zero());
  }
}
