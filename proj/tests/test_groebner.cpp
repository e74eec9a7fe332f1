#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace sagbi_forge;
using sagbi_forge::testing::Gen;
using sagbi_forge::testing::parse;

namespace {

std::vector<Polynomial<>> parse_all(const std::vector<std::string>& src, const TablePtr& t) {
  std::vector<Polynomial<>> out;
  for (const auto& s : src) out.push_back(parse(s, t));
  return out;
}

Polynomial<> s_polynomial(const Polynomial<>& f, const Polynomial<>& g, const MonomialOrder& ord) {
  auto lf = f.leading_term(ord), lg = g.leading_term(ord);
  auto l = lf.exps.lcm(lg.exps);
  return f.mul_term(Rational(1) / lf.coeff, l - lf.exps) - g.mul_term(Rational(1) / lg.coeff, l - lg.exps);
}

void expect_reduced_gb(const GroebnerBasis<>& gb) {
  const auto& ord = gb.order;
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    EXPECT_EQ(gb.basis[i].leading_term(ord).coeff, 1);
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      auto lj = gb.basis[j].leading_term(ord).exps;
      for (const auto& t : gb.basis[i].terms()) EXPECT_FALSE(lj.divides(t.exps));
      if (j > i) {
        EXPECT_TRUE(reduce(s_polynomial(gb.basis[i], gb.basis[j], ord), gb).is_zero());
      }
    }
  }
}

}  // namespace

TEST(Reduce, Examples) {
  auto t = make_table({"x", "y", "z"});
  auto ord = MonomialOrder::lex(3);
  auto g = parse("x^2*y - z", t);
  std::vector<Polynomial<>> gs{g};
  EXPECT_TRUE(reduce<Rational>(g, gs, ord).is_zero());
  std::vector<Polynomial<>> none;
  auto p = parse("x + y^3", t);
  EXPECT_EQ(reduce<Rational>(p, none, ord), p);
  // remainder has no term divisible by x^2 y
  auto r = reduce<Rational>(parse("x^3*y^2 + x", t), gs, ord);
  EXPECT_EQ(r, parse("x*z*y + x", t));
}

TEST(Reduce, PluckerStyleMembership) {
  auto frame = kab_frame<Rational>(2, 2);
  auto ker = kernel_of_map(frame.phi());
  auto gb = buchberger(ker, MonomialOrder::graded_lex(5));
  auto rel = parse("z1_1*z2_2 - z1_2*z2_1 - z1_2_1_2", frame.relation_table());
  EXPECT_TRUE(reduce(rel, gb).is_zero());
}

TEST(Buchberger, SingleBinomialIsItsOwnBasis) {
  auto t = make_table({"z11", "z12", "z21", "z22"}, Role::z);
  auto g = parse("z11*z22 - z12*z21", t);
  auto gb = buchberger(Ideal<>(t, {g}), MonomialOrder::graded_lex(4));
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], g);
}

TEST(Buchberger, LinearHandExample) {
  auto t = make_table({"x", "y", "z"});
  auto gb = buchberger(Ideal<>(t, parse_all({"x - y", "y - z"}, t)), MonomialOrder::lex(3));
  auto want = parse_all({"y - z", "x - z"}, t);  // ascending leading monomial
  EXPECT_EQ(gb.basis, want);
}

TEST(Buchberger, PathKernelIsZero) {
  auto f = binomial_gens<Rational>(path_graph(4));
  EXPECT_TRUE(kernel_of_map(f.presentation_map()).is_zero());
}

TEST(Buchberger, UnitIdeal) {
  auto t = make_table({"x", "y"});
  auto gb = buchberger(Ideal<>(t, parse_all({"x*y - 1", "x"}, t)), MonomialOrder::graded_reverse_lex(2));
  EXPECT_TRUE(gb.is_unit());
  EXPECT_THROW(quotient_dimension(Ideal<>(t, parse_all({"x*y - 1", "x"}, t))), UnitIdealError);
}

TEST(Buchberger, DegreeCapThrowsBudgetExceeded) {
  auto t = make_table({"x", "y", "z"});
  GroebnerOptions opts;
  opts.degree_cap = 2;
  EXPECT_THROW(buchberger(Ideal<>(t, parse_all({"x^2 - y*z", "x*y - z^2", "y^3 - x*z^2"}, t)),
                          MonomialOrder::lex(3), opts),
               BudgetExceeded);
}

TEST(Buchberger, ExpiredDeadlineThrowsBudgetExceeded) {
  auto frame = kab_frame<Rational>(2, 3);
  auto opts = GroebnerOptions::with_budget(std::chrono::duration<double>(-1.0));
  EXPECT_THROW(kernel_of_map(frame.phi(), opts), BudgetExceeded);
}

TEST(Eliminate, TwistedCubicStyle) {
  auto t = make_table({"x", "z1", "z2"});
  auto gb = eliminate(Ideal<>(t, parse_all({"x - z1", "x^2 - z2"}, t)), {0});
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], parse("z1^2 - z2", t));
}

TEST(Eliminate, ZeroIdeal) {
  auto t = make_table({"x", "y"});
  EXPECT_TRUE(eliminate(Ideal<>(t, {}), {0}).basis.empty());
}

TEST(Eliminate, K22KernelByHand) {
  auto frame = kab_frame<Rational>(2, 2);
  auto ker = kernel_of_map(frame.phi());
  ASSERT_EQ(ker.generators.size(), 1u);
  auto want = parse("z1_1*z2_2 - z1_2*z2_1 - z1_2_1_2", frame.relation_table());
  auto g = ker.generators[0];
  EXPECT_TRUE(g == want || g == -want) << g.to_string();
}

TEST(KernelOfMap, TreesC4AndK4) {
  EXPECT_TRUE(kernel_of_map(binomial_gens<Rational>(star_graph(4)).presentation_map()).is_zero());
  EXPECT_TRUE(kernel_of_map(binomial_gens<Rational>(cycle_graph(4)).presentation_map()).is_zero());
  auto f = binomial_gens<Rational>(complete_graph(4));
  auto ker = kernel_of_map(f.presentation_map());
  ASSERT_EQ(ker.generators.size(), 1u);
  auto plucker = parse("z1_2*z3_4 - z1_3*z2_4 + z1_4*z2_3", f.label_table());
  EXPECT_TRUE(ker.generators[0] == plucker || ker.generators[0] == -plucker) << ker.generators[0].to_string();
  // independent check: the relation vanishes under the map
  EXPECT_TRUE(f.presentation_map()(plucker).is_zero());
  EXPECT_EQ(quotient_dimension(ker), 5u);
}

TEST(KernelOfMap, GeneratorsVanish) {
  for (auto g : {complete_graph(4), graph_g1(), complete_bipartite_graph(2, 3)}) {
    auto f = binomial_gens<Rational>(g);
    auto phi = f.presentation_map();
    for (const auto& k : kernel_of_map(phi).generators) EXPECT_TRUE(phi(k).is_zero());
  }
}

TEST(IdealMembership, Examples) {
  auto t = make_table({"p", "q", "r"});
  auto p = parse("p^2 - q", t), q = parse("q*r - 1", t);
  EXPECT_TRUE(ideal_membership(p, Ideal<>(t, {p, q})));
  auto frame = kab_frame<Rational>(2, 2);
  auto ker = kernel_of_map(frame.phi());
  EXPECT_FALSE(ideal_membership(parse("z1_2_1_2", frame.relation_table()), ker));
}

TEST(IdealMembership, KernelRelations33) {
  auto frame = kab_frame<Rational>(3, 3);
  auto ker = kernel_of_map(frame.phi());
  for (const auto& r : kernel_relations<Rational>(3, 3)) EXPECT_TRUE(ideal_membership(r, ker)) << r.to_string();
}

TEST(IdealsEqual, Examples) {
  auto t = make_table({"x", "y"});
  EXPECT_TRUE(ideals_equal(Ideal<>(t, parse_all({"x", "y"}, t)), Ideal<>(t, parse_all({"y", "x + y"}, t))));
  EXPECT_FALSE(ideals_equal(Ideal<>(t, parse_all({"x"}, t)), Ideal<>(t, parse_all({"x^2"}, t))));
  auto rt = kab_relation_table(2, 2);
  EXPECT_TRUE(ideals_equal(toric_ideal<Rational>(kab_configuration(2, 2)), Ideal<>(rt, toric_binomials<Rational>(2, 2))));
}

TEST(QuotientDimension, Examples) {
  auto t = make_table({"a", "b", "c", "d"});
  EXPECT_EQ(quotient_dimension(Ideal<>(t, {})), 4u);
  EXPECT_EQ(quotient_dimension(Ideal<>(t, parse_all({"a*b", "c"}, t))), 2u);
  EXPECT_EQ(quotient_dimension(Ideal<>(t, parse_all({"a^2 - b*c", "a*d"}, t))), 2u);
}

TEST(QuotientDimension, G1IsEleven) {
  auto f = binomial_gens<Rational>(graph_g1());
  EXPECT_EQ(quotient_dimension(kernel_of_map(f.presentation_map())), 11u);
}

TEST(QuotientDimension, PrimeFieldAgreesOnK4) {
  auto f = binomial_gens<Zp>(complete_graph(4), prime_field(32003));
  EXPECT_EQ(quotient_dimension(kernel_of_map(f.presentation_map())), 5u);
}

// --- properties -----------------------------------------------------------

TEST(GroebnerProperties, ReducedAndSPairsVanish) {
  Gen gen(31);
  auto t = make_table({"a", "b", "c"});
  for (int trial = 0; trial < 15; ++trial) {
    // dense trinomials under grevlex; binomials under lex, where rational
    // coefficients of zero-dimensional bases grow too fast for a unit test
    std::vector<Polynomial<>> dense, sparse;
    for (int k = 0; k < 3; ++k) dense.push_back(gen.polynomial(t, 3, 2));
    for (int k = 0; k < 3; ++k) sparse.push_back(gen.polynomial(t, 2, 2));
    for (const auto& [ord, gens] : {std::pair{MonomialOrder::graded_reverse_lex(3), dense},
                                    std::pair{MonomialOrder::lex(3), sparse}}) {
      auto gb = buchberger(Ideal<>(t, gens), ord);
      expect_reduced_gb(gb);
      for (const auto& g : gens) EXPECT_TRUE(reduce(g, gb).is_zero());
    }
  }
}

TEST(GroebnerProperties, ShuffleDeterminism) {
  Gen gen(77);
  auto f = binomial_gens<Rational>(complete_graph(4));
  auto base = toric_binomials<Rational>(3, 3);
  auto rt = kab_relation_table(3, 3);
  auto ord = MonomialOrder::graded_reverse_lex(rt->count());
  auto reference = buchberger(Ideal<>(rt, base), ord).to_strings();
  for (int trial = 0; trial < 5; ++trial) {
    auto shuffled = base;
    gen.shuffle(shuffled);
    EXPECT_EQ(buchberger(Ideal<>(rt, shuffled), ord).to_strings(), reference);
  }
  Gen gen2(78);
  auto t = make_table({"a", "b", "c"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial<>> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(gen2.polynomial(t, 3, 2));
    auto ref = buchberger(Ideal<>(t, gens), MonomialOrder::graded_lex(3)).to_strings();
    gen2.shuffle(gens);
    EXPECT_EQ(buchberger(Ideal<>(t, gens), MonomialOrder::graded_lex(3)).to_strings(), ref);
  }
}

TEST(GroebnerProperties, DimensionIndependentOfOrder) {
  std::vector<Graph> graphs{complete_graph(4), cycle_graph(5), complete_bipartite_graph(2, 3), graph_g2()};
  for (const auto& g : graphs) {
    auto f = binomial_gens<Rational>(g);
    auto ker = kernel_of_map(f.presentation_map());
    auto n = ker.table->count();
    EXPECT_EQ(quotient_dimension(ker, MonomialOrder::graded_lex(n)),
              quotient_dimension(ker, MonomialOrder::graded_reverse_lex(n)));
  }
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    auto ker = kernel_of_map(kab_frame<Rational>(a, b).phi());
    auto n = ker.table->count();
    EXPECT_EQ(quotient_dimension(ker, MonomialOrder::graded_lex(n)),
              quotient_dimension(ker, MonomialOrder::graded_reverse_lex(n)));
  }
}

TEST(GroebnerProperties, EliminationCorrectness) {
  Gen gen(5);
  auto t = make_table({"a", "b", "c", "d"});
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial<>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(gen.polynomial(t, 2, 2));
    Ideal<> ideal(t, gens);
    auto gb = eliminate(ideal, {0, 1});
    auto full = buchberger(ideal, MonomialOrder::graded_reverse_lex(4));
    for (const auto& g : gb.basis) {
      EXPECT_TRUE(reduce(g, full).is_zero());
      for (const auto& term : g.terms()) {
        EXPECT_EQ(term.exps[0], 0);
        EXPECT_EQ(term.exps[1], 0);
      }
    }
  }
}
