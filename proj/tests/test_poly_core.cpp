#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace sagbi_forge;
using sagbi_forge::testing::Gen;
using sagbi_forge::testing::parse;

namespace {

std::vector<MonomialOrder> all_orders(std::size_t n) {
  std::vector<std::size_t> rev(n);
  for (std::size_t i = 0; i < n; ++i) rev[i] = n - 1 - i;
  std::vector<BigInt> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<long>(i % 3 + 1);
  return {MonomialOrder::lex(n),
          MonomialOrder::graded_lex(n),
          MonomialOrder::graded_reverse_lex(n),
          MonomialOrder::graded_lex(n, rev),
          MonomialOrder::weight(w, MonomialOrder::graded_reverse_lex(n)),
          MonomialOrder::elimination(n, {0, 2}, OrderKind::graded_reverse_lex)};
}

}  // namespace

TEST(Field, ZpArithmeticAndInverse) {
  auto dom = prime_field(7);
  Zp a = Zp::from_int(3, 7), b = Zp::from_int(5, 7);
  EXPECT_EQ(a * b, Zp::from_int(1, 7));
  EXPECT_EQ(FieldTraits<Zp>::inverse(a), b);
  EXPECT_EQ(a - b, Zp::from_int(-2, 7));
  EXPECT_EQ(dom.name(), "fp:7");
  EXPECT_THROW(prime_field(8), DomainError);
  EXPECT_EQ(FieldTraits<Rational>::Domain{}.name(), "q");
}

TEST(Field, ZpFromRational) {
  auto dom = prime_field(11);
  auto half = FieldTraits<Zp>::from_rational(Rational(1, 2), dom);
  EXPECT_EQ(half * Zp::from_int(2, 11), Zp::from_int(1, 11));
}

TEST(VariableTable, KabRanking) {
  auto t = kab_table(2, 2);
  std::vector<std::string> want{"x1", "x2", "xp1", "xp2", "yp1", "yp2", "y1", "y2"};
  EXPECT_EQ(t->names(), want);
  EXPECT_EQ(t->role(2), Role::xp);
  EXPECT_EQ(t->role(7), Role::y);
  EXPECT_THROW(make_table({"a", "a"}), DomainError);
  EXPECT_EQ(kab_table(1, 1)->count(), 4u);
}

TEST(ExponentVector, DegreeCacheAndOps) {
  ExponentVector a{1, 0, 2}, b{0, 3, 1};
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ((a + b).degree(), 7u);
  EXPECT_EQ(a.lcm(b), (ExponentVector{1, 3, 2}));
  EXPECT_TRUE((ExponentVector{1, 0, 1}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ((a + b) - b, a);
  auto c = a;
  c.set(1, 4);
  EXPECT_EQ(c.degree(), 7u);
}

TEST(Compare, KabOrderExamples) {
  auto t = kab_table(2, 2);
  auto ord = kab_order(2, 2);
  auto x1y1 = parse("x1*y1", t).terms()[0].exps;
  auto x1y2 = parse("x1*y2", t).terms()[0].exps;
  auto xp2yp1 = parse("xp2*yp1", t).terms()[0].exps;
  EXPECT_EQ(ord.compare(x1y1, x1y2), std::strong_ordering::greater);
  EXPECT_EQ(ord.compare(x1y2, xp2yp1), std::strong_ordering::greater);
  EXPECT_EQ(ord.compare(x1y1, x1y1), std::strong_ordering::equal);
}

TEST(Compare, LengthMismatchIsDimensionError) {
  auto ord = MonomialOrder::graded_lex(3);
  EXPECT_THROW((void)ord.compare(ExponentVector{1, 0, 0}, ExponentVector{1, 0}), DimensionError);
}

TEST(Compare, LexGrlexGrevlexHandCases) {
  // x1 x3 vs x2^2: grlex and lex put x1 x3 first, grevlex puts x2^2 first
  ExponentVector u{1, 0, 1}, v{0, 2, 0};
  EXPECT_TRUE(MonomialOrder::lex(3).greater(u, v));
  EXPECT_TRUE(MonomialOrder::graded_lex(3).greater(u, v));
  EXPECT_TRUE(MonomialOrder::graded_reverse_lex(3).less(u, v));
  // lex is not graded
  EXPECT_TRUE(MonomialOrder::lex(3).greater(ExponentVector{1, 0, 0}, ExponentVector{0, 5, 5}));
}

TEST(LeadingTerm, KabGenerators) {
  auto t = kab_table(2, 2);
  auto ord = kab_order(2, 2);
  auto f12 = parse("x1*y2 - xp2*yp1", t);
  EXPECT_EQ(f12.leading_term(ord).exps, parse("x1*y2", t).terms()[0].exps);
  auto quartic = parse("x1*xp1*yp2*y2 + x2*xp2*yp1*y1 - x1*xp2*yp2*y1 - x2*xp1*yp1*y2", t);
  auto lt = quartic.leading_term(ord);
  EXPECT_EQ(lt.exps, parse("x1*xp1*yp2*y2", t).terms()[0].exps);
  EXPECT_EQ(lt.coeff, 1);
  auto mono = parse("-3*x2*yp1", t);
  EXPECT_EQ(mono.leading_term(ord).coeff, -3);
  EXPECT_THROW((void)Polynomial<>(t).leading_term(ord), EmptyInputError);
}

TEST(LeadingTerm, F11InEveryKab) {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) {
      auto t = kab_table(a, b);
      auto f11 = parse("x1*y1 - xp1*yp1", t);
      EXPECT_EQ(f11.leading_term(kab_order(a, b)).exps, parse("x1*y1", t).terms()[0].exps);
    }
}

TEST(InitialForm, Examples) {
  auto t = make_table({"z11", "z12", "z21", "z22", "z1212"}, Role::z);
  auto g = parse("z11*z22 - z12*z21 - z1212", t);
  // A^T w for the (2,2) frame: z_ij -> x_i y_j, z_1212 -> x1 xp1 yp2 y2
  auto w = kab_weight(2, 2);
  std::vector<BigInt> zw{w[0] + w[6], w[0] + w[7], w[1] + w[6], w[1] + w[7], w[0] + w[2] + w[5] + w[7]};
  EXPECT_EQ(g.initial_form(zw), parse("z11*z22 - z12*z21", t));
  auto mono = parse("2*z11^3", t);
  EXPECT_EQ(mono.initial_form(zw), mono);
  std::vector<BigInt> zero(5, 0);
  EXPECT_EQ(g.initial_form(zero), g);
  EXPECT_TRUE(Polynomial<>(t).initial_form(zw).is_zero());
  std::vector<BigInt> short_w(3, 1);
  EXPECT_THROW((void)g.initial_form(short_w), DimensionError);
}

TEST(KabOrder, ShapeAndRanking) {
  auto ord = kab_order(2, 2);
  EXPECT_EQ(ord.num_vars(), 8u);
  EXPECT_EQ(kab_order(1, 1).num_vars(), 4u);
  // x1 > x2 > xp1 > xp2 > yp1 > yp2 > y1 > y2
  for (std::size_t i = 0; i + 1 < 8; ++i)
    EXPECT_TRUE(ord.greater(ExponentVector::unit(8, i), ExponentVector::unit(8, i + 1)));
}

TEST(KabWeight, PowersOfTwo) {
  auto w = kab_weight(2, 2);
  std::vector<BigInt> want{128, 64, 32, 16, 8, 4, 2, 1};
  EXPECT_EQ(w, want);
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; b <= 6; ++b) {
      auto v = kab_weight(a, b);
      for (std::size_t r = 0; r < v.size(); ++r) {
        BigInt tail = 0;
        for (std::size_t s = r + 1; s < v.size(); ++s) tail += v[s];
        EXPECT_GT(v[r], tail);
      }
    }
}

TEST(KabWeight, InitialFormOfQuarticIsLeadingTerm) {
  auto t = kab_table(2, 2);
  auto w = kab_weight(2, 2);
  auto quartic = parse("x1*xp1*yp2*y2 + x2*xp2*yp1*y1 - x1*xp2*yp2*y1 - x2*xp1*yp1*y2", t);
  EXPECT_EQ(quartic.initial_form(w), parse("x1*xp1*yp2*y2", t));
}

TEST(KabWeight, InitialFormMatchesLeadingTermOnAllGenerators) {
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      auto frame = kab_frame<Rational>(a, b);
      for (const auto& g : frame.gens.gens()) {
        auto in = g.initial_form(frame.weight);
        ASSERT_EQ(in.num_terms(), 1u);
        auto lt = g.leading_term(frame.order);
        EXPECT_EQ(in.terms()[0].exps, lt.exps);
        EXPECT_EQ(in.terms()[0].coeff, lt.coeff);
      }
    }
}

TEST(TextFormat, RoundTripAndErrors) {
  auto t = kab_table(2, 2);
  for (std::string s : {"x1*y2 - xp2*yp1", "3*x1", "-1/2*x1^2", "0", "x1^2*y2 + 7"}) {
    auto p = parse(s, t);
    EXPECT_EQ(parse(p.to_string(), t), p) << s;
  }
  EXPECT_EQ(parse("  x1 *y2-  xp2 * yp1 ", t), parse("x1*y2 - xp2*yp1", t));
  EXPECT_EQ(parse("-1/2*x1^2", t).to_string(), "-1/2*x1^2");
  EXPECT_THROW(parse("x9", t), ParseError);
  EXPECT_THROW(parse("x1 +", t), ParseError);
}

TEST(Polynomial, CanonicalStorage) {
  auto t = kab_table(2, 2);
  auto p = parse("y2 + x1", t), q = parse("x1 + y2", t);
  EXPECT_EQ(p, q);
  EXPECT_EQ(p.to_string(), q.to_string());
  EXPECT_TRUE((p - q).is_zero());
  for (const auto& term : (p * q).terms()) EXPECT_NE(term.coeff, 0);
}

TEST(Polynomial, SubstituteEvaluatesMap) {
  auto s = kab_table(2, 2);
  auto z = make_table({"u", "v"}, Role::z);
  std::vector<Polynomial<>> images{parse("x1*y1 - xp1*yp1", s), parse("x2", s)};
  auto p = parse("u*v - 2*v^2", z);
  EXPECT_EQ(p.substitute(images, s), parse("x1*x2*y1 - x2*xp1*yp1 - 2*x2^2", s));
}

TEST(Polynomial, ZpCoefficients) {
  auto t = make_table({"a", "b"});
  auto dom = prime_field(5);
  auto p = parse_polynomial<Zp>("3*a + 2*b", t, dom);
  auto q = parse_polynomial<Zp>("2*a + 3*b", t, dom);
  auto s = p + q;
  EXPECT_TRUE(s.is_zero());
}

// --- properties -----------------------------------------------------------

TEST(OrderProperties, AxiomsOnRandomVectors) {
  Gen gen(1234);
  const std::size_t n = 5;
  for (const auto& ord : all_orders(n)) {
    const ExponentVector zero(n);
    for (int trial = 0; trial < 300; ++trial) {
      auto u = gen.exponent(n, 3), v = gen.exponent(n, 3), w = gen.exponent(n, 3);
      auto uv = ord.compare(u, v), vu = ord.compare(v, u);
      EXPECT_EQ(uv == std::strong_ordering::equal, u == v) << ord.describe();
      EXPECT_EQ(uv == std::strong_ordering::less, vu == std::strong_ordering::greater) << ord.describe();
      EXPECT_EQ(ord.compare(u + w, v + w), uv) << ord.describe();
      if (!u.is_zero()) {
        EXPECT_TRUE(ord.less(zero, u)) << ord.describe();
      }
      // transitivity
      if (ord.less(u, v) && ord.less(v, w)) {
        EXPECT_TRUE(ord.less(u, w)) << ord.describe();
      }
    }
  }
}

TEST(PolyProperties, LeadingTermMultiplicative) {
  Gen gen(99);
  auto t = make_table({"a", "b", "c", "d"});
  for (const auto& ord : all_orders(4)) {
    for (int trial = 0; trial < 40; ++trial) {
      auto p = gen.polynomial(t, 4, 3), q = gen.polynomial(t, 4, 3);
      if (p.is_zero() || q.is_zero()) continue;
      auto lp = p.leading_term(ord), lq = q.leading_term(ord), lpq = (p * q).leading_term(ord);
      EXPECT_EQ(lpq.exps, lp.exps + lq.exps);
      EXPECT_EQ(lpq.coeff, lp.coeff * lq.coeff);
    }
  }
}

TEST(PolyProperties, InitialFormMultiplicative) {
  Gen gen(7);
  auto t = make_table({"a", "b", "c", "d"});
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<BigInt> w;
    for (int i = 0; i < 4; ++i) w.emplace_back(gen.uniform(0, 4));
    auto p = gen.polynomial(t, 4, 3), q = gen.polynomial(t, 4, 3);
    EXPECT_EQ((p * q).initial_form(w), p.initial_form(w) * q.initial_form(w));
  }
}

TEST(PolyProperties, RingAxioms) {
  Gen gen(2024);
  auto t = make_table({"a", "b", "c"});
  for (int trial = 0; trial < 60; ++trial) {
    auto p = gen.polynomial(t, 3, 2), q = gen.polynomial(t, 3, 2), r = gen.polynomial(t, 3, 2);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_TRUE((p - p).is_zero());
  }
}
