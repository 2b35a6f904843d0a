#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace gstest;

TEST(IdealEngine, GroebnerBasisExamples) {
  auto gb = groebner_basis(q2(), {el(q2(), "x"), el(q2(), "y")});
  ASSERT_EQ(gb.images.size(), 2u);
  EXPECT_EQ(gb.images[0].to_string(), "y");
  EXPECT_EQ(gb.images[1].to_string(), "x");
  EXPECT_EQ(gb.ordering, "degrevlex");

  auto lz = laurent();
  auto gz = groebner_basis(lz, {el(lz, "2"), el(lz, "3*t*t^-1")});
  ASSERT_EQ(gz.images.size(), 1u);
  EXPECT_EQ(gz.images[0].to_string(), "1");

  auto g3 = groebner_basis(q2(), {el(q2(), "x^2*y"), el(q2(), "x*y^2")});
  EXPECT_TRUE(ideal_member(q(q2(), "x^2*y^2"), FracIdeal(q2(), g3.images)));
  EXPECT_THROW(groebner_basis(q2(), {}, "lex"), InvalidArgument);
}

TEST(IdealEngine, MembershipExamples) {
  auto r = q2();
  EXPECT_FALSE(ideal_member(q(r, "x^2"), id(r, "(x*y, x^2 + y^2)")));
  auto g = el(r, "x^3 - 2*x*y^2 + 5");
  EXPECT_TRUE(ideal_member(HQuotientElement(g), FracIdeal(r, {g})));

  auto lz = laurent();
  EXPECT_FALSE(ideal_member(q(lz, "2*(1 + t)"), id(lz, "(4, (1 + t)^2)")));
  EXPECT_TRUE(ideal_member(q(lz, "4*(1 + t)"), id(lz, "(4, (1 + t)^2)")));
}

TEST(IdealEngine, EqualityExamples) {
  auto r = q2();
  auto lhs = ideal_product(id(r, "(x, y)"), id(r, "(x*y, x^2 + y^2)"));
  EXPECT_TRUE(ideal_equals(lhs, ideal_power(id(r, "(x, y)"), 3)));
  EXPECT_TRUE(ideal_equals(id(laurent(), "(2, t)"), FracIdeal::unit(laurent())));
  EXPECT_FALSE(ideal_equals(id(r, "(x, y)"), id(r, "(x)")));
}

TEST(IdealEngine, ProductAndSumExamples) {
  auto r = q2();
  auto sq = ideal_product(id(r, "(x, y)"), id(r, "(x, y)"));
  std::vector<std::string> gens;
  for (const auto& g : sq.generators()) gens.push_back(g.to_string());
  EXPECT_EQ(gens, (std::vector<std::string>{"y^2", "x*y", "x^2"}));

  auto I = id(r, "(x^2 + y^2, x*y)");
  EXPECT_TRUE(ideal_equals(ideal_product(I, FracIdeal::unit(r)), I));
  EXPECT_TRUE(ideal_equals(ideal_sum(id(r, "(x, y)"), id(r, "(x)")), id(r, "(x, y)")));
  EXPECT_TRUE(ideal_product(I, I).is_homogeneous());
}

TEST(IdealEngine, ColonExamples) {
  auto r = q2();
  EXPECT_TRUE(ideal_equals(ideal_colon(id(r, "(x)"), id(r, "(x, y)")), id(r, "(x)")));
  auto I = id(r, "(x^2, x*y + y^2)");
  EXPECT_TRUE(ideal_equals(ideal_colon(I, FracIdeal::unit(r)), I));
  EXPECT_TRUE(ideal_equals(ideal_colon(FracIdeal::unit(r), id(r, "(x)")), id(r, "(1)/x")));
  EXPECT_THROW(ideal_colon(I, FracIdeal(r, {})), ZeroInput);
}

TEST(IdealEngine, InverseExamples) {
  auto r = q2();
  EXPECT_TRUE(ideal_is_unit(frac_inverse(id(r, "(x, y)"))));
  auto g = id(r, "(x^2 + y^2)");
  EXPECT_TRUE(ideal_equals(frac_inverse(g), id(r, "(1)/(x^2 + y^2)")));

  auto lz = laurent();
  auto I = id(lz, "(4, (1 + t)^2)");
  auto inv = frac_inverse(I);
  EXPECT_TRUE(ideal_contains(FracIdeal::unit(lz), ideal_product(I, inv)));
  EXPECT_THROW(frac_inverse(FracIdeal(r, {})), ZeroInput);
}

TEST(IdealEngine, IntersectionOfMonomialIdeals) {
  auto r = q2fine();
  EXPECT_TRUE(ideal_equals(ideal_intersection(id(r, "(x)"), id(r, "(y)")), id(r, "(x*y)")));
  EXPECT_TRUE(ideal_equals(ideal_intersection(id(r, "(1)/x"), id(r, "(1)/y")), FracIdeal::unit(r)));
}

TEST(IdealEngine, VeroneseColon) {
  // (x^2, xy) is a height-one prime, so its inverse is larger than R:
  // y/x multiplies both generators back into R.
  auto r = veronese();
  auto I = id(r, "(x^2, x*y)");
  auto inv = frac_inverse(I);
  EXPECT_TRUE(ideal_member(q(r, "x*y/x^2"), inv));
  EXPECT_TRUE(ideal_contains(FracIdeal::unit(r), ideal_product(I, inv)));
  EXPECT_FALSE(ideal_is_unit(inv));
}

TEST(IdealEngineProperty, ColonContracts) {
  std::mt19937_64 rng(21);
  for (const auto& r : {laurent(), q2(), veronese()}) {
    for (int i = 0; i < 25; ++i) {
      auto I = random_homogeneous_ideal(rng, r, 2, 2);
      auto J = random_homogeneous_ideal(rng, r, 2, 2);
      auto c = ideal_colon(I, J);
      EXPECT_TRUE(ideal_contains(I, ideal_product(c, J))) << r->name() << " " << i;
      EXPECT_TRUE(ideal_contains(ideal_colon(ideal_product(I, J), J), I)) << r->name() << " " << i;
    }
  }
}

TEST(IdealEngineProperty, InverseScalingAndHomogeneity) {
  std::mt19937_64 rng(22);
  for (const auto& r : {laurent(), q2(), veronese()}) {
    for (int i = 0; i < 20; ++i) {
      auto I = random_homogeneous_ideal(rng, r, 2, 2);
      auto x = random_homogeneous(rng, r, 2);
      auto inv = frac_inverse(I);
      EXPECT_TRUE(inv.is_homogeneous());
      auto lhs = frac_inverse(ideal_scale(I, HQuotientElement(x)));
      auto rhs = ideal_scale(inv, HQuotientElement(GradedElement::constant(r, 1), x));
      EXPECT_TRUE(ideal_equals(lhs, rhs)) << r->name() << " " << I.to_string();
    }
  }
}

TEST(IdealEngineProperty, MembershipInvariantUnderRegeneration) {
  std::mt19937_64 rng(23);
  for (const auto& r : {laurent(), q2(), veronese()}) {
    for (int i = 0; i < 30; ++i) {
      auto I = random_homogeneous_ideal(rng, r, 2, 2);
      auto C = compact(I);
      auto probe = random_homogeneous(rng, r, 3) * random_homogeneous(rng, r, 1);
      EXPECT_EQ(ideal_member(HQuotientElement(probe), I), ideal_member(HQuotientElement(probe), C));
      EXPECT_TRUE(ideal_equals(I, C));
    }
  }
}

TEST(IdealEngineProperty, LaurentMembershipMatchesOracle) {
  std::mt19937_64 rng(24);
  auto lz = laurent();
  auto to_oracle = [](const GradedElement& a) {
    oracle::Laurent o;
    if (a.is_zero()) return o;
    long lo = a.terms().back().first.v[0], hi = a.terms().front().first.v[0];
    o.low = lo;
    o.c.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& [e, c] : a.terms()) o.c[static_cast<std::size_t>(e.v[0] - lo)] = c.get_num();
    return o;
  };
  std::uniform_int_distribution<int> co(-4, 4), ex(-2, 2), len(1, 3);
  auto rand_elem = [&](int n) {
    GradedElement::TermList t;
    for (int i = 0; i < n; ++i) t.emplace_back(Exponent{{ex(rng)}}, co(rng));
    return GradedElement::from_terms(lz, t);
  };
  for (int i = 0; i < 150; ++i) {
    auto a = rand_elem(len(rng));
    // (m, h) with h monic, constant term ±1
    std::uniform_int_distribution<int> m(2, 6);
    int mm = m(rng);
    auto h = el(lz, (co(rng) % 2 ? "t^2 + " : "t^2 - ") + std::to_string(co(rng)) + "*t + 1");
    auto mult = rand_elem(2);
    auto member = a * GradedElement::constant(lz, mm) + mult * h;
    for (const auto& x : {a, member}) {
      bool expect = oracle::member_mod_monic(to_oracle(x), mm, to_oracle(h));
      EXPECT_EQ(ideal_member(HQuotientElement(x), FracIdeal(lz, {GradedElement::constant(lz, mm), h})),
                expect);
    }
  }
}
