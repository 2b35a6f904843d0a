#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace gstest;

namespace {

GradedElement random_element(std::mt19937_64& rng, const RingPtr& r) {
  std::uniform_int_distribution<int> nterms(0, 3), co(-5, 5), pick(0, 3);
  GradedElement::TermList terms;
  const auto& gens = r->monoid().generators();
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Exponent e;
    for (int k = 0; k < 3; ++k) {
      int j = std::uniform_int_distribution<int>(0, static_cast<int>(gens.size()) - 1)(rng);
      if (pick(rng) != 0) e = e + gens[static_cast<std::size_t>(j)];
    }
    terms.emplace_back(e, co(rng));
  }
  return GradedElement::from_terms(r, std::move(terms));
}

}  // namespace

TEST(RingCore, PresentationOfLaurentRing) {
  auto r = laurent();
  ASSERT_EQ(r->toric_z().size(), 1u);
  EXPECT_EQ(r->toric_z()[0].to_string(r->pvar_names()), "z1*z2 - 1");
  EXPECT_TRUE(r->monoid().is_group());
}

TEST(RingCore, PresentationOfVeronese) {
  auto r = veronese();
  ASSERT_EQ(r->toric_q().size(), 1u);
  EXPECT_EQ(r->toric_q()[0].to_string(r->pvar_names()), "z2^2 - z1*z3");
  EXPECT_TRUE(r->in_monoid(Exponent{{3, 1}}));
  EXPECT_FALSE(r->in_monoid(Exponent{{1, 0}}));
  EXPECT_FALSE(r->in_monoid(Exponent{{2, -2}}));
}

TEST(RingCore, MonoidDecompositionCertificate) {
  GradingMonoid m(2, {Exponent{{2, 0}}, Exponent{{1, 1}}, Exponent{{0, 2}}});
  auto c = m.decompose(Exponent{{5, 3}});
  ASSERT_TRUE(c.has_value());
  Exponent sum;
  for (std::size_t j = 0; j < c->size(); ++j)
    for (std::uint32_t k = 0; k < (*c)[j]; ++k) sum = sum + m.generators()[j];
  EXPECT_EQ(sum, (Exponent{{5, 3}}));
  EXPECT_FALSE(m.decompose(Exponent{{5, 2}}).has_value());
}

TEST(RingCore, RegistrationRejectsGradedField) {
  RingSpec s;
  s.name = "qt";
  s.base = BaseDomain::Rationals;
  s.dim = 1;
  s.monoid_generators = {{1}, {-1}};
  EXPECT_THROW(GradedRing::create(s), InvalidArgument);
}

TEST(RingCore, RegistrationRejectsNonInvertibleNegativeGenerator) {
  RingSpec s;
  s.name = "bad";
  s.base = BaseDomain::Integers;
  s.dim = 1;
  s.monoid_generators = {{-1}};
  EXPECT_THROW(GradedRing::create(s), InvalidArgument);
}

TEST(RingCore, DecomposeExamples) {
  auto fine = q2fine();
  auto parts = el(fine, "x^2").decompose();
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].first, (Exponent{{2, 0}}));
  EXPECT_EQ(parts[0].second.to_string(), "x^2");

  auto lz = laurent();
  parts = el(lz, "2 + 3*t").decompose();
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, Exponent{});
  EXPECT_EQ(parts[0].second.to_string(), "2");
  EXPECT_EQ(parts[1].first, (Exponent{{1}}));
  EXPECT_EQ(parts[1].second.to_string(), "3*t");

  EXPECT_TRUE(GradedElement(lz).decompose().empty());
}

TEST(RingCore, TotalDegreeGradingGroupsComponents) {
  auto r = q2();
  auto a = el(r, "x^2 + y^2 + x + 1");
  auto parts = a.decompose();
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[2].second.to_string(), "x^2 + y^2");
  EXPECT_TRUE(el(r, "x^2 + y^2").is_homogeneous());
  EXPECT_FALSE(el(q2fine(), "x^2 + y^2").is_homogeneous());
}

TEST(RingCore, PolyMulExamples) {
  auto r = q2();
  auto f = px(r, "x + y*X");
  auto g = px(r, "y + x*X");
  EXPECT_EQ(poly_mul(f, g).to_string(), "x*y + (x^2 + y^2)*X + x*y*X^2");
  EXPECT_EQ(poly_mul(f, px(r, "1")), f);
  EXPECT_TRUE(poly_mul(f, PolyX(r)).is_zero());
  EXPECT_THROW(poly_mul(f, px(laurent(), "t")), RingMismatch);
}

TEST(RingCore, PolynomializeExamples) {
  auto r = q2();
  auto pf = polynomialize(px(r, "x + y*X"));
  EXPECT_EQ(pf.to_string(), "Y1 + Y2*X");
  auto pl = polynomialize(px(laurent(), "2 + 3*t"));
  EXPECT_EQ(pl.to_string(), "2 + 3*Y");
  EXPECT_THROW(polynomialize(PolyX(r)), ZeroInput);
}

TEST(RingCore, HomogeneousQuotientNormalForm) {
  auto r = laurent();
  auto a = HQuotientElement(el(r, "2 + 4*t"), el(r, "6*t^3"));
  auto n = a.normalized();
  EXPECT_EQ(n.to_string(), "(2*t^-2 + t^-3)/3");
  EXPECT_EQ(a, n);

  auto f = q2fine();
  auto b = HQuotientElement(el(f, "x^2*y + x*y^2"), el(f, "2*x^2*y")).normalized();
  EXPECT_EQ(b.to_string(), "(1/2*x*y + 1/2*y^2)/(x*y)");
}

TEST(RingCoreProperty, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(3);
  for (const auto& r : {laurent(), q2(), veronese()}) {
    for (int i = 0; i < 100; ++i) {
      auto a = random_element(rng, r), b = random_element(rng, r), c = random_element(rng, r);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(RingCoreProperty, DecompositionRegroupsAndSums) {
  std::mt19937_64 rng(4);
  for (const auto& r : {laurent(), q2(), veronese()}) {
    for (int i = 0; i < 100; ++i) {
      auto a = random_element(rng, r), b = random_element(rng, r);
      GradedElement sum(r);
      Exponent prev;
      bool first = true;
      for (const auto& [deg, part] : (a + b).decompose()) {
        EXPECT_TRUE(part.is_homogeneous());
        if (!first) EXPECT_TRUE(lex_less(prev, deg));
        prev = deg;
        first = false;
        // Component of a+b in this degree is the sum of the components.
        GradedElement expect(r);
        for (const auto& [d, p] : a.decompose())
          if (d == deg) expect = expect + p;
        for (const auto& [d, p] : b.decompose())
          if (d == deg) expect = expect + p;
        EXPECT_EQ(part, expect);
        sum = sum + part;
      }
      EXPECT_EQ(sum, a + b);
    }
  }
}

TEST(RingCoreProperty, HomogeneousProductsAddDegrees) {
  std::mt19937_64 rng(8);
  for (const auto& r : {laurent(), q2(), veronese()}) {
    for (int i = 0; i < 100; ++i) {
      auto a = random_element(rng, r), b = random_element(rng, r);
      if (a.is_zero() || b.is_zero()) continue;
      auto ha = a.decompose().front().second, hb = b.decompose().back().second;
      auto p = ha * hb;
      EXPECT_TRUE(p.is_homogeneous());
      EXPECT_EQ(p.grade(), ha.grade() + hb.grade());
    }
  }
}

TEST(RingCoreProperty, QuotientEqualityAndNormalFormUniqueness) {
  std::mt19937_64 rng(9);
  for (const auto& r : {laurent(), q2fine(), veronese()}) {
    for (int i = 0; i < 100; ++i) {
      auto n = random_element(rng, r);
      auto d = random_element(rng, r);
      if (d.is_zero()) continue;
      auto h = d.decompose().front().second;
      if (!h.is_monomial()) continue;
      auto s = random_element(rng, r);
      if (s.is_zero()) continue;
      auto m = s.decompose().back().second;
      if (!m.is_monomial()) continue;
      HQuotientElement x(n, h), y(n * m, h * m);
      EXPECT_EQ(x, y);
      EXPECT_EQ(y, x);
      EXPECT_EQ(x.normalized().numerator(), y.normalized().numerator());
      EXPECT_EQ(x.normalized().denominator(), y.normalized().denominator());
    }
  }
}

TEST(BaseDomainProperty, ExactArithmeticLaws) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-50, 50), den(1, 9);
  for (int i = 0; i < 300; ++i) {
    mpq_class a(d(rng), den(rng)), b(d(rng), den(rng)), c(d(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (a != 0) EXPECT_EQ(a * (1 / a), 1);
    mpz_class x(d(rng)), y(d(rng) | 1);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    EXPECT_EQ(x % g, 0);
    EXPECT_EQ((x * y) / y, x);
  }
}
