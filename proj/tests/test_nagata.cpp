#include <gtest/gtest.h>

#include "gradstar/nagata.hpp"
#include "gradstar/sample.hpp"
#include "support.hpp"

using namespace gstest;

TEST(Nagata, MembershipExamples) {
  auto lz = laurent();
  EXPECT_TRUE(n_membership(px(lz, "1 + t"), StarOp::d(lz)));
  auto r = q2();
  EXPECT_TRUE(n_membership(px(r, "x + y*X"), StarOp::v(r)));
  EXPECT_FALSE(n_membership(px(r, "x + y*X"), StarOp::d(r)));
  EXPECT_FALSE(n_membership(px(r, "x"), StarOp::v(r)));
  EXPECT_FALSE(n_membership(PolyX(r), StarOp::v(r)));
}

TEST(Nagata, Invertibility) {
  auto r = q2();
  EXPECT_TRUE(is_star_invertible(id(r, "(x, y)"), StarOp::t(r)));
  EXPECT_FALSE(is_star_invertible(id(r, "(x, y)"), StarOp::d(r)));
  EXPECT_TRUE(is_star_invertible(id(r, "(x^2 + y^2)"), StarOp::d(r)));
  EXPECT_THROW(is_star_invertible(FracIdeal(r, {}), StarOp::d(r)), ZeroInput);
}

TEST(Nagata, PicGenerator) {
  auto r = q2();
  EXPECT_EQ(pic_generator({px(r, "x"), px(r, "y")}), px(r, "x + y*X"));
  EXPECT_EQ(pic_generator({px(r, "x + y*X"), px(r, "y")}), px(r, "x + y*X + y*X^2"));
  EXPECT_THROW(pic_generator({}), InvalidArgument);
  EXPECT_THROW(pic_generator({px(r, "x"), PolyX(r)}), ZeroInput);
}

TEST(Nagata, FractionCertificates) {
  auto r = q2();
  auto v = StarOp::v(r);
  auto a = NagataFraction::make(px(r, "x"), px(r, "x + y*X"), v);
  EXPECT_TRUE(a.validate());
  EXPECT_TRUE(a == NagataFraction::make(px(r, "x + x*X"), px(r, "x + (x + y)*X + y*X^2"), v));
  EXPECT_THROW(NagataFraction::make(px(r, "1"), px(r, "x"), v), InvalidArgument);
}

TEST(Kronecker, MembershipExamples) {
  auto r = q2();
  auto v = StarOp::v(r);
  EXPECT_EQ(kr_member(px(r, "x"), px(r, "x + y*X"), v, KrMode::Eab).verdict, Verdict::Yes);
  auto same = kr_member(px(r, "x + y*X"), px(r, "x + y*X"), v);
  EXPECT_EQ(same.verdict, Verdict::Yes);
  EXPECT_TRUE(same.fraction->direct);
  EXPECT_EQ(kr_member(px(r, "1"), px(r, "x"), v, KrMode::Eab).verdict, Verdict::No);
  EXPECT_THROW(kr_member(px(r, "1"), PolyX(r), v), ZeroInput);
}

TEST(Kronecker, GeneralModeUsesAuxiliary) {
  // xy is not in (x^2, y^2), but xy·(x, y) ⊆ (x^2, y^2)·(x, y).
  auto r = q2();
  auto d = StarOp::d(r);
  auto res = kr_member(px(r, "x*y"), px(r, "x^2 + y^2*X"), d, KrMode::General, 1);
  EXPECT_EQ(kr_member(px(r, "x*y"), px(r, "x^2 + y^2*X"), d, KrMode::Eab).verdict, Verdict::No);
  ASSERT_EQ(res.verdict, Verdict::Yes) << res.to_json().dump();
  EXPECT_FALSE(res.fraction->direct);
  EXPECT_TRUE(res.fraction->validate());
  auto neg = kr_member(px(r, "1"), px(r, "x"), d, KrMode::General, 1);
  EXPECT_EQ(neg.verdict, Verdict::NotFoundAtBound);
}

TEST(Kronecker, BezoutCollapse) {
  auto r = q2();
  auto v = StarOp::v(r);
  auto h = px(r, "x + y*X");
  auto alpha = *kr_member(px(r, "x"), h, v).fraction;
  auto beta = *kr_member(px(r, "y"), h, v).fraction;
  auto res = bezout_combine(alpha, beta);
  EXPECT_TRUE(res.valid);
  EXPECT_EQ(res.n, 1u);
  EXPECT_EQ(res.gamma.num, h);
  EXPECT_TRUE(ideal_equals(content_A(res.gamma.num), ideal_sum(content_A(alpha.num), content_A(beta.num))));
  auto zero = alpha;
  zero.num = PolyX(r);
  EXPECT_THROW(bezout_combine(alpha, zero), InvalidArgument);
}

TEST(Nagata, ContentMultiplierWitnesses) {
  auto lz = laurent();
  auto rep = corC_evidence(px(lz, "1 + t + 2*X"), StarOp::d(lz));
  EXPECT_EQ(rep.violations(), 0u);
  EXPECT_EQ(rep.exhausted(), 0u);
  auto r = q2();
  auto rv = corC_evidence(px(r, "x + y*X"), StarOp::v(r));
  EXPECT_EQ(rv.violations(), 0u);
  EXPECT_EQ(rv.exhausted(), 0u);
  auto rd = corC_evidence(px(r, "x + y*X"), StarOp::d(r));
  EXPECT_EQ(rd.violations(), 0u);
  EXPECT_EQ(rd.items.back().check, "corC-consistency");
  auto single = corC_evidence(px(lz, "3*t^2"), StarOp::d(lz));
  // d = t^2 is a unit, so it lies in N(d).
  EXPECT_EQ(single.items.at(0).certificate["d"], "t^2");
  EXPECT_EQ(single.violations(), 0u);
}

TEST(Nagata, ExtendedContracted) {
  auto r = q2();
  auto v = StarOp::v(r);
  auto rep = ext_contract_evidence(id(r, "(x, y)"), v, {q(r, "1"), q(r, "x")});
  EXPECT_EQ(rep.violations(), 0u);
  EXPECT_EQ(rep.items[0].certificate["state"], "agree-positive");
  EXPECT_EQ(rep.items[1].certificate["witness_d"], "1");
  auto neg = ext_contract_evidence(id(r, "(x)"), v, {q(r, "1/x")});
  EXPECT_EQ(neg.items[0].certificate["state"], "consistent-negative");
  EXPECT_THROW(ext_contract_evidence(id(veronese(), "(x^2)"), StarOp::v(veronese()), {}), Unsupported);
}

TEST(Nagata, GpEvidenceTriad) {
  auto lz = laurent();
  auto a = gp_evidence(lz, StarOp::d(lz), 12);
  EXPECT_FALSE(a.counterexample_found) << a.to_json().dump(1);
  auto r = q2();
  auto b = gp_evidence(r, StarOp::v(r), 12);
  EXPECT_FALSE(b.counterexample_found) << b.to_json().dump(1);
  auto c = gp_evidence(r, StarOp::d(r), 12);
  ASSERT_TRUE(c.counterexample_found);
  EXPECT_EQ(c.counterexample["check"], "invertible");
  EXPECT_EQ(c.counterexample["certificate"]["ideal"], "(x, y)");
}

TEST(NagataProperty, Saturation) {
  for (const auto& r : {laurent(), q2(), veronese()}) {
    Sampler s(r, 51);
    std::vector<std::pair<PolyX, PolyX>> pairs;
    for (int i = 0; i < 20; ++i) pairs.emplace_back(s.poly(2), s.poly(2));
    for (auto st : {StarOp::d(r), StarOp::v(r)})
      EXPECT_EQ(n_saturation_check(pairs, st).violations(), 0u) << r->name() << " " << st.name();
  }
}

TEST(NagataProperty, PicContentAdditivity) {
  for (const auto& r : {laurent(), q2(), veronese()}) {
    Sampler s(r, 52);
    for (int i = 0; i < 20; ++i) {
      std::vector<PolyX> fs;
      FracIdeal sum(r, {});
      for (long k = s.uniform(1, 3); k > 0; --k) {
        fs.push_back(s.poly(2));
        sum = ideal_sum(sum, content_A(fs.back()));
      }
      EXPECT_TRUE(ideal_equals(content_A(pic_generator(fs)), sum));
    }
  }
}

TEST(KroneckerProperty, StarMonotone) {
  auto r = q2();
  Sampler s(r, 53);
  for (int i = 0; i < 20; ++i) {
    auto f = s.poly(1), g = s.poly(1);
    if (kr_member(f, g, StarOp::d(r), KrMode::Eab).verdict == Verdict::Yes)
      EXPECT_EQ(kr_member(f, g, StarOp::v(r), KrMode::Eab).verdict, Verdict::Yes);
  }
}
