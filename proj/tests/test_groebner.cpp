#include <random>

#include <gtest/gtest.h>

#include "gradstar/groebner.hpp"

using namespace gradstar;

namespace {

Monomial mono(std::initializer_list<int> e) {
  Monomial m;
  int i = 0;
  for (int x : e) {
    m.exp[i++] = static_cast<std::uint16_t>(x);
    m.deg += static_cast<std::uint32_t>(x);
  }
  return m;
}

template <class D>
Poly<D> poly(std::initializer_list<std::pair<typename D::value_type, Monomial>> terms,
             const TermOrder& ord) {
  std::vector<Term<D>> t;
  for (const auto& [c, m] : terms) t.push_back({m, c});
  return Poly<D>::from_terms(std::move(t), ord);
}

template <class D>
Poly<D> random_poly(std::mt19937_64& rng, int nvars, const TermOrder& ord) {
  std::uniform_int_distribution<int> nterms(1, 3), ex(0, 2), co(-3, 3);
  std::vector<Term<D>> t;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (int v = 0; v < nvars; ++v) {
      m.exp[v] = static_cast<std::uint16_t>(ex(rng));
      m.deg += m.exp[v];
    }
    int c = co(rng);
    if (c == 0) c = 1;
    t.push_back({m, typename D::value_type(c)});
  }
  return Poly<D>::from_terms(std::move(t), ord);
}

// Every S-polynomial (and G-polynomial over Z) reduces to zero.
template <class D>
bool satisfies_criterion(const std::vector<Poly<D>>& g, const TermOrder& ord) {
  const int n = ord.nvars;
  using C = typename D::value_type;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Monomial l = Monomial::lcm(g[i].lm(), g[j].lm(), n);
      Monomial mi = Monomial::div(l, g[i].lm(), n), mj = Monomial::div(l, g[j].lm(), n);
      if constexpr (D::is_field) {
        auto s = Poly<D>::sub_scaled(g[i].scaled(C(1) / g[i].lc(), mi, n), C(1) / g[j].lc(), mj,
                                     g[j], ord);
        if (!normal_form(s, g, ord).is_zero()) return false;
      } else {
        mpz_class lc;
        mpz_lcm(lc.get_mpz_t(), g[i].lc().get_mpz_t(), g[j].lc().get_mpz_t());
        auto s = Poly<D>::sub_scaled(g[i].scaled(lc / g[i].lc(), mi, n), lc / g[j].lc(), mj, g[j],
                                     ord);
        if (!normal_form(s, g, ord).is_zero()) return false;
        mpz_class d, u, v;
        mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g[i].lc().get_mpz_t(),
                   g[j].lc().get_mpz_t());
        auto gp = Poly<D>::add(g[i].scaled(u, mi, n), g[j].scaled(v, mj, n), ord);
        if (!normal_form(gp, g, ord).is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Groebner, AlreadyReducedVariables) {
  TermOrder ord{2, 0};
  auto x = poly<QQ>({{1, mono({1, 0})}}, ord);
  auto y = poly<QQ>({{1, mono({0, 1})}}, ord);
  auto g = groebner<QQ>({x, y}, ord);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].to_string({"x", "y"}), "y");
  EXPECT_EQ(g[1].to_string({"x", "y"}), "x");
}

TEST(Groebner, CoprimeIntegersGiveUnitIdeal) {
  TermOrder ord{1, 0};
  auto g = groebner<ZZ>({poly<ZZ>({{2, mono({0})}}, ord), poly<ZZ>({{3, mono({0})}}, ord)}, ord);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(g[0].is_constant());
  EXPECT_EQ(g[0].lc(), 1);
}

TEST(Groebner, ProductMembership) {
  TermOrder ord{2, 0};
  auto g = groebner<QQ>({poly<QQ>({{1, mono({2, 1})}}, ord), poly<QQ>({{1, mono({1, 2})}}, ord)},
                        ord);
  EXPECT_TRUE(normal_form(poly<QQ>({{1, mono({2, 2})}}, ord), g, ord).is_zero());
  EXPECT_FALSE(normal_form(poly<QQ>({{1, mono({1, 1})}}, ord), g, ord).is_zero());
}

TEST(Groebner, StrongBasisOverIntegers) {
  // (4, (1+t)^2) in Z[t]: 2(1+t) is not a member, 4(1+t) is.
  TermOrder ord{1, 0};
  auto sq = poly<ZZ>({{1, mono({2})}, {2, mono({1})}, {1, mono({0})}}, ord);
  auto g = groebner<ZZ>({poly<ZZ>({{4, mono({0})}}, ord), sq}, ord);
  auto twice = poly<ZZ>({{2, mono({1})}, {2, mono({0})}}, ord);
  auto four = poly<ZZ>({{4, mono({1})}, {4, mono({0})}}, ord);
  EXPECT_FALSE(normal_form(twice, g, ord).is_zero());
  EXPECT_TRUE(normal_form(four, g, ord).is_zero());
  EXPECT_TRUE(satisfies_criterion(g, ord));
}

TEST(Groebner, EliminationDropsAuxiliaryVariable) {
  // (w*x, (1-w)*y) eliminating w gives (x) ∩ (y) = (xy).
  TermOrder ord{3, 1};
  auto a = poly<QQ>({{1, mono({1, 1, 0})}}, ord);
  auto b = poly<QQ>({{1, mono({0, 0, 1})}, {-1, mono({1, 0, 1})}}, ord);
  std::vector<Poly<QQ>> kept;
  for (auto& p : groebner<QQ>({a, b}, ord))
    if (!p.involves_var_below(1)) kept.push_back(p);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].to_string({"w", "x", "y"}), "x*y");
}

TEST(GroebnerProperty, RationalBasesSatisfyBuchbergerCriterion) {
  std::mt19937_64 rng(11);
  TermOrder ord{3, 0};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly<QQ>> in;
    for (int i = 0; i < 3; ++i) in.push_back(random_poly<QQ>(rng, 3, ord));
    auto g = groebner(in, ord);
    EXPECT_TRUE(satisfies_criterion(g, ord)) << "trial " << trial;
    for (const auto& p : in) EXPECT_TRUE(normal_form(p, g, ord).is_zero());
  }
}

TEST(GroebnerProperty, ShuffledInputGivesIdenticalReducedBasis) {
  std::mt19937_64 rng(5);
  TermOrder ord{3, 0};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Poly<QQ>> in;
    for (int i = 0; i < 3; ++i) in.push_back(random_poly<QQ>(rng, 3, ord));
    auto g1 = groebner(in, ord);
    std::shuffle(in.begin(), in.end(), rng);
    auto g2 = groebner(in, ord);
    EXPECT_EQ(g1, g2) << "trial " << trial;
  }
}

TEST(GroebnerProperty, IntegerBasesAreStrong) {
  std::mt19937_64 rng(7);
  TermOrder ord{2, 0};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly<ZZ>> in;
    for (int i = 0; i < 3; ++i) in.push_back(random_poly<ZZ>(rng, 2, ord));
    auto g = groebner(in, ord);
    EXPECT_TRUE(satisfies_criterion(g, ord)) << "trial " << trial;
    for (const auto& p : in) EXPECT_TRUE(normal_form(p, g, ord).is_zero());
  }
}
