#include "gradstar/ideal.hpp"

#include <algorithm>
#include <mutex>

namespace gradstar {

namespace detail {

struct IdealCache {
  std::once_flag once;
  std::vector<Poly<QQ>> gb_q;
  std::vector<Poly<ZZ>> gb_z;
};

}  // namespace detail

namespace {

// Coefficient conversion between R (mpq_class) and the kernel domains.
template <class D>
typename D::value_type to_coeff(const mpq_class& c) {
  if constexpr (D::is_field) {
    return c;
  } else {
    if (c.get_den() != 1) throw NotInRing("non-integral coefficient " + c.get_str());
    return c.get_num();
  }
}

template <class D>
const std::vector<Poly<D>>& toric(const GradedRing& ring) {
  if constexpr (D::is_field) {
    return ring.toric_q();
  } else {
    return ring.toric_z();
  }
}

Monomial shift_mono(const Monomial& m, int offset, int r) {
  if (offset == 0) return m;
  Monomial out;
  for (int j = 0; j < r; ++j) out.exp[j + offset] = m.exp[j];
  out.deg = m.deg;
  return out;
}

template <class D>
Poly<D> lift_poly(const GradedElement& a, int offset, const TermOrder& ord) {
  const auto& ring = *a.ring();
  std::vector<Term<D>> terms;
  terms.reserve(a.terms().size());
  for (const auto& [e, c] : a.terms())
    terms.push_back({shift_mono(ring.lift(e), offset, ring.num_pvars()), to_coeff<D>(c)});
  return Poly<D>::from_terms(std::move(terms), ord);
}

template <class D>
std::vector<Poly<D>> toric_shifted(const GradedRing& ring, int offset, const TermOrder& ord) {
  std::vector<Poly<D>> out;
  for (const auto& p : toric<D>(ring)) {
    std::vector<Term<D>> terms;
    for (const auto& t : p.terms())
      terms.push_back({shift_mono(t.mono, offset, ring.num_pvars()), t.coeff});
    out.push_back(Poly<D>::from_terms(std::move(terms), ord));
  }
  return out;
}

template <class D>
GradedElement lower_poly(const RingPtr& ring, const Poly<D>& p, int offset) {
  GradedElement::TermList terms;
  for (const auto& t : p.terms()) terms.emplace_back(ring->image(t.mono, offset), mpq_class(t.coeff));
  return GradedElement::from_terms(ring, std::move(terms));
}

TermOrder plain_order(const GradedRing& ring) { return TermOrder{ring.num_pvars(), 0}; }

// Groebner basis of (lift(gens) + T) in the plain presentation.
template <class D>
std::vector<Poly<D>> integral_gb(const RingPtr& ring, const std::vector<GradedElement>& gens,
                                 GroebnerStats* stats = nullptr) {
  const TermOrder ord = plain_order(*ring);
  std::vector<Poly<D>> input = toric_shifted<D>(*ring, 0, ord);
  for (const auto& g : gens) input.push_back(lift_poly<D>(g, 0, ord));
  return groebner(std::move(input), ord, stats);
}

void check_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b) throw RingMismatch("ideals belong to different rings");
}

bool rationals(const RingPtr& ring) { return ring->base() == BaseDomain::Rationals; }

}  // namespace

struct IdealAccess {
  template <class D>
  static const std::vector<Poly<D>>& gb(const FracIdeal& I) {
    auto& c = *I.cache_;
    std::call_once(c.once, [&] {
      if (rationals(I.ring_)) {
        c.gb_q = integral_gb<QQ>(I.ring_, I.gens_);
      } else {
        c.gb_z = integral_gb<ZZ>(I.ring_, I.gens_);
      }
    });
    if constexpr (D::is_field) {
      return c.gb_q;
    } else {
      return c.gb_z;
    }
  }
};

// ---------------------------------------------------------------------------

FracIdeal::FracIdeal(RingPtr ring, std::vector<GradedElement> gens, GradedElement den)
    : ring_(std::move(ring)), den_(std::move(den)), cache_(std::make_shared<detail::IdealCache>()) {
  if (!ring_) throw InvalidArgument("ideal without a ring");
  if (den_.is_zero()) throw ZeroInput("zero denominator");
  if (den_.ring() != ring_) throw RingMismatch("denominator from a different ring");
  homogeneous_ = den_.is_homogeneous();
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring() != ring_) throw RingMismatch("generator from a different ring");
    homogeneous_ = homogeneous_ && g.is_homogeneous();
    gens_.push_back(std::move(g));
  }
}

FracIdeal::FracIdeal(RingPtr ring, std::vector<GradedElement> gens)
    : FracIdeal(ring, std::move(gens), GradedElement::constant(ring, 1)) {}

FracIdeal FracIdeal::unit(RingPtr ring) {
  auto one = GradedElement::constant(ring, 1);
  return FracIdeal(ring, {one}, one);
}

FracIdeal FracIdeal::principal(const HQuotientElement& x) {
  return FracIdeal(x.denominator().ring(), {x.numerator()}, x.denominator());
}

std::vector<HQuotientElement> FracIdeal::elements() const {
  std::vector<HQuotientElement> out;
  for (const auto& g : gens_) out.emplace_back(g, den_);
  return out;
}

std::string FracIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  s += ")";
  std::string d = den_.to_string();
  if (d != "1") s += "/" + (den_.terms().size() > 1 || d.find('*') != std::string::npos ? "(" + d + ")" : d);
  return s;
}

// ---------------------------------------------------------------------------

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<GradedElement>& gens,
                             const std::string& ordering) {
  if (ordering != "degrevlex") throw InvalidArgument("unsupported ordering '" + ordering + "'");
  for (const auto& g : gens)
    if (g.ring() && g.ring() != ring) throw RingMismatch("generator from a different ring");
  GroebnerBasis out;
  out.ordering = ordering;
  auto names = ring->pvar_names();
  for (int j = 0; j < ring->num_pvars(); ++j) {
    auto e = GradedElement::monomial(ring, ring->monoid().generators()[static_cast<std::size_t>(j)]);
    out.variables.push_back(names[static_cast<std::size_t>(j)] + " = " + e.to_string());
  }
  std::vector<GradedElement> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  auto fill = [&](const auto& tor, const auto& basis) {
    for (const auto& p : tor) out.presentation.push_back(p.to_string(names));
    for (const auto& p : basis) {
      out.basis.push_back(p.to_string(names));
      out.images.push_back(lower_poly(ring, p, 0));
    }
  };
  if (rationals(ring)) {
    fill(ring->toric_q(), integral_gb<QQ>(ring, nonzero, &out.stats));
  } else {
    fill(ring->toric_z(), integral_gb<ZZ>(ring, nonzero, &out.stats));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact division

std::optional<GradedElement> try_divide(const GradedElement& p, const GradedElement& h) {
  if (h.is_zero()) throw ZeroInput("division by zero");
  const RingPtr& ring = h.ring();
  if (p.is_zero()) return GradedElement(ring);
  if (p.ring() != ring) throw RingMismatch("operands belong to different rings");
  const bool ints = ring->base() == BaseDomain::Integers;

  if (h.is_monomial()) {
    const auto& [he, hc] = h.terms().front();
    GradedElement::TermList out;
    for (const auto& [e, c] : p.terms()) {
      mpq_class q = c / hc;
      Exponent d = e - he;
      if (ints && q.get_den() != 1) return std::nullopt;
      if (!ring->in_monoid(d)) return std::nullopt;
      out.emplace_back(d, q);
    }
    return GradedElement::from_terms(ring, std::move(out));
  }

  // Laurent division: shift both sides to honest polynomials in the
  // coordinates with h' free of coordinate factors, divide, shift back.
  const int k = ring->dim();
  Exponent pmin = p.terms().front().first, hmin = h.terms().front().first;
  for (const auto& t : p.terms())
    for (int i = 0; i < k; ++i) pmin.v[i] = std::min(pmin.v[i], t.first.v[i]);
  for (const auto& t : h.terms())
    for (int i = 0; i < k; ++i) hmin.v[i] = std::min(hmin.v[i], t.first.v[i]);
  const TermOrder ord{k, 0};
  auto to_poly = [&](const GradedElement& a, const Exponent& lo) {
    std::vector<Term<QQ>> terms;
    for (const auto& [e, c] : a.terms()) {
      Monomial m;
      for (int i = 0; i < k; ++i) {
        auto x = e.v[i] - lo.v[i];
        if (x > 60000) throw Unsupported("exponent too large for division");
        m.exp[i] = static_cast<std::uint16_t>(x);
        m.deg += static_cast<std::uint32_t>(x);
      }
      terms.push_back({m, c});
    }
    return Poly<QQ>::from_terms(std::move(terms), ord);
  };
  Poly<QQ> rem = to_poly(p, pmin);
  const Poly<QQ> div = to_poly(h, hmin);
  std::vector<Term<QQ>> quot;
  while (!rem.is_zero()) {
    const auto& t = rem.terms().front();
    if (!div.lm().divides(t.mono, k)) return std::nullopt;
    Monomial m = Monomial::div(t.mono, div.lm(), k);
    mpq_class c = t.coeff / div.lc();
    quot.push_back({m, c});
    rem = Poly<QQ>::sub_scaled(rem, c, m, div, ord);
  }
  GradedElement::TermList out;
  for (const auto& t : quot) {
    Exponent e;
    for (int i = 0; i < k; ++i) e.v[i] = t.mono.exp[i] + pmin.v[i] - hmin.v[i];
    if (ints && t.coeff.get_den() != 1) return std::nullopt;
    if (!ring->in_monoid(e)) return std::nullopt;
    out.emplace_back(e, t.coeff);
  }
  return GradedElement::from_terms(ring, std::move(out));
}

// ---------------------------------------------------------------------------
// Membership

namespace {

// When every generator is a constant times a unit monomial the ideal is
// generated by the gcd of the constants (1 over Q), which is also its
// reduced strong Groebner basis; skip the kernel in that case.
std::optional<mpz_class> unit_monomial_gcd(const FracIdeal& I) {
  if (I.is_zero()) return std::nullopt;
  mpz_class g = 0;
  for (const auto& x : I.generators()) {
    if (!x.is_monomial() || !I.ring()->is_unit_exponent(x.terms().front().first)) return std::nullopt;
    const mpz_class c = x.leading_coeff().get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (rationals(I.ring())) return mpz_class(1);
  return g;
}

template <class D>
bool integral_member(const GradedElement& a, const FracIdeal& I) {
  if (a.is_zero()) return true;
  if (I.is_zero()) return false;
  const auto& gb = IdealAccess::gb<D>(I);
  return normal_form(lift_poly<D>(a, 0, plain_order(*I.ring())), gb, plain_order(*I.ring()))
      .is_zero();
}

bool integral_member(const GradedElement& a, const FracIdeal& I) {
  if (auto g = unit_monomial_gcd(I)) {
    for (const auto& [e, c] : a.terms())
      if (c.get_den() != 1 || c.get_num() % *g != 0) return rationals(I.ring());
    return true;
  }
  return rationals(I.ring()) ? integral_member<QQ>(a, I) : integral_member<ZZ>(a, I);
}

}  // namespace

bool ideal_member(const HQuotientElement& x, const FracIdeal& I) {
  if (x.is_zero()) return true;
  check_ring(x.denominator().ring(), I.ring());
  if (I.is_zero()) return false;
  // n/e ∈ (1/d)G  <=>  n·d ∈ e·G  <=>  e | n·d and n·d/e ∈ G
  auto q = try_divide(x.numerator() * I.denominator(), x.denominator());
  if (!q) return false;
  return integral_member(*q, I);
}

bool ideal_contains(const FracIdeal& I, const FracIdeal& J) {
  check_ring(I.ring(), J.ring());
  for (const auto& x : J.elements())
    if (!ideal_member(x, I)) return false;
  return true;
}

bool ideal_equals(const FracIdeal& I, const FracIdeal& J) {
  return ideal_contains(I, J) && ideal_contains(J, I);
}

bool ideal_is_unit(const FracIdeal& I) {
  auto one = FracIdeal::unit(I.ring());
  return ideal_equals(I, one);
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

// Multiplies everything by the inverse of a unit denominator, then cancels
// a common integer factor with the denominator.
FracIdeal tidy_denominator(const RingPtr& ring, std::vector<GradedElement> gens, GradedElement den) {
  if (gens.empty()) return FracIdeal(ring, {}, GradedElement::constant(ring, 1));
  if (den.is_monomial()) {
    const auto& [e, c] = den.terms().front();
    if (ring->is_unit_exponent(e)) {
      auto inv = GradedElement::monomial(ring, -e);
      for (auto& g : gens) g = g * inv;
      den = GradedElement::constant(ring, c);
    }
    bool all = true;
    std::vector<GradedElement> divided;
    for (const auto& g : gens) {
      auto q = try_divide(g, den);
      if (!q) {
        all = false;
        break;
      }
      divided.push_back(std::move(*q));
    }
    if (all) return FracIdeal(ring, std::move(divided), GradedElement::constant(ring, 1));
  }
  if (den.is_monomial() && ring->base() == BaseDomain::Integers) {
    mpz_class g = abs(den.leading_coeff().get_num());
    for (const auto& x : gens)
      for (const auto& t : x.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
    if (g > 1) {
      for (auto& x : gens) x = x.scaled(mpq_class(1, 1) / mpq_class(g));
      den = den.scaled(mpq_class(1, 1) / mpq_class(g));
    }
  }
  if (ring->base() == BaseDomain::Rationals && den.is_monomial() && den.leading_coeff() != 1) {
    mpq_class c = den.leading_coeff();
    for (auto& x : gens) x = x.scaled(1 / c);
    den = den.scaled(1 / c);
  }
  return FracIdeal(ring, std::move(gens), std::move(den));
}

// Drops monomial generators that are R-multiples of an earlier monomial one
// and exact duplicates; cheap and order-preserving otherwise.
std::vector<GradedElement> prune(std::vector<GradedElement> gens) {
  std::stable_sort(gens.begin(), gens.end(), [](const GradedElement& a, const GradedElement& b) {
    return compare_elements(a, b) < 0;
  });
  std::vector<GradedElement> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k == g) {
        redundant = true;
      } else if (k.is_monomial() && try_divide(g, k)) {
        redundant = true;
      }
      if (redundant) break;
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

std::vector<GradedElement> gb_images(const FracIdeal& I) {
  std::vector<GradedElement> out;
  if (auto g = unit_monomial_gcd(I)) {
    out.push_back(GradedElement::constant(I.ring(), mpq_class(*g)));
    return out;
  }
  if (rationals(I.ring())) {
    for (const auto& p : IdealAccess::gb<QQ>(I)) out.push_back(lower_poly(I.ring(), p, 0));
  } else {
    for (const auto& p : IdealAccess::gb<ZZ>(I)) out.push_back(lower_poly(I.ring(), p, 0));
  }
  return out;
}

// Integral ideals only.
template <class D>
std::vector<GradedElement> intersect_integral(const RingPtr& ring, const std::vector<GradedElement>& a,
                                              const std::vector<GradedElement>& b) {
  if (a.empty() || b.empty()) return {};
  const int r = ring->num_pvars();
  const TermOrder ord{r + 1, 1};
  std::vector<Poly<D>> input = toric_shifted<D>(*ring, 1, ord);
  Monomial w;
  w.exp[0] = 1;
  w.deg = 1;
  using Coeff = typename D::value_type;
  for (const auto& g : a) {
    Poly<D> p = lift_poly<D>(g, 1, ord);
    input.push_back(p.scaled(Coeff(1), w, ord.nvars));
  }
  for (const auto& g : b) {
    Poly<D> p = lift_poly<D>(g, 1, ord);
    // (1 - w)·p
    input.push_back(Poly<D>::sub_scaled(p, Coeff(1), w, p, ord));
  }
  std::vector<GradedElement> out;
  for (const auto& p : groebner(std::move(input), ord)) {
    if (p.involves_var_below(1)) continue;
    out.push_back(lower_poly(ring, p, 1));
  }
  return out;
}

std::vector<GradedElement> intersect_integral(const RingPtr& ring, const std::vector<GradedElement>& a,
                                              const std::vector<GradedElement>& b) {
  auto out = rationals(ring) ? intersect_integral<QQ>(ring, a, b) : intersect_integral<ZZ>(ring, a, b);
  return prune(std::move(out));
}

std::vector<GradedElement> compact_gens(const RingPtr& ring, std::vector<GradedElement> gens) {
  FracIdeal tmp(ring, std::move(gens));
  return compact(tmp).generators();
}

}  // namespace

FracIdeal compact(const FracIdeal& I) {
  if (I.is_zero()) return I;
  auto gens = prune(gb_images(I));
  return tidy_denominator(I.ring(), std::move(gens), I.denominator());
}

FracIdeal ideal_product(const FracIdeal& I, const FracIdeal& J) {
  check_ring(I.ring(), J.ring());
  std::vector<GradedElement> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(a * b);
  return tidy_denominator(I.ring(), prune(std::move(gens)), I.denominator() * J.denominator());
}

FracIdeal ideal_sum(const FracIdeal& I, const FracIdeal& J) {
  check_ring(I.ring(), J.ring());
  std::vector<GradedElement> gens;
  GradedElement den = I.denominator();
  if (I.denominator() == J.denominator()) {
    gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  } else if (auto q = try_divide(J.denominator(), I.denominator())) {
    // d_J = d_I·q: (1/d_I)G = (1/d_J)·qG
    den = J.denominator();
    for (const auto& g : I.generators()) gens.push_back(g * *q);
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  } else if (auto q2 = try_divide(I.denominator(), J.denominator())) {
    gens = I.generators();
    for (const auto& g : J.generators()) gens.push_back(g * *q2);
  } else {
    den = I.denominator() * J.denominator();
    for (const auto& g : I.generators()) gens.push_back(g * J.denominator());
    for (const auto& g : J.generators()) gens.push_back(g * I.denominator());
  }
  return tidy_denominator(I.ring(), prune(std::move(gens)), std::move(den));
}

FracIdeal ideal_power(const FracIdeal& I, unsigned n) {
  FracIdeal acc = FracIdeal::unit(I.ring());
  for (unsigned i = 0; i < n; ++i) acc = compact(ideal_product(acc, I));
  return acc;
}

FracIdeal ideal_scale(const FracIdeal& I, const HQuotientElement& x) {
  check_ring(I.ring(), x.denominator().ring());
  if (x.is_zero()) return FracIdeal(I.ring(), {}, GradedElement::constant(I.ring(), 1));
  std::vector<GradedElement> gens;
  for (const auto& g : I.generators()) gens.push_back(g * x.numerator());
  return tidy_denominator(I.ring(), std::move(gens), I.denominator() * x.denominator());
}

FracIdeal ideal_intersection(const FracIdeal& I, const FracIdeal& J) {
  check_ring(I.ring(), J.ring());
  const RingPtr& ring = I.ring();
  // Over the common denominator d_I·d_J both sides are integral.
  std::vector<GradedElement> a, b;
  for (const auto& g : I.generators()) a.push_back(g * J.denominator());
  for (const auto& g : J.generators()) b.push_back(g * I.denominator());
  auto gens = intersect_integral(ring, a, b);
  return compact(FracIdeal(ring, std::move(gens), I.denominator() * J.denominator()));
}

FracIdeal ideal_colon(const FracIdeal& I, const FracIdeal& J) {
  check_ring(I.ring(), J.ring());
  if (J.is_zero()) throw ZeroInput("colon by the zero ideal");
  const RingPtr& ring = I.ring();
  if (I.is_zero()) return I;
  // I = (1/d)G, J = (1/e)H. (I:J) = (e/d)·(G :_K H) and, with h1 ∈ H,
  // (G :_K H) = (1/h1)·M,  M = ∩_j (h1·G :_R h_j),  (A :_R h) = (A ∩ (h))/h.
  const auto& H = J.generators();
  std::size_t pick = 0;
  for (std::size_t j = 0; j < H.size(); ++j) {
    if (H[j].is_homogeneous()) {
      pick = j;
      break;
    }
  }
  const GradedElement& h1 = H[pick];
  std::vector<GradedElement> G = compact_gens(ring, I.generators());
  std::vector<GradedElement> h1G;
  for (const auto& g : G) h1G.push_back(g * h1);

  std::vector<GradedElement> M = G;
  for (std::size_t j = 0; j < H.size(); ++j) {
    if (j == pick) continue;
    const GradedElement& h = H[j];
    auto meet = intersect_integral(ring, h1G, {h});
    std::vector<GradedElement> quo;
    for (const auto& m : meet) {
      auto q = try_divide(m, h);
      if (!q) throw Error("internal", "intersection element not divisible by its generator");
      quo.push_back(std::move(*q));
    }
    M = intersect_integral(ring, M, compact_gens(ring, std::move(quo)));
    M = compact_gens(ring, std::move(M));
  }
  std::vector<GradedElement> gens;
  for (const auto& m : M) gens.push_back(m * J.denominator());
  return compact(FracIdeal(ring, std::move(gens), I.denominator() * h1));
}

FracIdeal frac_inverse(const FracIdeal& I) {
  if (I.is_zero()) throw ZeroInput("inverse of the zero ideal");
  return ideal_colon(FracIdeal::unit(I.ring()), I);
}

bool witness_before(const HQuotientElement& a, const HQuotientElement& b) {
  auto deg = [](const HQuotientElement& x) {
    return x.numerator().terms().front().first.total() - x.denominator().terms().front().first.total();
  };
  auto da = deg(a), db = deg(b);
  if (da != db) return da < db;
  // Compare a/b by cross-multiplying onto a common denominator.
  auto na = a.numerator() * b.denominator(), nb = b.numerator() * a.denominator();
  return compare_elements(na, nb) > 0;
}

std::optional<HQuotientElement> first_non_member(const FracIdeal& from, const FracIdeal& in) {
  std::vector<HQuotientElement> els = from.elements();
  std::stable_sort(els.begin(), els.end(), witness_before);
  for (const auto& x : els)
    if (!ideal_member(x, in)) return x;
  return std::nullopt;
}

}  // namespace gradstar
