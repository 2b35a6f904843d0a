#include "gradstar/nagata.hpp"

#include <algorithm>
#include <numeric>

#include "gradstar/sample.hpp"

namespace gradstar {

namespace {

HQuotientElement one(const RingPtr& r) { return HQuotientElement(GradedElement::constant(r, 1)); }

PolyX stack_constants(const RingPtr& r, const std::vector<GradedElement>& gens) {
  std::vector<PolyX> parts;
  for (const auto& g : gens) parts.push_back(PolyX::constant(g));
  if (parts.empty()) return PolyX::constant(GradedElement::constant(r, 1));
  return pic_generator(parts);
}

// p / den coefficientwise, if every coefficient divides.
std::optional<PolyX> divide_poly(const PolyX& p, const GradedElement& den) {
  std::vector<GradedElement> cs;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) {
      cs.push_back(c);
      continue;
    }
    auto q = try_divide(c, den);
    if (!q) return std::nullopt;
    cs.push_back(*q);
  }
  return PolyX(p.ring(), std::move(cs));
}

// Generators of compact(H) as a polynomial whose content is H. H must be
// integral; a unit denominator only rescales.
PolyX poly_with_content(const FracIdeal& H) {
  FracIdeal c = compact(H);
  std::vector<GradedElement> gens;
  for (const auto& x : c.elements()) {
    auto q = try_divide(x.numerator(), x.denominator());
    if (!q) throw InvalidArgument("catalog ideal is not integral: " + H.to_string());
    gens.push_back(*q);
  }
  return stack_constants(H.ring(), gens);
}

}  // namespace

bool n_membership(const PolyX& f, const StarOp& s) {
  if (f.is_zero()) return false;
  return ideal_is_unit(star_apply(s, content_A(f)));
}

EvidenceReport n_saturation_check(const std::vector<std::pair<PolyX, PolyX>>& samples, const StarOp& s) {
  EvidenceReport rep;
  int n = 0;
  for (const auto& [f, g] : samples) {
    if (f.is_zero() || g.is_zero()) throw ZeroInput("saturation sample with a zero polynomial");
    PolyX fg = poly_mul(f, g);
    bool in_f = n_membership(f, s), in_g = n_membership(g, s), in_fg = n_membership(fg, s);
    rep.items.push_back({"n-sat", n++, in_fg == (in_f && in_g),
                         {{"f", f.to_string()}, {"g", g.to_string()}, {"f_in_N", in_f}, {"g_in_N", in_g},
                          {"fg_in_N", in_fg}}});
  }
  return rep;
}

bool is_star_invertible(const FracIdeal& I, const StarOp& s) {
  if (I.is_zero()) throw ZeroInput("invertibility of the zero ideal");
  return ideal_member(one(I.ring()), star_apply(s, ideal_product(I, frac_inverse(I))));
}

StarOp tilde_of(const StarOp& s) {
  switch (s.kind()) {
    case StarKind::D:
      return s;
    case StarKind::V:
    case StarKind::T:
    case StarKind::WAlias:
      return StarOp::w_alias(s.ring());
    case StarKind::StarA:
      break;
  }
  throw Unsupported("no stable closure available for " + s.name());
}

PolyX pic_generator(const std::vector<PolyX>& fs) {
  if (fs.empty()) throw InvalidArgument("pic_generator needs at least one polynomial");
  PolyX out(fs.front().ring());
  unsigned shift = 0;
  for (const auto& f : fs) {
    if (f.is_zero()) throw ZeroInput("pic_generator entry is zero");
    out = out + f.shifted(shift);
    shift += static_cast<unsigned>(f.degree()) + 1;
  }
  return out;
}

NagataFraction NagataFraction::make(PolyX num, PolyX den, StarOp s) {
  if (!n_membership(den, s)) throw InvalidArgument("denominator " + den.to_string() + " is not in N(" + s.name() + ")");
  return NagataFraction{std::move(num), std::move(den), std::move(s)};
}

bool KroneckerFraction::validate() const {
  if (den.is_zero()) return false;
  if (num.is_zero()) return true;
  if (direct) return ideal_contains(star_apply(star, content_A(den)), content_A(num));
  FracIdeal Ah = content_A(aux_h);
  return ideal_contains(star_apply(star, ideal_product(content_A(den), Ah)), ideal_product(content_A(num), Ah));
}

nlohmann::json KroneckerFraction::to_json() const {
  return {{"kind", direct ? "direct" : "aux"},
          {"witness_poly", "(" + num.to_string() + ")/(" + den.to_string() + ")"},
          {"aux_h", direct ? std::string("1") : aux_h.to_string()},
          {"star", star.name()},
          {"bound", bound},
          {"verdict", validate() ? "valid" : "invalid"}};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::NotFoundAtBound: return "not_found_at_bound";
  }
  return "?";
}

nlohmann::json KrResult::to_json() const {
  nlohmann::json j{{"verdict", verdict_name(verdict)}};
  j["certificate"] = fraction ? fraction->to_json() : nlohmann::json(nullptr);
  return j;
}

KrResult kr_member(const PolyX& f, const PolyX& g, const StarOp& s, KrMode mode, int bound) {
  if (g.is_zero()) throw ZeroInput("Kronecker fraction with zero denominator");
  const RingPtr& r = g.ring();
  KroneckerFraction direct{f, g, s, true, PolyX::constant(GradedElement::constant(r, 1)), bound};
  if (f.is_zero() || direct.validate()) return {Verdict::Yes, direct};
  if (mode == KrMode::Eab) return {Verdict::No, std::nullopt};

  const FracIdeal Af = content_A(f), Ag = content_A(g);
  auto works = [&](const FracIdeal& H) {
    return ideal_contains(star_apply(s, ideal_product(Ag, H)), ideal_product(Af, H));
  };
  auto certify = [&](const FracIdeal& H) -> std::optional<KrResult> {
    if (!works(H)) return std::nullopt;
    KroneckerFraction k{f, g, s, false, poly_with_content(H), bound};
    if (!k.validate()) return std::nullopt;
    return KrResult{Verdict::Yes, k};
  };
  std::vector<FracIdeal> cat = default_catalog(r, bound);
  for (std::size_t i = 1; i < cat.size(); ++i)
    if (auto res = certify(cat[i])) return *res;
  for (std::size_t i = 1; i < cat.size(); ++i)
    for (std::size_t j = i; j < cat.size(); ++j)
      if (auto res = certify(ideal_product(cat[i], cat[j]))) return *res;
  return {Verdict::NotFoundAtBound, std::nullopt};
}

nlohmann::json BezoutResult::to_json() const {
  return {{"n", n}, {"gamma", gamma.to_json()}, {"f_over", f_over.to_json()}, {"g_over", g_over.to_json()},
          {"valid", valid}};
}

BezoutResult bezout_combine(const KroneckerFraction& alpha, const KroneckerFraction& beta) {
  if (!(alpha.den == beta.den)) throw InvalidArgument("bezout_combine needs a shared denominator");
  if (alpha.star.name() != beta.star.name() || alpha.star.ring() != beta.star.ring())
    throw InvalidArgument("bezout_combine needs a shared star operation");
  if (beta.num.is_zero()) throw InvalidArgument("bezout_combine needs g != 0");
  if (!alpha.validate() || !beta.validate()) throw InvalidArgument("bezout_combine input fails its certificate");

  const RingPtr& r = alpha.den.ring();
  const PolyX& f = alpha.num;
  const PolyX& g = beta.num;
  const unsigned n = static_cast<unsigned>(std::max(1, f.degree() + 1));
  PolyX sum = f + g.shifted(n);
  const PolyX unit_h = PolyX::constant(GradedElement::constant(r, 1));

  KroneckerFraction gamma{sum, alpha.den, alpha.star, true, unit_h, std::max(alpha.bound, beta.bound)};
  if (!alpha.direct || !beta.direct) {
    // Multiplying each certificate by the other's auxiliary content keeps it valid.
    FracIdeal k = FracIdeal::unit(r);
    if (!alpha.direct) k = ideal_product(k, content_A(alpha.aux_h));
    if (!beta.direct) k = ideal_product(k, content_A(beta.aux_h));
    gamma.direct = false;
    gamma.aux_h = poly_with_content(k);
  }
  // A_sum = A_f + A_g, so both quotients are certified with h = 1.
  KroneckerFraction fo{f, sum, alpha.star, true, unit_h, 0};
  KroneckerFraction go{g, sum, alpha.star, true, unit_h, 0};
  BezoutResult res{n, gamma, fo, go, false};
  res.valid = gamma.validate() && fo.validate() && go.validate();
  return res;
}

EvidenceReport corC_evidence(const PolyX& f, const StarOp& s, int bound) {
  EvidenceReport rep;
  const RingPtr& r = f.ring();
  const FracIdeal A = content_A(f);
  const bool invertible = is_star_invertible(A, s);
  const FracIdeal inv = compact(frac_inverse(A));

  // Candidate h = H / D.
  std::vector<std::pair<PolyX, GradedElement>> hs;
  hs.emplace_back(PolyX::constant(GradedElement::constant(r, 1)), GradedElement::constant(r, 1));
  for (const auto& g : inv.generators()) hs.emplace_back(PolyX::constant(g), inv.denominator());
  if (inv.generators().size() > 1) hs.emplace_back(stack_constants(r, inv.generators()), inv.denominator());

  std::vector<GradedElement> gens;
  for (const auto& x : A.generators()) gens.push_back(x);
  int found_count = 0;
  int n = 0;
  for (const auto& a : gens) {
    EvidenceItem item{"corC", n++, true, {{"f", f.to_string()}, {"generator", a.to_string()},
                                          {"invertible", invertible}, {"bound", bound}}};
    bool found = false;
    for (const auto& [H, D] : hs) {
      auto d = divide_poly(poly_mul(f, H), D);
      if (!d || d->is_zero() || d->degree() > bound || !n_membership(*d, s)) continue;
      auto u = divide_poly(H * a, D);
      if (!u || !(*d * a == poly_mul(*u, f))) continue;
      item.certificate["d"] = d->to_string();
      item.certificate["u"] = u->to_string();
      found = true;
      break;
    }
    found_count += found ? 1 : 0;
    if (!found) {
      item.pass = false;
      item.exhausted = invertible;
      if (!invertible) item.pass = true;  // consistent: no witness expected
    }
    item.certificate["witness_found"] = found;
    rep.items.push_back(std::move(item));
  }
  if (!invertible) {
    bool some_missing = found_count < static_cast<int>(gens.size());
    rep.items.push_back({"corC-consistency", n++, some_missing,
                         {{"f", f.to_string()}, {"generators", gens.size()}, {"witnessed", found_count}}});
  }
  return rep;
}

EvidenceReport ext_contract_evidence(const FracIdeal& I, const StarOp& s,
                                     const std::vector<HQuotientElement>& probes, int bound) {
  EvidenceReport rep;
  const RingPtr& r = I.ring();
  const FracIdeal closure = star_apply(tilde_of(s), I);
  int n = 0;
  for (const auto& x : probes) {
    EvidenceItem item{"ext-contract", n++, true, {{"ideal", I.to_string()}, {"probe", x.normalized().to_string()},
                                                   {"closure", closure.to_string()}, {"bound", bound}}};
    const bool lhs = ideal_member(x, closure);
    std::optional<PolyX> witness;
    if (!x.is_zero()) {
      FracIdeal J = compact(ideal_intersection(ideal_colon(I, FracIdeal::principal(x)), FracIdeal::unit(r)));
      std::vector<GradedElement> js;
      for (const auto& e : J.elements()) {
        auto q = try_divide(e.numerator(), e.denominator());
        if (q) js.push_back(*q);
      }
      std::vector<PolyX> cands{PolyX::constant(GradedElement::constant(r, 1))};
      for (const auto& j : js) cands.push_back(PolyX::constant(j));
      if (js.size() > 1) cands.push_back(stack_constants(r, js));
      for (const auto& d : cands) {
        if (d.degree() > bound || !n_membership(d, s)) continue;
        bool ok = true;
        for (const auto& c : d.coeffs())
          if (!c.is_zero() && !ideal_member(x * HQuotientElement(c), I)) ok = false;
        if (ok) {
          witness = d;
          break;
        }
      }
    } else {
      witness = PolyX::constant(GradedElement::constant(r, 1));
    }
    item.certificate["in_closure"] = lhs;
    item.certificate["witness_d"] = witness ? nlohmann::json(witness->to_string()) : nlohmann::json(nullptr);
    std::string state;
    if (lhs && witness) {
      state = "agree-positive";
    } else if (!lhs && !witness) {
      state = "consistent-negative";
    } else if (lhs) {
      state = "witness-not-found";
      item.pass = false;
      item.exhausted = true;
    } else {
      state = "disagreement";
      item.pass = false;
    }
    item.certificate["state"] = state;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

nlohmann::json GpReport::to_json() const {
  return {{"ring", ring},
          {"star", star},
          {"verdict", counterexample_found ? "counterexample-found" : "evidence-for"},
          {"counterexample", counterexample},
          {"violations", evidence.violations()},
          {"exhausted", evidence.exhausted()},
          {"items", evidence.to_json()}};
}

GpReport gp_evidence(const RingPtr& ring, const StarOp& s, int budget, std::uint64_t seed) {
  GpReport rep{ring->name(), s.name(), false, nullptr, {}};
  const StarOp tilde = tilde_of(s);
  int n = 0;

  // (b) two-generator monomial ideals in a fixed order.
  std::vector<Exponent> exps;
  const int k = ring->dim();
  const int box = 4;
  std::vector<int> cur(static_cast<std::size_t>(k), -box);
  while (true) {
    Exponent e;
    int l1 = 0;
    for (int i = 0; i < k; ++i) {
      e.v[i] = cur[static_cast<std::size_t>(i)];
      l1 += std::abs(e.v[i]);
    }
    if (l1 <= box && ring->in_monoid(e)) exps.push_back(e);
    int i = 0;
    while (i < k && cur[static_cast<std::size_t>(i)] == box) cur[static_cast<std::size_t>(i++)] = -box;
    if (i == k) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  std::sort(exps.begin(), exps.end(),
            [](const Exponent& a, const Exponent& b) { return deglex_compare(a, b) < 0; });
  std::vector<long> coeffs{1};
  if (ring->base() == BaseDomain::Integers) coeffs = {1, 2, 3};
  struct Pair {
    Exponent a, b;
    long ca, cb;
    long key_deg;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (std::size_t j = i + 1; j < exps.size(); ++j)
      for (long ca : coeffs)
        for (long cb : coeffs) {
          if ((ca == 1 && ring->is_unit_exponent(exps[i])) || (cb == 1 && ring->is_unit_exponent(exps[j])))
            continue;
          pairs.push_back({exps[i], exps[j], ca, cb, std::abs(static_cast<long>(exps[i].total())) +
                                                         std::abs(static_cast<long>(exps[j].total()))});
        }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    if (x.key_deg != y.key_deg) return x.key_deg < y.key_deg;
    if (int c = deglex_compare(x.a, y.a); c != 0) return c < 0;
    if (int c = deglex_compare(x.b, y.b); c != 0) return c < 0;
    return std::make_pair(x.ca, x.cb) < std::make_pair(y.ca, y.cb);
  });
  int taken = 0;
  for (const auto& p : pairs) {
    if (taken >= budget) break;
    FracIdeal I(ring, {GradedElement::monomial(ring, p.b, p.cb), GradedElement::monomial(ring, p.a, p.ca)});
    ++taken;
    FracIdeal prod = star_apply(s, ideal_product(I, frac_inverse(I)));
    bool ok = ideal_member(one(ring), prod);
    rep.evidence.items.push_back({"invertible", n++, ok,
                                  {{"ideal", I.to_string()}, {"inverse", compact(frac_inverse(I)).to_string()},
                                   {"product_closure", prod.to_string()}}});
  }

  // (a) Gauss identity under the stable closure.
  Sampler smp(ring, seed);
  for (int i = 0; i < budget; ++i) {
    PolyX f = smp.poly(2), g = smp.poly(2);
    GaussResult gr = gauss_check(f, g, tilde);
    nlohmann::json cert = gr.to_json();
    cert["f"] = f.to_string();
    cert["g"] = g.to_string();
    rep.evidence.items.push_back({"gauss", n++, gr.equal, cert});
  }

  // (c) closure against its bounded ⋆_a; R is in the catalog so the bounded
  // value always contains the closure, and any excess is a real difference.
  const auto catalog = default_catalog(ring, 2);
  for (int i = 0; i < std::max(1, budget / 4); ++i) {
    FracIdeal I = smp.ideal(2, 2);
    FracIdeal c = star_apply(tilde, I);
    FracIdeal a = star_a_bounded(tilde, I, catalog);
    auto extra = first_non_member(a, c);
    nlohmann::json cert{{"ideal", I.to_string()}, {"closure", c.to_string()}, {"star_a", a.to_string()}};
    if (extra) cert["witness"] = extra->normalized().to_string();
    rep.evidence.items.push_back({"nkp1-9", n++, !extra, cert});
  }

  for (const auto& it : rep.evidence.items) {
    if (!it.pass && !it.exhausted) {
      rep.counterexample_found = true;
      rep.counterexample = {{"check", it.check}, {"sample", it.sample}, {"certificate", it.certificate}};
      break;
    }
  }
  return rep;
}

}  // namespace gradstar
