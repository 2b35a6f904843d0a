#include "gradstar/star.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>

#include "gradstar/errors.hpp"

namespace gradstar {

namespace {

const char* kind_name(StarKind k) {
  switch (k) {
    case StarKind::D: return "d";
    case StarKind::V: return "v";
    case StarKind::T: return "t";
    case StarKind::WAlias: return "w";
    case StarKind::StarA: return "star_a";
  }
  return "?";
}

StarKind kind_from_name(const std::string& s) {
  if (s == "d") return StarKind::D;
  if (s == "v") return StarKind::V;
  if (s == "t") return StarKind::T;
  if (s == "w" || s == "w_alias") return StarKind::WAlias;
  throw InvalidArgument("unknown star operation '" + s + "'");
}

}  // namespace

StarOp StarOp::d(RingPtr ring) { return StarOp(StarKind::D, std::move(ring)); }
StarOp StarOp::v(RingPtr ring) { return StarOp(StarKind::V, std::move(ring)); }
StarOp StarOp::t(RingPtr ring) { return StarOp(StarKind::T, std::move(ring)); }

StarOp StarOp::w_alias(RingPtr ring) {
  if (!ring->has_flag("pvmd"))
    throw Unsupported("w is only available on rings flagged pvmd; '" + ring->name() + "' is not");
  return StarOp(StarKind::WAlias, std::move(ring));
}

StarOp StarOp::star_a(RingPtr ring, int bound, StarKind base) {
  if (bound < 0) throw InvalidArgument("catalog bound must be nonnegative");
  if (base == StarKind::StarA) throw InvalidArgument("star_a needs a plain base operation");
  if (base == StarKind::WAlias) w_alias(ring);
  return StarOp(StarKind::StarA, std::move(ring), bound, base);
}

StarOp StarOp::parse(const std::string& name, RingPtr ring) {
  if (name.rfind("star_a", 0) != 0) {
    StarKind k = kind_from_name(name);
    if (k == StarKind::WAlias) return w_alias(std::move(ring));
    return StarOp(k, std::move(ring));
  }
  int bound = 3;
  StarKind base = StarKind::D;
  std::string rest = name.substr(6);
  if (!rest.empty()) {
    if (rest[0] != ':') throw InvalidArgument("expected star_a:N[:base], got '" + name + "'");
    rest = rest.substr(1);
    auto colon = rest.find(':');
    std::string num = rest.substr(0, colon);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 3)
      throw InvalidArgument("bad catalog bound in '" + name + "'");
    bound = std::stoi(num);
    if (colon != std::string::npos) base = kind_from_name(rest.substr(colon + 1));
  }
  return star_a(std::move(ring), bound, base);
}

std::string StarOp::name() const {
  if (kind_ != StarKind::StarA) return kind_name(kind_);
  std::string s = "star_a:" + std::to_string(bound_);
  if (base_ != StarKind::D) s += std::string(":") + kind_name(base_);
  return s;
}

StarOp StarOp::base_op() const {
  if (kind_ != StarKind::StarA) return *this;
  return StarOp(base_, ring_);
}

FracIdeal star_apply(const StarOp& s, const FracIdeal& I) {
  if (I.is_zero()) throw ZeroInput("closure of the zero ideal");
  if (I.ring() != s.ring())
    throw RingMismatch("ideal over '" + I.ring()->name() + "' passed to a closure over '" +
                       s.ring()->name() + "'");
  switch (s.kind()) {
    case StarKind::D:
      return I;
    case StarKind::V:
    case StarKind::T:  // t agrees with v on finitely generated ideals
    case StarKind::WAlias:
      return compact(frac_inverse(frac_inverse(I)));
    case StarKind::StarA:
      return star_a_bounded(s.base_op(), I, default_catalog(s.ring(), s.bound()));
  }
  return I;
}

std::vector<FracIdeal> default_catalog(const RingPtr& ring, int bound) {
  std::vector<FracIdeal> out{FracIdeal::unit(ring)};
  const int k = ring->dim();
  std::vector<Exponent> exps;
  Exponent e;
  // Odometer over [-bound, bound]^k.
  std::vector<int> cur(static_cast<std::size_t>(k), -bound);
  while (true) {
    int l1 = 0;
    for (int i = 0; i < k; ++i) {
      e.v[i] = cur[static_cast<std::size_t>(i)];
      l1 += std::abs(cur[static_cast<std::size_t>(i)]);
    }
    if (l1 <= bound && ring->in_monoid(e)) exps.push_back(e);
    int i = 0;
    while (i < k && cur[static_cast<std::size_t>(i)] == bound) cur[static_cast<std::size_t>(i++)] = -bound;
    if (i == k) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  std::sort(exps.begin(), exps.end(),
            [](const Exponent& a, const Exponent& b) { return deglex_compare(a, b) < 0; });

  std::vector<int> coeffs{1};
  if (ring->base() == BaseDomain::Integers) coeffs = {1, 2, 3};

  struct Gen {
    Exponent e;
    int c;
  };
  std::vector<Gen> gens;
  for (const auto& x : exps)
    for (int c : coeffs) {
      if (c == 1 && ring->is_unit_exponent(x)) continue;
      gens.push_back({x, c});
    }

  std::set<std::vector<long>> seen;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Gen& a = gens[i];
      const Gen& b = gens[j];
      int g = std::gcd(a.c, b.c);
      int ca = a.c / g, cb = b.c / g;
      Exponent lo;
      for (int d = 0; d < k; ++d) lo.v[d] = std::min(a.e.v[d], b.e.v[d]);
      Exponent sa = a.e - lo, sb = b.e - lo;
      // Proportional generators give a principal ideal.
      if (sa == sb && ca == cb) continue;
      std::vector<long> key{ca, cb};
      key.insert(key.end(), sa.v.begin(), sa.v.end());
      key.insert(key.end(), sb.v.begin(), sb.v.end());
      if (deglex_compare(sb, sa) < 0 || (sa == sb && cb < ca)) {
        key = {cb, ca};
        key.insert(key.end(), sb.v.begin(), sb.v.end());
        key.insert(key.end(), sa.v.begin(), sa.v.end());
      }
      if (!seen.insert(key).second) continue;
      out.emplace_back(ring, std::vector<GradedElement>{GradedElement::monomial(ring, a.e, a.c),
                                                        GradedElement::monomial(ring, b.e, b.c)});
    }
  }
  return out;
}

FracIdeal star_a_bounded(const StarOp& s, const FracIdeal& I, const std::vector<FracIdeal>& catalog) {
  if (catalog.empty()) throw InvalidArgument("star_a needs a nonempty catalog");
  if (I.is_zero()) throw ZeroInput("closure of the zero ideal");
  std::optional<FracIdeal> acc;
  for (const auto& H : catalog) {
    if (H.is_zero() || !H.is_homogeneous()) throw InvalidArgument("catalog entries must be nonzero and homogeneous");
    FracIdeal part = ideal_colon(star_apply(s, ideal_product(I, H)), star_apply(s, H));
    acc = acc ? ideal_sum(*acc, part) : part;
  }
  return compact(*acc);
}

EvidenceReport eab_evidence(const StarOp& s,
                            const std::vector<std::tuple<FracIdeal, FracIdeal, FracIdeal>>& samples) {
  EvidenceReport rep;
  int n = 0;
  for (const auto& [E, F, G] : samples) {
    EvidenceItem item;
    item.check = "eab";
    item.sample = n++;
    item.certificate = {{"E", E.to_string()}, {"F", F.to_string()}, {"G", G.to_string()}};
    bool premise = ideal_contains(star_apply(s, ideal_product(E, G)), star_apply(s, ideal_product(E, F)));
    item.certificate["premise"] = premise;
    if (premise) {
      auto missing = first_non_member(star_apply(s, F), star_apply(s, G));
      item.pass = !missing;
      if (missing) item.certificate["witness"] = missing->normalized().to_string();
    }
    rep.items.push_back(std::move(item));
  }
  return rep;
}

EvidenceReport star_axiom_check(const StarOp& s, const std::vector<AxiomSample>& samples) {
  EvidenceReport rep;
  const StarOp v = StarOp::v(s.ring());
  int n = 0;
  for (const auto& smp : samples) {
    const int idx = n++;
    auto add = [&](const char* check, bool pass, nlohmann::json cert) {
      rep.items.push_back({check, idx, pass, std::move(cert)});
    };
    const FracIdeal Es = star_apply(s, smp.E);
    const std::string es = Es.to_string();

    auto miss = first_non_member(smp.E, Es);
    add("extensive", !miss, {{"E", smp.E.to_string()}, {"closure", es}});

    if (ideal_contains(smp.F, smp.E)) {
      FracIdeal Fs = star_apply(s, smp.F);
      add("monotone", ideal_contains(Fs, Es),
          {{"E", smp.E.to_string()}, {"F", smp.F.to_string()}, {"F_closure", Fs.to_string()}});
    }

    FracIdeal Ess = star_apply(s, Es);
    add("idempotent", ideal_equals(Ess, Es), {{"closure", es}, {"closure_twice", Ess.to_string()}});

    HQuotientElement x(smp.x);
    FracIdeal lhs = star_apply(s, ideal_scale(smp.E, x));
    FracIdeal rhs = ideal_scale(Es, x);
    add("scaling", ideal_equals(lhs, rhs),
        {{"x", smp.x.to_string()}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});

    FracIdeal Ev = star_apply(v, smp.E);
    add("order", ideal_contains(Es, smp.E) && ideal_contains(Ev, Es), {{"closure", es}, {"v_closure", Ev.to_string()}});
  }
  return rep;
}

}  // namespace gradstar
