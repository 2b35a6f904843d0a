#include "gradstar/content.hpp"

namespace gradstar {

FracIdeal content_C(const GradedElement& a) {
  if (a.is_zero()) throw ZeroInput("content of the zero element");
  std::vector<GradedElement> gens;
  for (auto& [deg, part] : a.decompose()) gens.push_back(std::move(part));
  return FracIdeal(a.ring(), std::move(gens));
}

FracIdeal content_A(const PolyX& f) {
  if (f.is_zero()) throw ZeroInput("content of the zero polynomial");
  std::vector<GradedElement> gens;
  for (const auto& c : f.coeffs())
    for (auto& [deg, part] : c.decompose()) gens.push_back(std::move(part));
  return FracIdeal(f.ring(), std::move(gens));
}

FracIdeal classical_content(const PolyX& f) {
  if (f.is_zero()) throw ZeroInput("content of the zero polynomial");
  return FracIdeal(f.ring(), f.coeffs());
}

int dm_exponent(const PolyX& f, const PolyX& g, int cap) {
  if (cap < 1) throw InvalidArgument("cap must be positive");
  const FracIdeal Af = content_A(f);
  const FracIdeal Ag = content_A(g);
  const FracIdeal Afg = content_A(poly_mul(f, g));
  const FracIdeal AfAg = ideal_product(Af, Ag);
  FracIdeal pw = compact(Af);
  nlohmann::json trace = nlohmann::json::array();
  for (int m = 1; m <= cap; ++m) {
    FracIdeal lhs = compact(ideal_product(pw, AfAg));
    FracIdeal rhs = compact(ideal_product(pw, Afg));
    bool eq = ideal_equals(lhs, rhs);
    trace.push_back({{"m", m}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"equal", eq}});
    if (eq) return m;
    pw = compact(ideal_product(pw, Af));
  }
  throw CapExceeded(cap, std::move(trace));
}

nlohmann::json GaussResult::to_json() const {
  nlohmann::json j{{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"equal", equal}};
  j["witness"] = witness ? nlohmann::json(witness->normalized().to_string()) : nlohmann::json(nullptr);
  return j;
}

GaussResult gauss_check(const PolyX& f, const PolyX& g, const std::optional<StarOp>& s) {
  FracIdeal lhs = compact(ideal_product(content_A(f), content_A(g)));
  FracIdeal rhs = compact(content_A(poly_mul(f, g)));
  if (s) {
    lhs = star_apply(*s, lhs);
    rhs = star_apply(*s, rhs);
  }
  auto w = first_non_member(lhs, rhs);
  if (!w) w = first_non_member(rhs, lhs);
  return GaussResult{!w, lhs, rhs, w};
}

bool square_identity_check(const GradedElement& a, const GradedElement& b) {
  if (!a.is_homogeneous() || !b.is_homogeneous())
    throw InvalidArgument("square identity needs homogeneous elements");
  if (a.is_zero() && b.is_zero()) return true;
  FracIdeal ab(a.ring() ? a.ring() : b.ring(), {a, b});
  FracIdeal sq(ab.ring(), {a * a, b * b});
  return ideal_equals(ideal_product(ab, ab), sq);
}

EvidenceReport content_colon_check(const PolyX& f, const std::vector<RHPoly>& probes) {
  EvidenceReport rep;
  const FracIdeal inv = compact(frac_inverse(content_A(f)));
  int n = 0;
  for (const auto& q : probes) {
    if (q.den.is_zero() || !q.den.is_homogeneous())
      throw InvalidArgument("probe denominator must be nonzero and homogeneous");
    const PolyX fq = poly_mul(f, q.num);
    for (const auto& c : fq.coeffs())
      if (!try_divide(c, q.den))
        throw InvalidArgument("probe times f is not in R[X]");
    EvidenceItem item{"coefficients_in_inverse", n++, true, {{"f", f.to_string()}, {"inverse", inv.to_string()}}};
    item.certificate["probe"] = "(" + q.num.to_string() + ")/(" + q.den.to_string() + ")";
    for (const auto& c : q.num.coeffs()) {
      if (c.is_zero()) continue;
      HQuotientElement x(c, q.den);
      if (!ideal_member(x, inv)) {
        item.pass = false;
        item.certificate["witness"] = x.normalized().to_string();
        break;
      }
    }
    rep.items.push_back(std::move(item));
  }
  for (const auto& u : inv.elements()) {
    bool ok = true;
    const PolyX fu = poly_mul(f, PolyX::constant(u.numerator()));
    for (const auto& c : fu.coeffs())
      if (!c.is_zero() && !try_divide(c, u.denominator())) ok = false;
    rep.items.push_back({"constructed_in_RX", n++, ok, {{"f", f.to_string()}, {"u", u.to_string()}}});
  }
  return rep;
}

}  // namespace gradstar
