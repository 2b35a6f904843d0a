#include "gradstar/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gradstar/groebner.hpp"

namespace gradstar {

std::string Exponent::to_string(int dim) const {
  std::string s = "(";
  for (int i = 0; i < dim; ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string_view base_name(BaseDomain b) { return b == BaseDomain::Rationals ? "Q" : "Z"; }

bool base_contains(BaseDomain b, const mpq_class& c) {
  return b == BaseDomain::Rationals || c.get_den() == 1;
}

// ---------------------------------------------------------------------------
// GradingMonoid

GradingMonoid::GradingMonoid(int dim, std::vector<Exponent> generators)
    : dim_(dim), gens_(std::move(generators)) {
  coordinate_ = true;
  for (const auto& g : gens_) {
    int nonzero = 0;
    for (int i = 0; i < kMaxDim; ++i) {
      if (g.v[i] == 0) continue;
      ++nonzero;
      if (g.v[i] != 1 && g.v[i] != -1) coordinate_ = false;
    }
    if (nonzero != 1) coordinate_ = false;
  }
}

std::optional<std::vector<std::uint32_t>> GradingMonoid::decompose(const Exponent& g) const {
  const std::size_t r = gens_.size();
  for (int i = dim_; i < kMaxDim; ++i)
    if (g.v[i] != 0) return std::nullopt;
  std::vector<std::uint32_t> cert(r, 0);
  if (g.is_zero()) return cert;

  if (coordinate_) {
    for (int i = 0; i < dim_; ++i) {
      if (g.v[i] == 0) continue;
      int want = g.v[i] > 0 ? 1 : -1;
      bool found = false;
      for (std::size_t j = 0; j < r && !found; ++j) {
        if (gens_[j].v[i] == want) {
          cert[j] = static_cast<std::uint32_t>(std::abs(g.v[i]));
          found = true;
        }
      }
      if (!found) return std::nullopt;
    }
    return cert;
  }

  std::int64_t m = 0, gn = 0;
  for (const auto& x : gens_)
    for (int i = 0; i < dim_; ++i) m = std::max<std::int64_t>(m, std::abs(x.v[i]));
  for (int i = 0; i < dim_; ++i) gn = std::max<std::int64_t>(gn, std::abs(g.v[i]));
  const std::int64_t margin = dim_ * (m + gn);
  std::array<std::int64_t, kMaxDim> lo{}, ext{};
  std::int64_t cells = 1;
  for (int i = 0; i < dim_; ++i) {
    lo[i] = std::min<std::int64_t>(0, g.v[i]) - margin;
    ext[i] = std::abs(static_cast<std::int64_t>(g.v[i])) + 2 * margin + 1;
    cells *= ext[i];
    if (cells > 8'000'000) throw Unsupported("monoid membership search box too large");
  }
  auto index_of = [&](const Exponent& p) -> std::int64_t {
    std::int64_t idx = 0;
    for (int i = 0; i < dim_; ++i) {
      std::int64_t c = p.v[i] - lo[i];
      if (c < 0 || c >= ext[i]) return -1;
      idx = idx * ext[i] + c;
    }
    return idx;
  };

  // parent generator index + 1; 0 = unvisited
  std::vector<std::uint8_t> via(static_cast<std::size_t>(cells), 0);
  std::vector<Exponent> frontier{Exponent{}};
  const std::int64_t origin = index_of(Exponent{});
  via.at(static_cast<std::size_t>(origin)) = 255;
  const std::int64_t target = index_of(g);
  while (!frontier.empty() && via[static_cast<std::size_t>(target)] == 0) {
    std::vector<Exponent> next;
    for (const auto& p : frontier) {
      for (std::size_t j = 0; j < r; ++j) {
        Exponent q = p + gens_[j];
        std::int64_t idx = index_of(q);
        if (idx < 0 || via[static_cast<std::size_t>(idx)] != 0) continue;
        via[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(j + 1);
        next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  if (via[static_cast<std::size_t>(target)] == 0) return std::nullopt;
  Exponent p = g;
  while (!p.is_zero()) {
    std::size_t j = via[static_cast<std::size_t>(index_of(p))] - 1u;
    ++cert[j];
    p = p - gens_[j];
  }
  return cert;
}

bool GradingMonoid::is_group() const {
  return std::all_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return contains(-g); });
}

// ---------------------------------------------------------------------------
// GradedRing

namespace {

const std::set<std::string, std::less<>> kKnownFlags = {"integrally_closed", "pvmd",
                                                        "graded_krull"};

// Basis of {u in Z^r : A u = 0} by integer column reduction of A (k x r).
std::vector<std::vector<long>> integer_kernel(const std::vector<Exponent>& cols, int k) {
  const std::size_t r = cols.size();
  std::vector<std::vector<long>> a(r, std::vector<long>(static_cast<std::size_t>(k)));
  std::vector<std::vector<long>> u(r, std::vector<long>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    for (int i = 0; i < k; ++i) a[j][static_cast<std::size_t>(i)] = cols[j].v[i];
    u[j][j] = 1;
  }
  std::size_t pivot = 0;
  for (int row = 0; row < k && pivot < r; ++row) {
    const auto ri = static_cast<std::size_t>(row);
    while (true) {
      std::size_t best = r;
      for (std::size_t j = pivot; j < r; ++j)
        if (a[j][ri] != 0 && (best == r || std::abs(a[j][ri]) < std::abs(a[best][ri]))) best = j;
      if (best == r) break;
      std::swap(a[pivot], a[best]);
      std::swap(u[pivot], u[best]);
      bool clean = true;
      for (std::size_t j = pivot + 1; j < r; ++j) {
        if (a[j][ri] == 0) continue;
        long q = a[j][ri] / a[pivot][ri];
        for (std::size_t c = 0; c < a[j].size(); ++c) a[j][c] -= q * a[pivot][c];
        for (std::size_t c = 0; c < r; ++c) u[j][c] -= q * u[pivot][c];
        if (a[j][ri] != 0) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }
  return {u.begin() + static_cast<std::ptrdiff_t>(pivot), u.end()};
}

}  // namespace

GradedRing::GradedRing(RingSpec spec, GradingMonoid monoid)
    : spec_(std::move(spec)), monoid_(std::move(monoid)), grading_(spec_.grading) {}

RingPtr GradedRing::create(RingSpec spec) {
  if (spec.dim < 1 || spec.dim > kMaxDim)
    throw InvalidArgument("ring dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  if (spec.monoid_generators.empty()) throw InvalidArgument("monoid needs at least one generator");
  if (spec.monoid_generators.size() > static_cast<std::size_t>(kMaxVars - 2))
    throw InvalidArgument("too many monoid generators (max " + std::to_string(kMaxVars - 2) + ")");
  std::vector<Exponent> gens;
  for (const auto& g : spec.monoid_generators) {
    if (g.size() != static_cast<std::size_t>(spec.dim))
      throw InvalidArgument("monoid generator has wrong length");
    Exponent e;
    bool zero = true;
    for (int i = 0; i < spec.dim; ++i) {
      e.v[i] = static_cast<std::int32_t>(g[static_cast<std::size_t>(i)]);
      zero = zero && e.v[i] == 0;
    }
    if (zero) throw InvalidArgument("zero monoid generator");
    if (std::find(gens.begin(), gens.end(), e) != gens.end())
      throw InvalidArgument("duplicate monoid generator");
    gens.push_back(e);
  }
  for (const auto& f : spec.flags)
    if (!kKnownFlags.count(f)) throw InvalidArgument("unknown ring flag '" + f + "'");
  if (spec.names.empty()) {
    if (spec.dim == 1) {
      spec.names = {"t"};
    } else {
      for (int i = 1; i <= spec.dim; ++i) spec.names.push_back("t" + std::to_string(i));
    }
  }
  if (spec.names.size() != static_cast<std::size_t>(spec.dim))
    throw InvalidArgument("names must have one entry per coordinate");
  for (const auto& n : spec.names) {
    if (n.empty() || n == "X" || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw InvalidArgument("invalid coordinate name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw InvalidArgument("invalid coordinate name '" + n + "'");
  }
  for (const auto& row : spec.grading)
    if (row.size() != static_cast<std::size_t>(spec.dim))
      throw InvalidArgument("grading rows must have one entry per coordinate");
  if (!spec.grading.empty() && spec.grading.size() > static_cast<std::size_t>(kMaxDim))
    throw InvalidArgument("too many grading rows");

  GradingMonoid monoid(spec.dim, gens);
  for (const auto& g : gens) {
    bool negative = std::any_of(g.v.begin(), g.v.end(), [](auto x) { return x < 0; });
    if (negative && !monoid.contains(-g))
      throw InvalidArgument("generator " + g.to_string(spec.dim) +
                            " has a negative entry but its negation is not in the monoid");
  }
  if (spec.base == BaseDomain::Rationals && monoid.is_group())
    throw InvalidArgument("a group monoid over a field gives a graded field; not supported");

  // Identity grading is stored as "none" so fine_grading() is cheap.
  if (!spec.grading.empty() && spec.grading.size() == static_cast<std::size_t>(spec.dim)) {
    bool identity = true;
    for (int i = 0; i < spec.dim; ++i)
      for (int j = 0; j < spec.dim; ++j)
        identity = identity && spec.grading[static_cast<std::size_t>(i)]
                                           [static_cast<std::size_t>(j)] == (i == j ? 1 : 0);
    if (identity) spec.grading.clear();
  }

  auto ring = std::shared_ptr<GradedRing>(new GradedRing(std::move(spec), std::move(monoid)));
  ring->compute_presentation();
  return ring;
}

bool GradedRing::has_flag(std::string_view flag) const {
  return std::find(spec_.flags.begin(), spec_.flags.end(), flag) != spec_.flags.end();
}

Exponent GradedRing::grade_of(const Exponent& e) const {
  if (fine_grading()) return e;
  Exponent out;
  for (std::size_t i = 0; i < grading_.size(); ++i) {
    long s = 0;
    for (int j = 0; j < spec_.dim; ++j) s += grading_[i][static_cast<std::size_t>(j)] * e.v[j];
    out.v[i] = static_cast<std::int32_t>(s);
  }
  return out;
}

bool GradedRing::in_monoid(const Exponent& e) const {
  try {
    (void)lift(e);
    return true;
  } catch (const NotInRing&) {
    return false;
  }
}

bool GradedRing::is_unit_exponent(const Exponent& e) const { return in_monoid(e) && in_monoid(-e); }

Monomial GradedRing::lift(const Exponent& e) const {
  {
    std::lock_guard<std::mutex> lock(lift_mu_);
    auto it = lift_cache_.find(e);
    if (it != lift_cache_.end()) {
      if (!it->second) throw NotInRing("exponent " + e.to_string(dim()) + " is not in the monoid");
      return *it->second;
    }
  }
  std::optional<Monomial> out;
  if (auto cert = monoid_.decompose(e)) {
    Monomial m;
    for (std::size_t j = 0; j < cert->size(); ++j) {
      if ((*cert)[j] > 60000) throw Unsupported("exponent too large for the presentation");
      m.exp[j] = static_cast<std::uint16_t>((*cert)[j]);
      m.deg += (*cert)[j];
    }
    out = m;
  }
  {
    std::lock_guard<std::mutex> lock(lift_mu_);
    lift_cache_.emplace(e, out);
  }
  if (!out) throw NotInRing("exponent " + e.to_string(dim()) + " is not in the monoid");
  return *out;
}

Exponent GradedRing::image(const Monomial& m, int offset) const {
  Exponent e;
  const auto& gens = monoid_.generators();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    int c = m.exp[j + static_cast<std::size_t>(offset)];
    if (c == 0) continue;
    for (int i = 0; i < dim(); ++i) e.v[i] += c * gens[j].v[i];
  }
  return e;
}

std::vector<std::string> GradedRing::pvar_names() const {
  std::vector<std::string> out;
  for (int i = 1; i <= num_pvars(); ++i) out.push_back("z" + std::to_string(i));
  return out;
}

void GradedRing::compute_presentation() {
  const int r = num_pvars();
  auto kernel = integer_kernel(monoid_.generators(), dim());
  if (kernel.empty()) return;

  // Lattice basis binomials, saturated by z_1...z_r through w*z_1...z_r - 1
  // with w eliminated (w is variable 0).
  const TermOrder elim{r + 1, 1};
  std::vector<Poly<QQ>> input;
  for (const auto& u : kernel) {
    Monomial plus, minus;
    for (int j = 0; j < r; ++j) {
      long c = u[static_cast<std::size_t>(j)];
      if (c > 0) {
        plus.exp[j + 1] = static_cast<std::uint16_t>(c);
        plus.deg += static_cast<std::uint32_t>(c);
      } else if (c < 0) {
        minus.exp[j + 1] = static_cast<std::uint16_t>(-c);
        minus.deg += static_cast<std::uint32_t>(-c);
      }
    }
    input.push_back(Poly<QQ>::from_terms({{plus, 1}, {minus, -1}}, elim));
  }
  Monomial all;
  for (int j = 0; j <= r; ++j) all.exp[j] = 1;
  all.deg = static_cast<std::uint32_t>(r + 1);
  input.push_back(Poly<QQ>::from_terms({{all, 1}, {Monomial{}, -1}}, elim));

  const TermOrder ord{r, 0};
  std::vector<Poly<QQ>> kept;
  for (const auto& p : groebner(std::move(input), elim)) {
    if (p.involves_var_below(1)) continue;
    std::vector<Term<QQ>> terms;
    for (const auto& t : p.terms()) {
      Monomial m;
      for (int j = 0; j < r; ++j) m.exp[j] = t.mono.exp[j + 1];
      m.deg = t.mono.deg;
      terms.push_back({m, t.coeff});
    }
    kept.push_back(Poly<QQ>::from_terms(std::move(terms), ord));
  }
  toric_q_ = groebner(std::move(kept), ord);

  // Binomial bases have +-1 coefficients, so the same binomials generate the
  // toric ideal over Z; a strong basis is recomputed to be safe.
  std::vector<Poly<ZZ>> zin;
  for (const auto& p : toric_q_) {
    std::vector<Term<ZZ>> terms;
    for (const auto& t : p.terms()) {
      if (t.coeff.get_den() != 1) throw Unsupported("non-integral toric generator");
      terms.push_back({t.mono, t.coeff.get_num()});
    }
    zin.push_back(Poly<ZZ>(std::move(terms)));
  }
  toric_z_ = groebner(std::move(zin), ord);
}

// ---------------------------------------------------------------------------
// GradedElement

namespace {

void sort_terms(GradedElement::TermList& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return deglex_compare(a.first, b.first) > 0; });
  GradedElement::TermList out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

const RingPtr& pick_ring(const RingPtr& a, const RingPtr& b) {
  if (a && b && a != b) throw RingMismatch("operands belong to different rings");
  return a ? a : b;
}

}  // namespace

GradedElement GradedElement::from_terms(RingPtr ring, TermList terms) {
  if (!ring) throw InvalidArgument("element without a ring");
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    if (!base_contains(ring->base(), c))
      throw NotInRing("coefficient " + c.get_str() + " is not in " +
                      std::string(base_name(ring->base())));
  }
  sort_terms(terms);
  for (const auto& [e, c] : terms)
    if (!ring->in_monoid(e))
      throw NotInRing("exponent " + e.to_string(ring->dim()) + " is not in the monoid");
  return GradedElement(std::move(ring), std::move(terms));
}

GradedElement GradedElement::constant(RingPtr ring, const mpq_class& c) {
  return from_terms(std::move(ring), {{Exponent{}, c}});
}

GradedElement GradedElement::monomial(RingPtr ring, const Exponent& e, const mpq_class& c) {
  return from_terms(std::move(ring), {{e, c}});
}

void GradedElement::check_same_ring(const GradedElement& o) const { (void)pick_ring(ring_, o.ring_); }

bool GradedElement::is_homogeneous() const {
  if (terms_.size() <= 1) return true;
  if (ring_->fine_grading()) return false;
  Exponent g = ring_->grade_of(terms_.front().first);
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (!(ring_->grade_of(terms_[i].first) == g)) return false;
  return true;
}

Exponent GradedElement::grade() const {
  if (is_zero() || !is_homogeneous()) throw InvalidArgument("grade of a non-homogeneous element");
  return ring_->grade_of(terms_.front().first);
}

bool GradedElement::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = terms_.front();
  if (ring_->base() == BaseDomain::Integers && abs(c) != 1) return false;
  return ring_->is_unit_exponent(e);
}

std::vector<std::pair<Exponent, GradedElement>> GradedElement::decompose() const {
  std::map<std::array<std::int32_t, kMaxDim>, TermList> groups;
  for (const auto& t : terms_) groups[ring_->grade_of(t.first).v].push_back(t);
  std::vector<std::pair<Exponent, GradedElement>> out;
  for (auto& [g, ts] : groups) {
    Exponent e;
    e.v = g;
    out.emplace_back(e, GradedElement(ring_, std::move(ts)));
  }
  return out;
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
  const RingPtr& r = pick_ring(ring_, o.ring_);
  TermList all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  sort_terms(all);
  return GradedElement(r, std::move(all));
}

GradedElement GradedElement::operator-() const { return scaled(-1); }

GradedElement GradedElement::operator-(const GradedElement& o) const { return *this + (-o); }

GradedElement GradedElement::operator*(const GradedElement& o) const {
  const RingPtr& r = pick_ring(ring_, o.ring_);
  TermList all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) all.emplace_back(a.first + b.first, a.second * b.second);
  sort_terms(all);
  return GradedElement(r, std::move(all));
}

GradedElement GradedElement::scaled(const mpq_class& c) const {
  if (c == 0) return GradedElement(ring_);
  TermList out = terms_;
  for (auto& t : out) t.second *= c;
  return GradedElement(ring_, std::move(out));
}

GradedElement GradedElement::pow(unsigned n) const {
  GradedElement acc = constant(ring_, 1);
  GradedElement b = *this;
  while (n) {
    if (n & 1u) acc = acc * b;
    n >>= 1u;
    if (n) b = b * b;
  }
  return acc;
}

namespace {

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (e.v[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e.v[i] != 1) s += "^" + std::to_string(e.v[i]);
  }
  return s;
}

}  // namespace

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c0] : terms_) {
    mpq_class c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono = monomial_string(e, ring_->names());
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

int compare_elements(const GradedElement& a, const GradedElement& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (int c = deglex_compare(x[i].first, y[i].first); c != 0) return c;
    if (x[i].second != y[i].second) return x[i].second < y[i].second ? -1 : 1;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// PolyX

PolyX::PolyX(RingPtr ring, std::vector<GradedElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (c.ring() && c.ring() != ring_) throw RingMismatch("coefficient from a different ring");
    if (!c.ring()) c = GradedElement(ring_);
  }
  trim();
}

PolyX PolyX::constant(const GradedElement& a) { return PolyX(a.ring(), {a}); }

void PolyX::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GradedElement PolyX::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : GradedElement(ring_);
}

PolyX PolyX::operator+(const PolyX& o) const {
  const RingPtr& r = pick_ring(ring_, o.ring_);
  std::vector<GradedElement> out(std::max(coeffs_.size(), o.coeffs_.size()), GradedElement(r));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
  return PolyX(r, std::move(out));
}

PolyX PolyX::operator-() const {
  std::vector<GradedElement> out;
  for (const auto& c : coeffs_) out.push_back(-c);
  return PolyX(ring_, std::move(out));
}

PolyX PolyX::operator-(const PolyX& o) const { return *this + (-o); }

PolyX PolyX::operator*(const PolyX& o) const { return poly_mul(*this, o); }

PolyX PolyX::operator*(const GradedElement& a) const {
  const RingPtr& r = pick_ring(ring_, a.ring());
  std::vector<GradedElement> out;
  for (const auto& c : coeffs_) out.push_back(c * a);
  return PolyX(r, std::move(out));
}

PolyX PolyX::shifted(unsigned n) const {
  if (is_zero()) return *this;
  std::vector<GradedElement> out(n, GradedElement(ring_));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return PolyX(ring_, std::move(out));
}

std::string PolyX::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string xs = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
    std::string cs = c.to_string();
    std::string piece;
    bool neg = false;
    if (i == 0) {
      piece = cs;
    } else if (c.terms().size() == 1) {
      GradedElement pos = c;
      if (c.leading_coeff() < 0) {
        neg = true;
        pos = -c;
      }
      std::string ps = pos.to_string();
      piece = ps == "1" ? xs : ps + "*" + xs;
    } else {
      piece = "(" + cs + ")*" + xs;
    }
    if (s.empty()) {
      s = (neg ? "-" : "") + piece;
    } else if (neg) {
      s += " - " + piece;
    } else if (piece[0] == '-') {
      s += " - " + piece.substr(1);
    } else {
      s += " + " + piece;
    }
  }
  return s;
}

PolyX poly_mul(const PolyX& f, const PolyX& g) {
  const RingPtr& r = pick_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) return PolyX(r);
  std::vector<GradedElement> out(f.coeffs().size() + g.coeffs().size() - 1, GradedElement(r));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j)
      out[i + j] = out[i + j] + f.coeffs()[i] * g.coeffs()[j];
  }
  return PolyX(r, std::move(out));
}

// ---------------------------------------------------------------------------
// Polynomialization

Polynomialized polynomialize(const PolyX& f) {
  if (f.is_zero()) throw ZeroInput("polynomialize of the zero polynomial");
  Polynomialized out;
  out.ring = f.ring();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    for (const auto& [e, c] : f.coeffs()[i].terms())
      out.entries.push_back({static_cast<int>(i), e, c});
  std::stable_sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
    if (a.x_degree != b.x_degree) return a.x_degree < b.x_degree;
    return deglex_compare(a.y_exp, b.y_exp) < 0;
  });
  return out;
}

std::vector<GradedElement> Polynomialized::content_generators() const {
  std::vector<GradedElement> out;
  std::map<std::pair<int, std::array<std::int32_t, kMaxDim>>, GradedElement::TermList> groups;
  std::vector<std::pair<int, std::array<std::int32_t, kMaxDim>>> order;
  for (const auto& e : entries) {
    auto key = std::make_pair(e.x_degree, ring->grade_of(e.y_exp).v);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.emplace_back(e.y_exp, e.coeff);
  }
  for (const auto& key : order) out.push_back(GradedElement::from_terms(ring, groups[key]));
  return out;
}

std::string Polynomialized::to_string() const {
  std::string s;
  const int k = ring->dim();
  for (const auto& e : entries) {
    mpq_class c = e.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < k; ++i) {
      if (e.y_exp.v[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += k == 1 ? "Y" : "Y" + std::to_string(i + 1);
      if (e.y_exp.v[i] != 1) mono += "^" + std::to_string(e.y_exp.v[i]);
    }
    if (e.x_degree > 0) {
      if (!mono.empty()) mono += "*";
      mono += e.x_degree == 1 ? "X" : "X^" + std::to_string(e.x_degree);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// HQuotientElement

HQuotientElement::HQuotientElement(GradedElement num)
    : num_(num), den_(GradedElement::constant(num.ring(), 1)) {}

HQuotientElement::HQuotientElement(GradedElement num, GradedElement den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroInput("zero denominator");
  if (!den_.is_homogeneous()) throw InvalidArgument("denominator must be homogeneous");
  (void)pick_ring(num_.ring(), den_.ring());
  if (!num_.ring()) num_ = GradedElement(den_.ring());
}

HQuotientElement HQuotientElement::operator*(const HQuotientElement& o) const {
  return HQuotientElement(num_ * o.num_, den_ * o.den_);
}

HQuotientElement HQuotientElement::operator+(const HQuotientElement& o) const {
  if (den_ == o.den_) return HQuotientElement(num_ + o.num_, den_);
  return HQuotientElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

HQuotientElement HQuotientElement::inverse() const {
  if (num_.is_zero()) throw ZeroInput("inverse of zero");
  if (!num_.is_homogeneous()) throw InvalidArgument("only homogeneous elements are invertible here");
  return HQuotientElement(den_, num_);
}

HQuotientElement HQuotientElement::normalized() const {
  const RingPtr& ring = den_.ring();
  if (num_.is_zero()) return HQuotientElement(GradedElement(ring), GradedElement::constant(ring, 1));
  if (!den_.is_monomial()) {
    mpq_class c = den_.leading_coeff();
    if (ring->base() == BaseDomain::Integers) c = c < 0 ? -1 : 1;
    return HQuotientElement(num_.scaled(1 / c), den_.scaled(1 / c));
  }
  const auto& [de, dc] = den_.terms().front();
  GradedElement::TermList laurent;
  for (const auto& [e, c] : num_.terms()) laurent.emplace_back(e - de, c / dc);

  Exponent sigma;
  for (const auto& g : ring->monoid().generators()) sigma = sigma + g;
  Exponent shift;
  for (;;) {
    bool ok = std::all_of(laurent.begin(), laurent.end(),
                          [&](const auto& t) { return ring->in_monoid(t.first + shift); });
    if (ok) break;
    if (sigma.is_zero()) throw InvalidArgument("exponent outside the monoid group");
    shift = shift + sigma;
  }
  mpz_class scale = 1;
  if (ring->base() == BaseDomain::Integers) {
    for (const auto& t : laurent) {
      mpz_class d = t.second.get_den();
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
    }
  }
  GradedElement::TermList nt;
  for (const auto& [e, c] : laurent) nt.emplace_back(e + shift, c * scale);
  return HQuotientElement(GradedElement::from_terms(ring, std::move(nt)),
                          GradedElement::monomial(ring, shift, scale));
}

std::string HQuotientElement::to_string() const {
  std::string d = den_.to_string();
  if (d == "1") return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace gradstar
