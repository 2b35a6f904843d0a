#include "gradstar/harness.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <thread>
#include <unordered_map>

#include "gradstar/content.hpp"
#include "gradstar/nagata.hpp"
#include "gradstar/parse.hpp"
#include "gradstar/registry.hpp"
#include "gradstar/sample.hpp"

namespace gradstar {

namespace {

constexpr int kSampleDegree = 3;

using Json = nlohmann::json;

bool closure_kind(const StarOp& s) {
  return s.kind() == StarKind::V || s.kind() == StarKind::T || s.kind() == StarKind::WAlias;
}

std::string star_label(const std::optional<StarOp>& s) { return s ? s->name() : "none"; }

// Evaluates fn(i) for i < n on `workers` threads, worker w taking i ≡ w.
// Results land in index order, so the output does not depend on timing.
std::vector<std::vector<EvidenceItem>> fan_out(std::size_t n, unsigned workers,
                                               const std::function<std::vector<EvidenceItem>(std::size_t)>& fn) {
  std::vector<std::vector<EvidenceItem>> out(n);
  std::vector<std::exception_ptr> errors(n);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Json gauss_certificate(const PolyX& f, const PolyX& g, const std::optional<StarOp>& s, const GaussResult& r) {
  Json c = r.to_json();
  c["schema"] = kCertificateSchema;
  c["kind"] = "graded-gauss";
  c["ring"] = f.ring()->name();
  c["star"] = star_label(s);
  c["f"] = f.to_string();
  c["g"] = g.to_string();
  c.erase("equal");
  return c;
}

PolyX monomial_content_poly(Sampler& s) {
  const RingPtr& r = s.ring();
  std::vector<GradedElement> cs;
  long deg = s.uniform(0, 2);
  for (long k = 0; k <= deg; ++k) cs.push_back(GradedElement::monomial(r, s.exponent(2), s.coeff()));
  return PolyX(r, std::move(cs));
}

struct PolyPair {
  PolyX f, g;
};

std::vector<PolyPair> sample_pairs(Sampler& s, int n) {
  std::vector<PolyPair> out;
  for (int i = 0; i < n; ++i) {
    PolyX f = s.poly(kSampleDegree);
    PolyX g = s.poly(kSampleDegree);
    out.push_back({std::move(f), std::move(g)});
  }
  return out;
}

StarOp default_or(const std::optional<StarOp>& s, StarOp fallback) { return s ? *s : fallback; }

void require_none_or_d(const std::string& suite, const std::optional<StarOp>& s) {
  if (s && s->kind() != StarKind::D) throw Unsupported(suite + " takes no closure (got " + s->name() + ")");
}

void require_closure(const std::string& suite, const StarOp& s) {
  if (!closure_kind(s)) throw Unsupported(suite + " needs v, t or w (got " + s.name() + ")");
}

// ---------------------------------------------------------------------------
// Suites. Each returns the per-sample items and fills the summary.


std::vector<std::vector<EvidenceItem>> suite_dm(Sampler& smp, int budget, unsigned workers, Json&) {
  struct In {
    PolyX f, g, mono;
  };
  std::vector<In> in;
  for (int i = 0; i < budget; ++i) {
    PolyX f = smp.poly(kSampleDegree);
    PolyX g = smp.poly(kSampleDegree);
    PolyX mono = monomial_content_poly(smp);
    in.push_back({std::move(f), std::move(g), std::move(mono)});
  }
  auto d = StarOp::d(smp.ring());
  return fan_out(in.size(), workers, [&](std::size_t i) {
    std::vector<EvidenceItem> items;
    const auto& [f, g, mono] = in[i];
    auto run = [&](const std::string& check, const PolyX& a, const PolyX& b, bool expect_one) {
      EvidenceItem it{check, 0, true, {{"f", a.to_string()}, {"g", b.to_string()}}};
      try {
        int m = dm_exponent(a, b);
        it.certificate["m"] = m;
        it.pass = !expect_one || m == 1;
      } catch (const CapExceeded& e) {
        it.pass = false;
        it.exhausted = true;
        it.certificate["trace"] = e.trace();
      }
      items.push_back(std::move(it));
    };
    const bool invertible = is_star_invertible(content_A(f), d);
    run(invertible ? "dm-invertible" : "dm", f, g, invertible);
    run("dm-monomial", mono, g, true);
    return items;
  });
}

std::vector<std::vector<EvidenceItem>> suite_gauss(Sampler& smp, int budget, unsigned workers,
                                                   const std::optional<StarOp>& s, const std::string& check,
                                                   bool anchor) {
  const RingPtr& r = smp.ring();
  std::vector<PolyPair> in;
  if (anchor && budget > 0) {
    const auto& gens = r->monoid().generators();
    auto z1 = GradedElement::monomial(r, gens[0]);
    auto z2 = GradedElement::monomial(r, gens.size() > 1 ? gens[1] : gens[0] + gens[0]);
    in.push_back({PolyX(r, {z1, z2}), PolyX(r, {z2, z1})});
  }
  auto rest = sample_pairs(smp, budget - static_cast<int>(in.size()));
  in.insert(in.end(), rest.begin(), rest.end());
  return fan_out(in.size(), workers, [&](std::size_t i) {
    const auto& [f, g] = in[i];
    GaussResult res = gauss_check(f, g, s);
    Json c = res.equal ? Json{{"f", f.to_string()}, {"g", g.to_string()}} : gauss_certificate(f, g, s, res);
    return std::vector<EvidenceItem>{{check, 0, res.equal, c}};
  });
}

std::vector<std::vector<EvidenceItem>> suite_nsat(Sampler& smp, int budget, unsigned workers, const StarOp& s) {
  auto in = sample_pairs(smp, budget);
  return fan_out(in.size(), workers, [&](std::size_t i) {
    return n_saturation_check({{in[i].f, in[i].g}}, s).items;
  });
}

std::vector<std::vector<EvidenceItem>> suite_nkp(Sampler& smp, int budget, unsigned workers, const StarOp& s) {
  StarOp tilde = tilde_of(s);
  std::vector<FracIdeal> in;
  for (int i = 0; i < budget; ++i) in.push_back(smp.ideal(2, 2));
  const auto catalog = default_catalog(smp.ring(), 2);
  return fan_out(in.size(), workers, [&](std::size_t i) {
    FracIdeal c = star_apply(tilde, in[i]);
    FracIdeal a = star_a_bounded(tilde, in[i], catalog);
    bool ok = ideal_equals(c, a);
    Json cert{{"ideal", in[i].to_string()}, {"closure", c.to_string()}, {"bounded_a", a.to_string()},
              {"tilde", tilde.name()}, {"catalog", catalog.size()}};
    return std::vector<EvidenceItem>{{"nkp1-9", 0, ok, cert}};
  });
}

std::vector<std::vector<EvidenceItem>> suite_kron(Sampler& smp, int budget, unsigned workers, const StarOp& s) {
  const RingPtr& r = smp.ring();
  const KrMode mode = closure_kind(s) && r->has_flag("pvmd") ? KrMode::Eab : KrMode::General;
  const int bound = 1;
  struct In {
    PolyX h, p1, p2, k, f, g;
  };
  std::vector<In> in;
  for (int i = 0; i < budget; ++i) {
    In x;
    x.h = smp.poly(1);
    x.p1 = smp.poly(1);
    x.p2 = smp.poly(1);
    x.k = smp.poly(1);
    x.f = smp.poly(1);
    x.g = smp.poly(1);
    in.push_back(std::move(x));
  }
  auto outcome = [](EvidenceItem& it, const KrResult& res) {
    it.certificate["result"] = res.to_json();
    it.pass = res.verdict == Verdict::Yes;
    it.exhausted = res.verdict == Verdict::NotFoundAtBound;
  };
  return fan_out(in.size(), workers, [&](std::size_t i) {
    const In& x = in[i];
    std::vector<EvidenceItem> items;
    const PolyX f1 = poly_mul(x.h, x.p1), f2 = poly_mul(x.h, x.p2);
    const Json base{{"h", x.h.to_string()}, {"f1", f1.to_string()}, {"f2", f2.to_string()}};

    KrResult a = kr_member(f1, x.h, s, mode, bound);
    KrResult b = kr_member(f2, x.h, s, mode, bound);
    EvidenceItem bez{"bezout", 0, false, base};
    if (a.fraction && b.fraction) {
      BezoutResult br = bezout_combine(*a.fraction, *b.fraction);
      bez.pass = br.valid;
      bez.certificate["combined"] = br.to_json();
    } else {
      bez.exhausted = a.verdict == Verdict::NotFoundAtBound || b.verdict == Verdict::NotFoundAtBound;
      bez.certificate["alpha"] = a.to_json();
      bez.certificate["beta"] = b.to_json();
    }
    items.push_back(std::move(bez));

    const PolyX sum = f1 + f2;
    EvidenceItem add{"sum", 0, true, base};
    if (!sum.is_zero()) outcome(add, kr_member(sum, x.h, s, mode, bound));
    items.push_back(std::move(add));

    EvidenceItem mul{"product", 0, true, base};
    outcome(mul, kr_member(poly_mul(f1, f2), poly_mul(x.h, x.h), s, mode, bound));
    items.push_back(std::move(mul));

    EvidenceItem rep{"repr", 0, true, base};
    rep.certificate["k"] = x.k.to_string();
    outcome(rep, kr_member(poly_mul(f1, x.k), poly_mul(x.h, x.k), s, mode, bound));
    items.push_back(std::move(rep));

    KrResult plain = kr_member(x.f, x.g, s, mode, bound);
    KrResult scaled = kr_member(poly_mul(x.f, x.k), poly_mul(x.g, x.k), s, mode, bound);
    EvidenceItem rv{"repr-verdict", 0, plain.verdict == scaled.verdict,
                    {{"f", x.f.to_string()}, {"g", x.g.to_string()}, {"k", x.k.to_string()},
                     {"verdict", verdict_name(plain.verdict)}, {"scaled_verdict", verdict_name(scaled.verdict)}}};
    rv.exhausted = !rv.pass && (plain.verdict == Verdict::NotFoundAtBound || scaled.verdict == Verdict::NotFoundAtBound);
    items.push_back(std::move(rv));
    return items;
  });
}

std::vector<std::vector<EvidenceItem>> suite_pic(Sampler& smp, int budget, unsigned workers, const StarOp& s) {
  std::vector<std::vector<PolyX>> in;
  for (int i = 0; i < budget; ++i) {
    std::vector<PolyX> fs;
    for (long k = smp.uniform(1, 3); k > 0; --k) fs.push_back(smp.poly(2));
    in.push_back(std::move(fs));
  }
  return fan_out(in.size(), workers, [&](std::size_t i) {
    const auto& fs = in[i];
    FracIdeal sum = content_A(fs[0]);
    Json list = Json::array();
    for (const auto& f : fs) list.push_back(f.to_string());
    for (std::size_t k = 1; k < fs.size(); ++k) sum = ideal_sum(sum, content_A(fs[k]));
    PolyX p = pic_generator(fs);
    std::vector<EvidenceItem> items;
    items.push_back({"pic-additivity", 0, ideal_equals(content_A(p), sum),
                     {{"polys", list}, {"generator", p.to_string()}}});
    for (auto& it : corC_evidence(p, s, std::max(6, p.degree())).items) items.push_back(std::move(it));
    return items;
  });
}

std::vector<std::vector<EvidenceItem>> suite_krull(Sampler& smp, int budget, unsigned workers, const StarOp& s) {
  std::vector<FracIdeal> in;
  for (int i = 0; i < budget; ++i) in.push_back(smp.ideal(static_cast<int>(smp.uniform(1, 3)), 2));
  return fan_out(in.size(), workers, [&](std::size_t i) {
    const FracIdeal& I = in[i];
    std::vector<PolyX> fs;
    for (const auto& g : I.generators()) fs.push_back(PolyX::constant(g));
    PolyX f = pic_generator(fs);
    std::vector<EvidenceItem> items;
    items.push_back({"krull-content", 0, ideal_equals(content_A(f), I),
                     {{"ideal", I.to_string()}, {"generator", f.to_string()}}});
    for (auto& it : corC_evidence(f, s, std::max(6, f.degree())).items) items.push_back(std::move(it));
    return items;
  });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"dm", "gauss-cp", "gauss-v", "nkp1-9", "n-sat", "kron-bezout", "pic", "krull-pid"};
}

Json SuiteReport::to_json() const {
  Json certs = Json::array();
  std::size_t pass = 0;
  for (const auto& it : evidence.items) {
    if (it.pass && !it.exhausted) {
      ++pass;
      continue;
    }
    certs.push_back({{"check", it.check}, {"sample", it.sample}, {"verdict", it.verdict()},
                     {"certificate", it.certificate}});
  }
  return {{"schema", kReportSchema},
          {"kind", "suite"},
          {"suite", suite},
          {"ring", ring},
          {"star", star},
          {"seed", seed},
          {"budget", budget},
          {"samples", samples},
          {"checks", evidence.items.size()},
          {"pass", pass},
          {"fail", evidence.violations()},
          {"exhausted", evidence.exhausted()},
          {"summary", summary},
          {"certificates", certs}};
}

SuiteReport run_suite(const std::string& name, const RingPtr& ring, const std::optional<StarOp>& star,
                      std::uint64_t seed, int budget, unsigned workers) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw InvalidArgument("unknown suite '" + name + "'");
  if (!ring) throw InvalidArgument("suite without a ring");
  if (budget < 0) throw InvalidArgument("negative budget");
  if (star && star->ring() != ring) throw RingMismatch("star belongs to a different ring");

  SuiteReport rep;
  rep.suite = name;
  rep.ring = ring->name();
  rep.seed = seed;
  rep.budget = budget;
  rep.samples = budget;
  Sampler smp(ring, seed);
  std::vector<std::vector<EvidenceItem>> per;
  std::optional<StarOp> used;

  if (name == "dm") {
    require_none_or_d(name, star);
    per = suite_dm(smp, budget, workers, rep.summary);
  } else if (name == "gauss-cp") {
    require_none_or_d(name, star);
    per = suite_gauss(smp, budget, workers, std::nullopt, "gauss-cp", true);
  } else if (name == "gauss-v") {
    used = default_or(star, StarOp::v(ring));
    require_closure(name, *used);
    if (!ring->has_flag("integrally_closed")) throw Unsupported("gauss-v needs an integrally closed ring");
    per = suite_gauss(smp, budget, workers, used, "gauss-v", false);
  } else if (name == "nkp1-9") {
    used = default_or(star, StarOp::v(ring));
    if (used->kind() == StarKind::StarA) throw Unsupported("nkp1-9 needs d, v, t or w");
    per = suite_nkp(smp, budget, workers, *used);
  } else if (name == "n-sat") {
    used = default_or(star, StarOp::d(ring));
    per = suite_nsat(smp, budget, workers, *used);
  } else if (name == "kron-bezout") {
    used = default_or(star, StarOp::v(ring));
    per = suite_kron(smp, budget, workers, *used);
  } else if (name == "pic") {
    used = default_or(star, StarOp::v(ring));
    per = suite_pic(smp, budget, workers, *used);
  } else {  // krull-pid
    used = default_or(star, StarOp::v(ring));
    require_closure(name, *used);
    if (!ring->has_flag("graded_krull")) throw Unsupported("krull-pid needs a ring flagged graded_krull");
    per = suite_krull(smp, budget, workers, *used);
  }
  rep.star = star_label(used);

  for (std::size_t i = 0; i < per.size(); ++i) {
    for (auto& it : per[i]) {
      it.sample = static_cast<int>(i);
      rep.evidence.items.push_back(std::move(it));
    }
  }

  Json checks = Json::object();
  for (const auto& it : rep.evidence.items) {
    auto& c = checks[it.check];
    if (c.is_null()) c = {{"pass", 0}, {"fail", 0}, {"exhausted", 0}};
    c[it.verdict()] = c[it.verdict()].get<int>() + 1;
  }
  rep.summary["checks"] = checks;
  if (name == "dm") {
    std::map<int, int> hist;
    int max_m = 0;
    for (const auto& it : rep.evidence.items) {
      if (!it.certificate.contains("m") || it.check == "dm-monomial") continue;
      int m = it.certificate["m"].get<int>();
      ++hist[m];
      max_m = std::max(max_m, m);
    }
    Json h = Json::object();
    for (auto [m, n] : hist) h[std::to_string(m)] = n;
    rep.summary["max_m"] = max_m;
    rep.summary["histogram"] = h;
  }
  if (name == "gauss-cp" && rep.fails() > 0) {
    for (const auto& it : rep.evidence.items)
      if (!it.pass) {
        rep.summary["first_counterexample"] = {{"f", it.certificate["f"]}, {"g", it.certificate["g"]}};
        break;
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Falsifiers

namespace {

struct ValueKey {
  std::size_t nterms;
  std::vector<std::size_t> exps;
  std::vector<long> abs;
  std::vector<int> rel;  // 0: same sign as the first term
  int sign;              // 0: first term positive
  auto tie() const { return std::tie(nterms, exps, abs, rel, sign); }
  bool operator<(const ValueKey& o) const { return tie() < o.tie(); }
};

std::vector<Exponent> box_support(const RingPtr& ring) {
  std::vector<Exponent> out{Exponent{}};
  for (const auto& g : ring->monoid().generators()) {
    bool ok = true;
    for (int i = 0; i < ring->dim(); ++i) ok = ok && g.v[i] >= 0;
    if (ok && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

void combos(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combos(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::string value_id(const GradedElement& a) { return a.is_zero() ? "0" : a.to_string(); }

// Box polynomials as coefficient index tuples, ordered by X-degree and then
// coefficient-wise from the constant term.
struct Box {
  RingPtr ring;
  std::vector<GradedElement> vals;
  std::unordered_map<std::string, std::size_t> val_index;
  std::vector<std::vector<std::uint16_t>> polys;
  std::map<std::vector<std::uint16_t>, std::size_t> poly_index;

  Box(const RingPtr& r, const Bounds& b) : ring(r), vals(box_values(r, b)) {
    for (std::size_t i = 0; i < vals.size(); ++i) val_index[value_id(vals[i])] = i;
    const auto V = static_cast<std::uint16_t>(vals.size());
    for (int d = 0; d <= b.max_degree; ++d) {
      std::vector<std::uint16_t> cur(static_cast<std::size_t>(d + 1), 0);
      cur.back() = 1;
      while (true) {
        poly_index[cur] = polys.size();
        polys.push_back(cur);
        // Odometer with the constant term most significant.
        int pos = d;
        while (pos >= 0) {
          auto& c = cur[static_cast<std::size_t>(pos)];
          if (++c < V) break;
          c = pos == d ? 1 : 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }

  PolyX poly(std::size_t i) const {
    std::vector<GradedElement> cs;
    for (auto v : polys[i]) cs.push_back(vals[v]);
    return PolyX(ring, std::move(cs));
  }

  std::optional<std::size_t> index_of_value(const GradedElement& a) const {
    auto it = val_index.find(value_id(a));
    if (it == val_index.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> index_of_poly(std::vector<std::uint16_t> c) const {
    while (!c.empty() && c.back() == 0) c.pop_back();
    auto it = poly_index.find(c);
    if (it == poly_index.end()) return std::nullopt;
    return it->second;
  }
};

// Maps on box polynomials that preserve the Gauss identities when applied to
// both members of a pair: X -> -X, reversal of the coefficient list, sign
// changes of the coordinates, and on rank-one groups with support {0, e}
// the swap a + b·z^e -> b + a·z^e (inversion z -> 1/z times the unit z^e).
// Each poly is additionally replaced by the smaller of f and -f.
struct Symmetries {
  std::vector<std::vector<std::size_t>> images;  // images[k][poly]
  std::vector<std::size_t> sign_rep;

  Symmetries(const Box& box, bool ring_maps) {
    const RingPtr& r = box.ring;
    const std::size_t nv = box.vals.size();
    auto value_map = [&](const std::function<GradedElement(const GradedElement&)>& fn)
        -> std::optional<std::vector<std::uint16_t>> {
      std::vector<std::uint16_t> out(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        auto j = box.index_of_value(fn(box.vals[v]));
        if (!j) return std::nullopt;
        out[v] = static_cast<std::uint16_t>(*j);
      }
      return out;
    };
    using VMap = std::vector<std::uint16_t>;
    std::vector<VMap> vmaps;
    VMap ident(nv);
    for (std::size_t v = 0; v < nv; ++v) ident[v] = static_cast<std::uint16_t>(v);
    vmaps.push_back(ident);
    auto neg = *value_map([](const GradedElement& a) { return -a; });
    if (ring_maps) {
      for (int i = 0; i < r->dim(); ++i) {
        auto m = value_map([&](const GradedElement& a) {
          GradedElement::TermList ts;
          for (const auto& [e, c] : a.terms()) ts.emplace_back(e, (e.v[i] % 2 != 0) ? mpq_class(-c) : c);
          return GradedElement::from_terms(r, std::move(ts));
        });
        if (!m) continue;
        const std::size_t n = vmaps.size();
        for (std::size_t k = 0; k < n; ++k) {
          VMap comp(nv);
          for (std::size_t v = 0; v < nv; ++v) comp[v] = (*m)[vmaps[k][v]];
          vmaps.push_back(comp);
        }
      }
      auto support = box_support(r);
      if (r->monoid().is_group() && r->dim() == 1 && support.size() == 2) {
        const Exponent e = support[1];
        auto m = value_map([&](const GradedElement& a) {
          GradedElement::TermList ts;
          for (const auto& [x, c] : a.terms()) ts.emplace_back(x.is_zero() ? e : Exponent{}, c);
          return GradedElement::from_terms(r, std::move(ts));
        });
        if (m) {
          const std::size_t n = vmaps.size();
          for (std::size_t k = 0; k < n; ++k) {
            VMap comp(nv);
            for (std::size_t v = 0; v < nv; ++v) comp[v] = (*m)[vmaps[k][v]];
            vmaps.push_back(comp);
          }
        }
      }
    }
    const std::size_t np = box.polys.size();
    sign_rep.resize(np);
    for (std::size_t p = 0; p < np; ++p) {
      auto c = box.polys[p];
      for (auto& v : c) v = neg[v];
      sign_rep[p] = std::min(p, *box.index_of_poly(c));
    }
    for (const auto& vm : vmaps) {
      for (int xneg = 0; xneg < 2; ++xneg) {
        for (int rev = 0; rev < 2; ++rev) {
          std::vector<std::size_t> img(np);
          bool ok = true;
          for (std::size_t p = 0; p < np && ok; ++p) {
            auto c = box.polys[p];
            for (std::size_t k = 0; k < c.size(); ++k) {
              c[k] = vm[c[k]];
              if (xneg && k % 2 == 1) c[k] = neg[c[k]];
            }
            if (rev) {
              std::reverse(c.begin(), c.end());
              while (!c.empty() && c.back() == 0) c.pop_back();
            }
            auto j = box.index_of_poly(c);
            if (!j) ok = false;
            else img[p] = sign_rep[*j];
          }
          if (ok) images.push_back(std::move(img));
        }
      }
    }
  }

  std::uint64_t canonical(std::size_t f, std::size_t g) const {
    std::uint64_t best = ~0ull;
    for (const auto& img : images) {
      std::uint64_t a = img[f], b = img[g];
      if (a > b) std::swap(a, b);
      best = std::min(best, (a << 32) | b);
    }
    return best;
  }
};

// c(f) is R or generated by one of the coefficients; the classical identity
// then holds for every partner.
bool classical_content_principal(const PolyX& f) {
  FracIdeal c = classical_content(f);
  if (ideal_is_unit(c)) return true;
  for (const auto& a : f.coeffs()) {
    if (a.is_zero()) continue;
    FracIdeal p(f.ring(), {a});
    if (ideal_contains(p, c)) return true;
  }
  return false;
}

Json classical_certificate(const PolyX& f, const PolyX& g) {
  FracIdeal lhs = ideal_product(classical_content(f), classical_content(g));
  FracIdeal rhs = classical_content(poly_mul(f, g));
  auto w = first_non_member(lhs, rhs);
  if (!w) w = first_non_member(rhs, lhs);
  return {{"schema", kCertificateSchema}, {"kind", "classical-gauss"}, {"ring", f.ring()->name()},
          {"star", "none"}, {"f", f.to_string()}, {"g", g.to_string()},
          {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()},
          {"witness", w ? Json(w->normalized().to_string()) : Json(nullptr)}};
}

// Pairs f < g in box order, then (f, f). `holds` decides one pair; pairs
// sharing a canonical form are decided once.
template <class Holds, class Skip>
std::optional<std::pair<std::size_t, std::size_t>> search_pairs(const Box& box, const Symmetries& sym, Holds holds,
                                                                Skip skip, FalsifyResult& res) {
  std::unordered_map<std::uint64_t, bool> memo;
  auto decide = [&](std::size_t f, std::size_t g) {
    ++res.candidates;
    if (skip(f) || skip(g)) {
      ++res.pruned;
      return true;
    }
    const auto key = sym.canonical(f, g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ++res.evaluated;
    bool ok = holds(f, g);
    memo.emplace(key, ok);
    return ok;
  };
  const std::size_t n = box.polys.size();
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = f + 1; g < n; ++g)
      if (!decide(f, g)) return std::make_pair(f, g);
  for (std::size_t f = 0; f < n; ++f)
    if (!decide(f, f)) return std::make_pair(f, f);
  return std::nullopt;
}

std::vector<std::size_t> nonzero_polys(const Box& box) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < box.polys.size(); ++i)
    if (!box.polys[i].empty()) out.push_back(i);
  return out;
}

}  // namespace

Json Bounds::to_json() const {
  return {{"max_degree", max_degree}, {"max_terms", max_terms}, {"max_coef", max_coef}, {"prune", prune}};
}

std::vector<GradedElement> box_values(const RingPtr& ring, const Bounds& b) {
  if (b.max_degree < 0 || b.max_terms < 1 || b.max_coef < 1) throw InvalidArgument("empty search box");
  const auto support = box_support(ring);
  std::vector<std::pair<ValueKey, GradedElement>> keyed;
  for (std::size_t k = 1; k <= std::min<std::size_t>(static_cast<std::size_t>(b.max_terms), support.size()); ++k) {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> cur;
    combos(support.size(), k, 0, cur, sets);
    std::vector<long> abs(k, 1);
    for (const auto& set : sets) {
      std::fill(abs.begin(), abs.end(), 1);
      while (true) {
        for (unsigned rel = 0; rel < (1u << (k - 1)); ++rel) {
          for (int sign = 0; sign < 2; ++sign) {
            GradedElement::TermList ts;
            std::vector<int> relv;
            for (std::size_t t = 0; t < k; ++t) {
              int flip = t == 0 ? 0 : static_cast<int>((rel >> (k - 1 - t)) & 1u);
              if (t > 0) relv.push_back(flip);
              long c = abs[t] * ((flip ^ sign) ? -1 : 1);
              ts.emplace_back(support[set[t]], mpq_class(c));
            }
            keyed.push_back({ValueKey{k, set, abs, relv, sign}, GradedElement::from_terms(ring, std::move(ts))});
          }
        }
        std::size_t pos = k;
        while (pos > 0) {
          if (++abs[pos - 1] <= b.max_coef) break;
          abs[pos - 1] = 1;
          --pos;
        }
        if (pos == 0) break;
      }
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<GradedElement> out{GradedElement(ring)};
  for (auto& [k, v] : keyed) out.push_back(std::move(v));
  return out;
}

std::vector<std::string> identity_names() {
  return {"classical-gauss", "graded-gauss", "square-identity", "na-vs-classical-nagata"};
}

Json FalsifyResult::to_json() const {
  return {{"schema", kReportSchema}, {"kind", "falsify"},  {"identity", identity},
          {"ring", ring},            {"star", star},       {"bounds", bounds.to_json()},
          {"status", status()},      {"certificate", certificate}, {"candidates", candidates},
          {"pruned", pruned},        {"evaluated", evaluated}};
}

FalsifyResult falsify(const std::string& identity, const RingPtr& ring, const std::optional<StarOp>& star,
                      const Bounds& bounds) {
  const auto ids = identity_names();
  if (std::find(ids.begin(), ids.end(), identity) == ids.end())
    throw InvalidArgument("unknown identity '" + identity + "'");
  if (star && star->ring() != ring) throw RingMismatch("star belongs to a different ring");
  FalsifyResult res;
  res.identity = identity;
  res.ring = ring->name();
  res.bounds = bounds;
  Box box(ring, bounds);

  if (identity == "classical-gauss") {
    require_none_or_d(identity, star);
    res.star = "none";
    Symmetries sym(box, true);
    std::vector<signed char> principal(box.polys.size(), -1);
    auto skip = [&](std::size_t i) {
      if (!bounds.prune) return false;
      auto& p = principal[i];
      if (p < 0) p = classical_content_principal(box.poly(i)) ? 1 : 0;
      return p == 1;
    };
    auto holds = [&](std::size_t f, std::size_t g) {
      PolyX pf = box.poly(f), pg = box.poly(g);
      return ideal_equals(ideal_product(classical_content(pf), classical_content(pg)),
                          classical_content(poly_mul(pf, pg)));
    };
    if (auto hit = search_pairs(box, sym, holds, skip, res)) {
      res.found = true;
      res.certificate = classical_certificate(box.poly(hit->first), box.poly(hit->second));
    }
    return res;
  }

  if (identity == "graded-gauss") {
    std::optional<StarOp> s;
    if (star && star->kind() != StarKind::D) s = star;
    res.star = star_label(s);
    Symmetries sym(box, !s || closure_kind(*s));
    std::vector<std::optional<FracIdeal>> contents(box.polys.size());
    auto content = [&](std::size_t i) -> const FracIdeal& {
      if (!contents[i]) contents[i] = compact(content_A(box.poly(i)));
      return *contents[i];
    };
    const auto d = StarOp::d(ring);
    std::vector<signed char> invertible(box.polys.size(), -1);
    auto skip = [&](std::size_t i) {
      if (!bounds.prune) return false;
      auto& p = invertible[i];
      if (p < 0) p = is_star_invertible(content(i), d) ? 1 : 0;
      return p == 1;
    };
    auto holds = [&](std::size_t f, std::size_t g) {
      FracIdeal lhs = compact(ideal_product(content(f), content(g)));
      FracIdeal rhs = compact(content_A(poly_mul(box.poly(f), box.poly(g))));
      if (s) {
        lhs = star_apply(*s, lhs);
        rhs = star_apply(*s, rhs);
      }
      return ideal_equals(lhs, rhs);
    };
    if (auto hit = search_pairs(box, sym, holds, skip, res)) {
      PolyX f = box.poly(hit->first), g = box.poly(hit->second);
      res.found = true;
      res.certificate = gauss_certificate(f, g, s, gauss_check(f, g, s));
    }
    return res;
  }

  if (identity == "square-identity") {
    require_none_or_d(identity, star);
    res.star = "none";
    std::vector<GradedElement> hs;
    for (const auto& v : box.vals)
      if (!v.is_zero() && v.is_homogeneous()) hs.push_back(v);
    auto check = [&](std::size_t i, std::size_t j) {
      ++res.candidates;
      ++res.evaluated;
      if (square_identity_check(hs[i], hs[j])) return false;
      const auto& a = hs[i];
      const auto& b = hs[j];
      FracIdeal ab(ring, {a, b});
      FracIdeal lhs = compact(ideal_product(ab, ab));
      FracIdeal rhs = compact(FracIdeal(ring, {a * a, b * b}));
      auto w = first_non_member(lhs, rhs);
      res.found = true;
      res.certificate = {{"schema", kCertificateSchema}, {"kind", "square-identity"}, {"ring", ring->name()},
                         {"star", "none"}, {"a", a.to_string()}, {"b", b.to_string()},
                         {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()},
                         {"witness", w ? Json(w->normalized().to_string()) : Json(nullptr)}};
      return true;
    };
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = i + 1; j < hs.size(); ++j)
        if (check(i, j)) return res;
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (check(i, i)) return res;
    return res;
  }

  // na-vs-classical-nagata
  StarOp s = default_or(star, StarOp::d(ring));
  res.star = s.name();
  for (std::size_t i : nonzero_polys(box)) {
    ++res.candidates;
    ++res.evaluated;
    PolyX f = box.poly(i);
    if (!n_membership(f, s)) continue;
    FracIdeal c = classical_content(f);
    if (ideal_is_unit(c)) continue;
    res.found = true;
    res.certificate = {{"schema", kCertificateSchema}, {"kind", "na-vs-classical-nagata"}, {"ring", ring->name()},
                       {"star", s.name()}, {"f", f.to_string()},
                       {"content_A", compact(content_A(f)).to_string()},
                       {"content_A_star", star_apply(s, content_A(f)).to_string()},
                       {"classical_content", c.to_string()}};
    break;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Certificate replay

std::optional<std::string> certificate_problem(const Json& cert) {
  try {
    if (cert.value("schema", "") != kCertificateSchema) return "unknown schema";
    const std::string kind = cert.at("kind").get<std::string>();
    RingPtr ring = ring_named(cert.at("ring").get<std::string>());
    std::optional<StarOp> s;
    const std::string star = cert.value("star", "none");
    if (star != "none") s = StarOp::parse(star, ring);

    auto separated = [&](const FracIdeal& lhs, const FracIdeal& rhs) -> std::optional<std::string> {
      if (!cert.contains("witness") || cert["witness"].is_null()) return "no witness";
      HQuotientElement w = parse_quotient(cert["witness"].get<std::string>(), ring);
      bool in_l = ideal_member(w, lhs), in_r = ideal_member(w, rhs);
      if (in_l == in_r) return "witness does not separate the two sides";
      if (!ideal_equals(lhs, parse_ideal(cert.at("lhs").get<std::string>(), ring))) return "lhs differs";
      if (!ideal_equals(rhs, parse_ideal(cert.at("rhs").get<std::string>(), ring))) return "rhs differs";
      return std::nullopt;
    };

    if (kind == "graded-gauss" || kind == "classical-gauss") {
      PolyX f = parse_poly(cert.at("f").get<std::string>(), ring);
      PolyX g = parse_poly(cert.at("g").get<std::string>(), ring);
      if (kind == "classical-gauss")
        return separated(ideal_product(classical_content(f), classical_content(g)),
                         classical_content(poly_mul(f, g)));
      GaussResult r = gauss_check(f, g, s);
      if (r.equal) return "the two sides agree";
      return separated(r.lhs, r.rhs);
    }
    if (kind == "square-identity") {
      GradedElement a = parse_element(cert.at("a").get<std::string>(), ring);
      GradedElement b = parse_element(cert.at("b").get<std::string>(), ring);
      if (square_identity_check(a, b)) return "the identity holds";
      FracIdeal ab(ring, {a, b});
      return separated(ideal_product(ab, ab), FracIdeal(ring, {a * a, b * b}));
    }
    if (kind == "na-vs-classical-nagata") {
      PolyX f = parse_poly(cert.at("f").get<std::string>(), ring);
      StarOp op = s ? *s : StarOp::d(ring);
      if (!n_membership(f, op)) return "f is not in N(" + op.name() + ")";
      if (ideal_is_unit(classical_content(f))) return "classical content is the unit ideal";
      return std::nullopt;
    }
    if (kind == "star-noninvertible") {
      FracIdeal I = parse_ideal(cert.at("ideal").get<std::string>(), ring);
      StarOp op = s ? *s : StarOp::d(ring);
      if (is_star_invertible(I, op)) return "the ideal is invertible";
      FracIdeal prod = star_apply(op, ideal_product(I, frac_inverse(I)));
      if (cert.contains("product_closure") &&
          !ideal_equals(prod, parse_ideal(cert["product_closure"].get<std::string>(), ring)))
        return "product closure differs";
      return std::nullopt;
    }
    return "unknown certificate kind '" + kind + "'";
  } catch (const std::exception& e) {
    return std::string("replay raised: ") + e.what();
  }
}

}  // namespace gradstar
