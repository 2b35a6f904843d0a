// gradstar: command-line front end.
//
// Exit status: 0 normal, 1 a counterexample certificate was produced,
// 2 bad input or unsupported request.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gradstar/content.hpp"
#include "gradstar/harness.hpp"
#include "gradstar/nagata.hpp"
#include "gradstar/parse.hpp"
#include "gradstar/registry.hpp"

using namespace gradstar;
using Json = nlohmann::json;

namespace {

struct Globals {
  std::string ring = "poly_q2";
  std::string star;
  std::uint64_t seed = 1;
  int budget = 100;
  unsigned workers = 1;
  bool json = false;
  bool trace = false;
};

Globals G;

RingPtr ring() { return ring_named(G.ring); }

std::optional<StarOp> star_or_none() {
  if (G.star.empty() || G.star == "none") return std::nullopt;
  return StarOp::parse(G.star, ring());
}

StarOp star_or(const std::string& fallback) { return StarOp::parse(G.star.empty() ? fallback : G.star, ring()); }

// Prints `j` as JSON under --json, else through `text`.
void emit(const Json& j, const std::function<void()>& text) {
  if (G.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    text();
  }
}

int cmd_ring_list() {
  auto names = RingRegistry::global().names();
  emit(names, [&] {
    for (const auto& n : names) std::cout << n << "\n";
  });
  return 0;
}

int cmd_ring_show(const std::string& name) {
  auto r = ring_named(name.empty() ? G.ring : name);
  Json j = spec_to_json(r->spec());
  std::vector<std::string> pres;
  for (const auto& p : r->toric_q()) pres.push_back(p.to_string(r->pvar_names()));
  j["presentation"] = pres;
  j["group"] = r->monoid().is_group();
  emit(j, [&] { std::cout << j.dump(2) << "\n"; });
  return 0;
}

int cmd_eval(const std::string& text) {
  auto r = ring();
  PolyX f = parse_poly(text, r);
  Json j{{"input", text}, {"ring", r->name()}, {"value", f.is_zero() ? "0" : f.to_string()},
         {"degree", f.degree()}};
  if (f.degree() <= 0) {
    GradedElement a = f.coeff(0);
    Json comps = Json::array();
    if (!a.is_zero())
      for (const auto& [g, c] : a.decompose()) comps.push_back({{"grade", g.to_string(r->grade_dim())}, {"part", c.to_string()}});
    j["homogeneous_components"] = comps;
  }
  emit(j, [&] { std::cout << j["value"].get<std::string>() << "\n"; });
  return 0;
}

int cmd_ideal(const std::string& op, const std::vector<std::string>& args) {
  auto r = ring();
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw InvalidArgument("ideal " + op + " takes " + std::to_string(n) + " argument(s)");
  };
  Json j{{"op", op}, {"ring", r->name()}};
  if (op == "gb") {
    need(1);
    FracIdeal I = parse_ideal(args[0], r);
    GroebnerBasis gb = groebner_basis(r, I.generators());
    j["variables"] = gb.variables;
    j["presentation"] = gb.presentation;
    j["basis"] = gb.basis;
    Json images = Json::array();
    for (const auto& x : gb.images) images.push_back(x.is_zero() ? "0" : x.to_string());
    j["images"] = images;
    j["stats"] = {{"pairs_considered", gb.stats.pairs_considered}, {"pairs_reduced", gb.stats.pairs_reduced}, {"zero_reductions", gb.stats.zero_reductions}};
  } else if (op == "member") {
    need(2);
    j["result"] = ideal_member(parse_quotient(args[0], r), parse_ideal(args[1], r));
  } else if (op == "equal") {
    need(2);
    j["result"] = ideal_equals(parse_ideal(args[0], r), parse_ideal(args[1], r));
  } else if (op == "inverse") {
    need(1);
    j["result"] = compact(frac_inverse(parse_ideal(args[0], r))).to_string();
  } else if (op == "compact") {
    need(1);
    j["result"] = compact(parse_ideal(args[0], r)).to_string();
  } else {
    need(2);
    FracIdeal I = parse_ideal(args[0], r), J = parse_ideal(args[1], r);
    FracIdeal out(r, {});
    if (op == "product") {
      out = ideal_product(I, J);
    } else if (op == "sum") {
      out = ideal_sum(I, J);
    } else if (op == "intersect") {
      out = ideal_intersection(I, J);
    } else if (op == "colon") {
      out = ideal_colon(I, J);
    } else {
      throw InvalidArgument("unknown ideal operation '" + op + "'");
    }
    j["result"] = compact(out).to_string();
  }
  emit(j, [&] {
    if (j.contains("basis")) {
      for (const auto& b : j["images"]) std::cout << b.get<std::string>() << "\n";
    } else {
      std::cout << j["result"].dump() << "\n";
    }
  });
  return 0;
}

int cmd_content(const std::string& text) {
  auto r = ring();
  PolyX f = parse_poly(text, r);
  Json j{{"f", f.to_string()},
         {"A", compact(content_A(f)).to_string()},
         {"classical", classical_content(f).to_string()}};
  Json cs = Json::array();
  for (const auto& c : f.coeffs()) cs.push_back(c.is_zero() ? Json(nullptr) : Json(content_C(c).to_string()));
  j["C"] = cs;
  if (auto s = star_or_none()) j["A_star"] = star_apply(*s, content_A(f)).to_string();
  emit(j, [&] {
    std::cout << "A_f = " << j["A"].get<std::string>() << "\n";
    if (j.contains("A_star")) std::cout << "A_f^" << G.star << " = " << j["A_star"].get<std::string>() << "\n";
    std::cout << "c(f) = " << j["classical"].get<std::string>() << "\n";
  });
  return 0;
}

int cmd_dm(const std::string& ft, const std::string& gt, int cap) {
  auto r = ring();
  PolyX f = parse_poly(ft, r), g = parse_poly(gt, r);
  Json j{{"f", f.to_string()}, {"g", g.to_string()}, {"cap", cap}};
  int code = 0;
  try {
    int m = dm_exponent(f, g, cap);
    j["m"] = m;
    if (G.trace && m > 1) {
      try {
        dm_exponent(f, g, m - 1);
      } catch (const CapExceeded& e) {
        j["trace"] = e.trace();
      }
    }
  } catch (const CapExceeded& e) {
    j["m"] = nullptr;
    j["status"] = "cap_exceeded";
    j["trace"] = e.trace();
    std::cerr << "warning: " << e.what() << "\n";
  }
  emit(j, [&] {
    std::cout << "m = " << (j["m"].is_null() ? std::string("not found") : j["m"].dump()) << "\n";
    if (G.trace && j.contains("trace"))
      for (const auto& t : j["trace"])
        std::cout << "  m=" << t["m"] << "  " << t["lhs"].get<std::string>() << "  vs  " << t["rhs"].get<std::string>() << "\n";
  });
  return code;
}

int cmd_gauss(const std::string& ft, const std::string& gt) {
  auto r = ring();
  PolyX f = parse_poly(ft, r), g = parse_poly(gt, r);
  auto s = star_or_none();
  GaussResult res = gauss_check(f, g, s);
  Json j = res.to_json();
  j["f"] = f.to_string();
  j["g"] = g.to_string();
  j["star"] = s ? s->name() : "none";
  emit(j, [&] {
    std::cout << (res.equal ? "equal" : "differ") << "\n  lhs " << j["lhs"].get<std::string>() << "\n  rhs "
              << j["rhs"].get<std::string>() << "\n";
    if (res.witness) std::cout << "  witness " << j["witness"].get<std::string>() << "\n";
  });
  return res.equal ? 0 : 1;
}

int cmd_star(const std::string& text) {
  auto r = ring();
  FracIdeal I = parse_ideal(text, r);
  StarOp s = star_or("v");
  FracIdeal c = star_apply(s, I);
  Json j{{"ideal", I.to_string()}, {"star", s.name()}, {"closure", c.to_string()}, {"closed", ideal_equals(c, I)}};
  emit(j, [&] { std::cout << c.to_string() << "\n"; });
  return 0;
}

int cmd_nagata(const std::string& op, const std::vector<std::string>& args) {
  auto r = ring();
  StarOp s = star_or("d");
  Json j{{"op", op}, {"star", s.name()}};
  if (op == "member") {
    if (args.size() != 1) throw InvalidArgument("nagata member takes one polynomial");
    PolyX f = parse_poly(args[0], r);
    j["f"] = f.to_string();
    j["A_star"] = star_apply(s, content_A(f)).to_string();
    j["result"] = n_membership(f, s);
  } else if (op == "invert") {
    if (args.size() != 1) throw InvalidArgument("nagata invert takes one ideal");
    FracIdeal I = parse_ideal(args[0], r);
    j["ideal"] = I.to_string();
    j["inverse"] = compact(frac_inverse(I)).to_string();
    j["result"] = is_star_invertible(I, s);
  } else if (op == "pic") {
    if (args.empty()) throw InvalidArgument("nagata pic takes polynomials");
    std::vector<PolyX> fs;
    for (const auto& a : args) fs.push_back(parse_poly(a, r));
    PolyX p = pic_generator(fs);
    j["result"] = p.to_string();
    j["content"] = compact(content_A(p)).to_string();
    if (G.trace) j["witnesses"] = corC_evidence(p, s, std::max(6, p.degree())).to_json();
  } else {
    throw InvalidArgument("unknown nagata operation '" + op + "'");
  }
  emit(j, [&] { std::cout << j["result"].dump() << "\n"; });
  return 0;
}

int cmd_kron(const std::string& op, const std::vector<std::string>& args, const std::string& mode, int bound) {
  auto r = ring();
  StarOp s = star_or("v");
  KrMode m = mode == "eab" ? KrMode::Eab : KrMode::General;
  if (mode != "eab" && mode != "general") throw InvalidArgument("mode must be eab or general");
  Json j;
  if (op == "member") {
    if (args.size() != 2) throw InvalidArgument("kron member takes f and g");
    KrResult res = kr_member(parse_poly(args[0], r), parse_poly(args[1], r), s, m, bound);
    j = res.to_json();
    emit(j, [&] { std::cout << verdict_name(res.verdict) << "\n"; });
    return 0;
  }
  if (op == "combine") {
    if (args.size() != 3) throw InvalidArgument("kron combine takes f1, f2 and h");
    PolyX h = parse_poly(args[2], r);
    KrResult a = kr_member(parse_poly(args[0], r), h, s, m, bound);
    KrResult b = kr_member(parse_poly(args[1], r), h, s, m, bound);
    if (!a.fraction || !b.fraction) throw InvalidArgument("both fractions must be members");
    BezoutResult br = bezout_combine(*a.fraction, *b.fraction);
    j = br.to_json();
    emit(j, [&] { std::cout << j.dump(2) << "\n"; });
    return 0;
  }
  throw InvalidArgument("unknown kron operation '" + op + "'");
}

int cmd_suite(const std::string& name) {
  SuiteReport rep = run_suite(name, ring(), star_or_none(), G.seed, G.budget, G.workers);
  Json j = rep.to_json();
  emit(j, [&] {
    std::cout << name << " on " << rep.ring << " (" << rep.star << "), seed " << rep.seed << ": " << j["pass"]
              << " pass, " << j["fail"] << " fail, " << j["exhausted"] << " exhausted\n";
    for (const auto& [check, c] : j["summary"]["checks"].items())
      std::cout << "  " << check << ": " << c["pass"] << "/" << c["fail"] << "/" << c["exhausted"] << "\n";
    if (j["summary"].contains("max_m")) std::cout << "  max m " << j["summary"]["max_m"] << "\n";
    if (G.trace)
      for (const auto& c : j["certificates"]) std::cout << "  " << c.dump() << "\n";
  });
  return rep.fails() > 0 ? 1 : 0;
}

int cmd_falsify(const std::string& identity, const Bounds& b) {
  FalsifyResult res = falsify(identity, ring(), star_or_none(), b);
  Json j = res.to_json();
  emit(j, [&] {
    std::cout << identity << " on " << res.ring << ": " << res.status() << " (" << res.candidates << " candidates, "
              << res.evaluated << " evaluated)\n";
    if (res.found) std::cout << res.certificate.dump(2) << "\n";
  });
  if (!res.found) std::cerr << "warning: search box exhausted without a counterexample\n";
  return res.found ? 1 : 0;
}

int cmd_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  Json j = Json::parse(in);
  if (j.contains("certificate") && j["certificate"].is_object()) j = j["certificate"];
  auto problem = certificate_problem(j);
  Json out{{"file", path}, {"valid", !problem}, {"problem", problem ? Json(*problem) : Json(nullptr)}};
  emit(out, [&] { std::cout << (problem ? "invalid: " + *problem : std::string("valid")) << "\n"; });
  return problem ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded content ideals, star operations and Nagata/Kronecker checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", G.ring, "ring name or ring file")->capture_default_str();
  app.add_option("--star", G.star, "d, v, t, w, star_a:N[:base] or none");
  app.add_option("--seed", G.seed, "sampler seed")->capture_default_str();
  app.add_option("--budget", G.budget, "samples per suite")->capture_default_str();
  app.add_option("--workers", G.workers, "threads for suites")->capture_default_str();
  app.add_flag("--json", G.json, "machine-readable output");
  app.add_flag("--trace", G.trace, "show intermediate steps");

  std::function<int()> action;
  std::string s1, s2;
  std::vector<std::string> rest;

  auto* ring_cmd = app.add_subcommand("ring", "list or show registered rings");
  ring_cmd->require_subcommand(1);
  ring_cmd->add_subcommand("list")->callback([&] { action = cmd_ring_list; });
  auto* show = ring_cmd->add_subcommand("show");
  show->add_option("name", s1);
  show->callback([&] { action = [&] { return cmd_ring_show(s1); }; });

  auto* eval = app.add_subcommand("eval", "parse and print an element or polynomial");
  eval->add_option("expr", s1)->required();
  eval->callback([&] { action = [&] { return cmd_eval(s1); }; });

  auto* ideal = app.add_subcommand("ideal", "gb|member|equal|inverse|compact|product|sum|intersect|colon");
  ideal->add_option("op", s1)->required();
  ideal->add_option("args", rest);
  ideal->callback([&] { action = [&] { return cmd_ideal(s1, rest); }; });

  auto* content = app.add_subcommand("content", "content ideals of a polynomial");
  content->add_option("f", s1)->required();
  content->callback([&] { action = [&] { return cmd_content(s1); }; });

  int cap = 8;
  auto* dm = app.add_subcommand("dm", "Dedekind-Mertens exponent");
  dm->add_option("f", s1)->required();
  dm->add_option("g", s2)->required();
  dm->add_option("--cap", cap)->capture_default_str();
  dm->callback([&] { action = [&] { return cmd_dm(s1, s2, cap); }; });

  auto* gauss = app.add_subcommand("gauss", "compare (A_f A_g)^s with (A_fg)^s");
  gauss->add_option("f", s1)->required();
  gauss->add_option("g", s2)->required();
  gauss->callback([&] { action = [&] { return cmd_gauss(s1, s2); }; });

  auto* star = app.add_subcommand("star", "closure of an ideal");
  star->add_option("ideal", s1)->required();
  star->callback([&] { action = [&] { return cmd_star(s1); }; });

  auto* nagata = app.add_subcommand("nagata", "member|invert|pic");
  nagata->add_option("op", s1)->required();
  nagata->add_option("args", rest);
  nagata->callback([&] { action = [&] { return cmd_nagata(s1, rest); }; });

  std::string mode = "general";
  int bound = 3;
  auto* kron = app.add_subcommand("kron", "member|combine");
  kron->add_option("op", s1)->required();
  kron->add_option("args", rest);
  kron->add_option("--mode", mode, "eab or general")->capture_default_str();
  kron->add_option("--bound", bound, "catalog bound for general mode")->capture_default_str();
  kron->callback([&] { action = [&] { return cmd_kron(s1, rest, mode, bound); }; });

  auto* suite = app.add_subcommand("suite", "run a theorem suite");
  suite->require_subcommand(1);
  auto* run = suite->add_subcommand("run");
  run->add_option("name", s1)->required()->check(CLI::IsMember(suite_names()));
  run->callback([&] { action = [&] { return cmd_suite(s1); }; });

  Bounds b;
  bool no_prune = false;
  auto* fz = app.add_subcommand("falsify", "bounded counterexample search");
  fz->add_option("identity", s1)->required()->check(CLI::IsMember(identity_names()));
  fz->add_option("--max-degree", b.max_degree)->capture_default_str();
  fz->add_option("--max-terms", b.max_terms)->capture_default_str();
  fz->add_option("--max-coef", b.max_coef)->capture_default_str();
  fz->add_flag("--no-prune", no_prune, "evaluate pairs the theory already decides");
  fz->callback([&] {
    b.prune = !no_prune;
    action = [&] { return cmd_falsify(s1, b); };
  });

  auto* replay = app.add_subcommand("replay", "re-validate a certificate file");
  replay->add_option("file", s1)->required();
  replay->callback([&] { action = [&] { return cmd_replay(s1); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 0;
  } catch (const Error& e) {
    std::cerr << "error[" << e.kind() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
