#include "gradstar/groebner.hpp"

#include <algorithm>
#include <limits>

namespace gradstar {
namespace {

template <class D>
bool is_unit_constant(const Poly<D>& p) {
  if (!p.is_constant()) return false;
  if constexpr (D::is_field) {
    return true;
  } else {
    return abs(p.lc()) == 1;
  }
}

// Floor-style division with remainder in [0, |b|).
inline void euclid(const mpz_class& a, const mpz_class& b, mpz_class& q, mpz_class& r) {
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);
  mpz_class num = a - r;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), b.get_mpz_t());
}

// Index of the reducer for the head term (mono, c) or -1. For ZZ, `q`
// receives the quotient so that c - q*lc(g) is the reduced coefficient.
template <class D>
int find_reducer(const Monomial& mono, const typename D::value_type& c,
                 const std::vector<Poly<D>>& basis, int nvars, typename D::value_type& q,
                 int skip = -1) {
  if constexpr (D::is_field) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (static_cast<int>(i) == skip) continue;
      if (basis[i].lm().divides(mono, nvars)) {
        q = c / basis[i].lc();
        return static_cast<int>(i);
      }
    }
    return -1;
  } else {
    int best = -1;
    mpz_class best_abs;
    mpz_class qq, r;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (static_cast<int>(i) == skip) continue;
      const auto& g = basis[i];
      if (!g.lm().divides(mono, nvars)) continue;
      if (mpz_divisible_p(c.get_mpz_t(), g.lc().get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.lc().get_mpz_t());
        return static_cast<int>(i);
      }
      euclid(c, g.lc(), qq, r);
      if (qq == 0) continue;
      mpz_class a = abs(g.lc());
      if (best < 0 || a < best_abs) {
        best = static_cast<int>(i);
        best_abs = a;
        q = qq;
      }
    }
    return best;
  }
}

template <class D>
Poly<D> reduce_impl(Poly<D> p, const std::vector<Poly<D>>& basis, const TermOrder& ord,
                    bool tail_only, int skip) {
  using Coeff = typename D::value_type;
  std::vector<Term<D>> done;
  Coeff q;
  const int n = ord.nvars;
  bool head = true;
  while (!p.is_zero()) {
    const auto& t = p.terms().front();
    int idx = -1;
    if (!(tail_only && head)) idx = find_reducer<D>(t.mono, t.coeff, basis, n, q, skip);
    if (idx < 0) {
      done.push_back(t);
      auto& terms = p.mutable_terms();
      terms.erase(terms.begin());
      head = false;
      continue;
    }
    const auto& g = basis[static_cast<std::size_t>(idx)];
    Monomial m = Monomial::div(t.mono, g.lm(), n);
    p = Poly<D>::sub_scaled(p, q, m, g, ord);
  }
  return Poly<D>(std::move(done));
}

template <class D>
struct PairQueue {
  struct Pair {
    int i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  std::vector<std::vector<char>> pending;

  void grow(std::size_t n) {
    for (auto& row : pending) row.resize(n, 0);
    pending.resize(n, std::vector<char>(n, 0));
  }
  void push(int i, int j, const Monomial& l) {
    pairs.push_back(Pair{i, j, l});
    pending[i][j] = pending[j][i] = 1;
  }
  Pair pop_min(const TermOrder& ord) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = ord.compare(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && (pairs[k].j < pairs[best].j ||
                               (pairs[k].j == pairs[best].j && pairs[k].i < pairs[best].i))))
        best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    pending[p.i][p.j] = pending[p.j][p.i] = 0;
    return p;
  }
};

template <class D>
std::vector<Poly<D>> finalize(std::vector<Poly<D>> g, const TermOrder& ord) {
  const int n = ord.nvars;
  std::sort(g.begin(), g.end(), [&](const Poly<D>& a, const Poly<D>& b) {
    int c = ord.compare(a.lm(), b.lm());
    if (c != 0) return c < 0;
    if constexpr (D::is_field) {
      return false;
    } else {
      return abs(a.lc()) < abs(b.lc());
    }
  });
  std::vector<Poly<D>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j].lm().divides(g[i].lm(), n)) continue;
      if constexpr (D::is_field) {
        redundant = !(g[j].lm() == g[i].lm()) || j < i;
      } else {
        if (!mpz_divisible_p(g[i].lc().get_mpz_t(), g[j].lc().get_mpz_t())) continue;
        bool same = g[j].lm() == g[i].lm() && abs(g[j].lc()) == abs(g[i].lc());
        redundant = !same || j < i;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    minimal[i] = reduce_impl<D>(minimal[i], minimal, ord, /*tail_only=*/true,
                                static_cast<int>(i));
    minimal[i].normalize();
  }
  return minimal;
}

}  // namespace

template <class D>
Poly<D> normal_form(Poly<D> p, const std::vector<Poly<D>>& basis, const TermOrder& ord) {
  return reduce_impl<D>(std::move(p), basis, ord, false, -1);
}

template <class D>
std::vector<Poly<D>> groebner(std::vector<Poly<D>> input, const TermOrder& ord,
                              GroebnerStats* stats) {
  using Coeff = typename D::value_type;
  const int n = ord.nvars;
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;

  std::vector<Poly<D>> basis;
  PairQueue<D> queue;

  auto unit_basis = [&]() {
    std::vector<Term<D>> one{Term<D>{Monomial{}, Coeff(1)}};
    return std::vector<Poly<D>>{Poly<D>(std::move(one))};
  };

  auto add = [&](Poly<D> h) -> bool {
    h.normalize();
    if (is_unit_constant(h)) return true;
    basis.push_back(std::move(h));
    int k = static_cast<int>(basis.size()) - 1;
    queue.grow(basis.size());
    for (int i = 0; i < k; ++i)
      queue.push(i, k, Monomial::lcm(basis[i].lm(), basis[k].lm(), n));
    return false;
  };

  for (auto& p : input) {
    if (p.is_zero()) continue;
    Poly<D> r = normal_form(std::move(p), basis, ord);
    if (r.is_zero()) continue;
    if (add(std::move(r))) return unit_basis();
  }

  while (!queue.pairs.empty()) {
    auto pr = queue.pop_min(ord);
    ++st.pairs_considered;
    const Poly<D>& f = basis[pr.i];
    const Poly<D>& g = basis[pr.j];
    std::vector<Poly<D>> candidates;

    if constexpr (D::is_field) {
      if (Monomial::coprime(f.lm(), g.lm(), n)) continue;
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        int kk = static_cast<int>(k);
        if (kk == pr.i || kk == pr.j) continue;
        if (!basis[k].lm().divides(pr.lcm, n)) continue;
        if (!queue.pending[pr.i][kk] && !queue.pending[pr.j][kk]) chain = true;
      }
      if (chain) continue;
      Poly<D> s = Poly<D>::sub_scaled(f.scaled(Coeff(1), Monomial::div(pr.lcm, f.lm(), n), n),
                                      Coeff(1), Monomial::div(pr.lcm, g.lm(), n), g, ord);
      candidates.push_back(std::move(s));
    } else {
      const mpz_class& a = f.lc();
      const mpz_class& b = g.lc();
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Monomial mf = Monomial::div(pr.lcm, f.lm(), n);
      Monomial mg = Monomial::div(pr.lcm, g.lm(), n);
      mpz_class ca = l / a, cb = l / b;
      candidates.push_back(Poly<D>::sub_scaled(f.scaled(ca, mf, n), cb, mg, g, ord));
      bool a_div_b = mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
      bool b_div_a = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
      if (!a_div_b && !b_div_a) {
        mpz_class gg, u, v;
        mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Poly<D> gp = Poly<D>::add(f.scaled(u, mf, n), g.scaled(v, mg, n), ord);
        candidates.push_back(std::move(gp));
      }
    }

    for (auto& c : candidates) {
      ++st.pairs_reduced;
      Poly<D> r = normal_form(std::move(c), basis, ord);
      if (r.is_zero()) {
        ++st.zero_reductions;
        continue;
      }
      if (add(std::move(r))) return unit_basis();
    }
  }
  return finalize<D>(std::move(basis), ord);
}

template Poly<QQ> normal_form(Poly<QQ>, const std::vector<Poly<QQ>>&, const TermOrder&);
template Poly<ZZ> normal_form(Poly<ZZ>, const std::vector<Poly<ZZ>>&, const TermOrder&);
template std::vector<Poly<QQ>> groebner(std::vector<Poly<QQ>>, const TermOrder&, GroebnerStats*);
template std::vector<Poly<ZZ>> groebner(std::vector<Poly<ZZ>>, const TermOrder&, GroebnerStats*);

}  // namespace gradstar
