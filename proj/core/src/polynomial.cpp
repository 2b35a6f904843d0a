#include "gradstar/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gradstar {

Monomial Monomial::mul(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  r.deg = a.deg + b.deg;
  return r;
}

Monomial Monomial::div(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, int nvars) {
  Monomial r;
  for (int i = 0; i < nvars; ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.deg += r.exp[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

namespace {

int degrevlex_block(const Monomial& a, const Monomial& b, int lo, int hi) {
  std::uint32_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (elim == 0) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = nvars - 1; i >= 0; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }
  if (int c = degrevlex_block(a, b, 0, elim); c != 0) return c;
  return degrevlex_block(a, b, elim, nvars);
}

std::string TermOrder::tag() const {
  if (elim == 0) return "degrevlex";
  return "block(" + std::to_string(elim) + "):degrevlex,degrevlex";
}

template <class D>
Poly<D> Poly<D>::from_terms(std::vector<Term<D>> terms, const TermOrder& ord) {
  std::sort(terms.begin(), terms.end(), [&](const Term<D>& x, const Term<D>& y) {
    return ord.compare(x.mono, y.mono) > 0;
  });
  std::vector<Term<D>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return Poly(std::move(out));
}

template <class D>
bool Poly<D>::involves_var_below(int k) const {
  for (const auto& t : terms_)
    for (int i = 0; i < k; ++i)
      if (t.mono.exp[i] != 0) return true;
  return false;
}

template <class D>
Poly<D> Poly<D>::sub_scaled(const Poly& a, const Coeff& c, const Monomial& m, const Poly& b,
                            const TermOrder& ord) {
  std::vector<Term<D>> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  const int n = ord.nvars;
  Coeff tmp;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size()) {
      out.push_back(a.terms_[i++]);
      continue;
    }
    Monomial bm = Monomial::mul(b.terms_[j].mono, m, n);
    int cmp = i == a.terms_.size() ? -1 : ord.compare(a.terms_[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      tmp = c * b.terms_[j].coeff;
      out.push_back(Term<D>{bm, -tmp});
      ++j;
    } else {
      tmp = a.terms_[i].coeff - c * b.terms_[j].coeff;
      if (tmp != 0) out.push_back(Term<D>{bm, tmp});
      ++i;
      ++j;
    }
  }
  return Poly(std::move(out));
}

template <class D>
Poly<D> Poly<D>::add(const Poly& a, const Poly& b, const TermOrder& ord) {
  return sub_scaled(a, Coeff(-1), Monomial{}, b, ord);
}

template <class D>
Poly<D> Poly<D>::mul(const Poly& a, const Poly& b, const TermOrder& ord) {
  Poly acc;
  for (const auto& t : a.terms_) acc = sub_scaled(acc, Coeff(-t.coeff), t.mono, b, ord);
  return acc;
}

template <class D>
Poly<D> Poly<D>::scaled(const Coeff& c, const Monomial& m, int nvars) const {
  std::vector<Term<D>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term<D>{Monomial::mul(t.mono, m, nvars), t.coeff * c});
  return Poly(std::move(out));
}

template <class D>
void Poly<D>::normalize() {
  if (terms_.empty()) return;
  if constexpr (D::is_field) {
    if (terms_.front().coeff == 1) return;
    Coeff inv = 1 / terms_.front().coeff;
    for (auto& t : terms_) t.coeff *= inv;
  } else {
    if (terms_.front().coeff < 0)
      for (auto& t : terms_) t.coeff = -t.coeff;
  }
}

template <class D>
std::string Poly<D>::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool one = c == 1;
    if (!one || t.mono.is_one()) os << c.get_str();
    bool need_star = !one;
    for (std::size_t v = 0; v < var_names.size(); ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (need_star) os << "*";
      os << var_names[v];
      if (t.mono.exp[v] != 1) os << "^" << t.mono.exp[v];
      need_star = true;
    }
  }
  return os.str();
}

template class Poly<QQ>;
template class Poly<ZZ>;

}  // namespace gradstar
