#pragma once

// Independent oracles for Z[t, 1/t]. Dense coefficient vectors
// and schoolbook arithmetic only; nothing here touches the Groebner code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Laurent polynomial: lowest exponent plus dense coefficients.
struct Laurent {
  long low = 0;
  std::vector<mpz_class> c;

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
};

inline Laurent trim(Laurent a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  std::size_t k = 0;
  while (k < a.c.size() && a.c[k] == 0) ++k;
  a.c.erase(a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(k));
  a.low += static_cast<long>(k);
  if (a.c.empty()) a.low = 0;
  return a;
}

inline Laurent mul(const Laurent& a, const Laurent& b) {
  if (a.c.empty() || b.c.empty()) return {};
  Laurent r;
  r.low = a.low + b.low;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return trim(r);
}

/// Remainder of a (shifted to a polynomial) modulo a monic h with constant
/// term ±1; t is a unit modulo such h, so the shift is harmless.
inline std::vector<mpz_class> rem_monic(const Laurent& a, const Laurent& h) {
  Laurent ht = trim(h);
  const std::size_t d = ht.c.size() - 1;
  // Represent t^low as a residue: multiply up by t or by t^{-1} = -(h - h0)/(h0 t).
  std::vector<mpz_class> r(d, 0);
  auto reduce = [&](std::vector<mpz_class> p) {
    for (std::size_t k = p.size(); k-- > d;) {
      mpz_class q = p[k];
      if (q == 0) continue;
      for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= q * ht.c[j];
    }
    p.resize(d, 0);
    return p;
  };
  // t^{-1} mod h: from h0 + t·(h1 + ... ) = 0 with h0 = ±1.
  std::vector<mpz_class> tinv(d, 0);
  for (std::size_t j = 1; j <= d; ++j)
    if (j - 1 < d) tinv[j - 1] = -ht.c[j] * ht.c[0];
  auto mulmod = [&](const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
    std::vector<mpz_class> p(x.size() + y.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) p[i + j] += x[i] * y[j];
    return reduce(p);
  };
  std::vector<mpz_class> tpow(d, 0);
  if (d > 0) tpow[0] = 1;
  std::vector<mpz_class> tt(d, 0);
  if (d > 1) {
    tt[1] = 1;
  } else if (d == 1) {
    tt = reduce({0, 1});
  }
  long e = a.low;
  const auto& step = e < 0 ? tinv : tt;
  for (long i = 0; i < std::labs(e); ++i) tpow = mulmod(tpow, step);
  std::vector<mpz_class> acc(d, 0), cur = tpow;
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    for (std::size_t j = 0; j < d; ++j) acc[j] += a.c[k] * cur[j];
    cur = mulmod(cur, tt);
  }
  return acc;
}

/// a ∈ (m, h) with h monic, constant term ±1.
inline bool member_mod_monic(const Laurent& a, const mpz_class& m, const Laurent& h) {
  for (const auto& x : rem_monic(a, h))
    if (x % m != 0) return false;
  return true;
}

/// a ∈ (c_1 t^{e_1}, ..., c_n t^{e_n}) = (gcd c_i).
inline bool member_monomial(const Laurent& a, const std::vector<mpz_class>& cs) {
  mpz_class g = 0;
  for (const auto& c : cs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a.is_zero();
  for (const auto& x : a.c)
    if (x % g != 0) return false;
  return true;
}

/// a ∈ (h): long division over Q after shifting, then integrality.
inline bool member_principal(const Laurent& a0, const Laurent& h0) {
  Laurent a = trim(a0), h = trim(h0);
  if (a.c.empty()) return true;
  if (h.c.empty()) return false;
  if (a.c.size() < h.c.size()) return false;
  std::vector<mpq_class> r(a.c.begin(), a.c.end());
  const std::size_t dq = a.c.size() - h.c.size();
  std::vector<mpq_class> quot(dq + 1, 0);
  for (std::size_t k = dq + 1; k-- > 0;) {
    mpq_class q = r[k + h.c.size() - 1] / mpq_class(h.c.back());
    quot[k] = q;
    for (std::size_t j = 0; j < h.c.size(); ++j) r[k + j] -= q * mpq_class(h.c[j]);
  }
  for (const auto& x : r)
    if (x != 0) return false;
  for (const auto& x : quot)
    if (x.get_den() != 1) return false;
  return true;
}

/// Decides content multiplicativity c(fg) = c(f)c(g) for every pair in the
/// box f = sum_{k <= deg} (a_k + b_k t) X^k, |a_k|, |b_k| <= coef, where c is
/// the gcd of the integer coefficients. Writing f = c(f) f', the identity
/// holds for all partners iff no prime divides every coefficient of f' g'
/// for a primitive g'. Primes above the coefficient bound of f' g' cannot,
/// once f' g' != 0 (full rank of g -> f' g' mod a prime above the bound);
/// for the others it is enough that g -> f' g' is injective mod p.
struct ContentBoxResult {
  std::uint64_t polys = 0;      // nonzero box elements up to sign
  std::uint64_t primitive = 0;  // of which primitive
  std::uint64_t rank_checks = 0;
  std::uint64_t deficient = 0;  // (f', p) with a nontrivial kernel
};

inline std::vector<int> primes_upto(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

inline ContentBoxResult content_box_by_rank(int deg, int coef) {
  const int n = 2 * (deg + 1);           // unknowns of g
  const int rows = 3 * (2 * deg + 1);    // X^0..X^{2deg} times t^0..t^2
  const int bound = (deg + 1) * 2 * coef * coef;
  auto primes = primes_upto(bound);
  int above = bound + 1;
  while (primes_upto(above).back() != above) ++above;
  primes.push_back(above);

  ContentBoxResult res;
  std::vector<int> f(static_cast<std::size_t>(n), -coef);
  std::vector<long> m(static_cast<std::size_t>(rows * n));
  const int span = 2 * coef + 1;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= span;
  for (long code = 0; code < total; ++code) {
    long c = code;
    int g = 0;
    int lead = 0;
    for (int i = 0; i < n; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(c % span) - coef;
      c /= span;
      int x = f[static_cast<std::size_t>(i)] < 0 ? -f[static_cast<std::size_t>(i)] : f[static_cast<std::size_t>(i)];
      int a = g, b = x;
      while (b) {
        int t = a % b;
        a = b;
        b = t;
      }
      g = a;
      if (lead == 0) lead = f[static_cast<std::size_t>(i)];
    }
    if (g == 0 || lead < 0) continue;  // zero, or the negative of a counted element
    ++res.polys;
    if (g != 1) continue;
    ++res.primitive;
    for (int p : primes) {
      // Column (k2, j2) of g maps f to the coefficients of f·X^{k2} t^{j2}.
      std::fill(m.begin(), m.end(), 0);
      for (int k1 = 0; k1 <= deg; ++k1)
        for (int j1 = 0; j1 < 2; ++j1)
          for (int k2 = 0; k2 <= deg; ++k2)
            for (int j2 = 0; j2 < 2; ++j2) {
              long v = f[static_cast<std::size_t>(2 * k1 + j1)];
              auto idx = static_cast<std::size_t>((3 * (k1 + k2) + j1 + j2) * n + 2 * k2 + j2);
              m[idx] = ((m[idx] + v) % p + p) % p;
            }
      ++res.rank_checks;
      int rank = 0;
      for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
          if (m[static_cast<std::size_t>(r * n + col)] != 0) {
            piv = r;
            break;
          }
        if (piv < 0) continue;
        for (int k = 0; k < n; ++k)
          std::swap(m[static_cast<std::size_t>(piv * n + k)], m[static_cast<std::size_t>(rank * n + k)]);
        long inv = 1, base = m[static_cast<std::size_t>(rank * n + col)], e = p - 2;
        while (e) {
          if (e & 1) inv = inv * base % p;
          base = base * base % p;
          e >>= 1;
        }
        for (int r = rank + 1; r < rows; ++r) {
          long fac = m[static_cast<std::size_t>(r * n + col)] * inv % p;
          if (!fac) continue;
          for (int k = col; k < n; ++k) {
            auto& dst = m[static_cast<std::size_t>(r * n + k)];
            dst = ((dst - fac * m[static_cast<std::size_t>(rank * n + k)]) % p + p) % p;
          }
        }
        ++rank;
      }
      if (rank < n) ++res.deficient;
    }
  }
  return res;
}

}  // namespace oracle
