#include "gradstar/parse.hpp"

#include <cctype>
#include <map>

namespace gradstar {

namespace {

using Key = std::pair<int, std::array<std::int32_t, kMaxDim>>;

// Laurent polynomial in the coordinates, polynomial in X.
struct Value {
  std::map<Key, mpq_class> terms;

  static Value constant(const mpq_class& c) {
    Value v;
    if (c != 0) v.terms[{0, {}}] = c;
    return v;
  }
  bool single_term() const { return terms.size() == 1; }
  bool has_x() const {
    for (const auto& [k, c] : terms)
      if (k.first != 0) return true;
    return false;
  }
  Value operator+(const Value& o) const {
    Value r = *this;
    for (const auto& [k, c] : o.terms) {
      auto& slot = r.terms[k];
      slot += c;
      if (slot == 0) r.terms.erase(k);
    }
    return r;
  }
  Value operator-() const {
    Value r = *this;
    for (auto& [k, c] : r.terms) c = -c;
    return r;
  }
  Value operator*(const Value& o) const {
    Value r;
    for (const auto& [a, ca] : terms) {
      for (const auto& [b, cb] : o.terms) {
        Key k{a.first + b.first, {}};
        for (int i = 0; i < kMaxDim; ++i) k.second[i] = a.second[i] + b.second[i];
        auto& slot = r.terms[k];
        slot += ca * cb;
        if (slot == 0) r.terms.erase(k);
      }
    }
    return r;
  }
  // Inverse of a single-term value without X.
  Value inverse() const {
    const auto& [k, c] = *terms.begin();
    Key inv{0, {}};
    for (int i = 0; i < kMaxDim; ++i) inv.second[i] = -k.second[i];
    Value r;
    r.terms[inv] = 1 / c;
    return r;
  }
};

class Parser {
 public:
  Parser(std::string_view text, const GradedRing& ring) : s_(text), ring_(ring) {}

  Value parse_full() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  // '(' expr (',' expr)* ')' ['/' unary], or a bare expression.
  std::pair<std::vector<Value>, Value> ideal() {
    skip();
    std::vector<Value> gens;
    Value den = Value::constant(1);
    if (peek() == '(') {
      std::size_t save = pos_;
      ++pos_;
      gens.push_back(expr());
      skip();
      if (peek() == ',' || peek() == ')') {
        while (peek() == ',') {
          ++pos_;
          gens.push_back(expr());
          skip();
        }
        expect(')');
        skip();
        if (peek() == '/') {
          ++pos_;
          den = unary();
        }
        skip();
        if (pos_ == s_.size()) return {gens, den};
      }
      pos_ = save;
      gens.clear();
    }
    gens.push_back(parse_full());
    return {gens, den};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) {
      if (pos_ == s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Value expr() {
    Value v = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Value rhs = term();
      v = c == '+' ? v + rhs : v + (-rhs);
    }
    return v;
  }

  Value term() {
    Value v = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      std::size_t at = pos_;
      Value rhs = unary();
      if (c == '*') {
        v = v * rhs;
      } else {
        if (rhs.terms.empty()) throw SyntaxError("division by zero", at);
        if (!rhs.single_term() || rhs.has_x())
          throw SyntaxError("division only by a single term without X", at);
        v = v * rhs.inverse();
      }
    }
    return v;
  }

  Value unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t at = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
      skip();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) throw SyntaxError("exponent too large", start);
    long n = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (n > 10000) throw SyntaxError("exponent too large", start);
    if (neg) {
      if (base.terms.empty() || !base.single_term() || base.has_x())
        throw SyntaxError("negative power of a value that is not a single term without X", at);
      base = base.inverse();
    }
    Value r = Value::constant(1);
    for (long i = 0; i < n; ++i) r = r * base;
    return r;
  }

  Value atom() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Value::constant(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      Value v;
      if (name == "X") {
        v.terms[{1, {}}] = 1;
        return v;
      }
      const auto& names = ring_.names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
          Key k{0, {}};
          k.second[i] = 1;
          v.terms[k] = 1;
          return v;
        }
      }
      throw SyntaxError("unknown generator name '" + name + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const GradedRing& ring_;
  std::size_t pos_ = 0;
};

Exponent to_exp(const std::array<std::int32_t, kMaxDim>& a) {
  Exponent e;
  e.v = a;
  return e;
}

GradedElement coefficient_element(const Value& v, int xdeg, const RingPtr& ring) {
  GradedElement::TermList terms;
  for (const auto& [k, c] : v.terms)
    if (k.first == xdeg) terms.emplace_back(to_exp(k.second), c);
  return GradedElement::from_terms(ring, std::move(terms));
}

// Smallest N >= 0 with every exponent + N·Σg in Γ, and the positive lcm of
// coefficient denominators over Z (1 over Q).
std::pair<Exponent, mpz_class> clearing(const std::vector<const Value*>& vals, const GradedRing& ring) {
  Exponent sigma;
  for (const auto& g : ring.monoid().generators()) sigma = sigma + g;
  Exponent shift;
  for (int guard = 0;; ++guard) {
    bool ok = true;
    for (const Value* v : vals)
      for (const auto& [k, c] : v->terms) ok = ok && ring.in_monoid(to_exp(k.second) + shift);
    if (ok) break;
    if (sigma.is_zero() || guard > 10000) throw NotInRing("exponent outside the monoid group");
    shift = shift + sigma;
  }
  mpz_class scale = 1;
  if (ring.base() == BaseDomain::Integers) {
    for (const Value* v : vals)
      for (const auto& [k, c] : v->terms) {
        mpz_class d = c.get_den();
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
      }
  }
  return {shift, scale};
}

GradedElement shifted_element(const Value& v, const Exponent& shift, const mpz_class& scale,
                              const RingPtr& ring) {
  GradedElement::TermList terms;
  for (const auto& [k, c] : v.terms) terms.emplace_back(to_exp(k.second) + shift, c * scale);
  return GradedElement::from_terms(ring, std::move(terms));
}

}  // namespace

PolyX parse_poly(std::string_view text, const RingPtr& ring) {
  Value v = Parser(text, *ring).parse_full();
  int top = -1;
  for (const auto& [k, c] : v.terms) top = std::max(top, k.first);
  std::vector<GradedElement> coeffs;
  for (int i = 0; i <= top; ++i) coeffs.push_back(coefficient_element(v, i, ring));
  return PolyX(ring, std::move(coeffs));
}

GradedElement parse_element(std::string_view text, const RingPtr& ring) {
  Value v = Parser(text, *ring).parse_full();
  if (v.has_x()) throw InvalidArgument("expected an element of the ring, found X");
  return coefficient_element(v, 0, ring);
}

HQuotientElement parse_quotient(std::string_view text, const RingPtr& ring) {
  Value v = Parser(text, *ring).parse_full();
  if (v.has_x()) throw InvalidArgument("expected an element of R_H, found X");
  auto [shift, scale] = clearing({&v}, *ring);
  return HQuotientElement(shifted_element(v, shift, scale, ring),
                          GradedElement::monomial(ring, shift, scale))
      .normalized();
}

FracIdeal parse_ideal(std::string_view text, const RingPtr& ring) {
  auto [gens, den] = Parser(text, *ring).ideal();
  for (const auto& g : gens)
    if (g.has_x()) throw InvalidArgument("ideal generators cannot involve X");
  if (den.has_x()) throw InvalidArgument("ideal denominator cannot involve X");
  if (den.terms.empty()) throw ZeroInput("zero denominator");
  std::vector<const Value*> all{&den};
  for (const auto& g : gens) all.push_back(&g);
  auto [shift, scale] = clearing(all, *ring);
  std::vector<GradedElement> elems;
  for (const auto& g : gens) elems.push_back(shifted_element(g, shift, scale, ring));
  GradedElement d = shifted_element(den, shift, scale, ring);
  if (!d.is_homogeneous()) throw InvalidArgument("ideal denominator must be homogeneous");
  return FracIdeal(ring, std::move(elems), std::move(d));
}

}  // namespace gradstar
