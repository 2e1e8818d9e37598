#include "genhecke/laurent.hpp"

#include <sstream>

namespace genhecke {

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPolynomial LaurentPolynomial::monomial(int e, const Rational& c) {
  LaurentPolynomial p;
  p.add(e, c);
  return p;
}

Rational LaurentPolynomial::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::shifted(int e) const {
  LaurentPolynomial p;
  for (const auto& [k, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), k + e, c);
  return p;
}

Rational LaurentPolynomial::evaluate(const Rational& v) const {
  Rational s = 0;
  for (const auto& [k, c] : terms_) {
    Rational pw = 1;
    if (k >= 0) {
      for (int i = 0; i < k; ++i) pw *= v;
    } else {
      for (int i = 0; i < -k; ++i) pw /= v;
    }
    s += c * pw;
  }
  return s;
}

void LaurentPolynomial::add(int e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

LaurentPolynomial operator-(LaurentPolynomial a) {
  for (auto& [k, c] : a.terms_) c = -c;
  return a;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial p;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) p.add(ka + kb, ca * cb);
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    int e = it->first;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational mag = abs(c);
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace genhecke
