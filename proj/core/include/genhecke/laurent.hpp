#pragma once

#include <map>
#include <string>

#include "genhecke/rational.hpp"

namespace genhecke {

/// Sparse Laurent polynomial in q over Q. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(int c) : LaurentPolynomial(Rational(c)) {}  // NOLINT
  /// c·q^e
  static LaurentPolynomial monomial(int e, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int e) const;
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }
  /// No negative exponents (an element of Q[q]).
  bool is_polynomial() const { return terms_.empty() || min_exponent() >= 0; }
  /// Multiplies by q^e.
  LaurentPolynomial shifted(int e) const;
  /// Value at q = v (v must be nonzero when negative powers are present).
  Rational evaluate(const Rational& v) const;

  void add(int e, const Rational& c);
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// e.g. "q^2 - 1", "1/2*q^-1".
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace genhecke
