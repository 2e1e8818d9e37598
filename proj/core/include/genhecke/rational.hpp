#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace genhecke {

using Rational = mpq_class;

/// Canonical "p/q" text form ("p" when q = 1).
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws genhecke::Error on malformed input.
Rational parse_rational(std::string_view text);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact conversion; the caller guarantees integrality and range.
std::int64_t to_int64(const Rational& r);

}  // namespace genhecke
