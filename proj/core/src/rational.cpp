#include "genhecke/rational.hpp"

#include "genhecke/errors.hpp"

namespace genhecke {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw Error("malformed rational literal '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Rational& r) {
  if (r.get_den() != 1) throw Error("rational " + to_string(r) + " is not an integer");
  const mpz_class& n = r.get_num();
  if (!n.fits_slong_p()) throw Error("integer " + n.get_str() + " out of range");
  return n.get_si();
}

}  // namespace genhecke
