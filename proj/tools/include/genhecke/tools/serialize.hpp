#pragma once
// JSON forms of the library objects. Rationals are "p/q" strings.

#include <json.hpp>

#include "genhecke/center.hpp"
#include "genhecke/context.hpp"
#include "genhecke/toric.hpp"

namespace genhecke::tools {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const Coweight& v);
json to_json(const RationalCoweight& v);
json to_json(const RootDatum& d);
/// {"word": [...], "matrix": [[...]]}, the matrix acting on X̌-coordinates.
json to_json(const WeylElement& w);
/// {"exp": c, ...}
json to_json(const LaurentPolynomial& p);
json to_json(const WeylGroup& weyl, const HeckeElement& h);
json to_json(const ConeAlgebraElement& a);
json to_json(const CenterReport& r);
json to_json(const Fan& fan);
json to_json(const QuantumRelation& r);
/// "z1*z3 = q^2".
std::string relation_text(const QuantumRelation& r);
json to_json(const PresentationReport& r);

}  // namespace genhecke::tools
