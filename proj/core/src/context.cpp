#include "genhecke/context.hpp"

namespace genhecke {

Context make_context(RootDatum datum) {
  Context c;
  c.datum = std::make_shared<const RootDatum>(std::move(datum));
  c.weyl = std::make_shared<const WeylGroup>(c.datum);
  c.affine = std::make_shared<const AffineWeylGroup>(c.weyl);
  c.hecke = std::make_shared<const HeckeAlgebra>(c.affine);
  c.ell = std::make_shared<const LengthFunction>(c.datum);
  return c;
}

Context make_context(std::string_view preset) { return make_context(RootDatum::preset(preset)); }

}  // namespace genhecke
