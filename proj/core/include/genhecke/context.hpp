#pragma once

#include <memory>
#include <string_view>

#include "genhecke/affine_weyl.hpp"
#include "genhecke/cone_algebra.hpp"
#include "genhecke/hecke.hpp"
#include "genhecke/root_datum.hpp"
#include "genhecke/weyl_group.hpp"

namespace genhecke {

/// Everything built from one root datum, shared.
struct Context {
  std::shared_ptr<const RootDatum> datum;
  std::shared_ptr<const WeylGroup> weyl;
  std::shared_ptr<const AffineWeylGroup> affine;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const ConeFunction> ell;
};

Context make_context(RootDatum datum);
Context make_context(std::string_view preset);

}  // namespace genhecke
