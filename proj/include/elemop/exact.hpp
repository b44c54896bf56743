#pragma once

#include "elemop/errors.hpp"
#include "elemop/exact/gauss_rational.hpp"
#include "elemop/exact/linalg.hpp"
#include "elemop/exact/matrix.hpp"
#include "elemop/exact/polynomial.hpp"
#include "elemop/exact/random.hpp"

namespace elemop {

using Poly = Polynomial<GaussRational>;

}  // namespace elemop
