#pragma once

#include "pseudo/classical.hpp"
#include "pseudo/cfmodule.hpp"
#include "pseudo/cohomology.hpp"
#include "pseudo/conformal.hpp"
#include "pseudo/constructions.hpp"
#include "pseudo/errors.hpp"
#include "pseudo/exactla.hpp"
#include "pseudo/linearize.hpp"
#include "pseudo/poly.hpp"
#include "pseudo/poly_parse.hpp"
#include "pseudo/textio.hpp"

namespace pseudo {
inline constexpr const char* version = "0.1.0";
}
