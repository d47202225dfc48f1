#pragma once

#include "nmil/newton.hpp"

namespace nmil {

// Parse "x1^7 + x1^3*x2 + x1^2*x2^4" into its support.  Coefficients are
// accepted and ignored; a constant term is rejected (f(0) = 0 is required).
Support parse_polynomial(const std::string& text);

}  // namespace nmil
