#ifndef LIEDERIV_PARSE_HPP
#define LIEDERIV_PARSE_HPP

#include <string>

#include "liederiv/rational_function.hpp"

namespace liederiv {

/// Parses the plain-text form: "+ - * / ^ ( )", integer literals and variable
/// names from `vars`. Division yields rational functions.
RationalFunction parse_rational_function(const std::string& text, const Vars& vars);

/// Same grammar, restricted to polynomial results (den = 1 after
/// normalization). Throws ParseError otherwise.
Polynomial parse_polynomial(const std::string& text, const Vars& vars);

} // namespace liederiv

#endif
