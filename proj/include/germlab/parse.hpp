#pragma once

#include "germlab/jet.hpp"
#include "germlab/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace germlab {

/// Parses the polynomial grammar
///   poly   := ["+"|"-"] term (("+"|"-") term)*
///   term   := coeff ("*"? factor)* | factor ("*"? factor)*
///   factor := var ("^" uint)?
///   coeff  := uint | uint "/" uint
/// over the declared variables, whitespace-insensitive. Terms whose degree
/// exceeds `order` are rejected rather than silently truncated.
Jet<Rational> parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                               int order);

} // namespace germlab
