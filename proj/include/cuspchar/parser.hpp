#pragma once

#include <string>
#include <string_view>

#include "cuspchar/series.hpp"

namespace cuspchar {

/// Parses a polynomial in t written the way it would be typeset by hand:
///
///     series := term (("+" | "-") term)*
///     term   := ["-"] (coef ["*"] ["t" ["^" nat]] | "t" ["^" nat])
///     coef   := nat ["/" nat]
///
/// e.g. "t^12 + t^13 + 37/28 t^14". Whitespace between tokens is ignored
/// and repeated exponents are summed. The result is exact.
///
/// Throws SyntaxError (with offset and expected tokens) or ZeroDenominator.
TruncSeries parse_series_expression(std::string_view src);

/// Renders the stored terms so that parse_series_expression reads them back.
std::string render_series(const TruncSeries& f);

}  // namespace cuspchar
