#pragma once

#include <string>
#include <string_view>

#include "vlp/piecewise.hpp"

namespace vlp {

/// Reads a function description in either of two forms.
///
/// Document form:
///
///     name = "p"
///     domain = [0, 1]          # hi may be "inf"
///     [params]
///     alpha = 0.5
///     [[piece]]
///     on = [0, 1]
///     expr = "1/t^alpha"
///     monotone = "dec"         # inc | dec | const | unknown
///
/// Inline form: `p(t)=1/t^0.5 on (0,1) dec`, several pieces separated by
/// `;`. Bounds may be expressions (`1/e`) or `inf`. Pieces without a
/// monotonicity tag are `unknown` unless their expression is constant.
///
/// Throws SyntaxError (offset into `text`) or DomainError.
PiecewiseFunction parse_function_spec(std::string_view text, const ParamMap& extra_params = {});

/// parse_function_spec followed by the exponent range check p >= 1.
ExponentFunction parse_exponent_spec(std::string_view text, const ParamMap& extra_params = {},
                                     const GridOptions& grid = {});

/// Document form that parse_function_spec reads back to the same function.
std::string format_function_spec(const PiecewiseFunction& f);

}  // namespace vlp
