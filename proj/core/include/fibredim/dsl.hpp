#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fibredim/presentation.hpp"

namespace fibredim {

/// Parse the JSON presentation DSL. `boolean_atoms` sugar expands to the
/// product of k copies of Z[]/(2). Relation polynomials are built under
/// `order_kind`. Throws ParseError (with line/column) or ValidationError.
AlgebraPresentation parse_algebra(std::string_view text,
                                  MonomialOrder::Kind order_kind = MonomialOrder::Kind::grevlex);

/// Canonical serializer; parse_algebra(render(a)) == a.
std::string render(const AlgebraPresentation& a);
/// Same document on a single line (report embedding).
std::string render_compact(const AlgebraPresentation& a);

/// Parse one relation expression over the given variables. Grammar: integer
/// literals, names, + - * ^ and parentheses; ^ takes a non-negative integer
/// literal. Column numbers in errors refer to positions in `text`.
Polynomial parse_expression(std::string_view text, const std::vector<std::string>& vars,
                            const CoeffDomain& domain, const MonomialOrder& order);

}  // namespace fibredim
