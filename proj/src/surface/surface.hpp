#pragma once

#include <string>

#include "core/algebra.hpp"

namespace frex {

// How terms display: the abstract binary op prints as + or *, the unit as
// 0 or 1, involution as postfix '.
struct DisplayStyle {
  bool multiplicative = false;
};

DisplayStyle display_for(const Presentation& pres, const Algebra* alg);

// Renders a term in the concrete expression grammar the parser accepts.
// Variables print as x, y, z, w, v4, v5, ... in index order.
std::string print_term(const Term& t, DisplayStyle style, bool latex = false);
std::string print_goal(const Goal& g, DisplayStyle style);

// Parses "<lhs> = <rhs>" over the presentation's single binary op.
// Identifiers are variables, interned in first-occurrence order. Literals
// parse through the algebra; without an algebra only the unit literal
// (0 or 1) is accepted and denotes the unit term.
Result<Goal> parse_goal(std::string_view text, const Presentation& pres, const Algebra* alg);

std::string var_name(int index);

}  // namespace frex
