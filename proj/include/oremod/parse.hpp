#pragma once

#include <string>
#include <vector>

#include "oremod/modules.hpp"

namespace oremod {

// Expression grammar shared by every CLI input and printer output:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' ['-'] integer)?
//   primary := integer | 'i' | 't' | 'Th' | 'Dt' | symbol | '(' expr ')'
//   symbol  := E/T/B/L/P, compact "E1" or parenthesized "B(0,1)" form
//
// 'Th' is the Euler generator t*d/dt and 'Dt' the plain derivative.
// Negative '^' exponents are only accepted on the variable t.  '*' is
// noncommutative in operator context and preserves written order.
// Integer division folds to exact rationals, so "1/2" is a scalar literal.
// Basis symbols are only meaningful when lowering to a module vector.
//
// Every printer in the library emits text this grammar accepts, and
// parsing a printed value reproduces it exactly.

LaurentPoly parse_laurent(const std::string& src);
RatFunc parse_ratfunc(const std::string& src);
OreElem parse_ore(const std::string& src);
Scalar parse_scalar(const std::string& src);

// Comma-separated scalars; empty text gives an empty list.
std::vector<Scalar> parse_scalar_list(const std::string& src);

// Linear combination of basis symbols of the given module.
ModVec parse_modvec(const DescPtr& desc, const std::string& src);

BasisSymbol parse_basis_symbol(const std::string& src);

} // namespace oremod
